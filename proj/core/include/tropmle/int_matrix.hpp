#ifndef TROPMLE_INT_MATRIX_HPP
#define TROPMLE_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "tropmle/rational.hpp"
#include "tropmle/subsets.hpp"

namespace tropmle {

// Dense integer matrix with arbitrary precision entries, row major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix columns(Subset cols) const;                 // keeps column order
    IntMatrix columns(const std::vector<int>& cols) const;
    IntMatrix with_extra_row(const std::vector<BigInt>& row) const;

    std::vector<BigInt> column(std::size_t j) const;
    std::vector<BigInt> row(std::size_t i) const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Dense rational matrix; plumbing for solves and projections.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
    explicit RatMatrix(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatVector multiply(const RatVector& x) const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

} // namespace tropmle

#endif
