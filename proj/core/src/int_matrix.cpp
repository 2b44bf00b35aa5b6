#include "tropmle/int_matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace tropmle {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::columns(Subset cols) const {
    return columns(elements(cols));
}

IntMatrix IntMatrix::columns(const std::vector<int>& cols) const {
    IntMatrix s(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            s.at(i, j) = at(i, static_cast<std::size_t>(cols[j]));
    return s;
}

IntMatrix IntMatrix::with_extra_row(const std::vector<BigInt>& row) const {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    IntMatrix m(rows_ + 1, cols_);
    m.a_ = a_;
    m.a_.insert(m.a_.end(), row.begin(), row.end());
    return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t j) const {
    std::vector<BigInt> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

std::vector<BigInt> IntMatrix::row(std::size_t i) const {
    return std::vector<BigInt>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m.at(i, j).get_str();
        os << "\n";
    }
    return os;
}

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    a_.reserve(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) a_.emplace_back(m.at(i, j));
}

RatVector RatMatrix::multiply(const RatVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
    RatVector y(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
    return y;
}

} // namespace tropmle
