#ifndef TROPMLE_EPS_RATIONAL_HPP
#define TROPMLE_EPS_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "tropmle/rational.hpp"

namespace tropmle {

// Rational polynomial in an infinitesimal epsilon, compared
// lexicographically by increasing degree. coeff(d) is the coefficient of
// eps^d. Used for symbolic weight perturbations: only addition and scaling
// by Rat are needed, so degrees never grow past what the caller creates.
class EpsRat {
public:
    EpsRat() = default;
    EpsRat(const Rat& constant) { coeffs_.push_back(constant); trim(); }
    EpsRat(int constant) : EpsRat(Rat(constant)) {}

    static EpsRat eps_power(std::size_t d, const Rat& scale = Rat(1)) {
        EpsRat e;
        e.coeffs_.assign(d + 1, Rat(0));
        e.coeffs_[d] = scale;
        e.trim();
        return e;
    }

    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    Rat coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Rat(0); }
    const Rat& constant_part() const {
        static const Rat zero(0);
        return coeffs_.empty() ? zero : coeffs_.front();
    }
    bool is_zero() const { return coeffs_.empty(); }

    EpsRat operator-() const {
        EpsRat r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    EpsRat& operator+=(const EpsRat& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
        for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
        trim();
        return *this;
    }
    EpsRat& operator-=(const EpsRat& o) { return *this += -o; }

    friend EpsRat operator+(EpsRat a, const EpsRat& b) { return a += b; }
    friend EpsRat operator-(EpsRat a, const EpsRat& b) { return a -= b; }
    friend EpsRat operator*(const Rat& s, const EpsRat& e) {
        EpsRat r = e;
        for (auto& c : r.coeffs_) c *= s;
        r.trim();
        return r;
    }

    friend bool operator==(const EpsRat& a, const EpsRat& b) {
        std::size_t m = a.coeffs_.size() > b.coeffs_.size() ? a.coeffs_.size() : b.coeffs_.size();
        for (std::size_t d = 0; d < m; ++d)
            if (a.coeff(d) != b.coeff(d)) return false;
        return true;
    }
    friend std::strong_ordering operator<=>(const EpsRat& a, const EpsRat& b) {
        std::size_t m = a.coeffs_.size() > b.coeffs_.size() ? a.coeffs_.size() : b.coeffs_.size();
        for (std::size_t d = 0; d < m; ++d) {
            auto c = a.coeff(d) <=> b.coeff(d);
            if (c != std::strong_ordering::equal) return c;
        }
        return std::strong_ordering::equal;
    }

    // Numeric value at a concrete small epsilon; sanity checks only.
    double evaluate(double eps) const {
        double v = 0.0, p = 1.0;
        for (const auto& c : coeffs_) {
            v += c.to_double() * p;
            p *= eps;
        }
        return v;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;  // coeffs_[d] multiplies eps^d
};

} // namespace tropmle

#endif
