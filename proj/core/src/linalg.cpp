#include "tropmle/linalg.hpp"

#include <stdexcept>

#include "tropmle/errors.hpp"

namespace tropmle {

namespace {

BigInt divexact(const BigInt& num, const BigInt& den) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// Forward Bareiss elimination of the square left block of [m | rhs].
// Returns false if the left block is singular. On success the left block
// is upper triangular with nonzero diagonal.
bool bareiss_forward(std::vector<std::vector<BigInt>>& rows, std::size_t n, int& sign) {
    sign = 1;
    BigInt prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && sgn(rows[piv][k]) == 0) ++piv;
        if (piv == n) return false;
        if (piv != k) {
            std::swap(rows[piv], rows[k]);
            sign = -sign;
        }
        const std::size_t width = rows[k].size();
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < width; ++j)
                rows[i][j] = divexact(rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j], prev);
            rows[i][k] = 0;
        }
        prev = rows[k][k];
    }
    return true;
}

} // namespace

BigInt det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return BigInt(1);
    std::vector<std::vector<BigInt>> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = m.row(i);
    int sign = 1;
    if (!bareiss_forward(rows, n, sign)) return BigInt(0);
    return sign < 0 ? BigInt(-rows[n - 1][n - 1]) : rows[n - 1][n - 1];
}

RatMatrix solve_matrix(const IntMatrix& m, const IntMatrix& rhs) {
    if (m.rows() != m.cols()) throw std::invalid_argument("solve with non-square matrix");
    if (rhs.rows() != m.rows()) throw std::invalid_argument("solve dimension mismatch");
    const std::size_t n = m.rows(), w = rhs.cols();
    std::vector<std::vector<BigInt>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = m.row(i);
        const auto r = rhs.row(i);
        rows[i].insert(rows[i].end(), r.begin(), r.end());
    }
    int sign = 1;
    if (!bareiss_forward(rows, n, sign))
        throw SingularMatrixError("singular matrix in exact solve");
    RatMatrix x(n, w);
    for (std::size_t c = 0; c < w; ++c) {
        for (std::size_t i = n; i-- > 0;) {
            Rat v(rows[i][n + c]);
            for (std::size_t j = i + 1; j < n; ++j) v -= Rat(rows[i][j]) * x.at(j, c);
            x.at(i, c) = v / Rat(rows[i][i]);
        }
    }
    return x;
}

RatVector solve_transpose(const IntMatrix& a_tau, const RatVector& b) {
    if (b.size() != a_tau.cols()) throw std::invalid_argument("solve dimension mismatch");
    const std::size_t n = b.size();
    // Clear denominators so the elimination stays fraction free.
    BigInt scale(1);
    for (const auto& v : b) {
        BigInt l;
        mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), v.den().get_mpz_t());
        scale = l;
    }
    IntMatrix rhs(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        rhs.at(i, 0) = b[i].num() * divexact(scale, b[i].den());
    RatMatrix x = solve_matrix(a_tau.transposed(), rhs);
    RatVector out(n);
    const Rat inv_scale(BigInt(1), scale);
    for (std::size_t i = 0; i < n; ++i) out[i] = x.at(i, 0) * inv_scale;
    return out;
}

Rref rref(RatMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Rat inv = Rat(1) / m.at(r, c);
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Rat f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        out.pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    out.mat = std::move(m);
    return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank(); }

std::size_t rank(const IntMatrix& m) { return rank(RatMatrix(m)); }

IntMatrix kernel_basis(const IntMatrix& a) {
    const std::size_t k = a.rows(), n = a.cols();
    Rref r = rref(RatMatrix(a));
    if (r.rank() != k)
        throw RankDeficientError("kernel_basis requires full row rank");
    std::vector<bool> is_pivot(n, false);
    for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    IntMatrix basis(n - k, n);
    std::size_t row = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(n, Rat(0));
        v[f] = Rat(1);
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            v[static_cast<std::size_t>(r.pivot_cols[p])] = -r.mat.at(p, f);
        // Scale to a primitive integer vector with deterministic sign.
        BigInt scale(1);
        for (const auto& x : v) {
            BigInt l;
            mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), x.den().get_mpz_t());
            scale = l;
        }
        std::vector<BigInt> w(n);
        BigInt g(0);
        for (std::size_t j = 0; j < n; ++j) {
            w[j] = v[j].num() * divexact(scale, v[j].den());
            BigInt t;
            mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), w[j].get_mpz_t());
            g = t;
        }
        int lead = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(w[j]) != 0) {
                lead = sgn(w[j]);
                break;
            }
        for (std::size_t j = 0; j < n; ++j) {
            basis.at(row, j) = divexact(w[j], g);
            if (lead < 0) basis.at(row, j) = -basis.at(row, j);
        }
        ++row;
    }
    return basis;
}

bool in_row_span(const IntMatrix& a, const RatVector& v) {
    if (v.size() != a.cols()) throw std::invalid_argument("dimension mismatch");
    RatMatrix m(a.rows() + 1, a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = Rat(a.at(i, j));
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(a.rows(), j) = v[j];
    return rank(m) == rank(a);
}

} // namespace tropmle
