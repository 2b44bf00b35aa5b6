#include "oracles.hpp"

#include "tropmle/matroid.hpp"

namespace oracles {

using tropmle::contains;
using tropmle::elements;
using tropmle::k_subsets;

BigInt cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return BigInt(1);
    if (n == 1) return m.at(0, 0);
    BigInt total(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(m.at(0, j)) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        const BigInt term = m.at(0, j) * cofactor_det(minor);
        if (j % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

std::optional<RatVector> gauss_solve(const std::vector<RatVector>& rows_in, const RatVector& rhs) {
    std::vector<RatVector> rows = rows_in;
    const std::size_t n = rows.size();
    RatVector b = rhs;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && rows[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(rows[piv], rows[col]);
        std::swap(b[piv], b[col]);
        const Rat inv = Rat(1) / rows[col][col];
        for (auto& v : rows[col]) v *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || rows[r][col].is_zero()) continue;
            const Rat f = rows[r][col];
            for (std::size_t c = 0; c < n; ++c) rows[r][c] -= f * rows[col][c];
            b[r] -= f * b[col];
        }
    }
    return b;
}

bool lower_hull_lies_in_cell(const IntMatrix& a, Subset tau, const RatVector& omega) {
    const int k = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    for (Subset s : k_subsets(n, k)) {
        if (cofactor_det(a.columns(s)) == 0) continue;
        // Functional psi with <psi, a_i> = omega_i on s.
        std::vector<RatVector> sys;
        RatVector rhs;
        for (int i : elements(s)) {
            RatVector row;
            for (int r = 0; r < k; ++r)
                row.push_back(Rat(a.at(static_cast<std::size_t>(r), static_cast<std::size_t>(i))));
            sys.push_back(std::move(row));
            rhs.push_back(omega[static_cast<std::size_t>(i)]);
        }
        const auto psi = gauss_solve(sys, rhs);
        if (!psi) continue;
        bool lower = true;
        Subset equality = 0;
        for (int j = 0; j < n && lower; ++j) {
            Rat v(0);
            for (int r = 0; r < k; ++r)
                v += (*psi)[static_cast<std::size_t>(r)] *
                     Rat(a.at(static_cast<std::size_t>(r), static_cast<std::size_t>(j)));
            if (v == omega[static_cast<std::size_t>(j)]) equality = tropmle::with(equality, j);
            else if (v > omega[static_cast<std::size_t>(j)]) lower = false;
        }
        if (lower && (tau & equality) == tau) return true;
    }
    return false;
}

std::vector<Subset> coextension_bases_numeric(const IntMatrix& b) {
    const std::size_t r = b.rows(), n = b.cols();
    // Bound every cofactor of B^h that multiplies u_j, then pick u_j = M^j
    // beyond the Cauchy-style bound so no cancellation can occur.
    BigInt maxabs(1);
    for (Subset s : k_subsets(static_cast<int>(n), static_cast<int>(r))) {
        BigInt d = abs(cofactor_det(b.columns(s)));
        if (d > maxabs) maxabs = d;
    }
    const BigInt m_base = BigInt(static_cast<long>(n + 1)) * maxabs + 1;

    IntMatrix bh(r + 1, n + 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) bh.at(i, j) = b.at(i, j);
    BigInt power(1);
    for (std::size_t j = 0; j < n; ++j) {
        power *= m_base;
        bh.at(r, j) = power;
    }
    bh.at(r, n) = -1;

    std::vector<Subset> bases;
    for (Subset gamma : k_subsets(static_cast<int>(n) + 1, static_cast<int>(r) + 1))
        if (cofactor_det(bh.columns(gamma)) != 0) bases.push_back(gamma);
    return bases;
}

namespace {

int orientation(const IntMatrix& a, int p, int q, int r) {
    const BigInt ux = a.at(1, static_cast<std::size_t>(q)) - a.at(1, static_cast<std::size_t>(p));
    const BigInt uy = a.at(2, static_cast<std::size_t>(q)) - a.at(2, static_cast<std::size_t>(p));
    const BigInt vx = a.at(1, static_cast<std::size_t>(r)) - a.at(1, static_cast<std::size_t>(p));
    const BigInt vy = a.at(2, static_cast<std::size_t>(r)) - a.at(2, static_cast<std::size_t>(p));
    return sgn(BigInt(ux * vy - uy * vx));
}

} // namespace

bool point_inside_hull_2d(const IntMatrix& a, int idx) {
    const int n = static_cast<int>(a.cols());
    // Caratheodory: inside the hull of the others iff inside some triangle.
    for (int p = 0; p < n; ++p) {
        if (p == idx) continue;
        for (int q = p + 1; q < n; ++q) {
            if (q == idx) continue;
            for (int r = q + 1; r < n; ++r) {
                if (r == idx) continue;
                const int o = orientation(a, p, q, r);
                if (o == 0) continue;
                const int s1 = orientation(a, p, q, idx);
                const int s2 = orientation(a, q, r, idx);
                const int s3 = orientation(a, r, p, idx);
                const bool inside = (s1 == o || s1 == 0) && (s2 == o || s2 == 0) &&
                                    (s3 == o || s3 == 0);
                if (inside) return true;
            }
        }
    }
    return false;
}

bool segment_is_edge_2d(const IntMatrix& a, int idx1, int idx2) {
    const int n = static_cast<int>(a.cols());
    int side = 0;
    for (int j = 0; j < n; ++j) {
        if (j == idx1 || j == idx2) continue;
        const int o = orientation(a, idx1, idx2, j);
        if (o == 0) return false;  // a third point on the supporting line
        if (side == 0) side = o;
        if (o != side) return false;
    }
    return true;
}

IntMatrix random_model_matrix(std::mt19937_64& rng, int max_n, long max_entry) {
    std::uniform_int_distribution<int> kdist(2, 4);
    for (;;) {
        const int k = kdist(rng);
        std::uniform_int_distribution<int> ndist(k, max_n);
        const int n = ndist(rng);
        IntMatrix a(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
        std::uniform_int_distribution<long> entry(0, max_entry);
        for (int j = 0; j < n; ++j) a.at(0, static_cast<std::size_t>(j)) = 1;
        for (int i = 1; i < k; ++i)
            for (int j = 0; j < n; ++j)
                a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entry(rng);
        if (tropmle::rank(a) == static_cast<std::size_t>(k)) return a;
    }
}

tropmle::TropVector random_data(std::mt19937_64& rng, int n, long max_entry) {
    std::uniform_int_distribution<int> num_zero(1, std::max(1, n / 2));
    std::uniform_int_distribution<int> pos(0, n - 1);
    std::uniform_int_distribution<long> entry(1, max_entry);
    std::uniform_int_distribution<int> denom_pick(0, 3);
    tropmle::TropVector w(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const long den = denom_pick(rng) == 0 ? 2 : 1;  // occasional halves
        w[static_cast<std::size_t>(j)] = Rat(entry(rng), den);
    }
    const int zeros = num_zero(rng);
    for (int z = 0; z < zeros; ++z) w[static_cast<std::size_t>(pos(rng))] = Rat(0);
    return w;
}

IntMatrix random_curve_matrix(std::mt19937_64& rng, int max_n, long max_position) {
    std::uniform_int_distribution<int> ndist(2, max_n);
    const int n = ndist(rng);
    std::vector<long> positions;
    std::uniform_int_distribution<long> pdist(0, max_position);
    while (static_cast<int>(positions.size()) < n) {
        const long p = pdist(rng);
        bool fresh = true;
        for (long q : positions) fresh = fresh && q != p;
        if (fresh) positions.push_back(p);
    }
    std::sort(positions.begin(), positions.end());
    IntMatrix a(2, static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        a.at(0, static_cast<std::size_t>(j)) = 1;
        a.at(1, static_cast<std::size_t>(j)) = positions[static_cast<std::size_t>(j)];
    }
    return a;
}

} // namespace oracles
