#include "tropmle/matroid.hpp"

#include <algorithm>
#include <stdexcept>

#include "tropmle/errors.hpp"
#include "tropmle/linalg.hpp"
#include "tropmle/parallel.hpp"

namespace tropmle {

std::vector<Subset> k_subsets(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(subset_of(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

Matroid::Matroid(int ground_size, int rank, std::vector<Subset> bases,
                 std::optional<IntMatrix> representation)
    : n_(ground_size), rank_(rank), bases_(std::move(bases)), rep_(std::move(representation)) {
    if (bases_.empty()) throw std::invalid_argument("matroid with no bases");
    for (Subset b : bases_)
        if (popcount(b) != rank_) throw std::invalid_argument("basis of wrong size");
    std::sort(bases_.begin(), bases_.end(), lex_less);
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
}

bool Matroid::is_basis(Subset s) const {
    return std::binary_search(bases_.begin(), bases_.end(), s, lex_less);
}

bool Matroid::is_uniform() const {
    // C(n, rank) bases means every rank-subset is one.
    std::size_t total = 1;
    for (int i = 0; i < rank_; ++i) total = total * static_cast<std::size_t>(n_ - i) / (i + 1);
    return bases_.size() == total;
}

bool Matroid::has_loop(int element) const {
    for (Subset b : bases_)
        if (contains(b, element)) return false;
    return true;
}

bool Matroid::has_coloop(int element) const {
    for (Subset b : bases_)
        if (!contains(b, element)) return false;
    return true;
}

Matroid matroid_from_matrix(const IntMatrix& m) {
    const int k = static_cast<int>(m.rows());
    const int n = static_cast<int>(m.cols());
    if (rank(m) != static_cast<std::size_t>(k))
        throw RankDeficientError("matrix does not have full row rank");
    const std::vector<Subset> candidates = k_subsets(n, k);
    std::vector<char> keep(candidates.size(), 0);
    parallel_for(candidates.size(), [&](std::size_t i) {
        keep[i] = sgn(det(m.columns(candidates[i]))) != 0;
    });
    std::vector<Subset> bases;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) bases.push_back(candidates[i]);
    return Matroid(n, k, std::move(bases), m);
}

Matroid dual(const Matroid& m) {
    const Subset ground = full_set(m.ground_size());
    std::vector<Subset> bases;
    bases.reserve(m.bases().size());
    for (Subset b : m.bases()) bases.push_back(ground & ~b);
    return Matroid(m.ground_size(), m.ground_size() - m.rank(), std::move(bases));
}

Matroid free_coextension(const Matroid& m) {
    const int n = m.ground_size();
    for (int e = 0; e < n; ++e)
        if (m.has_coloop(e))
            throw HasColoopError("free coextension requires a coloop-free matroid");
    std::vector<Subset> bases;
    for (Subset sigma : m.bases())
        for (int j = 0; j <= n; ++j)
            if (!contains(sigma, j)) bases.push_back(with(sigma, j));
    return Matroid(n + 1, m.rank() + 1, std::move(bases));
}

std::vector<int> exchange_neighbors(const Matroid& m, Subset tau, int j) {
    if (!m.is_basis(tau)) throw NotABasisError("tau is not a basis");
    if (!contains(tau, j)) throw NotABasisError("j is not an element of tau");
    std::vector<int> out;
    for (int i = 0; i < m.ground_size(); ++i) {
        if (contains(tau, i)) continue;
        if (m.is_basis(with(without(tau, j), i))) out.push_back(i);
    }
    return out;
}

bool has_O_basis_exchange(const Matroid& m, Subset tau, Subset O) {
    if (!m.is_basis(tau)) throw NotABasisError("tau is not a basis");
    const Subset candidates = O & ~tau;
    Subset need = tau & ~O;
    while (need) {
        const int j = std::countr_zero(need);
        need &= need - 1;
        bool found = false;
        Subset cand = candidates;
        while (cand && !found) {
            const int i = std::countr_zero(cand);
            cand &= cand - 1;
            found = m.is_basis(with(without(tau, j), i));
        }
        if (!found) return false;
    }
    return true;
}

} // namespace tropmle
