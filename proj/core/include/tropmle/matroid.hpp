#ifndef TROPMLE_MATROID_HPP
#define TROPMLE_MATROID_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tropmle/int_matrix.hpp"
#include "tropmle/subsets.hpp"

namespace tropmle {

// Matroid given by its list of bases, stored as bitsets over the ground
// set {0,...,n-1} in lexicographic order. Immutable after construction.
class Matroid {
public:
    Matroid(int ground_size, int rank, std::vector<Subset> bases,
            std::optional<IntMatrix> representation = std::nullopt);

    int ground_size() const { return n_; }
    int rank() const { return rank_; }
    const std::vector<Subset>& bases() const { return bases_; }
    const std::optional<IntMatrix>& representation() const { return rep_; }

    bool is_basis(Subset s) const;
    bool is_uniform() const;
    bool has_loop(int element) const;    // element in no basis
    bool has_coloop(int element) const;  // element in every basis

    friend bool operator==(const Matroid& a, const Matroid& b) {
        return a.n_ == b.n_ && a.rank_ == b.rank_ && a.bases_ == b.bases_;
    }

private:
    int n_;
    int rank_;
    std::vector<Subset> bases_;  // lexicographically sorted
    std::optional<IntMatrix> rep_;
};

// Matroid of the columns of m: a k-subset is a basis iff the determinant
// of those columns is nonzero. Throws RankDeficientError when m does not
// have full row rank.
Matroid matroid_from_matrix(const IntMatrix& m);

// Dual matroid: bases are the complements of the bases of m.
Matroid dual(const Matroid& m);

// Free coextension on ground set [n+1]: bases are sigma + j for sigma a
// basis of m and j outside sigma. Requires m to have no coloops.
Matroid free_coextension(const Matroid& m);

// All i outside tau with tau - j + i a basis. Throws NotABasisError.
std::vector<int> exchange_neighbors(const Matroid& m, Subset tau, int j);

// True iff every j in tau \ O admits i in O \ tau with tau - j + i a basis.
bool has_O_basis_exchange(const Matroid& m, Subset tau, Subset O);

} // namespace tropmle

#endif
