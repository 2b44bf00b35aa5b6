#ifndef TROPMLE_TROPICAL_HPP
#define TROPMLE_TROPICAL_HPP

#include <map>
#include <vector>

#include "tropmle/model.hpp"
#include "tropmle/rational.hpp"
#include "tropmle/subsets.hpp"

namespace tropmle {

// Point of R^n with exact rational coordinates. Vectors compare
// lexicographically, which fixes the output order everywhere.
using TropVector = RatVector;

// Tropical data vector w = val(u): nonnegative with at least one zero
// entry. zero_set() is the set O(w) of indices where w vanishes.
class TropicalDataVector {
public:
    explicit TropicalDataVector(TropVector w);

    const TropVector& w() const { return w_; }
    int n() const { return static_cast<int>(w_.size()); }
    Subset zero_set() const { return zeros_; }

private:
    TropVector w_;
    Subset zeros_;
};

// Tropical Pluecker vector of the homogenized space: one value per basis
// of the free coextension of the dual matroid (ground set [n+1], the
// last element is the homogenizing coordinate).
struct PlueckerVector {
    int ground_size = 0;           // n + 1
    std::map<Subset, Rat> values;  // keyed by bases gamma of M(B^h)

    const Rat& at(Subset gamma) const;
};

// Cone C_tau = apex + pos(e_i : i in free_directions), a face of L_{A,u}.
struct Cone {
    TropVector apex;  // the vertex w^(tau)
    Subset tau = 0;
    Subset free_directions = 0;  // sigma = [n] \ tau

    bool contains(const TropVector& x) const;
};

// pi_gamma = min{ w_i : i in gamma with gamma - i in M(B) }, and 0 for
// every basis containing the homogenizing element.
PlueckerVector pluecker(const ModelMatrix& model, const TropicalDataVector& w);

// The tau-operator: min over exchange neighbors on tau, then max of those
// values on the complement. Idempotent, contractive, shift invariant.
TropVector tau_operator(const ModelMatrix& model, Subset tau, const TropVector& x);

// Vertex w^(tau) of L_{A,u} together with its cone C_tau.
Cone vertex(const ModelMatrix& model, const TropicalDataVector& w, Subset tau);

// Membership of x in L_{A,u}: the bases of M(B^h) maximizing
// <e_gamma, (x,0)> - pi_gamma must cover the whole ground set [n+1].
bool contains_point(const ModelMatrix& model, const TropicalDataVector& w, const TropVector& x);

} // namespace tropmle

#endif
