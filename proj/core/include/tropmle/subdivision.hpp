#ifndef TROPMLE_SUBDIVISION_HPP
#define TROPMLE_SUBDIVISION_HPP

#include <vector>

#include "tropmle/eps_rational.hpp"
#include "tropmle/model.hpp"
#include "tropmle/rational.hpp"
#include "tropmle/subsets.hpp"

namespace tropmle {

// Result of the lies-in-cell inequality A^T (A_tau^T)^{-1} omega_tau <= omega.
// `equality` collects the indices attaining equality (always includes tau
// when the test passes); index i has equality iff tau + i lies in a cell.
struct CellCheck {
    bool in_cell = false;
    Subset equality = 0;
};

CellCheck lies_in_cell(const ModelMatrix& model, Subset tau, const RatVector& omega);
CellCheck lies_in_cell(const ModelMatrix& model, Subset tau, const std::vector<EpsRat>& omega);

// Maximal cells of the regular subdivision induced by rational weights,
// each with the supporting linear functional psi (k entries, A^T psi
// touches omega exactly on the cell).
struct SubdivisionCells {
    std::vector<Subset> maximal_cells;        // lexicographically sorted
    std::vector<RatVector> functionals;       // psi per cell
};
SubdivisionCells maximal_cells(const ModelMatrix& model, const RatVector& omega);

// Regular triangulation of Q_A: maximal simplices are bases of M(A).
struct Triangulation {
    std::vector<Subset> simplices;        // lexicographically sorted
    std::vector<BigInt> volumes;          // |det(A_tau)| per simplex
    std::vector<EpsRat> inducing_weights; // empty for externally supplied lists

    BigInt total_volume() const;
};

// Triangulation induced by the symbolically perturbed weights
// omega_i + eps^(order[i]+1). The perturbation makes every cell a simplex
// and the result refines the subdivision of the unperturbed omega. An
// empty order means the identity.
Triangulation regular_triangulation(const ModelMatrix& model, const RatVector& omega,
                                    const std::vector<int>& eps_order = {});

// Triangulation from an explicit list of maximal simplices; validates that
// all members are bases and that their volumes partition vol_A(Q_A).
Triangulation triangulation_from_simplices(const ModelMatrix& model,
                                           const std::vector<Subset>& simplices);

// Whether every maximal simplex of tri lies in a cell of the subdivision
// induced by omega.
bool refines(const ModelMatrix& model, const Triangulation& tri, const RatVector& omega);
bool refines(const ModelMatrix& model, const Triangulation& tri, const std::vector<EpsRat>& omega);

// Whether O indexes a face of Q_A: some linear functional is maximized on
// the columns of A exactly at O. Decided exactly by Fourier-Motzkin.
bool is_face(const ModelMatrix& model, Subset O);

} // namespace tropmle

#endif
