#ifndef TROPMLE_CRITICAL_POINTS_HPP
#define TROPMLE_CRITICAL_POINTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tropmle/model.hpp"
#include "tropmle/rational.hpp"
#include "tropmle/subdivision.hpp"
#include "tropmle/subsets.hpp"
#include "tropmle/tropical.hpp"

namespace tropmle {

// A tropical critical point with its multiplicity and the bases whose
// cones contributed it (contributions with equal q are merged).
struct CriticalPoint {
    TropVector q;
    BigInt multiplicity;
    std::vector<Subset> witnesses;
};

struct CriticalPointSet {
    std::vector<CriticalPoint> points;  // sorted lexicographically by q
    BigInt total_multiplicity;
    bool complete = false;  // true iff the set is certified to have total vol_A(Q_A)
};

// A maximal simplex that failed its lies-in-cell certificate, with the
// vertex it was tested against and the violating coordinates.
struct CertificationFailure {
    Subset tau = 0;
    TropVector apex;                 // w^(tau)
    std::vector<int> violated;       // indices i with q_i < w^(tau)_i
};

struct TriangulationCertificate {
    std::optional<CriticalPointSet> result;
    std::vector<CertificationFailure> failures;
};

// One attempted triangulation per perturbation order, with its failures.
struct SolveDiagnostic {
    struct Attempt {
        std::vector<int> eps_order;
        std::vector<CertificationFailure> failures;
    };
    std::vector<Attempt> attempts;
};

// Proof-of-work constant c_{A,O} of the uniform-matroid case, computed
// over one deterministic triangulation refining the subdivision of e_O.
struct UniformCaseConstant {
    Rat value;
    bool unconstrained = false;  // no maximal cell contains O and an outside index
    Triangulation triangulation_used;
    struct Term {
        Subset tau = 0;
        int i = 0;
        Rat jplus_sum;
        Rat jminus_sum;
        Rat c;
    };
    std::vector<Term> per_entry_terms;
};

struct SolveResult {
    std::optional<CriticalPointSet> points;
    std::string method;  // dispatch path that produced (or failed) the answer
    std::optional<UniformCaseConstant> constant;  // advisory, uniform face case
    SolveDiagnostic diagnostic;                   // populated when nothing certified
};

// Intersection of row(A) with the cone C_tau: exists iff tau lies in a
// cell of the subdivision of -w^(tau); the point is A^T(A_tau^T)^{-1}
// w^(tau)_tau with multiplicity vol_A(tau).
std::optional<CriticalPoint> cone_intersection(const ModelMatrix& model,
                                               const TropicalDataVector& w, Subset tau);

// Certified full solution: if every maximal simplex of tri lies in a
// cell of its own -w^(tau) subdivision, the merged set of q(tau) is the
// complete answer.
TriangulationCertificate solve_by_triangulation(const ModelMatrix& model,
                                                const TropicalDataVector& w,
                                                const Triangulation& tri);

// End-to-end solver: zero-set shortcut, closed-form fast paths, uniform
// matroid case, then the perturbed-triangulation search.
SolveResult solve(const ModelMatrix& model, const TropicalDataVector& w);

// Closed form for monomial curves (k = 2, ones first row, strictly
// increasing second row). Throws NotACurveError otherwise.
CriticalPointSet solve_curve(const ModelMatrix& model, const TropicalDataVector& w);

// c_{A,O} for uniform M(A) and a face O. Throws NotUniformError /
// NotAFaceError when the preconditions fail.
UniformCaseConstant uniform_constant(const ModelMatrix& model, Subset O);

} // namespace tropmle

#endif
