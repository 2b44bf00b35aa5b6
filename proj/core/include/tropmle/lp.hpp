#ifndef TROPMLE_LP_HPP
#define TROPMLE_LP_HPP

#include <vector>

#include "tropmle/rational.hpp"

namespace tropmle {

// Affine constraint sum_i coef[i] x_i  (rel)  rhs over exact rationals.
struct Constraint {
    enum class Rel { Eq, Le, Lt };
    RatVector coef;
    Rat rhs;
    Rel rel = Rel::Le;
};

inline Constraint eq_constraint(RatVector c, Rat rhs) {
    return Constraint{std::move(c), std::move(rhs), Constraint::Rel::Eq};
}
inline Constraint le_constraint(RatVector c, Rat rhs) {
    return Constraint{std::move(c), std::move(rhs), Constraint::Rel::Le};
}
inline Constraint lt_constraint(RatVector c, Rat rhs) {
    return Constraint{std::move(c), std::move(rhs), Constraint::Rel::Lt};
}

// Exact feasibility of a system of affine equalities and (strict)
// inequalities by Fourier-Motzkin elimination. The empty system is
// feasible. Intended for desk-scale systems (a handful of variables).
bool lp_feasible(std::vector<Constraint> constraints, std::size_t vars);

} // namespace tropmle

#endif
