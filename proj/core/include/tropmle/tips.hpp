#ifndef TROPMLE_TIPS_HPP
#define TROPMLE_TIPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "tropmle/int_matrix.hpp"
#include "tropmle/model.hpp"
#include "tropmle/rational.hpp"
#include "tropmle/tropical.hpp"

namespace tropmle {

// Nonnegative parametrization with constant column sums used by the
// tropical iterative proportional scaling recursion. Its row space equals
// that of the originating model, but it need not have full row rank.
struct ScalingModel {
    IntMatrix a;
    BigInt alpha;
};

// Validates entries, column sums and row-space equality against origin.
ScalingModel make_scaling_model(const ModelMatrix& origin, IntMatrix a);

// Deterministic reparametrization: shift each row by a multiple of the
// all-ones vector until nonnegative, then pad with one extra row to make
// the column sums constant. Throws NoAllOnesError when the all-ones
// vector is not in the row span.
ScalingModel reparametrize(const IntMatrix& a);
ScalingModel reparametrize(const ModelMatrix& model);

struct TipsState {
    long t = 0;
    TropVector q;
    RatVector rhat;  // rhat_i = min{ q_j : a_ij != 0 }
    RatVector r;     // r_i    = min{ w_j : a_ij != 0 }
};

TipsState tips_init(const ScalingModel& s, const TropicalDataVector& w, TropVector q0);

// One recursion step q <- q + alpha^{-1} A^T (r - rhat).
TipsState tips_step(const ScalingModel& s, const TropicalDataVector& w, const TipsState& state);

enum class TipsStatus { Terminated, Converging, Undecided };

struct TipsReport {
    TipsStatus status = TipsStatus::Undecided;
    std::vector<TropVector> trajectory;  // q^0, q^1, ...
    std::optional<TropVector> limit;
    std::optional<Rat> ratio;  // detected geometric decay ratio
    bool exact_termination = false;
    std::optional<bool> limit_is_critical_point;
    std::string note;
};

// Iterates until rhat = r exactly, or three consecutive differences decay
// by one constant rational ratio (then the geometric limit is
// extrapolated exactly), or the step size drops below convergence_tol,
// or max_iter is reached. The limit (or the endpoint) is checked against
// the tropical critical points of the originating model.
TipsReport tips_run(const ModelMatrix& origin, const ScalingModel& s,
                    const TropicalDataVector& w, TropVector q0, long max_iter = 1000,
                    const Rat& convergence_tol = Rat(1, 1000000000L));

} // namespace tropmle

#endif
