#include "tropmle/tips.hpp"

#include <stdexcept>

#include "tropmle/critical_points.hpp"
#include "tropmle/errors.hpp"
#include "tropmle/linalg.hpp"

namespace tropmle {

namespace {

bool rows_span_equal(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) return false;
    RatMatrix stacked(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) stacked.at(i, j) = Rat(a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) stacked.at(a.rows() + i, j) = Rat(b.at(i, j));
    const std::size_t ra = rank(a), rb = rank(b);
    return ra == rb && rank(stacked) == ra;
}

RatVector min_over_support(const IntMatrix& a, const TropVector& v) {
    RatVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        bool first = true;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (sgn(a.at(i, j)) == 0) continue;
            if (first || v[j] < out[i]) {
                out[i] = v[j];
                first = false;
            }
        }
        if (first) throw InvalidDataError("scaling matrix has a zero row");
    }
    return out;
}

} // namespace

ScalingModel make_scaling_model(const ModelMatrix& origin, IntMatrix a) {
    if (a.cols() != static_cast<std::size_t>(origin.n()))
        throw InvalidDataError("scaling matrix has the wrong number of columns");
    BigInt alpha(0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
        BigInt sum(0);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (sgn(a.at(i, j)) < 0)
                throw InvalidDataError("scaling matrix entries must be nonnegative");
            sum += a.at(i, j);
        }
        if (j == 0) alpha = sum;
        else if (sum != alpha)
            throw InvalidDataError("scaling matrix must have constant column sums");
    }
    if (sgn(alpha) <= 0) throw InvalidDataError("scaling matrix column sum must be positive");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < a.cols() && zero; ++j) zero = sgn(a.at(i, j)) == 0;
        if (zero) throw InvalidDataError("scaling matrix has a zero row");
    }
    if (!rows_span_equal(origin.a(), a))
        throw InvalidDataError("scaling matrix does not span the model row space");
    return ScalingModel{std::move(a), alpha};
}

ScalingModel reparametrize(const IntMatrix& a) {
    const std::size_t k = a.rows(), n = a.cols();
    RatVector ones(n, Rat(1));
    if (!in_row_span(a, ones))
        throw NoAllOnesError("all-ones vector is not in the row span");

    IntMatrix shifted(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        BigInt lo = a.at(i, 0);
        for (std::size_t j = 1; j < n; ++j)
            if (a.at(i, j) < lo) lo = a.at(i, j);
        BigInt shift = sgn(lo) < 0 ? BigInt(-lo) : BigInt(0);
        bool all_same = true;
        for (std::size_t j = 0; j < n && all_same; ++j) all_same = a.at(i, j) == lo;
        if (all_same && sgn(lo) <= 0) shift = 1 - lo;  // keep the row nonzero
        for (std::size_t j = 0; j < n; ++j) shifted.at(i, j) = a.at(i, j) + shift;
    }

    std::vector<BigInt> sums(n, BigInt(0));
    BigInt alpha(0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) sums[j] += shifted.at(i, j);
        if (sums[j] > alpha) alpha = sums[j];
    }
    bool constant = true;
    for (std::size_t j = 0; j < n && constant; ++j) constant = sums[j] == alpha;

    IntMatrix result = shifted;
    if (!constant) {
        std::vector<BigInt> pad(n);
        for (std::size_t j = 0; j < n; ++j) pad[j] = alpha - sums[j];
        result = shifted.with_extra_row(pad);
    }
    if (!rows_span_equal(a, result))
        throw InvalidDataError("reparametrization failed to preserve the row space");
    return ScalingModel{std::move(result), alpha};
}

ScalingModel reparametrize(const ModelMatrix& model) { return reparametrize(model.a()); }

TipsState tips_init(const ScalingModel& s, const TropicalDataVector& w, TropVector q0) {
    if (q0.size() != s.a.cols()) throw InvalidDataError("q0 has the wrong length");
    if (w.w().size() != s.a.cols()) throw InvalidDataError("data has the wrong length");
    TipsState st;
    st.t = 0;
    st.q = std::move(q0);
    st.rhat = min_over_support(s.a, st.q);
    st.r = min_over_support(s.a, w.w());
    return st;
}

TipsState tips_step(const ScalingModel& s, const TropicalDataVector& w, const TipsState& state) {
    TipsState next;
    next.t = state.t + 1;
    next.r = state.r;
    next.q = state.q;
    const Rat inv_alpha(BigInt(1), s.alpha);
    for (std::size_t j = 0; j < s.a.cols(); ++j) {
        Rat update(0);
        for (std::size_t i = 0; i < s.a.rows(); ++i) {
            if (sgn(s.a.at(i, j)) == 0) continue;
            update += Rat(s.a.at(i, j)) * (state.r[i] - state.rhat[i]);
        }
        next.q[j] += inv_alpha * update;
    }
    next.rhat = min_over_support(s.a, next.q);
    (void)w;
    return next;
}

TipsReport tips_run(const ModelMatrix& origin, const ScalingModel& s,
                    const TropicalDataVector& w, TropVector q0, long max_iter,
                    const Rat& convergence_tol) {
    if (max_iter < 1) throw InvalidDataError("max_iter must be at least 1");
    TipsReport report;
    TipsState state = tips_init(s, w, std::move(q0));
    report.trajectory.push_back(state.q);

    std::vector<TropVector> diffs;
    for (long t = 0; t < max_iter; ++t) {
        if (state.rhat == state.r) {
            report.status = TipsStatus::Terminated;
            report.exact_termination = true;
            report.limit = state.q;
            break;
        }
        TipsState next = tips_step(s, w, state);
        TropVector d(next.q.size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = next.q[j] - state.q[j];
        diffs.push_back(d);
        report.trajectory.push_back(next.q);
        state = std::move(next);

        // Geometric decay: one constant rational ratio across the last
        // three differences lets us sum the series exactly.
        if (diffs.size() >= 3) {
            const TropVector& d2 = diffs[diffs.size() - 3];
            const TropVector& d1 = diffs[diffs.size() - 2];
            const TropVector& d0 = diffs[diffs.size() - 1];
            std::optional<Rat> rho;
            bool consistent = true;
            for (std::size_t j = 0; j < d2.size() && consistent; ++j) {
                if (d2[j].is_zero())
                    consistent = d1[j].is_zero();
                else if (!rho)
                    rho = d1[j] / d2[j];
            }
            if (consistent && rho) {
                for (std::size_t j = 0; j < d2.size() && consistent; ++j)
                    consistent = d1[j] == *rho * d2[j] && d0[j] == *rho * d1[j];
                if (consistent && rho->abs() < Rat(1)) {
                    report.status = TipsStatus::Converging;
                    report.ratio = *rho;
                    TropVector limit = state.q;
                    const Rat factor = *rho / (Rat(1) - *rho);
                    for (std::size_t j = 0; j < limit.size(); ++j)
                        limit[j] += factor * d0[j];
                    report.limit = std::move(limit);
                    break;
                }
            }
        }

        Rat step_norm(0);
        for (const auto& x : diffs.back()) step_norm = max(step_norm, x.abs());
        if (step_norm < convergence_tol) {
            report.status = TipsStatus::Undecided;
            report.note = "step size fell below the tolerance without a detected pattern";
            break;
        }
    }
    if (report.status == TipsStatus::Undecided && report.note.empty())
        report.note = "iteration budget exhausted";

    // Verdict: prefer the solved critical point set; fall back to the
    // fixed-point condition rhat = r.
    const TropVector& probe = report.limit ? *report.limit : state.q;
    const SolveResult solved = solve(origin, w);
    if (solved.points && solved.points->complete) {
        bool found = false;
        for (const auto& cp : solved.points->points) found = found || cp.q == probe;
        report.limit_is_critical_point = found;
    } else {
        report.limit_is_critical_point =
            min_over_support(s.a, probe) == state.r;
    }
    return report;
}

} // namespace tropmle
