#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tropmle/critical_points.hpp"
#include "tropmle/errors.hpp"
#include "tropmle/linalg.hpp"
#include "tropmle/tips.hpp"

using namespace tropmle;
using fixtures::rats;

namespace {

const IntMatrix kBinaryScaling{{2, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
const IntMatrix kHirzebruchA1{{4, 3, 3, 2, 1, 0}, {0, 1, 0, 1, 2, 3}, {0, 0, 1, 1, 1, 1}};
const IntMatrix kHirzebruchA2{{1, 1, 0, 0, 0, 0}, {1, 0, 3, 2, 1, 0}, {1, 2, 0, 1, 2, 3}};

} // namespace

TEST_SUITE("tips") {

TEST_CASE("reparametrization produces a valid scaling model") {
    const ModelMatrix model(fixtures::binary_independence());
    const ScalingModel s = reparametrize(model);
    CHECK(sgn(s.alpha) > 0);
    for (std::size_t j = 0; j < s.a.cols(); ++j) {
        BigInt sum(0);
        for (std::size_t i = 0; i < s.a.rows(); ++i) {
            CHECK(sgn(s.a.at(i, j)) >= 0);
            sum += s.a.at(i, j);
        }
        CHECK(sum == s.alpha);
    }
    // Row space preserved: the validator accepts the result.
    CHECK_NOTHROW(make_scaling_model(model, s.a));
}

TEST_CASE("an already valid scaling matrix is its own reparametrization") {
    const ScalingModel s = reparametrize(kBinaryScaling);
    CHECK(s.alpha == 2);
    CHECK(s.a == kBinaryScaling);
}

TEST_CASE("reparametrization handles negative entries") {
    IntMatrix a{{1, 1, 1}, {-2, 0, 3}};
    const ScalingModel s = reparametrize(a);
    for (std::size_t i = 0; i < s.a.rows(); ++i)
        for (std::size_t j = 0; j < s.a.cols(); ++j) CHECK(sgn(s.a.at(i, j)) >= 0);
    RatVector ones(3, Rat(1));
    CHECK(in_row_span(s.a, ones));
    CHECK_THROWS_AS(reparametrize(IntMatrix{{1, 0, -1}}), NoAllOnesError);
}

TEST_CASE("known scaling matrices validate against their models") {
    CHECK_NOTHROW(make_scaling_model(ModelMatrix(fixtures::binary_independence()),
                                     kBinaryScaling));
    CHECK_NOTHROW(make_scaling_model(ModelMatrix(fixtures::hirzebruch()), kHirzebruchA1));
    CHECK_NOTHROW(make_scaling_model(ModelMatrix(fixtures::hirzebruch()), kHirzebruchA2));
    // A wrong row space is rejected.
    IntMatrix wrong{{1, 1, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}};
    CHECK_THROWS_AS(make_scaling_model(ModelMatrix(fixtures::binary_independence()), wrong),
                    InvalidDataError);
}

TEST_CASE("one step of the binary run") {
    const ModelMatrix model(fixtures::binary_independence());
    const ScalingModel s = make_scaling_model(model, kBinaryScaling);
    const TropicalDataVector w(rats({0, 2, 1, 4}));
    const TipsState st0 = tips_init(s, w, rats({0, 0, 0, 0}));
    CHECK(st0.r == rats({0, 2, 1}));
    CHECK(st0.rhat == rats({0, 0, 0}));
    const TipsState st1 = tips_step(s, w, st0);
    CHECK(st1.q == RatVector{Rat(0), Rat(1), Rat(1, 2), Rat(3, 2)});
}

TEST_CASE("a state at the fixed point does not move") {
    const ModelMatrix model(fixtures::binary_independence());
    const ScalingModel s = make_scaling_model(model, kBinaryScaling);
    const TropicalDataVector w(rats({0, 2, 1, 4}));
    const TipsState st = tips_init(s, w, rats({0, 2, 1, 3}));
    CHECK(st.rhat == st.r);
    CHECK(tips_step(s, w, st).q == st.q);
}

TEST_CASE("the binary iterates follow the closed form up to t = 20") {
    const ModelMatrix model(fixtures::binary_independence());
    const ScalingModel s = make_scaling_model(model, kBinaryScaling);
    const TropicalDataVector w(rats({0, 2, 1, 4}));
    TipsState st = tips_init(s, w, rats({0, 0, 0, 0}));
    BigInt pow2(1);
    for (long t = 1; t <= 20; ++t) {
        st = tips_step(s, w, st);
        pow2 *= 2;
        const Rat factor(BigInt(pow2 - 1), pow2);  // (2^t - 1) / 2^t
        const RatVector expect{Rat(0), factor * Rat(2), factor, factor * Rat(3)};
        CHECK(st.q == expect);
    }
}

TEST_CASE("the binary run extrapolates to the exact critical point") {
    const ModelMatrix model(fixtures::binary_independence());
    const ScalingModel s = make_scaling_model(model, kBinaryScaling);
    const TipsReport report =
        tips_run(model, s, TropicalDataVector(rats({0, 2, 1, 4})), rats({0, 0, 0, 0}));
    CHECK(report.status == TipsStatus::Converging);
    REQUIRE(report.ratio.has_value());
    CHECK(*report.ratio == Rat(1, 2));
    REQUIRE(report.limit.has_value());
    CHECK(*report.limit == rats({0, 2, 1, 3}));
    REQUIRE(report.limit_is_critical_point.has_value());
    CHECK(*report.limit_is_critical_point);
}

TEST_CASE("the two Hirzebruch parametrizations disagree about the limit") {
    const ModelMatrix model(fixtures::hirzebruch());
    const TropicalDataVector w(rats({6, 8, 7, 6, 4, 0}));
    const TropVector q0(6, Rat(0));

    const TipsReport r1 = tips_run(model, make_scaling_model(model, kHirzebruchA1), w, q0);
    REQUIRE(r1.limit.has_value());
    CHECK(*r1.limit == rats({16, 12, 12, 8, 4, 0}));
    REQUIRE(r1.limit_is_critical_point.has_value());
    CHECK_FALSE(*r1.limit_is_critical_point);

    const TipsReport r2 = tips_run(model, make_scaling_model(model, kHirzebruchA2), w, q0);
    REQUIRE(r2.limit.has_value());
    CHECK(*r2.limit == rats({10, 6, 12, 8, 4, 0}));
    REQUIRE(r2.limit_is_critical_point.has_value());
    CHECK(*r2.limit_is_critical_point);
}

TEST_CASE("an exhausted iteration budget reports undecided") {
    const ModelMatrix model(fixtures::binary_independence());
    const ScalingModel s = make_scaling_model(model, kBinaryScaling);
    const TipsReport report =
        tips_run(model, s, TropicalDataVector(rats({0, 2, 1, 4})), rats({0, 0, 0, 0}), 2);
    CHECK(report.status == TipsStatus::Undecided);
    CHECK_FALSE(report.limit.has_value());
    CHECK(report.trajectory.size() == 3);  // q^0, q^1, q^2
    CHECK_FALSE(report.note.empty());
}

TEST_CASE("a run started at the fixed point terminates exactly") {
    const ModelMatrix model(fixtures::binary_independence());
    const ScalingModel s = make_scaling_model(model, kBinaryScaling);
    const TipsReport report =
        tips_run(model, s, TropicalDataVector(rats({0, 2, 1, 4})), rats({0, 2, 1, 3}));
    CHECK(report.status == TipsStatus::Terminated);
    CHECK(report.exact_termination);
    REQUIRE(report.limit.has_value());
    CHECK(*report.limit == rats({0, 2, 1, 3}));
}

TEST_CASE("iterates stay in the row space when started there (seed 66001)") {
    std::mt19937_64 rng(66001);
    const ModelMatrix model(fixtures::binary_independence());
    const ScalingModel s = make_scaling_model(model, kBinaryScaling);
    const TropicalDataVector w(rats({0, 2, 1, 4}));

    std::uniform_int_distribution<long> coef(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        // q0 = A^T y for random rational y.
        RatVector y{Rat(coef(rng), 2), Rat(coef(rng)), Rat(coef(rng), 3)};
        TropVector q0(4, Rat(0));
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t i = 0; i < 3; ++i)
                q0[j] += Rat(model.a().at(i, j)) * y[i];
        TipsState st = tips_init(s, w, q0);
        for (int t = 0; t < 8; ++t) {
            CHECK(in_row_span(model.a(), st.q));
            st = tips_step(s, w, st);
        }
    }
}

TEST_CASE("tips_step is stationary exactly at fixed points (seed 66002)") {
    std::mt19937_64 rng(66002);
    const ModelMatrix model(fixtures::hirzebruch());
    const ScalingModel s = make_scaling_model(model, kHirzebruchA2);  // full row rank
    const TropicalDataVector w(rats({6, 8, 7, 6, 4, 0}));
    std::uniform_int_distribution<long> entry(-4, 8);
    for (int trial = 0; trial < 50; ++trial) {
        TropVector q0(6);
        for (auto& v : q0) v = Rat(entry(rng), 2);
        const TipsState st = tips_init(s, w, q0);
        const TipsState next = tips_step(s, w, st);
        CHECK((next.q == st.q) == (st.rhat == st.r));
    }
}

TEST_CASE("fixed points among the critical points") {
    // A critical point is a tIPS fixed point exactly when the tropical
    // minimum rhat matches r, i.e. when no cancellation hides behind the
    // min. For this data that singles out (10,6,12,8,4,0); the origin is
    // a genuine critical point yet the recursion walks away from it,
    // which is precisely the observed run that starts at q0 = 0.
    const ModelMatrix model(fixtures::hirzebruch());
    const TropicalDataVector w(rats({6, 8, 7, 6, 4, 0}));
    const SolveResult solved = solve(model, w);
    REQUIRE(solved.points.has_value());
    for (const ScalingModel& s : {make_scaling_model(model, kHirzebruchA1),
                                  make_scaling_model(model, kHirzebruchA2)}) {
        int fixed = 0;
        for (const auto& cp : solved.points->points) {
            const TipsState st = tips_init(s, w, cp.q);
            CHECK((tips_step(s, w, st).q == st.q) == (st.rhat == st.r));
            if (st.rhat == st.r) {
                ++fixed;
                CHECK(cp.q == rats({10, 6, 12, 8, 4, 0}));
            }
        }
        CHECK(fixed == 1);
    }
    // The origin is critical, but its rhat differs from r under A1.
    const TipsState origin = tips_init(make_scaling_model(model, kHirzebruchA1), w,
                                       rats({0, 0, 0, 0, 0, 0}));
    CHECK(origin.rhat != origin.r);
}

}
