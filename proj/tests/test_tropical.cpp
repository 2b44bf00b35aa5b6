#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tropmle/errors.hpp"
#include "tropmle/model.hpp"
#include "tropmle/tropical.hpp"

using namespace tropmle;
using fixtures::rats;
using fixtures::set;

namespace {

TropVector random_point(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 3);
    TropVector x(static_cast<std::size_t>(n));
    for (auto& v : x) v = Rat(num(rng), den(rng));
    return x;
}

} // namespace

TEST_SUITE("tropical") {

TEST_CASE("data vector validation") {
    CHECK_THROWS_AS(TropicalDataVector(rats({1, 2})), InvalidDataError);   // no zero
    CHECK_THROWS_AS(TropicalDataVector(rats({-1, 0})), InvalidDataError);  // negative
    const TropicalDataVector w(rats({0, 2, 0, 4}));
    CHECK(w.zero_set() == set({1, 3}));
}

TEST_CASE("Pluecker values of the binary independence model") {
    const ModelMatrix model(fixtures::binary_independence());
    const TropicalDataVector w(rats({0, 2, 1, 4}));
    const PlueckerVector pi = pluecker(model, w);
    // M(B) = U(1,4), so M(B^h) = U(2,5) with 10 bases.
    CHECK(pi.ground_size == 5);
    CHECK(pi.values.size() == 10);
    // Bases through the homogenizing element 5 all sit at zero.
    for (int i = 1; i <= 4; ++i) CHECK(pi.at(set({i, 5})) == Rat(0));
    // pi_{ij} = min(w_i, w_j) for pairs inside [4].
    CHECK(pi.at(set({1, 3})) == Rat(0));
    CHECK(pi.at(set({2, 3})) == Rat(1));
    CHECK(pi.at(set({3, 4})) == Rat(1));
    CHECK(pi.at(set({2, 4})) == Rat(2));
}

TEST_CASE("Pluecker vector of zero data vanishes") {
    const ModelMatrix model(fixtures::pentagon());
    const TropicalDataVector w(rats({0, 0, 0, 0, 0}));
    for (const auto& [gamma, value] : pluecker(model, w).values) CHECK(value == Rat(0));
}

TEST_CASE("tau operator on the Hirzebruch surface") {
    const ModelMatrix model(fixtures::hirzebruch());
    const TropVector x = rats({6, 8, 7, 6, 4, 0});
    CHECK(tau_operator(model, set({2, 5, 6}), x) == rats({6, 6, 4, 4, 4, 0}));
    CHECK(tau_operator(model, set({1, 2, 6}), x) == rats({4, 4, 4, 4, 4, 0}));
    CHECK_THROWS_AS(tau_operator(model, set({3, 4, 5}), x), NotABasisError);
}

TEST_CASE("tau operator fixes constant vectors") {
    const ModelMatrix model(fixtures::binary_independence());
    const TropVector c(4, Rat(7, 3));
    for (Subset tau : model.matroid().bases()) CHECK(tau_operator(model, tau, c) == c);
}

TEST_CASE("worked vertex examples") {
    const ModelMatrix prism(fixtures::prism());
    const TropicalDataVector wp(rats({0, 1, 1, 1, 2, 4}));
    CHECK(vertex(prism, wp, set({3, 4, 5, 6})).apex == rats({0, 1, 0, 0, 1, 0}));
    CHECK(vertex(prism, wp, set({2, 3, 4, 5})).apex == rats({0, 0, 1, 0, 0, 1}));
    CHECK(vertex(prism, wp, set({1, 2, 3, 4})).apex == rats({0, 1, 1, 1, 1, 1}));

    const ModelMatrix pent(fixtures::pentagon());
    const TropicalDataVector wq(rats({0, 4, 10, 6, 5}));
    CHECK(vertex(pent, wq, set({1, 2, 5})).apex == rats({0, 4, 5, 5, 5}));

    const ModelMatrix sq(fixtures::square_with_center());
    const TropicalDataVector wr(rats({0, 1, 2, 3, 4}));
    CHECK(vertex(sq, wr, set({1, 2, 5})).apex == rats({0, 1, 2, 1, 2}));
}

TEST_CASE("cone membership bookkeeping") {
    const ModelMatrix model(fixtures::hirzebruch());
    const TropicalDataVector w(rats({6, 8, 7, 6, 4, 0}));
    const Cone cone = vertex(model, w, set({2, 5, 6}));
    CHECK(cone.free_directions == set({1, 3, 4}));
    CHECK(cone.contains(cone.apex));
    TropVector shifted = cone.apex;
    shifted[0] += Rat(5);  // free direction
    CHECK(cone.contains(shifted));
    shifted[1] += Rat(1);  // tau coordinate must stay pinned
    CHECK_FALSE(cone.contains(shifted));
}

TEST_CASE("membership of the binary example points") {
    const ModelMatrix model(fixtures::binary_independence());
    const TropicalDataVector w(rats({0, 2, 1, 4}));
    CHECK(contains_point(model, w, rats({0, 0, 0, 0})));   // vertex v_1
    CHECK(contains_point(model, w, rats({0, 1, 1, 1})));   // vertex v_0
    CHECK(contains_point(model, w, rats({0, 2, 1, 2})));   // vertex v_2
    CHECK(contains_point(model, w, rats({0, 2, 1, 3})));   // on the cone v_2 + e_4
    CHECK(contains_point(model, w, rats({0, 2, 1, 9})));   // farther out on the same cone
    // Shifting pinned coordinates leaves the complex.
    CHECK_FALSE(contains_point(model, w, rats({100, 2, 1, 4})));
    CHECK_FALSE(contains_point(model, w, rats({0, 2, 2, 2})));
}

TEST_CASE("apices lie on the tropical affine space") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 15; ++trial) {
        const ModelMatrix model(oracles::random_model_matrix(rng, 6, 4));
        const TropicalDataVector w(oracles::random_data(rng, model.n()));
        for (Subset tau : model.matroid().bases()) {
            const Cone cone = vertex(model, w, tau);
            CHECK(contains_point(model, w, cone.apex));
        }
    }
}

TEST_CASE("tau operator properties on random input (seed 31415)") {
    std::mt19937_64 rng(31415);
    for (int trial = 0; trial < 20; ++trial) {
        const ModelMatrix model(oracles::random_model_matrix(rng, 6, 4));
        const int n = model.n();
        for (Subset tau : model.matroid().bases()) {
            const TropVector x = random_point(rng, n);
            const TropVector y = tau_operator(model, tau, x);

            // Idempotence.
            CHECK(tau_operator(model, tau, y) == y);

            // Shift invariance.
            const Rat alpha(-7, 2);
            TropVector shifted = x;
            for (auto& v : shifted) v += alpha;
            TropVector expected = y;
            for (auto& v : expected) v += alpha;
            CHECK(tau_operator(model, tau, shifted) == expected);

            // Contractivity. Every entry of the image is an entry of x, so
            // the global minimum is the valid lower bound (the min over tau
            // alone can be beaten by an exchange neighbor outside tau).
            Rat floor = x[0];
            for (const Rat& v : x) floor = min(floor, v);
            for (std::size_t i = 0; i < y.size(); ++i) {
                CHECK(y[i] <= x[i]);
                CHECK(floor <= y[i]);
            }
        }
    }
}

TEST_CASE("tau operator is linear on ordering cones (seed 27182)") {
    std::mt19937_64 rng(27182);
    for (int trial = 0; trial < 20; ++trial) {
        const ModelMatrix model(oracles::random_model_matrix(rng, 6, 4));
        const int n = model.n();
        // Two points with the same strict coordinate order.
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::uniform_int_distribution<long> gap(1, 4);
        TropVector x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
        Rat vx(0), vy(0);
        for (int r = 0; r < n; ++r) {
            vx += Rat(gap(rng));
            vy += Rat(gap(rng));
            x[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])] = vx;
            y[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])] = vy;
        }
        for (Subset tau : model.matroid().bases()) {
            const TropVector fx = tau_operator(model, tau, x);
            const TropVector fy = tau_operator(model, tau, y);
            for (const Rat& t : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
                TropVector mid(static_cast<std::size_t>(n)), expect(static_cast<std::size_t>(n));
                for (std::size_t i = 0; i < mid.size(); ++i) {
                    mid[i] = t * x[i] + (Rat(1) - t) * y[i];
                    expect[i] = t * fx[i] + (Rat(1) - t) * fy[i];
                }
                CHECK(tau_operator(model, tau, mid) == expect);
            }
        }
    }
}

TEST_CASE("cones collapse to their vertex (seed 16180)") {
    std::mt19937_64 rng(16180);
    std::uniform_int_distribution<long> lambda(0, 9);
    for (int trial = 0; trial < 15; ++trial) {
        const ModelMatrix model(oracles::random_model_matrix(rng, 6, 4));
        const TropicalDataVector w(oracles::random_data(rng, model.n()));
        for (Subset tau : model.matroid().bases()) {
            const Cone cone = vertex(model, w, tau);
            TropVector y = cone.apex;
            for (int i : elements(cone.free_directions))
                y[static_cast<std::size_t>(i)] += Rat(lambda(rng), 2);
            CHECK(tau_operator(model, tau, y) == cone.apex);
            CHECK(contains_point(model, w, y));
        }
    }
}

TEST_CASE("vertex coordinates agree with Pluecker values (seed 62832)") {
    std::mt19937_64 rng(62832);
    for (int trial = 0; trial < 10; ++trial) {
        const ModelMatrix model(oracles::random_model_matrix(rng, 6, 4));
        const TropicalDataVector w(oracles::random_data(rng, model.n()));
        const PlueckerVector pi = pluecker(model, w);
        for (Subset tau : model.matroid().bases()) {
            const Cone cone = vertex(model, w, tau);
            const Subset sigma = full_set(model.n()) & ~tau;
            for (int j : elements(tau))
                CHECK(cone.apex[static_cast<std::size_t>(j)] == pi.at(with(sigma, j)));
        }
    }
}

}
