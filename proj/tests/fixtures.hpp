#ifndef TROPMLE_TESTS_FIXTURES_HPP
#define TROPMLE_TESTS_FIXTURES_HPP

// Shared example models. Data vectors live next to the assertions.

#include "tropmle/int_matrix.hpp"
#include "tropmle/rational.hpp"
#include "tropmle/subsets.hpp"

namespace fixtures {

using tropmle::IntMatrix;
using tropmle::Rat;
using tropmle::RatVector;
using tropmle::Subset;

// Independence model of two binary random variables; Q_A is the unit square.
inline IntMatrix binary_independence() {
    return IntMatrix{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}};
}

// Hirzebruch surface with four collinear column points on the top edge.
inline IntMatrix hirzebruch() {
    return IntMatrix{{1, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 2, 3}, {0, 0, 1, 1, 1, 1}};
}

// Convex pentagon, uniform matroid of rank three.
inline IntMatrix pentagon() {
    return IntMatrix{{1, 1, 1, 1, 1}, {0, 1, 2, 1, 0}, {0, 0, 1, 2, 1}};
}

// Square with its center: two of the ten 3-subsets are collinear.
inline IntMatrix square_with_center() {
    return IntMatrix{{1, 1, 1, 1, 1}, {1, 0, 2, 2, 0}, {1, 0, 0, 2, 2}};
}

// Triangular prism: independence model of a binary and a ternary variable.
inline IntMatrix prism() {
    return IntMatrix{{1, 1, 1, 1, 1, 1},
                     {0, 1, 0, 0, 1, 0},
                     {0, 0, 1, 0, 0, 1},
                     {0, 0, 0, 1, 1, 1}};
}

inline RatVector rats(std::initializer_list<long> values) {
    RatVector v;
    for (long x : values) v.emplace_back(x);
    return v;
}

// 1-based index set, matching the notation of the examples.
inline Subset set(std::initializer_list<int> elems) {
    Subset s = 0;
    for (int e : elems) s = tropmle::with(s, e - 1);
    return s;
}

} // namespace fixtures

#endif
