#ifndef TROPMLE_SUBSETS_HPP
#define TROPMLE_SUBSETS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace tropmle {

// Subsets of a ground set {0,...,n-1} as bitmasks, n <= 64.
using Subset = std::uint64_t;

inline int popcount(Subset s) { return std::popcount(s); }
inline bool contains(Subset s, int i) { return (s >> i) & 1u; }
inline Subset with(Subset s, int i) { return s | (Subset{1} << i); }
inline Subset without(Subset s, int i) { return s & ~(Subset{1} << i); }
inline Subset full_set(int n) { return n == 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

inline std::vector<int> elements(Subset s) {
    std::vector<int> out;
    while (s) {
        int i = std::countr_zero(s);
        out.push_back(i);
        s &= s - 1;
    }
    return out;
}

inline Subset subset_of(const std::vector<int>& elems) {
    Subset s = 0;
    for (int i : elems) s = with(s, i);
    return s;
}

// Lexicographic order on the sorted element sequences, e.g. {0,3} < {1,2}.
// Distinct from numeric order on masks, which is colexicographic.
inline bool lex_less(Subset a, Subset b) {
    while (a && b) {
        int ia = std::countr_zero(a), ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// All k-element subsets of {0,...,n-1} in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);

} // namespace tropmle

#endif
