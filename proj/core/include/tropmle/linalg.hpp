#ifndef TROPMLE_LINALG_HPP
#define TROPMLE_LINALG_HPP

#include <cstddef>
#include <vector>

#include "tropmle/int_matrix.hpp"
#include "tropmle/rational.hpp"

namespace tropmle {

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det(const IntMatrix& m);

// Rank over the rationals.
std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

// Exact solution of a_tau^T x = b. Throws SingularMatrixError when
// det(a_tau) = 0.
RatVector solve_transpose(const IntMatrix& a_tau, const RatVector& b);

// Exact solution X of m X = rhs for square nonsingular integer m.
RatMatrix solve_matrix(const IntMatrix& m, const IntMatrix& rhs);

// Integer matrix whose rows form a basis of ker(a): (n-k) x n of rank n-k
// with a B^T = 0. Rows are primitive integer vectors with deterministic
// sign. Throws RankDeficientError when a does not have full row rank.
IntMatrix kernel_basis(const IntMatrix& a);

// Whether the rational vector v lies in the row span of a.
bool in_row_span(const IntMatrix& a, const RatVector& v);

// Reduced row echelon form over the rationals.
struct Rref {
    RatMatrix mat;
    std::vector<int> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};
Rref rref(RatMatrix m);

} // namespace tropmle

#endif
