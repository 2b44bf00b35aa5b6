#ifndef TROPMLE_MODEL_HPP
#define TROPMLE_MODEL_HPP

#include <cstddef>

#include "tropmle/int_matrix.hpp"
#include "tropmle/matroid.hpp"
#include "tropmle/rational.hpp"

namespace tropmle {

// Integer model matrix A of a toric model: full row rank, all-ones vector
// in the row span (hence no zero columns). Owns the matroid M(A) and the
// normalized volume of Q_A = conv of the columns.
class ModelMatrix {
public:
    explicit ModelMatrix(IntMatrix a);

    const IntMatrix& a() const { return a_; }
    int k() const { return static_cast<int>(a_.rows()); }
    int n() const { return static_cast<int>(a_.cols()); }

    const Matroid& matroid() const { return matroid_; }
    bool is_basis(Subset tau) const { return matroid_.is_basis(tau); }

    // Normalized volume vol_A(Q_A); also the total number of tropical
    // critical points counted with multiplicity.
    const BigInt& volume() const { return volume_; }

    // |det(A_tau)| for a k-subset tau.
    BigInt simplex_volume(Subset tau) const;

    // The n x k matrix A^T (A_tau^T)^{-1}. Row i expresses column a_i in
    // the basis of columns indexed by tau (in increasing index order).
    RatMatrix projection(Subset tau) const;

private:
    IntMatrix a_;
    Matroid matroid_;
    BigInt volume_;
};

} // namespace tropmle

#endif
