#include "tropmle/model.hpp"

#include "tropmle/errors.hpp"
#include "tropmle/linalg.hpp"
#include "tropmle/subdivision.hpp"

namespace tropmle {

namespace {

Matroid validate_and_build(const IntMatrix& a) {
    const std::size_t k = a.rows(), n = a.cols();
    if (k == 0 || n == 0) throw InvalidDataError("empty model matrix");
    if (k > n) throw InvalidDataError("model matrix has more rows than columns");
    if (n > 64) throw InvalidDataError("ground sets beyond 64 elements are unsupported");
    for (std::size_t j = 0; j < n; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < k && zero; ++i) zero = sgn(a.at(i, j)) == 0;
        if (zero)
            throw InvalidDataError("model matrix has a zero column (column " +
                                   std::to_string(j + 1) + ")");
    }
    RatVector ones(n, Rat(1));
    if (!in_row_span(a, ones))
        throw InvalidDataError("all-ones vector is not in the row span of the model matrix");
    return matroid_from_matrix(a);  // throws RankDeficientError if rank < k
}

} // namespace

ModelMatrix::ModelMatrix(IntMatrix a)
    : a_(std::move(a)), matroid_(validate_and_build(a_)) {
    // Matroid and projections are ready; the canonical perturbed
    // triangulation partitions Q_A, so its volumes sum to vol_A(Q_A).
    volume_ = regular_triangulation(*this, RatVector(a_.cols(), Rat(0))).total_volume();
}

BigInt ModelMatrix::simplex_volume(Subset tau) const {
    return abs(det(a_.columns(tau)));
}

RatMatrix ModelMatrix::projection(Subset tau) const {
    const IntMatrix a_tau = a_.columns(tau);
    const RatMatrix z = solve_matrix(a_tau, a_);  // A_tau Z = A
    RatMatrix p(a_.cols(), a_tau.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) p.at(i, j) = z.at(j, i);
    return p;
}

} // namespace tropmle
