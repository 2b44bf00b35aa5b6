#include "tropmle/tropical.hpp"

#include <stdexcept>

#include "tropmle/errors.hpp"

namespace tropmle {

TropicalDataVector::TropicalDataVector(TropVector w) : w_(std::move(w)), zeros_(0) {
    if (w_.empty()) throw InvalidDataError("empty tropical data vector");
    if (w_.size() > 64) throw InvalidDataError("data vectors beyond 64 entries are unsupported");
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (w_[i].sign() < 0)
            throw InvalidDataError("tropical data must be nonnegative (entry " +
                                   std::to_string(i + 1) + " is " + w_[i].str() + ")");
        if (w_[i].is_zero()) zeros_ = with(zeros_, static_cast<int>(i));
    }
    if (zeros_ == 0)
        throw InvalidDataError("tropical data must have at least one zero entry");
}

const Rat& PlueckerVector::at(Subset gamma) const {
    auto it = values.find(gamma);
    if (it == values.end()) throw NotABasisError("gamma is not a basis of M(B^h)");
    return it->second;
}

bool Cone::contains(const TropVector& x) const {
    if (x.size() != apex.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (tropmle::contains(tau, static_cast<int>(i))) {
            if (x[i] != apex[i]) return false;
        } else if (x[i] < apex[i]) {
            return false;
        }
    }
    return true;
}

PlueckerVector pluecker(const ModelMatrix& model, const TropicalDataVector& w) {
    if (w.n() != model.n()) throw InvalidDataError("data length does not match the model");
    const int n = model.n();
    const Matroid dual_matroid = dual(model.matroid());
    const Matroid coext = free_coextension(dual_matroid);

    PlueckerVector pi;
    pi.ground_size = n + 1;
    for (Subset gamma : coext.bases()) {
        if (contains(gamma, n)) {
            pi.values.emplace(gamma, Rat(0));
            continue;
        }
        bool first = true;
        Rat value;
        for (int i : elements(gamma)) {
            if (!dual_matroid.is_basis(without(gamma, i))) continue;
            const Rat& wi = w.w()[static_cast<std::size_t>(i)];
            if (first || wi < value) {
                value = wi;
                first = false;
            }
        }
        pi.values.emplace(gamma, value);
    }
    return pi;
}

TropVector tau_operator(const ModelMatrix& model, Subset tau, const TropVector& x) {
    if (x.size() != static_cast<std::size_t>(model.n()))
        throw std::invalid_argument("vector length does not match the model");
    const Matroid& m = model.matroid();
    if (!m.is_basis(tau)) throw NotABasisError("tau is not a basis of M(A)");

    const int n = model.n();
    TropVector y(x.size());
    for (int j : elements(tau)) {
        Rat v = x[static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i) {
            if (contains(tau, i)) continue;
            if (m.is_basis(with(without(tau, j), i)))
                v = min(v, x[static_cast<std::size_t>(i)]);
        }
        y[static_cast<std::size_t>(j)] = v;
    }
    for (int i = 0; i < n; ++i) {
        if (contains(tau, i)) continue;
        bool first = true;
        Rat v;
        for (int j : elements(tau)) {
            if (!m.is_basis(with(without(tau, j), i))) continue;
            const Rat& yj = y[static_cast<std::size_t>(j)];
            if (first || yj > v) {
                v = yj;
                first = false;
            }
        }
        // No loops in M(A), so every i has at least one exchange into tau.
        y[static_cast<std::size_t>(i)] = v;
    }
    return y;
}

Cone vertex(const ModelMatrix& model, const TropicalDataVector& w, Subset tau) {
    Cone c;
    c.apex = tau_operator(model, tau, w.w());
    c.tau = tau;
    c.free_directions = full_set(model.n()) & ~tau;
    return c;
}

bool contains_point(const ModelMatrix& model, const TropicalDataVector& w, const TropVector& x) {
    if (x.size() != static_cast<std::size_t>(model.n()))
        throw std::invalid_argument("point length does not match the model");
    const int n = model.n();
    const PlueckerVector pi = pluecker(model, w);

    // x lifts to (x, 0); scan the bases of M(B^h) for the maximal
    // <e_gamma, (x,0)> - pi_gamma and collect the maximizers.
    bool first = true;
    Rat best;
    Subset covered = 0;
    for (const auto& [gamma, pi_gamma] : pi.values) {
        Rat s = -pi_gamma;
        for (int i : elements(gamma))
            if (i < n) s += x[static_cast<std::size_t>(i)];
        if (first || s > best) {
            best = s;
            covered = gamma;
            first = false;
        } else if (s == best) {
            covered |= gamma;
        }
    }
    return covered == full_set(n + 1);
}

} // namespace tropmle
