#include "tropmle/critical_points.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "tropmle/errors.hpp"
#include "tropmle/linalg.hpp"
#include "tropmle/parallel.hpp"

namespace tropmle {

namespace {

// Contribution of one certified simplex.
struct Contribution {
    TropVector q;
    BigInt multiplicity;
    Subset witness;
};

CriticalPointSet merge(std::vector<Contribution> contributions, const ModelMatrix& model,
                       bool complete) {
    std::map<TropVector, CriticalPoint> by_point;
    for (auto& c : contributions) {
        auto [it, inserted] = by_point.try_emplace(c.q);
        if (inserted) {
            it->second.q = c.q;
            it->second.multiplicity = c.multiplicity;
        } else {
            it->second.multiplicity += c.multiplicity;
        }
        if (c.witness != 0) it->second.witnesses.push_back(c.witness);
    }
    CriticalPointSet out;
    out.total_multiplicity = 0;
    for (auto& [q, cp] : by_point) {
        if (sgn(cp.multiplicity) == 0) continue;
        std::sort(cp.witnesses.begin(), cp.witnesses.end(), lex_less);
        out.total_multiplicity += cp.multiplicity;
        out.points.push_back(std::move(cp));
    }
    out.complete = complete && out.total_multiplicity == model.volume();
    return out;
}

TropVector apply_projection(const ModelMatrix& model, Subset tau, const TropVector& apex) {
    RatVector apex_tau;
    for (int j : elements(tau)) apex_tau.push_back(apex[static_cast<std::size_t>(j)]);
    return model.projection(tau).multiply(apex_tau);
}

Contribution zero_contribution(const ModelMatrix& model) {
    Contribution c;
    c.q.assign(static_cast<std::size_t>(model.n()), Rat(0));
    c.multiplicity = model.volume();
    c.witness = 0;
    return c;
}


// Single-simplex certificate: apex, pass/fail, intersection point.
struct SimplexCheck {
    Subset tau = 0;
    TropVector apex;
    bool certified = false;
    TropVector q;
    std::vector<int> violated;
};

SimplexCheck check_simplex(const ModelMatrix& model, const TropicalDataVector& w, Subset tau) {
    SimplexCheck out;
    out.tau = tau;
    out.apex = tau_operator(model, tau, w.w());
    out.q = apply_projection(model, tau, out.apex);
    out.certified = true;
    for (std::size_t i = 0; i < out.q.size(); ++i) {
        if (out.q[i] < out.apex[i]) {
            out.certified = false;
            out.violated.push_back(static_cast<int>(i));
        }
    }
    return out;
}

bool first_row_is_ones(const IntMatrix& a) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (a.at(0, j) != 1) return false;
    return true;
}

// Columns of a 3 x n model as planar points, genuinely convex and listed
// in cyclic boundary order (either orientation).
bool is_cyclic_convex_polygon(const ModelMatrix& model) {
    const int n = model.n();
    if (model.k() != 3 || n < 3) return false;
    if (!first_row_is_ones(model.a())) return false;
    int orientation = 0;
    for (int i = 0; i < n; ++i) {
        const int a = i, b = (i + 1) % n, c = (i + 2) % n;
        // Cross product of consecutive edges, exact.
        const BigInt ux = model.a().at(1, b) - model.a().at(1, a);
        const BigInt uy = model.a().at(2, b) - model.a().at(2, a);
        const BigInt vx = model.a().at(1, c) - model.a().at(1, b);
        const BigInt vy = model.a().at(2, c) - model.a().at(2, b);
        const int s = sgn(ux * vy - uy * vx);
        if (s == 0) return false;  // collinear corner: not strictly convex
        if (orientation == 0) orientation = s;
        if (s != orientation) return false;
    }
    return true;
}

std::vector<std::vector<int>> perturbation_orders(int n) {
    std::vector<std::vector<int>> orders;
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    orders.push_back(identity);
    std::vector<int> reversed(identity.rbegin(), identity.rend());
    if (n > 1) orders.push_back(reversed);
    for (int shift = 1; shift < n; ++shift) {
        std::vector<int> rotated(n);
        for (int i = 0; i < n; ++i) rotated[static_cast<std::size_t>(i)] = (i + shift) % n;
        orders.push_back(rotated);
    }
    return orders;
}

} // namespace

std::optional<CriticalPoint> cone_intersection(const ModelMatrix& model,
                                               const TropicalDataVector& w, Subset tau) {
    const SimplexCheck sc = check_simplex(model, w, tau);
    if (!sc.certified) return std::nullopt;
    CriticalPoint cp;
    cp.q = sc.q;
    cp.multiplicity = model.simplex_volume(tau);
    cp.witnesses = {tau};
    return cp;
}

TriangulationCertificate solve_by_triangulation(const ModelMatrix& model,
                                                const TropicalDataVector& w,
                                                const Triangulation& tri) {
    if (tri.total_volume() != model.volume())
        throw InvalidDataError("simplex volumes do not partition vol_A(Q_A)");

    std::vector<SimplexCheck> checks(tri.simplices.size());
    parallel_for(tri.simplices.size(), [&](std::size_t s) {
        checks[s] = check_simplex(model, w, tri.simplices[s]);
    });

    TriangulationCertificate cert;
    for (const auto& sc : checks) {
        if (!sc.certified)
            cert.failures.push_back(CertificationFailure{sc.tau, sc.apex, sc.violated});
    }
    if (!cert.failures.empty()) return cert;

    std::vector<Contribution> contributions;
    for (std::size_t s = 0; s < checks.size(); ++s)
        contributions.push_back(
            Contribution{checks[s].q, tri.volumes[s], tri.simplices[s]});
    cert.result = merge(std::move(contributions), model, true);
    return cert;
}

CriticalPointSet solve_curve(const ModelMatrix& model, const TropicalDataVector& w) {
    const int n = model.n();
    if (model.k() != 2 || !first_row_is_ones(model.a()))
        throw NotACurveError("curve solver needs a 2 x n model with an all-ones first row");
    for (int j = 0; j + 1 < n; ++j)
        if (model.a().at(1, static_cast<std::size_t>(j)) >=
            model.a().at(1, static_cast<std::size_t>(j + 1)))
            throw NotACurveError("curve solver needs a strictly increasing second row");

    auto a_at = [&](int j) -> BigInt { return model.a().at(1, static_cast<std::size_t>(j)); };
    auto a_diff = [&](int hi, int lo) -> BigInt { return BigInt(a_at(hi) - a_at(lo)); };
    const Subset O = w.zero_set();

    // Smallest positive entry; cases i/ii guarantee one exists.
    auto w_min = [&]() {
        Rat m;
        bool first = true;
        for (const auto& x : w.w())
            if (!x.is_zero() && (first || x < m)) {
                m = x;
                first = false;
            }
        return m;
    };

    std::vector<Contribution> contributions;
    bool handled = false;
    if (O == Subset{1} && n >= 2) {  // case i: only w_1 = 0
        const Rat wm = w_min();
        const Rat denom(a_diff(1, 0));
        Contribution c;
        c.q.assign(static_cast<std::size_t>(n), Rat(0));
        c.q[1] = wm;
        for (int j = 2; j < n; ++j)
            c.q[static_cast<std::size_t>(j)] = wm * Rat(a_diff(j, 0)) / denom;
        c.multiplicity = a_diff(1, 0);
        c.witness = subset_of({0, 1});
        contributions.push_back(std::move(c));

        Contribution zero = zero_contribution(model);
        zero.multiplicity = a_diff(n - 1, 1);
        zero.witness = 0;
        contributions.push_back(std::move(zero));
        handled = true;
    } else if (O == (Subset{1} << (n - 1)) && n >= 2) {  // case ii: only w_n = 0
        const Rat wm = w_min();
        const Rat denom(a_diff(n - 1, n - 2));
        Contribution c;
        c.q.assign(static_cast<std::size_t>(n), Rat(0));
        for (int j = 0; j < n - 2; ++j)
            c.q[static_cast<std::size_t>(j)] = wm * Rat(a_diff(n - 1, j)) / denom;
        c.q[static_cast<std::size_t>(n - 2)] = wm;
        c.multiplicity = a_diff(n - 1, n - 2);
        c.witness = subset_of({n - 2, n - 1});
        contributions.push_back(std::move(c));

        Contribution zero = zero_contribution(model);
        zero.multiplicity = a_diff(n - 2, 0);
        zero.witness = 0;
        contributions.push_back(std::move(zero));
        handled = true;
    }
    if (!handled) {  // case iii: an interior zero, or several zeros
        contributions.push_back(zero_contribution(model));
    }
    return merge(std::move(contributions), model, true);
}

UniformCaseConstant uniform_constant(const ModelMatrix& model, Subset O) {
    if (!model.matroid().is_uniform())
        throw NotUniformError("the matroid of the model is not uniform");
    if (!is_face(model, O)) throw NotAFaceError("O is not a face of Q_A");

    const std::size_t n = static_cast<std::size_t>(model.n());
    RatVector e_O(n, Rat(0));
    for (int i : elements(O)) e_O[static_cast<std::size_t>(i)] = Rat(1);

    UniformCaseConstant out;
    out.triangulation_used = regular_triangulation(model, e_O);
    bool first = true;
    for (Subset tau : out.triangulation_used.simplices) {
        if ((tau & O) != O) continue;  // only maximal cells containing O
        const RatMatrix p = model.projection(tau);
        const std::vector<int> tau_elems = elements(tau);
        for (int i = 0; i < model.n(); ++i) {
            if (contains(tau, i)) continue;
            UniformCaseConstant::Term term;
            term.tau = tau;
            term.i = i;
            for (std::size_t j = 0; j < tau_elems.size(); ++j) {
                if (contains(O, tau_elems[j])) continue;
                const Rat& pij = p.at(static_cast<std::size_t>(i), j);
                if (pij.sign() > 0)
                    term.jplus_sum += pij;
                else
                    term.jminus_sum += pij;
            }
            term.c = term.jplus_sum / (Rat(1) - term.jminus_sum);
            if (first || term.c < out.value) {
                out.value = term.c;
                first = false;
            }
            out.per_entry_terms.push_back(std::move(term));
        }
    }
    if (first) {
        out.unconstrained = true;
        out.value = Rat(1);
    }
    return out;
}

SolveResult solve(const ModelMatrix& model, const TropicalDataVector& w) {
    if (w.n() != model.n()) throw InvalidDataError("data length does not match the model");
    const int n = model.n();
    SolveResult result;
    const Subset O = w.zero_set();

    // (1) O(w) contains a basis: the unique critical point is zero.
    if (rank(model.a().columns(O)) == static_cast<std::size_t>(model.k())) {
        result.method = "zero-set-contains-basis";
        result.points = merge({zero_contribution(model)}, model, true);
        return result;
    }

    // (2a) Monomial curve closed form, after sorting the columns.
    if (model.k() == 2 && first_row_is_ones(model.a())) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](int x, int y) {
            return model.a().at(1, static_cast<std::size_t>(x)) <
                   model.a().at(1, static_cast<std::size_t>(y));
        });
        bool distinct = true;
        for (int j = 0; j + 1 < n && distinct; ++j)
            distinct = model.a().at(1, static_cast<std::size_t>(perm[j])) !=
                       model.a().at(1, static_cast<std::size_t>(perm[j + 1]));
        if (distinct) {
            const ModelMatrix sorted_model(model.a().columns(perm));
            TropVector sorted_w(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                sorted_w[static_cast<std::size_t>(j)] = w.w()[static_cast<std::size_t>(perm[j])];
            CriticalPointSet cps =
                solve_curve(sorted_model, TropicalDataVector(std::move(sorted_w)));
            // Undo the column permutation on points and witnesses.
            for (auto& cp : cps.points) {
                TropVector q(static_cast<std::size_t>(n));
                for (int j = 0; j < n; ++j)
                    q[static_cast<std::size_t>(perm[j])] = cp.q[static_cast<std::size_t>(j)];
                cp.q = std::move(q);
                for (auto& wit : cp.witnesses) {
                    Subset mapped = 0;
                    for (int j : elements(wit)) mapped = with(mapped, perm[static_cast<std::size_t>(j)]);
                    wit = mapped;
                }
            }
            std::sort(cps.points.begin(), cps.points.end(),
                      [](const CriticalPoint& a, const CriticalPoint& b) { return a.q < b.q; });
            result.method = "curve";
            result.points = std::move(cps);
            return result;
        }
    }

    const bool uniform = model.matroid().is_uniform();

    // (2b) Convex polygon closed form.
    if (uniform && is_cyclic_convex_polygon(model)) {
        const std::vector<int> zeros = elements(O);
        Subset tau0 = 0;
        bool applicable = false;
        if (zeros.size() == 1) {
            const int i = zeros[0];
            const UniformCaseConstant c = uniform_constant(model, O);
            // Need k = 3 entries within c * (smallest positive entry).
            Rat wm;
            bool first = true;
            for (const auto& x : w.w())
                if (!x.is_zero() && (first || x < wm)) {
                    wm = x;
                    first = false;
                }
            const Rat bound = c.value * wm;
            int small = 0;
            for (const auto& x : w.w())
                if (c.unconstrained || x <= bound) ++small;
            if (small >= 3) {
                tau0 = subset_of({(i + n - 1) % n, i, (i + 1) % n});
                applicable = true;
            }
            result.constant = c;
        } else if (zeros.size() == 2) {
            const int a = zeros[0], b = zeros[1];
            const bool adjacent = (a + 1) % n == b || (b + 1) % n == a;
            if (adjacent) {  // edge of the polygon
                const int i = (a + 1) % n == b ? a : b;  // first endpoint in cyclic order
                tau0 = subset_of({(i + n - 1) % n, i, (i + 1) % n});
                applicable = true;
            } else {
                // Two non-adjacent vertices: not a face, everything is zero.
                result.method = "polygon";
                result.points = merge({zero_contribution(model)}, model, true);
                return result;
            }
        }
        // Three or more zeros of a rank-3 uniform matroid contain a basis,
        // so they were already handled above.
        if (applicable) {
            if (auto cp = cone_intersection(model, w, tau0)) {
                std::vector<Contribution> contributions;
                contributions.push_back(Contribution{cp->q, cp->multiplicity, tau0});
                Contribution zero = zero_contribution(model);
                zero.multiplicity = model.volume() - cp->multiplicity;
                contributions.push_back(std::move(zero));
                result.method = "polygon";
                result.points = merge(std::move(contributions), model, true);
                return result;
            }
            // Unexpected failure of the closed form: fall through to the search.
        }
    }

    // (3) Uniform matroid, O(w) not a face: zero is the unique point.
    if (uniform) {
        if (!is_face(model, O)) {
            result.method = "uniform-not-face";
            result.points = merge({zero_contribution(model)}, model, true);
            return result;
        }
        if (!result.constant) result.constant = uniform_constant(model, O);
    }

    // (4) Perturbed triangulations refining the subdivision of e_O, one
    // lexicographic order after another until one certifies.
    RatVector e_O(static_cast<std::size_t>(n), Rat(0));
    for (int i : elements(O)) e_O[static_cast<std::size_t>(i)] = Rat(1);
    for (const auto& order : perturbation_orders(n)) {
        const Triangulation tri = regular_triangulation(model, e_O, order);
        TriangulationCertificate cert = solve_by_triangulation(model, w, tri);
        if (cert.result) {
            result.method = "triangulation";
            result.points = std::move(cert.result);
            return result;
        }
        result.diagnostic.attempts.push_back(
            SolveDiagnostic::Attempt{order, std::move(cert.failures)});
    }
    result.method = "incomplete";
    return result;
}

} // namespace tropmle
