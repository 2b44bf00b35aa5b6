#include "tropmle/subdivision.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "tropmle/errors.hpp"
#include "tropmle/linalg.hpp"
#include "tropmle/lp.hpp"
#include "tropmle/parallel.hpp"

namespace tropmle {

namespace {

template <class Scalar>
CellCheck lies_in_cell_impl(const ModelMatrix& model, Subset tau,
                            const std::vector<Scalar>& omega) {
    if (omega.size() != static_cast<std::size_t>(model.n()))
        throw std::invalid_argument("weight length does not match the model");
    if (!model.is_basis(tau)) throw NotABasisError("tau is not a basis of M(A)");

    const RatMatrix p = model.projection(tau);
    const std::vector<int> tau_elems = elements(tau);

    CellCheck out;
    out.in_cell = true;
    for (std::size_t i = 0; i < omega.size(); ++i) {
        Scalar lifted(Rat(0));
        for (std::size_t j = 0; j < tau_elems.size(); ++j)
            lifted += p.at(i, j) * omega[static_cast<std::size_t>(tau_elems[j])];
        if (lifted == omega[i]) {
            out.equality = with(out.equality, static_cast<int>(i));
        } else if (omega[i] < lifted) {
            out.in_cell = false;
            out.equality = 0;
            return out;
        }
    }
    return out;
}

} // namespace

CellCheck lies_in_cell(const ModelMatrix& model, Subset tau, const RatVector& omega) {
    return lies_in_cell_impl(model, tau, omega);
}

CellCheck lies_in_cell(const ModelMatrix& model, Subset tau, const std::vector<EpsRat>& omega) {
    return lies_in_cell_impl(model, tau, omega);
}

SubdivisionCells maximal_cells(const ModelMatrix& model, const RatVector& omega) {
    if (omega.size() != static_cast<std::size_t>(model.n()))
        throw std::invalid_argument("weight length does not match the model");

    // Group the bases that lie in a cell by their supporting functional;
    // the equality pattern of the functional is the cell itself.
    const auto& bases = model.matroid().bases();
    std::vector<char> in(bases.size(), 0);
    std::vector<Subset> cell_of(bases.size(), 0);
    parallel_for(bases.size(), [&](std::size_t b) {
        const CellCheck cc = lies_in_cell_impl(model, bases[b], omega);
        in[b] = cc.in_cell;
        cell_of[b] = cc.equality;
    });

    std::map<Subset, RatVector> cells;  // cell -> psi
    for (std::size_t b = 0; b < bases.size(); ++b) {
        if (!in[b]) continue;
        if (cells.count(cell_of[b])) continue;
        RatVector omega_tau;
        for (int j : elements(bases[b])) omega_tau.push_back(omega[static_cast<std::size_t>(j)]);
        cells.emplace(cell_of[b], solve_transpose(model.a().columns(bases[b]), omega_tau));
    }

    SubdivisionCells out;
    for (const auto& [cell, psi] : cells) {
        bool maximal = true;
        for (const auto& [other, psi2] : cells)
            if (other != cell && (cell & other) == cell) {
                maximal = false;
                break;
            }
        if (maximal) {
            out.maximal_cells.push_back(cell);
            out.functionals.push_back(psi);
        }
    }
    // Sort cells lexicographically, functionals riding along.
    std::vector<std::size_t> idx(out.maximal_cells.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(out.maximal_cells[a], out.maximal_cells[b]);
    });
    SubdivisionCells sorted;
    for (std::size_t i : idx) {
        sorted.maximal_cells.push_back(out.maximal_cells[i]);
        sorted.functionals.push_back(out.functionals[i]);
    }
    return sorted;
}

BigInt Triangulation::total_volume() const {
    BigInt total(0);
    for (const auto& v : volumes) total += v;
    return total;
}

Triangulation regular_triangulation(const ModelMatrix& model, const RatVector& omega,
                                    const std::vector<int>& eps_order) {
    const std::size_t n = static_cast<std::size_t>(model.n());
    if (omega.size() != n)
        throw std::invalid_argument("weight length does not match the model");
    std::vector<int> order(n);
    if (eps_order.empty()) {
        std::iota(order.begin(), order.end(), 0);
    } else {
        if (eps_order.size() != n) throw std::invalid_argument("perturbation order length mismatch");
        order = eps_order;
    }

    std::vector<EpsRat> perturbed(n);
    for (std::size_t i = 0; i < n; ++i)
        perturbed[i] = EpsRat(omega[i]) + EpsRat::eps_power(static_cast<std::size_t>(order[i]) + 1);

    const auto& bases = model.matroid().bases();
    std::vector<char> in(bases.size(), 0);
    parallel_for(bases.size(), [&](std::size_t b) {
        in[b] = lies_in_cell_impl(model, bases[b], perturbed).in_cell;
    });

    Triangulation tri;
    tri.inducing_weights = std::move(perturbed);
    for (std::size_t b = 0; b < bases.size(); ++b) {
        if (!in[b]) continue;
        tri.simplices.push_back(bases[b]);
        tri.volumes.push_back(model.simplex_volume(bases[b]));
    }
    return tri;
}

Triangulation triangulation_from_simplices(const ModelMatrix& model,
                                           const std::vector<Subset>& simplices) {
    Triangulation tri;
    for (Subset s : simplices) {
        if (!model.is_basis(s))
            throw InvalidDataError("triangulation contains a non-basis simplex");
        tri.simplices.push_back(s);
    }
    std::sort(tri.simplices.begin(), tri.simplices.end(), lex_less);
    tri.simplices.erase(std::unique(tri.simplices.begin(), tri.simplices.end()),
                        tri.simplices.end());
    for (Subset s : tri.simplices) tri.volumes.push_back(model.simplex_volume(s));
    if (tri.total_volume() != model.volume())
        throw InvalidDataError("simplex volumes do not partition vol_A(Q_A)");
    return tri;
}

bool refines(const ModelMatrix& model, const Triangulation& tri, const RatVector& omega) {
    for (Subset tau : tri.simplices)
        if (!lies_in_cell(model, tau, omega).in_cell) return false;
    return true;
}

bool refines(const ModelMatrix& model, const Triangulation& tri,
             const std::vector<EpsRat>& omega) {
    for (Subset tau : tri.simplices)
        if (!lies_in_cell(model, tau, omega).in_cell) return false;
    return true;
}

bool is_face(const ModelMatrix& model, Subset O) {
    if (O == 0) throw std::invalid_argument("face test needs a nonempty subset");
    const int n = model.n(), k = model.k();
    // Variables (psi_1..psi_k, c): <psi, a_i> = c on O, < c off O.
    std::vector<Constraint> sys;
    for (int i = 0; i < n; ++i) {
        RatVector coef(static_cast<std::size_t>(k) + 1, Rat(0));
        for (int r = 0; r < k; ++r)
            coef[static_cast<std::size_t>(r)] = Rat(model.a().at(static_cast<std::size_t>(r),
                                                                 static_cast<std::size_t>(i)));
        coef[static_cast<std::size_t>(k)] = Rat(-1);
        if (contains(O, i))
            sys.push_back(eq_constraint(std::move(coef), Rat(0)));
        else
            sys.push_back(lt_constraint(std::move(coef), Rat(0)));
    }
    return lp_feasible(std::move(sys), static_cast<std::size_t>(k) + 1);
}

} // namespace tropmle
