#include "tropmle/lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace tropmle {

namespace {

// Normalize so the largest absolute coefficient is 1; makes duplicate
// constraints identical and keeps the FM pool small.
void normalize(Constraint& c) {
    Rat scale(0);
    for (const auto& v : c.coef) scale = max(scale, v.abs());
    if (scale.is_zero()) return;
    const Rat inv = Rat(1) / scale;
    for (auto& v : c.coef) v *= inv;
    c.rhs *= inv;
}

bool trivially_satisfied(const Constraint& c) {
    switch (c.rel) {
        case Constraint::Rel::Eq: return c.rhs.is_zero();
        case Constraint::Rel::Le: return c.rhs.sign() >= 0;
        case Constraint::Rel::Lt: return c.rhs.sign() > 0;
    }
    return false;
}

bool all_zero(const RatVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
}

// Substitute variable `var` using equality `eq` (whose coef[var] != 0)
// into constraint `c`.
void substitute(Constraint& c, const Constraint& eq, std::size_t var) {
    if (c.coef[var].is_zero()) return;
    const Rat f = c.coef[var] / eq.coef[var];
    for (std::size_t j = 0; j < c.coef.size(); ++j) c.coef[j] -= f * eq.coef[j];
    c.rhs -= f * eq.rhs;
    c.coef[var] = Rat(0);
}

} // namespace

bool lp_feasible(std::vector<Constraint> constraints, std::size_t vars) {
    for (const auto& c : constraints)
        if (c.coef.size() != vars) throw std::invalid_argument("constraint arity mismatch");

    for (std::size_t var = 0; var < vars; ++var) {
        // Prefer elimination through an equality pivot.
        auto eq_it = std::find_if(constraints.begin(), constraints.end(), [&](const Constraint& c) {
            return c.rel == Constraint::Rel::Eq && !c.coef[var].is_zero();
        });
        if (eq_it != constraints.end()) {
            Constraint eq = *eq_it;
            constraints.erase(eq_it);
            for (auto& c : constraints) substitute(c, eq, var);
        } else {
            std::vector<Constraint> lower, upper, rest;
            for (auto& c : constraints) {
                int s = c.coef[var].sign();
                if (s > 0) upper.push_back(std::move(c));
                else if (s < 0) lower.push_back(std::move(c));
                else rest.push_back(std::move(c));
            }
            constraints = std::move(rest);
            for (const auto& up : upper) {
                for (const auto& lo : lower) {
                    Constraint c;
                    c.coef.assign(vars, Rat(0));
                    const Rat a = up.coef[var], b = -lo.coef[var];
                    for (std::size_t j = 0; j < vars; ++j)
                        c.coef[j] = b * up.coef[j] + a * lo.coef[j];
                    c.rhs = b * up.rhs + a * lo.rhs;
                    c.coef[var] = Rat(0);
                    c.rel = (up.rel == Constraint::Rel::Lt || lo.rel == Constraint::Rel::Lt)
                                ? Constraint::Rel::Lt
                                : Constraint::Rel::Le;
                    constraints.push_back(std::move(c));
                }
            }
        }

        // Prune resolved constraints and drop exact duplicates.
        std::vector<Constraint> kept;
        std::map<std::string, bool> seen;
        for (auto& c : constraints) {
            if (all_zero(c.coef)) {
                if (!trivially_satisfied(c)) return false;
                continue;
            }
            normalize(c);
            std::string key(1, static_cast<char>('0' + static_cast<int>(c.rel)));
            for (const auto& v : c.coef) {
                key += v.str();
                key += ',';
            }
            key += '|';
            key += c.rhs.str();
            if (seen.emplace(std::move(key), true).second) kept.push_back(std::move(c));
        }
        constraints = std::move(kept);
    }

    for (const auto& c : constraints)
        if (!trivially_satisfied(c)) return false;
    return true;
}

} // namespace tropmle
