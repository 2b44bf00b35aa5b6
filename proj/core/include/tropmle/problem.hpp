#ifndef TROPMLE_PROBLEM_HPP
#define TROPMLE_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "tropmle/int_matrix.hpp"
#include "tropmle/rational.hpp"
#include "tropmle/subsets.hpp"
#include "tropmle/tropical.hpp"

namespace tropmle {

// Parsed problem file. Column indices are 1-based on the wire and 0-based
// here; rationals travel as strings "p/q" or "p" so nothing is ever read
// through a float.
struct ProblemFile {
    IntMatrix a;
    std::optional<TropVector> w;
    std::optional<Subset> tau;
    std::optional<RatVector> omega;
    std::optional<TropVector> x;
    std::optional<Subset> O;
    std::optional<std::vector<Subset>> triangulation;

    struct Tips {
        std::optional<TropVector> q0;
        std::optional<long> max_iter;
        std::optional<IntMatrix> scaling;  // explicit scaling matrix; default reparametrize
    } tips;
};

// Parses the JSON problem text. Throws ParseError with field context.
ProblemFile parse_problem(const std::string& text);

// Reads and parses a problem file from disk.
ProblemFile load_problem(const std::string& path);

} // namespace tropmle

#endif
