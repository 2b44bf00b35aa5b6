#include "tropmle/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tropmle/errors.hpp"

namespace tropmle {

namespace {

using nlohmann::json;

Rat parse_rat_field(const json& v, const std::string& where) {
    if (v.is_string()) return Rat::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    throw ParseError(where + ": expected a rational as a string \"p/q\" or an integer");
}

TropVector parse_rat_vector(const json& v, const std::string& where) {
    if (!v.is_array()) throw ParseError(where + ": expected an array");
    TropVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_rat_field(v[i], where + "[" + std::to_string(i + 1) + "]"));
    return out;
}

IntMatrix parse_int_matrix(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) throw ParseError(where + ": expected a nonempty array of rows");
    const std::size_t cols = v[0].is_array() ? v[0].size() : 0;
    IntMatrix m(v.size(), cols);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& row = v[i];
        const std::string ctx = where + " row " + std::to_string(i + 1);
        if (!row.is_array()) throw ParseError(ctx + ": expected an array of integers");
        if (row.size() != cols) throw ParseError(ctx + ": ragged row");
        for (std::size_t j = 0; j < cols; ++j) {
            if (row[j].is_number_integer())
                m.at(i, j) = BigInt(static_cast<long>(row[j].get<long long>()));
            else if (row[j].is_string())
                m.at(i, j) = BigInt(row[j].get<std::string>());
            else
                throw ParseError(ctx + ", column " + std::to_string(j + 1) + ": expected an integer");
        }
    }
    return m;
}

Subset parse_subset(const json& v, std::size_t n, const std::string& where) {
    if (!v.is_array()) throw ParseError(where + ": expected an array of 1-based indices");
    Subset s = 0;
    for (const auto& e : v) {
        if (!e.is_number_integer()) throw ParseError(where + ": expected integer indices");
        const long long i = e.get<long long>();
        if (i < 1 || i > static_cast<long long>(n))
            throw ParseError(where + ": index " + std::to_string(i) + " out of range 1.." +
                             std::to_string(n));
        s = with(s, static_cast<int>(i - 1));
    }
    return s;
}

} // namespace

ProblemFile parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("problem file must be a JSON object");
    if (!j.contains("A")) throw ParseError("missing required field \"A\"");

    ProblemFile p;
    p.a = parse_int_matrix(j["A"], "A");
    const std::size_t n = p.a.cols();

    if (j.contains("w")) {
        p.w = parse_rat_vector(j["w"], "w");
        if (p.w->size() != n)
            throw ParseError("w has " + std::to_string(p.w->size()) + " entries, expected " +
                             std::to_string(n));
    }
    if (j.contains("tau")) p.tau = parse_subset(j["tau"], n, "tau");
    if (j.contains("omega")) {
        p.omega = parse_rat_vector(j["omega"], "omega");
        if (p.omega->size() != n)
            throw ParseError("omega has " + std::to_string(p.omega->size()) +
                             " entries, expected " + std::to_string(n));
    }
    if (j.contains("x")) {
        p.x = parse_rat_vector(j["x"], "x");
        if (p.x->size() != n)
            throw ParseError("x has " + std::to_string(p.x->size()) + " entries, expected " +
                             std::to_string(n));
    }
    if (j.contains("O")) p.O = parse_subset(j["O"], n, "O");
    if (j.contains("triangulation")) {
        const auto& t = j["triangulation"];
        if (!t.is_array()) throw ParseError("triangulation: expected an array of simplices");
        std::vector<Subset> simplices;
        for (std::size_t i = 0; i < t.size(); ++i)
            simplices.push_back(
                parse_subset(t[i], n, "triangulation[" + std::to_string(i + 1) + "]"));
        p.triangulation = std::move(simplices);
    }
    if (j.contains("tips")) {
        const auto& t = j["tips"];
        if (!t.is_object()) throw ParseError("tips: expected an object");
        if (t.contains("q0")) {
            p.tips.q0 = parse_rat_vector(t["q0"], "tips.q0");
            if (p.tips.q0->size() != n)
                throw ParseError("tips.q0 has " + std::to_string(p.tips.q0->size()) +
                                 " entries, expected " + std::to_string(n));
        }
        if (t.contains("max_iter")) {
            if (!t["max_iter"].is_number_integer() || t["max_iter"].get<long long>() < 1)
                throw ParseError("tips.max_iter: expected a positive integer");
            p.tips.max_iter = static_cast<long>(t["max_iter"].get<long long>());
        }
        if (t.contains("scaling")) {
            p.tips.scaling = parse_int_matrix(t["scaling"], "tips.scaling");
            if (p.tips.scaling->cols() != n)
                throw ParseError("tips.scaling must have " + std::to_string(n) + " columns");
        }
    }
    return p;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

} // namespace tropmle
