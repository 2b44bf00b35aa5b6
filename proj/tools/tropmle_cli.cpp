// Command line front end: reads a JSON problem file, dispatches to the
// library and prints results as human readable tables or as stable JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include "tropmle/critical_points.hpp"
#include "tropmle/errors.hpp"
#include "tropmle/model.hpp"
#include "tropmle/parallel.hpp"
#include "tropmle/problem.hpp"
#include "tropmle/subdivision.hpp"
#include "tropmle/tips.hpp"
#include "tropmle/tropical.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tropmle;

constexpr int kExitParse = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitIncomplete = 4;
constexpr int kExitInternal = 5;

struct Options {
    std::string input;
    bool json = false;
    unsigned threads = 0;
    long max_iter = 0;        // 0: use problem file / default
    unsigned long seed = 0;   // recorded in JSON meta; used by the test binaries
};

ordered_json subset_json(Subset s) {
    ordered_json a = ordered_json::array();
    for (int i : elements(s)) a.push_back(i + 1);
    return a;
}

std::string subset_str(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int i : elements(s)) {
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

ordered_json rat_vector_json(const RatVector& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

std::string rat_vector_str(const RatVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

void emit(const Options& opt, ordered_json j) {
    if (opt.seed != 0) j["seed"] = opt.seed;
    std::cout << j.dump(2) << "\n";
}

const TropVector& require_w(const ProblemFile& p) {
    if (!p.w) throw InvalidDataError("the problem file has no \"w\" field");
    return *p.w;
}

ordered_json point_set_json(const CriticalPointSet& cps, const ModelMatrix& model) {
    ordered_json points = ordered_json::array();
    for (const auto& cp : cps.points) {
        ordered_json witnesses = ordered_json::array();
        for (Subset wset : cp.witnesses) witnesses.push_back(subset_json(wset));
        points.push_back(ordered_json{{"q", rat_vector_json(cp.q)},
                                      {"multiplicity", cp.multiplicity.get_str()},
                                      {"witnesses", witnesses}});
    }
    return ordered_json{{"complete", cps.complete},
                        {"total_multiplicity", cps.total_multiplicity.get_str()},
                        {"vol_QA", model.volume().get_str()},
                        {"points", points}};
}

void print_point_set(const CriticalPointSet& cps) {
    std::cout << "tropical critical points (total multiplicity " << cps.total_multiplicity
              << (cps.complete ? ", complete" : "") << "):\n";
    for (const auto& cp : cps.points) {
        std::cout << "  " << rat_vector_str(cp.q) << "  mult " << cp.multiplicity;
        if (!cp.witnesses.empty()) {
            std::cout << "  from";
            for (Subset wset : cp.witnesses) std::cout << " " << subset_str(wset);
        }
        std::cout << "\n";
    }
}

int cmd_bases(const Options& opt, const ProblemFile& p) {
    const ModelMatrix model(p.a);
    if (opt.json) {
        ordered_json bases = ordered_json::array();
        for (Subset b : model.matroid().bases())
            bases.push_back(ordered_json{{"tau", subset_json(b)},
                                         {"volume", model.simplex_volume(b).get_str()}});
        emit(opt, ordered_json{{"n", model.n()},
                               {"k", model.k()},
                               {"vol_QA", model.volume().get_str()},
                               {"bases", bases}});
    } else {
        std::cout << "model: k=" << model.k() << " n=" << model.n() << ", vol_A(Q_A) = "
                  << model.volume() << "\n";
        std::cout << model.matroid().bases().size() << " bases of M(A):\n";
        for (Subset b : model.matroid().bases())
            std::cout << "  " << subset_str(b) << "  vol " << model.simplex_volume(b) << "\n";
    }
    return 0;
}

int cmd_vertex(const Options& opt, const ProblemFile& p) {
    const ModelMatrix model(p.a);
    const TropicalDataVector w(require_w(p));
    if (!p.tau) throw InvalidDataError("the vertex command needs a \"tau\" field");
    const Cone cone = vertex(model, w, *p.tau);
    if (opt.json) {
        emit(opt, ordered_json{{"tau", subset_json(cone.tau)},
                               {"apex", rat_vector_json(cone.apex)},
                               {"free_directions", subset_json(cone.free_directions)}});
    } else {
        std::cout << "w^(tau) for tau = " << subset_str(cone.tau) << ":\n";
        std::cout << "  apex " << rat_vector_str(cone.apex) << "\n";
        std::cout << "  cone rays e_i for i in " << subset_str(cone.free_directions) << "\n";
    }
    return 0;
}

int cmd_plucker(const Options& opt, const ProblemFile& p) {
    const ModelMatrix model(p.a);
    const TropicalDataVector w(require_w(p));
    const PlueckerVector pi = pluecker(model, w);
    std::vector<Subset> order;
    for (const auto& [gamma, value] : pi.values) order.push_back(gamma);
    std::sort(order.begin(), order.end(), lex_less);
    if (opt.json) {
        ordered_json values = ordered_json::array();
        for (Subset gamma : order)
            values.push_back(
                ordered_json{{"basis", subset_json(gamma)}, {"value", pi.at(gamma).str()}});
        emit(opt, ordered_json{{"ground_size", pi.ground_size}, {"values", values}});
    } else {
        std::cout << "tropical Pluecker vector on ground set [" << pi.ground_size
                  << "] (" << pi.values.size() << " bases, element " << pi.ground_size
                  << " homogenizes):\n";
        for (Subset gamma : order)
            std::cout << "  pi" << subset_str(gamma) << " = " << pi.at(gamma) << "\n";
    }
    return 0;
}

int cmd_membership(const Options& opt, const ProblemFile& p) {
    const ModelMatrix model(p.a);
    const TropicalDataVector w(require_w(p));
    if (!p.x) throw InvalidDataError("the membership command needs an \"x\" field");
    const bool inside = contains_point(model, w, *p.x);
    if (opt.json) {
        emit(opt, ordered_json{{"x", rat_vector_json(*p.x)}, {"contains", inside}});
    } else {
        std::cout << rat_vector_str(*p.x) << (inside ? " lies on" : " does not lie on")
                  << " L_{A,u}\n";
    }
    return 0;
}

int cmd_subdivision(const Options& opt, const ProblemFile& p) {
    const ModelMatrix model(p.a);
    if (!p.omega) throw InvalidDataError("the subdivision command needs an \"omega\" field");
    const SubdivisionCells cells = maximal_cells(model, *p.omega);
    if (opt.json) {
        ordered_json out_cells = ordered_json::array();
        for (std::size_t i = 0; i < cells.maximal_cells.size(); ++i)
            out_cells.push_back(ordered_json{{"cell", subset_json(cells.maximal_cells[i])},
                                             {"psi", rat_vector_json(cells.functionals[i])}});
        emit(opt, ordered_json{{"omega", rat_vector_json(*p.omega)},
                               {"maximal_cells", out_cells}});
    } else {
        std::cout << "maximal cells of the regular subdivision for omega = "
                  << rat_vector_str(*p.omega) << ":\n";
        for (std::size_t i = 0; i < cells.maximal_cells.size(); ++i)
            std::cout << "  " << subset_str(cells.maximal_cells[i]) << "  psi = "
                      << rat_vector_str(cells.functionals[i]) << "\n";
    }
    return 0;
}

int cmd_triangulate(const Options& opt, const ProblemFile& p) {
    const ModelMatrix model(p.a);
    const RatVector omega =
        p.omega ? *p.omega : RatVector(static_cast<std::size_t>(model.n()), Rat(0));
    const Triangulation tri = regular_triangulation(model, omega);
    if (opt.json) {
        ordered_json simplices = ordered_json::array();
        for (std::size_t i = 0; i < tri.simplices.size(); ++i)
            simplices.push_back(ordered_json{{"tau", subset_json(tri.simplices[i])},
                                             {"volume", tri.volumes[i].get_str()}});
        emit(opt, ordered_json{{"omega", rat_vector_json(omega)},
                               {"simplices", simplices},
                               {"total_volume", tri.total_volume().get_str()}});
    } else {
        std::cout << "perturbed regular triangulation for omega = " << rat_vector_str(omega)
                  << ":\n";
        for (std::size_t i = 0; i < tri.simplices.size(); ++i)
            std::cout << "  " << subset_str(tri.simplices[i]) << "  vol " << tri.volumes[i]
                      << "\n";
        std::cout << "total volume " << tri.total_volume() << "\n";
    }
    return 0;
}

ordered_json diagnostic_json(const SolveDiagnostic& diag) {
    ordered_json attempts = ordered_json::array();
    for (const auto& attempt : diag.attempts) {
        ordered_json failures = ordered_json::array();
        for (const auto& f : attempt.failures) {
            ordered_json violated = ordered_json::array();
            for (int i : f.violated) violated.push_back(i + 1);
            failures.push_back(ordered_json{{"tau", subset_json(f.tau)},
                                            {"apex", rat_vector_json(f.apex)},
                                            {"violated", violated}});
        }
        ordered_json order = ordered_json::array();
        for (int i : attempt.eps_order) order.push_back(i + 1);
        attempts.push_back(ordered_json{{"eps_order", order}, {"failures", failures}});
    }
    return ordered_json{{"attempts", attempts}};
}

int cmd_critical_points(const Options& opt, const ProblemFile& p) {
    const ModelMatrix model(p.a);
    const TropicalDataVector w(require_w(p));

    if (p.triangulation) {
        const Triangulation tri = triangulation_from_simplices(model, *p.triangulation);
        TriangulationCertificate cert = solve_by_triangulation(model, w, tri);
        if (cert.result) {
            if (opt.json) {
                ordered_json j = ordered_json{{"method", "supplied-triangulation"}};
                j.update(point_set_json(*cert.result, model));
                emit(opt, j);
            } else {
                print_point_set(*cert.result);
            }
            return 0;
        }
        SolveDiagnostic diag;
        diag.attempts.push_back(SolveDiagnostic::Attempt{{}, std::move(cert.failures)});
        if (opt.json) {
            emit(opt, ordered_json{{"method", "supplied-triangulation"},
                                   {"complete", false},
                                   {"diagnostic", diagnostic_json(diag)}});
        }
        std::cerr << "error: incomplete: the supplied triangulation does not certify"
                  << " (simplex " << subset_str(diag.attempts[0].failures[0].tau)
                  << " fails its lies-in-cell test)\n";
        return kExitIncomplete;
    }

    const SolveResult result = solve(model, w);
    if (result.points) {
        if (opt.json) {
            ordered_json j = ordered_json{{"method", result.method}};
            if (result.constant)
                j["c_constant"] = result.constant->unconstrained ? "unconstrained"
                                                                 : result.constant->value.str();
            j.update(point_set_json(*result.points, model));
            emit(opt, j);
        } else {
            std::cout << "method: " << result.method << "\n";
            print_point_set(*result.points);
        }
        return 0;
    }
    if (opt.json) {
        emit(opt, ordered_json{{"method", result.method},
                               {"complete", false},
                               {"diagnostic", diagnostic_json(result.diagnostic)}});
    }
    std::cerr << "error: incomplete: no tried triangulation certifies the full solution ("
              << result.diagnostic.attempts.size() << " perturbation orders tried)\n";
    return kExitIncomplete;
}

int cmd_curve(const Options& opt, const ProblemFile& p) {
    const ModelMatrix model(p.a);
    const TropicalDataVector w(require_w(p));
    const CriticalPointSet cps = solve_curve(model, w);
    if (opt.json) {
        ordered_json j = ordered_json{{"method", "curve"}};
        j.update(point_set_json(cps, model));
        emit(opt, j);
    } else {
        print_point_set(cps);
    }
    return 0;
}

int cmd_constant(const Options& opt, const ProblemFile& p) {
    const ModelMatrix model(p.a);
    Subset O = 0;
    if (p.O) O = *p.O;
    else if (p.w) O = TropicalDataVector(*p.w).zero_set();
    else throw InvalidDataError("the constant command needs an \"O\" or a \"w\" field");

    const UniformCaseConstant c = uniform_constant(model, O);
    if (opt.json) {
        ordered_json terms = ordered_json::array();
        for (const auto& t : c.per_entry_terms)
            terms.push_back(ordered_json{{"tau", subset_json(t.tau)},
                                         {"i", t.i + 1},
                                         {"jplus_sum", t.jplus_sum.str()},
                                         {"jminus_sum", t.jminus_sum.str()},
                                         {"c", t.c.str()}});
        ordered_json simplices = ordered_json::array();
        for (Subset s : c.triangulation_used.simplices) simplices.push_back(subset_json(s));
        emit(opt, ordered_json{{"O", subset_json(O)},
                               {"value", c.unconstrained ? "unconstrained" : c.value.str()},
                               {"triangulation", simplices},
                               {"terms", terms}});
    } else {
        std::cout << "c_{A,O} for O = " << subset_str(O) << ": "
                  << (c.unconstrained ? std::string("unconstrained") : c.value.str()) << "\n";
        for (const auto& t : c.per_entry_terms)
            std::cout << "  tau " << subset_str(t.tau) << ", i=" << t.i + 1 << ": J+ sum "
                      << t.jplus_sum << ", J- sum " << t.jminus_sum << ", c = " << t.c << "\n";
    }
    return 0;
}

int cmd_tips(const Options& opt, const ProblemFile& p) {
    const ModelMatrix model(p.a);
    const TropicalDataVector w(require_w(p));
    const ScalingModel scaling = p.tips.scaling
                                     ? make_scaling_model(model, *p.tips.scaling)
                                     : reparametrize(model);
    TropVector q0 = p.tips.q0 ? *p.tips.q0
                              : TropVector(static_cast<std::size_t>(model.n()), Rat(0));
    long max_iter = 1000;
    if (p.tips.max_iter) max_iter = *p.tips.max_iter;
    if (opt.max_iter > 0) max_iter = opt.max_iter;

    const TipsReport report = tips_run(model, scaling, w, std::move(q0), max_iter);
    const char* status = report.status == TipsStatus::Terminated   ? "terminated"
                         : report.status == TipsStatus::Converging ? "converging"
                                                                   : "undecided";
    if (opt.json) {
        ordered_json traj = ordered_json::array();
        for (const auto& q : report.trajectory) traj.push_back(rat_vector_json(q));
        ordered_json j{{"alpha", scaling.alpha.get_str()},
                       {"scaling", matrix_json(scaling.a)},
                       {"status", status},
                       {"exact_termination", report.exact_termination},
                       {"iterations", report.trajectory.size() - 1}};
        if (report.ratio) j["ratio"] = report.ratio->str();
        if (report.limit) j["limit"] = rat_vector_json(*report.limit);
        if (report.limit_is_critical_point)
            j["limit_is_critical_point"] = *report.limit_is_critical_point;
        else if (report.limit_is_critical_point.has_value())
            j["limit_is_critical_point"] = false;
        if (!report.note.empty()) j["note"] = report.note;
        j["trajectory"] = traj;
        emit(opt, j);
    } else {
        std::cout << "tIPS with alpha = " << scaling.alpha << ", " << report.trajectory.size() - 1
                  << " iterations, status " << status << "\n";
        const std::size_t show = std::min<std::size_t>(report.trajectory.size(), 12);
        for (std::size_t t = 0; t < show; ++t)
            std::cout << "  q^" << t << " = " << rat_vector_str(report.trajectory[t]) << "\n";
        if (report.trajectory.size() > show) std::cout << "  ...\n";
        if (report.ratio) std::cout << "geometric ratio " << *report.ratio << "\n";
        if (report.limit) std::cout << "limit " << rat_vector_str(*report.limit) << "\n";
        if (report.limit_is_critical_point.has_value())
            std::cout << "limit is a tropical critical point: "
                      << (*report.limit_is_critical_point ? "yes" : "no") << "\n";
        if (!report.note.empty()) std::cout << "note: " << report.note << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tropical toric maximum likelihood estimation"};
    app.fallthrough(true);
    app.require_subcommand(1);

    Options opt;
    app.add_option("--input", opt.input, "Problem file (JSON)")->required();
    app.add_flag("--json", opt.json, "Machine readable output with stable key order");
    app.add_option("--threads", opt.threads, "Worker thread bound (0 = hardware)");
    app.add_option("--max-iter", opt.max_iter, "Iteration bound for tips");
    app.add_option("--seed", opt.seed, "Replay seed, recorded in JSON output");

    int (*handler)(const Options&, const ProblemFile&) = nullptr;
    auto add = [&](const char* name, const char* help,
                   int (*fn)(const Options&, const ProblemFile&)) {
        app.add_subcommand(name, help)->callback([&handler, fn] { handler = fn; });
    };
    add("bases", "List the bases of M(A) with their normalized volumes", cmd_bases);
    add("vertex", "Vertex w^(tau) and its cone C_tau", cmd_vertex);
    add("plucker", "Tropical Pluecker vector of the homogenized space", cmd_plucker);
    add("membership", "Point membership in L_{A,u}", cmd_membership);
    add("subdivision", "Maximal cells of the regular subdivision of omega", cmd_subdivision);
    add("triangulate", "Perturbed regular triangulation of Q_A", cmd_triangulate);
    add("critical-points", "Tropical critical points with multiplicities", cmd_critical_points);
    add("curve", "Closed form for monomial curves (k = 2)", cmd_curve);
    add("constant", "Spread constant c_{A,O} of the uniform case", cmd_constant);
    add("tips", "Tropical iterative proportional scaling", cmd_tips);

    CLI11_PARSE(app, argc, argv);
    set_max_threads(opt.threads);

    try {
        const ProblemFile problem = load_problem(opt.input);
        return handler(opt, problem);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.category() << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.category() << ": " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return kExitInternal;
    }
}
