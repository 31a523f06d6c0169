#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sqbetti/io.hpp"

namespace sqbetti {

namespace {

// Arguments naming an ideal/spec may be a file path or the literal text.
std::string slurp(const std::string& arg) {
    std::ifstream file(arg);
    if (file.good()) {
        std::ostringstream buffer;
        buffer << file.rdbuf();
        return buffer.str();
    }
    return arg;
}

void print_corners(const CornerReport& report, std::ostream& out) {
    out << "C = {";
    for (std::size_t i = 0; i < report.corners.size(); ++i) {
        if (i) out << ", ";
        out << "(" << report.corners[i].k << "," << report.corners[i].ell << ")";
    }
    out << "}  a = (";
    for (std::size_t i = 0; i < report.values.size(); ++i) {
        if (i) out << ", ";
        out << report.values[i].str();
    }
    out << ")\n";
}

std::string binom_str(int top, int bottom) {
    return "C(" + std::to_string(top) + "," + std::to_string(bottom) + ")";
}

// One line per decomposition stage, selected summands boxed in brackets.
void print_trace(const DecompositionTrace& trace, std::ostream& out) {
    std::string indent;
    for (const TraceStep& step : trace.steps) {
        out << indent << binom_str(step.top, step.bottom) << " =";
        int terms = step.top - step.bottom + 1;
        for (int j = 1; j <= terms; ++j) {
            std::string part = binom_str(step.top - j, step.bottom - 1);
            if (j == 1 && step.selected > 0) part = "[" + part;
            if (j == step.selected) part += "]";
            out << (j == 1 ? " " : " + ") << part;
        }
        out << '\n';
        indent += "  ";
    }
    out << "contributions:";
    bool first = true;
    for (const TraceStep& step : trace.steps) {
        if (step.selected == 0) continue;
        out << (first ? " " : " + ") << step.contributed.str();
        first = false;
    }
    if (first) out << " 0";
    out << " (+1 for the monomial itself) = " << trace.total.str() << '\n';
    out << "terms used: " << trace.term_count << '\n';
}

void print_ideal(const MonomialIdeal& ideal, std::ostream& out) {
    out << emit_ideal(ideal);
}

int enumerate_bound() {
    if (const char* env = std::getenv("SQBETTI_ENUM_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw contract_error("SQBETTI_ENUM_MAX_N must be an integer");
        }
    }
    return 5;
}

} // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"squarefree strongly stable ideals: Betti tables, corners, and realizability"};
    app.require_subcommand(1);

    std::string ideal_arg, monomial_arg, spec_arg, closure_arg;
    std::string format = "ascii";
    int opt_k = 0, opt_l = 0, opt_n = 0, opt_l1 = 0, opt_min_degree = 1;
    bool with_trace = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"ascii", "json"}))
            ->capture_default_str();
    };

    CLI::App* cmd_betti = app.add_subcommand("betti", "graded Betti table of a stable ideal");
    cmd_betti->add_option("ideal", ideal_arg, "ideal file or inline text")->required();
    add_format(cmd_betti);

    CLI::App* cmd_corners =
        app.add_subcommand("corners", "extremal Betti numbers (corners) of a stable ideal");
    cmd_corners->add_option("ideal", ideal_arg, "ideal file or inline text")->required();
    add_format(cmd_corners);

    CLI::App* cmd_count =
        app.add_subcommand("count", "slex position of a monomial within A^s(k,l)");
    cmd_count->add_option("monomial", monomial_arg, "monomial, e.g. x2*x5*x7*x8")->required();
    cmd_count->add_option("--k", opt_k, "corner column k")->required();
    cmd_count->add_option("--l", opt_l, "degree l")->required();
    cmd_count->add_flag("--trace", with_trace, "print the binomial decomposition");
    add_format(cmd_count);

    CLI::App* cmd_construct = app.add_subcommand(
        "construct",
        "smallest squarefree strongly stable ideal with prescribed corners and values; "
        "in characteristic zero this settles realizability by arbitrary squarefree "
        "graded ideals as well. Initial degree 2 is accepted with the same machinery "
        "(corner count capped at n-3)");
    cmd_construct->add_option("spec", spec_arg, "JSON spec file or inline JSON")->required();
    add_format(cmd_construct);

    CLI::App* cmd_lex =
        app.add_subcommand("lex", "smallest squarefree lex ideal with corners (n-l, l)");
    cmd_lex->add_option("--n", opt_n, "ambient variable count")->required();
    cmd_lex->add_option("--l1", opt_l1, "initial degree")->required();
    add_format(cmd_lex);

    CLI::App* cmd_enumerate = app.add_subcommand(
        "enumerate", "corner configurations over all squarefree strongly stable ideals");
    cmd_enumerate->add_option("--n", opt_n, "ambient variable count")->required();
    cmd_enumerate->add_option("--min-degree", opt_min_degree, "restrict to initial degree >= d")
        ->capture_default_str();
    add_format(cmd_enumerate);

    CLI::App* cmd_closure =
        app.add_subcommand("closure", "strongly stable closure of equal-degree monomials");
    cmd_closure->add_option("monomials", closure_arg, "monomial list, file or inline")->required();
    add_format(cmd_closure);

    std::vector<std::string> storage(args.begin(), args.end());
    std::vector<const char*> argv;
    argv.push_back("sqbetti");
    for (const std::string& s : storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (*cmd_betti) {
            BettiTable table = graded_betti(parse_ideal(slurp(ideal_arg)));
            if (format == "json")
                out << betti_to_json(table).dump(2) << '\n';
            else
                out << render_betti(table);
        } else if (*cmd_corners) {
            CornerReport report = extremal_betti(parse_ideal(slurp(ideal_arg)));
            if (format == "json")
                out << corner_report_to_json(report).dump(2) << '\n';
            else
                print_corners(report, out);
        } else if (*cmd_count) {
            Monomial u = parse_monomial(monomial_arg);
            if (u.degree() != opt_l)
                throw contract_error("monomial has degree " + std::to_string(u.degree()) +
                                     ", expected l=" + std::to_string(opt_l));
            if (u.max_index() != opt_k + opt_l)
                throw contract_error("monomial has max index " + std::to_string(u.max_index()) +
                                     ", expected k+l=" + std::to_string(opt_k + opt_l));
            DecompositionTrace trace = count_upto_traced(u);
            if (format == "json") {
                nlohmann::json stages = nlohmann::json::array();
                for (const TraceStep& s : trace.steps)
                    stages.push_back({{"binomial", {s.top, s.bottom}},
                                      {"selected", s.selected},
                                      {"contributed", s.contributed.str()}});
                nlohmann::json j{{"position", trace.total.str()},
                                 {"terms", trace.term_count}};
                if (with_trace) j["stages"] = stages;
                out << j.dump(2) << '\n';
            } else {
                out << "position " << trace.total.str() << '\n';
                if (with_trace) print_trace(trace, out);
            }
        } else if (*cmd_construct) {
            std::string text = slurp(spec_arg);
            nlohmann::json parsed = nlohmann::json::parse(text, nullptr, false);
            if (parsed.is_discarded()) throw parse_error("spec is not valid JSON");
            CornerSpec spec = corner_spec_from_json(parsed);
            try {
                MonomialIdeal ideal = construct_ideal(spec);
                if (format == "json") {
                    nlohmann::json j = ideal_to_json(ideal);
                    j["betti"] = betti_to_json(graded_betti(ideal));
                    j["corners"] = corner_report_to_json(extremal_betti(ideal));
                    out << j.dump(2) << '\n';
                } else {
                    print_ideal(ideal, out);
                    out << '\n' << render_betti(graded_betti(ideal));
                }
            } catch (const infeasible_error& e) {
                FeasibilityReport report = feasibility_bounds(spec);
                err << "infeasible at corner " << e.corner() << ": " << e.what() << '\n';
                if (format == "json") out << feasibility_to_json(report).dump(2) << '\n';
                return 1;
            }
        } else if (*cmd_lex) {
            MonomialIdeal ideal = lex_corner_ideal(opt_n, opt_l1);
            if (format == "json") {
                nlohmann::json j = ideal_to_json(ideal);
                j["corners"] = corner_report_to_json(extremal_betti(ideal));
                out << j.dump(2) << '\n';
            } else {
                print_ideal(ideal, out);
                out << '\n' << render_betti(graded_betti(ideal));
            }
        } else if (*cmd_enumerate) {
            std::vector<CornerConfig> configs =
                enumerate_corner_configs(opt_n, opt_min_degree, enumerate_bound());
            if (format == "json") {
                nlohmann::json rows = nlohmann::json::array();
                for (const CornerConfig& cfg : configs) {
                    nlohmann::json row = corner_report_to_json(cfg.report);
                    row["witness"] = ideal_to_json(cfg.witness);
                    rows.push_back(row);
                }
                out << rows.dump(2) << '\n';
            } else {
                for (const CornerConfig& cfg : configs) {
                    print_corners(cfg.report, out);
                    out << "  witness:";
                    for (const Monomial& g : cfg.witness.generators()) out << ' ' << g.str();
                    out << '\n';
                }
            }
        } else if (*cmd_closure) {
            MonomialIdeal parsed = parse_ideal(slurp(closure_arg));
            std::vector<Monomial> input = parsed.generators();
            std::vector<Monomial> closed = strongly_stable_closure(input);
            if (format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const Monomial& m : closed) j.push_back(m.str());
                out << j.dump(2) << '\n';
            } else {
                for (const Monomial& m : closed) out << m.str() << '\n';
            }
        }
    } catch (const infeasible_error& e) {
        err << "infeasible: " << e.what() << '\n';
        return 1;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const contract_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const not_stable_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace sqbetti
