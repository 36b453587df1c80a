#include "qmech/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qmech/dynamics.hpp"
#include "qmech/errors.hpp"
#include "qmech/expr.hpp"
#include "qmech/flow.hpp"
#include "qmech/json_io.hpp"
#include "qmech/printer.hpp"
#include "qmech/verify.hpp"

namespace qmech::cli {
namespace {

// m and w are always available; --params adds to the set.
ParseOptions parse_options_with(const std::vector<std::string>& extra) {
    ParseOptions opts;
    opts.parameters = {"m", "w"};
    for (const auto& name : extra) opts.parameters.insert(name);
    return opts;
}

// Reads --potential (a polynomial in x alone) into the kinetic+potential form.
HamiltonianSpec spec_from(const std::string& mass_text,
                          const std::string& potential_text,
                          const ParseOptions& popts) {
    HamiltonianSpec spec;
    spec.mass = parse_scalar(mass_text, popts);
    if (!potential_text.empty()) {
        QPoly v = parse_qpoly(potential_text, popts);
        for (const auto& [key, coeff] : v.terms()) {
            if (key.second != 0) {
                throw Error("the potential must be a polynomial in x alone");
            }
            spec.potential.push_back({key.first, coeff});
        }
    }
    return spec;
}

std::map<std::string, double> read_bindings(const std::vector<std::string>& raw) {
    std::map<std::string, double> bindings;
    for (const auto& item : raw) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw CLI::ValidationError("--bind", "expects name=value, got '" + item + "'");
        }
        std::string name = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        try {
            std::size_t used = 0;
            double v = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
            bindings[name] = v;
        } catch (const std::exception&) {
            throw CLI::ValidationError("--bind", "'" + value + "' is not a number");
        }
    }
    return bindings;
}

std::vector<RelationSet> read_relation_sets(const std::vector<std::string>& paths) {
    std::vector<RelationSet> sets;
    for (const auto& path : paths) {
        std::ifstream in(path);
        if (!in) throw Error("cannot open relation file: " + path);
        sets.push_back(load_relation_set(in));
    }
    return sets;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app("exact symbolic mechanics on the quantum plane", "qmech");
    app.require_subcommand(1);

    int exit_code = 0;

    // ---- normalize ------------------------------------------------------
    std::string norm_expr;
    std::vector<std::string> norm_params;
    bool norm_json = false;
    {
        auto* sub = app.add_subcommand("normalize",
                                       "parse an expression and print its normal-ordered form");
        sub->add_option("expression", norm_expr, "expression over x, p, q, i and parameters")
            ->required();
        sub->add_option("--params", norm_params, "extra parameter names")->delimiter(',');
        sub->add_flag("--json", norm_json, "emit JSON instead of text");
        sub->callback([&] {
            QPoly f = parse_qpoly(norm_expr, parse_options_with(norm_params));
            if (norm_json) {
                out << qpoly_to_json(f);
            } else {
                out << to_text(f) << "\n";
            }
        });
    }

    // ---- bracket --------------------------------------------------------
    std::string br_lhs, br_rhs;
    std::vector<std::string> br_params;
    bool br_json = false;
    {
        auto* sub = app.add_subcommand("bracket",
                                       "deformed Poisson bracket of two expressions");
        sub->add_option("f", br_lhs, "first argument")->required();
        sub->add_option("g", br_rhs, "second argument")->required();
        sub->add_option("--params", br_params, "extra parameter names")->delimiter(',');
        sub->add_flag("--json", br_json, "emit JSON instead of text");
        sub->callback([&] {
            ParseOptions popts = parse_options_with(br_params);
            QPoly result = qpb_direct(parse_qpoly(br_lhs, popts), parse_qpoly(br_rhs, popts));
            if (br_json) {
                out << qpoly_to_json(result);
            } else {
                out << to_text(result) << "\n";
            }
        });
    }

    // ---- hamilton -------------------------------------------------------
    std::string ham_full, ham_mass, ham_pot;
    std::vector<std::string> ham_params;
    bool ham_json = false;
    {
        auto* sub = app.add_subcommand("hamilton", "equations of motion for a Hamiltonian");
        auto* source = sub->add_option_group("hamiltonian", "how the Hamiltonian is given");
        source->add_option("--hamiltonian", ham_full, "full Hamiltonian expression");
        auto* mass_opt =
            source->add_option("--mass", ham_mass, "mass for p^2/(2 mass) + potential");
        source->require_option(1);
        sub->add_option("--potential", ham_pot, "potential, a polynomial in x")
            ->needs(mass_opt);
        sub->add_option("--params", ham_params, "extra parameter names")->delimiter(',');
        sub->add_flag("--json", ham_json, "emit JSON instead of text");
        sub->callback([&] {
            ParseOptions popts = parse_options_with(ham_params);
            QPoly h = ham_full.empty() ? spec_from(ham_mass, ham_pot, popts).to_qpoly()
                                       : parse_qpoly(ham_full, popts);
            MotionEquations eqs = hamilton_equations(h);
            if (ham_json) {
                out << motion_to_json(eqs);
            } else {
                out << to_text(eqs);
            }
        });
    }

    // ---- evolve-symbolic --------------------------------------------------
    std::string ev_obs, ev_full, ev_mass, ev_pot;
    std::vector<std::string> ev_params;
    bool ev_json = false;
    {
        auto* sub = app.add_subcommand(
            "evolve-symbolic", "time derivative of an observable under a Hamiltonian");
        sub->add_option("observable", ev_obs, "observable expression")->required();
        auto* source = sub->add_option_group("hamiltonian", "how the Hamiltonian is given");
        source->add_option("--hamiltonian", ev_full, "full Hamiltonian expression");
        auto* mass_opt =
            source->add_option("--mass", ev_mass, "mass for p^2/(2 mass) + potential");
        source->require_option(1);
        sub->add_option("--potential", ev_pot, "potential, a polynomial in x")
            ->needs(mass_opt);
        sub->add_option("--params", ev_params, "extra parameter names")->delimiter(',');
        sub->add_flag("--json", ev_json, "emit JSON instead of text");
        sub->callback([&] {
            ParseOptions popts = parse_options_with(ev_params);
            QPoly h = ev_full.empty() ? spec_from(ev_mass, ev_pot, popts).to_qpoly()
                                      : parse_qpoly(ev_full, popts);
            QPoly dot = time_derivative(parse_qpoly(ev_obs, popts), h);
            if (ev_json) {
                out << qpoly_to_json(dot);
            } else {
                out << to_text(dot) << "\n";
            }
        });
    }

    // ---- conserve -------------------------------------------------------
    std::string cons_mass, cons_pot;
    std::vector<std::string> cons_params;
    bool cons_json = false;
    {
        auto* sub = app.add_subcommand(
            "conserve", "conserved deformed energy for a kinetic+potential system");
        sub->add_option("--mass", cons_mass, "mass for p^2/(2 mass) + potential")->required();
        sub->add_option("--potential", cons_pot, "potential, a polynomial in x");
        sub->add_option("--params", cons_params, "extra parameter names")->delimiter(',');
        sub->add_flag("--json", cons_json, "emit JSON instead of text");
        sub->callback([&] {
            ParseOptions popts = parse_options_with(cons_params);
            QPoly energy = find_conserved(spec_from(cons_mass, cons_pot, popts));
            if (cons_json) {
                out << qpoly_to_json(energy);
            } else {
                out << to_text(energy) << "\n";
            }
        });
    }

    // ---- evolve ---------------------------------------------------------
    std::string flow_mass = "1", flow_pot, flow_out;
    std::vector<std::string> flow_params, flow_binds;
    double flow_q = 1.0, flow_x0 = 0.0, flow_p0 = 0.0, flow_dt = 1e-3;
    long flow_steps = 1000;
    {
        auto* sub = app.add_subcommand(
            "evolve", "numeric integration of the commutative shadow, CSV output");
        sub->add_option("--mass", flow_mass, "mass expression (default 1)");
        sub->add_option("--potential", flow_pot, "potential, a polynomial in x");
        sub->add_option("--params", flow_params, "extra parameter names")->delimiter(',');
        sub->add_option("--bind", flow_binds, "numeric value for a parameter, name=value");
        sub->add_option("--q", flow_q, "deformation value")->check(CLI::PositiveNumber);
        sub->add_option("--x0", flow_x0, "initial position");
        sub->add_option("--p0", flow_p0, "initial momentum");
        sub->add_option("--dt", flow_dt, "time step")->check(CLI::PositiveNumber);
        sub->add_option("--steps", flow_steps, "number of steps")->check(CLI::PositiveNumber);
        sub->add_option("--out", flow_out, "CSV file (stdout when omitted)");
        sub->callback([&] {
            FlowProblem problem;
            problem.spec = spec_from(flow_mass, flow_pot, parse_options_with(flow_params));
            problem.bindings = read_bindings(flow_binds);
            problem.q_value = flow_q;
            problem.x0 = flow_x0;
            problem.p0 = flow_p0;
            problem.dt = flow_dt;
            problem.steps = flow_steps;
            Trajectory trajectory = integrate(problem);
            const char* note =
                "note: the deformed equations are integrated through their "
                "commutative shadow; H and Eq columns watch for drift\n";
            if (flow_out.empty()) {
                // Keep stdout pure CSV; the note goes to the error stream.
                err << note;
                write_csv(trajectory, out);
            } else {
                std::ofstream file(flow_out);
                if (!file) throw Error("cannot open output file: " + flow_out);
                write_csv(trajectory, file);
                out << note;
            }
        });
    }

    // ---- verify ---------------------------------------------------------
    std::string ver_suite = "all";
    std::vector<std::string> ver_relations;
    int ver_max_degree = 6;
    unsigned ver_seed = 987654321;
    int ver_real_trunc = 12;
    int ver_quant_trunc = 20;
    bool ver_json = false;
    {
        std::vector<std::string> members = verify_suite_names();
        members.insert(members.begin(), "all");
        auto* sub = app.add_subcommand("verify", "run self-check suites");
        sub->add_option("--suite", ver_suite, "suite name or 'all'")
            ->check(CLI::IsMember(members));
        sub->add_option("--max-degree", ver_max_degree, "degree bound for random polynomials")
            ->check(CLI::Range(1, 12));
        sub->add_option("--seed", ver_seed, "seed for the deterministic generator");
        sub->add_option("--realization-truncation", ver_real_trunc,
                        "basis truncation for the realization suite")
            ->check(CLI::Range(4, 40));
        sub->add_option("--quantization-truncation", ver_quant_trunc,
                        "basis truncation for the quantization suite")
            ->check(CLI::Range(4, 60));
        sub->add_option("--relations", ver_relations,
                        "JSON relation-set file (repeatable; replaces the builtin candidates)")
            ->check(CLI::ExistingFile);
        sub->add_flag("--json", ver_json, "emit JSON instead of text");
        sub->callback([&] {
            VerifyOptions options;
            options.max_degree = ver_max_degree;
            options.seed = ver_seed;
            options.realization_truncation = ver_real_trunc;
            options.quantization_truncation = ver_quant_trunc;
            options.relation_sets = read_relation_sets(ver_relations);
            std::vector<Report> reports;
            if (ver_suite == "all") {
                reports = verify_all(options);
            } else {
                reports.push_back(verify_suite(ver_suite, options));
            }
            bool all_pass = true;
            for (const auto& report : reports) all_pass = all_pass && report.all_pass();
            if (ver_json) {
                out << reports_to_json(reports);
            } else {
                for (const auto& report : reports) out << render_text(report);
            }
            if (!all_pass) exit_code = 1;
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const CLI::App* sub = &app; !sub->get_subcommands().empty();
             sub = sub->get_subcommands().front()) {
            target = sub->get_subcommands().front();
        }
        out << target->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << "run 'qmech --help' for the command list\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace qmech::cli
