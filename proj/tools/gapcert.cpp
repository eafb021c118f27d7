// Command-line front end: certify spectral-gap bounds, sweep the tightness
// family, run random property suites, and emit graphs in the edge-list
// format. Exit codes: 0 all checks passed, 1 some inequality failed or a
// row hit a solver error, 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gapcert/gapcert.hpp"

namespace {

gapcert::IntRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw gapcert::BadConfigError("bad range `" + text + "`; expected A or A..B");
    }
}

gapcert::SolverMethod parse_method(const std::string& text) {
    return text == "dense" ? gapcert::SolverMethod::dense : gapcert::SolverMethod::iterative;
}

gapcert::OutputFormat parse_format(const std::string& text) {
    if (text == "csv") return gapcert::OutputFormat::csv;
    if (text == "jsonl") return gapcert::OutputFormat::jsonl;
    return gapcert::OutputFormat::table;
}

struct CommonFlags {
    std::string format = "table";
    std::string n_range = "4..12";
    std::string delta_range = "2..4";
    std::string k_range = "1..6";
};

// `method` must be storage private to `sub`: options bound to a variable
// shared across subcommands would make the last-registered default win
// everywhere.
void add_solver_flags(CLI::App* sub, gapcert::SweepConfig& cfg, std::string& method,
                      const std::string& default_method) {
    method = default_method;
    sub->add_option("--tol", cfg.tol, "convergence tolerance")->capture_default_str();
    sub->add_option("--max-iter", cfg.max_iter, "iteration cap")->capture_default_str();
    sub->add_option("--dense-cap", cfg.dense_cap, "largest n the dense oracle accepts")
        ->capture_default_str();
    sub->add_option("--method", method, "eigenvalue route")
        ->check(CLI::IsMember({"iterative", "dense"}))
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed_base, "base seed for generation and solver starts")
        ->capture_default_str();
}

void add_output_flags(CLI::App* sub, gapcert::SweepConfig& cfg, CommonFlags& flags) {
    sub->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "jsonl"}))
        ->capture_default_str();
    sub->add_option("--output", cfg.output_path, "write the report to PATH instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral gap certification for connected graphs"};
    app.require_subcommand(1);

    gapcert::SweepConfig cfg;
    CommonFlags flags;
    bool no_regular = false;
    std::map<const CLI::App*, std::string> method_of;  // per-subcommand --method storage
    std::map<const CLI::App*, int> seeds_of;           // per-subcommand --seeds storage

    CLI::App* spectrum = app.add_subcommand("spectrum", "extreme eigenvalues of input graphs");
    spectrum->add_option("--input", cfg.inputs, "edge-list file(s)")->required();
    add_solver_flags(spectrum, cfg, method_of[spectrum], "iterative");
    add_output_flags(spectrum, cfg, flags);

    CLI::App* certify = app.add_subcommand("certify", "check the gap bounds on input graphs");
    certify->add_option("--input", cfg.inputs, "edge-list file(s)")->required();
    add_solver_flags(certify, cfg, method_of[certify], "iterative");
    add_output_flags(certify, cfg, flags);

    CLI::App* family = app.add_subcommand("family-sweep", "tightness family over a parameter grid");
    family->add_option("--delta", flags.delta_range, "degree range A..B")->capture_default_str();
    family->add_option("--k", flags.k_range, "copy-count range A..B")->capture_default_str();
    add_solver_flags(family, cfg, method_of[family], "iterative");
    add_output_flags(family, cfg, flags);

    CLI::App* random = app.add_subcommand("random-suite",
                                          "bound checks over seeded random irregular graphs");
    random->add_option("--n", flags.n_range, "order range A..B")->capture_default_str();
    seeds_of[random] = 50;
    random->add_option("--seeds", seeds_of[random], "number of generated graphs")
        ->capture_default_str();
    random->add_option("--probability", cfg.edge_probability, "edge probability")
        ->capture_default_str();
    random->add_flag("--no-regular", no_regular, "skip the regular nonbipartite extras");
    add_solver_flags(random, cfg, method_of[random], "dense");
    add_output_flags(random, cfg, flags);

    CLI::App* walk = app.add_subcommand("walk-bound", "walk-ratio eigenvalue upper bounds");
    walk->add_option("--input", cfg.inputs, "edge-list file(s)");
    walk->add_option("--n", flags.n_range, "order range A..B for generated graphs")
        ->capture_default_str();
    seeds_of[walk] = 20;
    walk->add_option("--seeds", seeds_of[walk], "number of generated graphs")
        ->capture_default_str();
    walk->add_option("--probability", cfg.edge_probability, "edge probability")
        ->capture_default_str();
    walk->add_option("--kmax", cfg.walk_kmax, "largest walk length")->capture_default_str();
    walk->add_option("--rmax", cfg.walk_rmax, "largest ratio step")->capture_default_str();
    add_solver_flags(walk, cfg, method_of[walk], "dense");
    add_output_flags(walk, cfg, flags);

    CLI::App* wei = app.add_subcommand("wei-check", "walk-fraction limit verification");
    wei->add_option("--input", cfg.inputs, "edge-list file(s)");
    wei->add_option("--n", flags.n_range, "order range A..B for generated graphs")
        ->capture_default_str();
    seeds_of[wei] = 20;
    wei->add_option("--seeds", seeds_of[wei], "number of generated graphs")
        ->capture_default_str();
    wei->add_option("--probability", cfg.edge_probability, "edge probability")
        ->capture_default_str();
    wei->add_flag("--bipartite", cfg.bipartite, "generate bipartite inputs");
    add_solver_flags(wei, cfg, method_of[wei], "dense");
    add_output_flags(wei, cfg, flags);

    CLI::App* construct = app.add_subcommand("construct", "emit a graph in edge-list format");
    construct->require_subcommand(1);
    std::string construct_out;
    gapcert::FamilyParams family_params;
    int size_n = 4;
    int side_a = 2, side_b = 2, leaves = 3;

    CLI::App* c_gdk = construct->add_subcommand("gdk", "chained near-bipartite family member");
    c_gdk->add_option("--delta", family_params.delta, "side size, >= 2")->required();
    c_gdk->add_option("--k", family_params.k, "number of copies, >= 1")->required();
    c_gdk->add_option("--output", construct_out, "write to PATH instead of stdout");

    CLI::App* c_path = construct->add_subcommand("path", "path graph");
    c_path->add_option("--n", size_n, "number of vertices")->required();
    c_path->add_option("--output", construct_out, "write to PATH instead of stdout");

    CLI::App* c_cycle = construct->add_subcommand("cycle", "cycle graph");
    c_cycle->add_option("--n", size_n, "number of vertices, >= 3")->required();
    c_cycle->add_option("--output", construct_out, "write to PATH instead of stdout");

    CLI::App* c_kbip = construct->add_subcommand("kbipartite", "complete bipartite graph");
    c_kbip->add_option("--a", side_a, "first side size")->required();
    c_kbip->add_option("--b", side_b, "second side size")->required();
    c_kbip->add_option("--output", construct_out, "write to PATH instead of stdout");

    CLI::App* c_star = construct->add_subcommand("star", "star graph");
    c_star->add_option("--leaves", leaves, "number of leaves")->required();
    c_star->add_option("--output", construct_out, "write to PATH instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.format = parse_format(flags.format);
        cfg.n_range = parse_range(flags.n_range);
        cfg.delta_range = parse_range(flags.delta_range);
        cfg.k_range = parse_range(flags.k_range);
        cfg.include_regular = !no_regular;

        if (construct->parsed()) {
            gapcert::Graph g = [&]() {
                if (c_gdk->parsed()) return gapcert::build_gdk(family_params);
                if (c_path->parsed()) return gapcert::path_graph(size_n);
                if (c_cycle->parsed()) return gapcert::cycle_graph(size_n);
                if (c_kbip->parsed()) return gapcert::complete_bipartite(side_a, side_b);
                return gapcert::star(leaves);
            }();
            if (construct_out.empty())
                gapcert::emit_edge_list(g, std::cout);
            else
                gapcert::emit_edge_list(g, std::filesystem::path(construct_out));
            return 0;
        }

        const CLI::App* active = wei;
        if (spectrum->parsed()) {
            cfg.mode = gapcert::SweepMode::spectrum;
            active = spectrum;
        } else if (certify->parsed()) {
            cfg.mode = gapcert::SweepMode::certify;
            active = certify;
        } else if (family->parsed()) {
            cfg.mode = gapcert::SweepMode::family_sweep;
            active = family;
        } else if (random->parsed()) {
            cfg.mode = gapcert::SweepMode::random_suite;
            active = random;
        } else if (walk->parsed()) {
            cfg.mode = gapcert::SweepMode::walk_bound;
            active = walk;
        } else {
            cfg.mode = gapcert::SweepMode::wei_check;
        }

        cfg.method = parse_method(method_of.at(active));
        if (const auto it = seeds_of.find(active); it != seeds_of.end()) cfg.seeds = it->second;

        return gapcert::run(cfg);
    } catch (const gapcert::Error& e) {
        std::cerr << "gapcert: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gapcert: " << e.what() << '\n';
        return 2;
    }
}
