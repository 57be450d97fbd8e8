// Command-line front end: cluster prediction, event-driven simulation,
// momentum-diagram rendering, exact toy-problem probabilities, Monte Carlo
// sampling, and lattice-path counting. Exit codes: 0 success, 1 validation
// or guard error, 2 parse error.

#include "sticky/combinatorics.hpp"
#include "sticky/diagram.hpp"
#include "sticky/diagram_svg.hpp"
#include "sticky/io.hpp"
#include "sticky/montecarlo.hpp"
#include "sticky/simulator.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw sticky::ValidationError("cannot open output file '" + out_path + "'");
    }
    out << text;
}

sticky::InputFormat parse_format(const std::string& name) {
    if (name == "auto") {
        return sticky::InputFormat::Auto;
    }
    if (name == "json") {
        return sticky::InputFormat::Json;
    }
    if (name == "csv") {
        return sticky::InputFormat::Csv;
    }
    throw sticky::ValidationError("unknown input format '" + name + "'");
}

std::vector<std::int64_t> parse_shape_list(const std::string& text) {
    std::vector<std::int64_t> rows;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const std::string cell(sticky::detail::trim(token));
        if (cell.empty() || cell.find_first_not_of("0123456789") != std::string::npos) {
            throw sticky::ParseError("malformed shape entry '" + token + "'");
        }
        rows.push_back(std::stoll(cell));
    }
    if (rows.empty()) {
        throw sticky::ParseError("empty shape");
    }
    return rows;
}

struct PredictArgs {
    std::string input;
    std::string format = "auto";
    std::string out;
};

struct SimulateArgs {
    std::string input;
    bool events_only = false;
    std::string svg;
    std::string t_max;
};

struct DiagramArgs {
    std::string input;
    std::string svg;
};

struct ProbArgs {
    std::int64_t n = 0;
    bool exact = false;
    bool enumerate = false;
    std::int64_t table = 0;
    int decimal = -1;
};

struct McArgs {
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

struct PathsArgs {
    std::string shape;
    bool bruteforce = false;
};

int run_predict(const PredictArgs& args) {
    const sticky::ParticleFile file =
        sticky::load_particle_file(args.input, parse_format(args.format));
    const sticky::ClusterSet clusters = sticky::predict_clusters(file.system);
    write_text(sticky::clusters_json(clusters).dump(2) + "\n", args.out);
    return 0;
}

int run_simulate(const SimulateArgs& args) {
    const sticky::ParticleFile file = sticky::load_particle_file(args.input);
    const sticky::SimulationResult result = sticky::simulate(file.system);

    if (!args.svg.empty()) {
        sticky::Rational t_max;
        if (!args.t_max.empty()) {
            t_max = sticky::parse_rational(args.t_max);
            if (t_max <= 0) {
                throw sticky::ValidationError("--t-max must be positive");
            }
        } else {
            t_max = result.events.empty() ? sticky::Rational(1)
                                          : result.events.back().time + 1;
        }
        write_text(sticky::trajectories_svg(result, file.system, t_max), args.svg);
    } else if (!args.t_max.empty()) {
        // validate even when unused so a bad value never passes silently
        if (sticky::parse_rational(args.t_max) <= 0) {
            throw sticky::ValidationError("--t-max must be positive");
        }
    }

    const sticky::Json out = args.events_only
                                 ? sticky::events_json(result.events)
                                 : sticky::simulation_json(result);
    write_text(out.dump(2) + "\n", "");
    return 0;
}

int run_diagram(const DiagramArgs& args) {
    const sticky::ParticleFile file = sticky::load_particle_file(args.input);
    const sticky::MomentumDiagram diagram = sticky::build_momentum_diagram(file.system);
    const sticky::Envelope envelope = sticky::lower_convex_envelope(diagram);
    const sticky::PolygonDecomposition decomposition =
        sticky::decompose_polygons(diagram, envelope);

    if (!args.svg.empty()) {
        write_text(sticky::diagram_svg(file.system), args.svg);
    }
    write_text(sticky::diagram_sidecar_json(diagram, envelope, decomposition).dump(2) + "\n",
               "");
    return 0;
}

int run_prob(const ProbArgs& args) {
    if ((args.n != 0) == (args.table != 0)) {
        throw sticky::ValidationError("pass exactly one of --n or --table");
    }
    if (args.exact && args.enumerate) {
        throw sticky::ValidationError("--exact and --enumerate are mutually exclusive");
    }
    if (args.table != 0) {
        const std::vector<sticky::TrendRow> rows =
            sticky::asymptotic_trend_report(args.table);
        const std::optional<int> digits =
            args.decimal >= 0 ? std::optional<int>(args.decimal) : std::nullopt;
        write_text(sticky::trend_csv(rows, digits), "");
        return 0;
    }
    const sticky::Rational p = args.enumerate
                                   ? sticky::one_cluster_probability_bruteforce(args.n)
                                   : sticky::one_cluster_probability(args.n);
    std::string line = sticky::rational_to_string(p);
    if (args.decimal >= 0) {
        line += " (" + sticky::format_decimal(p, args.decimal) + ")";
    }
    write_text(line + "\n", "");
    return 0;
}

int run_mc(const McArgs& args) {
    const sticky::McConfig config{args.n, args.trials, args.seed,
                                  sticky::VelocityModel::UnitMassPlusMinusOne};
    const sticky::McResult result = sticky::sample_cluster_counts(config, args.workers);
    write_text(sticky::mc_result_json(config, result).dump(2) + "\n", "");
    return 0;
}

int run_paths(const PathsArgs& args) {
    const sticky::YoungShape shape(parse_shape_list(args.shape));
    const sticky::BigInt count =
        args.bruteforce ? sticky::count_paths_bruteforce(shape) : sticky::count_paths(shape);
    write_text(count.str() + "\n", "");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sticky-particle cluster analysis: exact momentum-diagram "
                 "prediction, event-driven simulation, and lattice-path "
                 "combinatorics"};
    app.require_subcommand(1);

    PredictArgs predict_args;
    CLI::App* predict = app.add_subcommand(
        "predict", "Predict final clusters from the momentum diagram");
    predict->add_option("input", predict_args.input, "particle file (JSON or CSV)")
        ->required();
    predict->add_option("--format", predict_args.format,
                        "input format: auto, json, or csv");
    predict->add_option("--out", predict_args.out, "output path (default stdout)");

    SimulateArgs simulate_args;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run the event-driven collision simulation");
    simulate->add_option("input", simulate_args.input, "particle file (JSON or CSV)")
        ->required();
    simulate->add_flag("--events", simulate_args.events_only,
                       "print only the collision event log");
    simulate->add_option("--svg", simulate_args.svg, "write a trajectory plot here");
    simulate->add_option("--t-max", simulate_args.t_max,
                         "time range of the trajectory plot (rational)");

    DiagramArgs diagram_args;
    CLI::App* diagram = app.add_subcommand(
        "diagram", "Emit the momentum diagram (JSON sidecar, optional SVG)");
    diagram->add_option("input", diagram_args.input, "particle file (JSON or CSV)")
        ->required();
    diagram->add_option("--svg", diagram_args.svg, "write the diagram drawing here");

    ProbArgs prob_args;
    CLI::App* prob = app.add_subcommand(
        "prob", "Exact one-cluster probability for n unit-mass +/-1 particles");
    prob->add_option("--n", prob_args.n, "number of particles");
    prob->add_flag("--exact", prob_args.exact, "use the closed form (default)");
    prob->add_flag("--enumerate", prob_args.enumerate,
                   "enumerate all 2^n velocity assignments (n <= 22)");
    prob->add_option("--table", prob_args.table,
                     "emit a CSV trend table for n = 2..N (N <= 30)");
    prob->add_option("--decimal", prob_args.decimal,
                     "also render decimals with this many digits");

    McArgs mc_args;
    CLI::App* mc = app.add_subcommand(
        "mc", "Monte Carlo cluster-count histogram (reproducible, seeded)");
    mc->add_option("--n", mc_args.n, "particles per trial")->required();
    mc->add_option("--trials", mc_args.trials, "number of trials")->required();
    mc->add_option("--seed", mc_args.seed, "RNG seed (default 0)");
    mc->add_option("--workers", mc_args.workers,
                   "worker threads; does not affect the output");

    PathsArgs paths_args;
    CLI::App* paths = app.add_subcommand(
        "paths", "Count North-East lattice paths on a Young diagram");
    paths->add_option("--shape", paths_args.shape, "comma-separated rows, e.g. 4,2,1,0,0")
        ->required();
    paths->add_flag("--bruteforce", paths_args.bruteforce,
                    "use the DP oracle (rows and entries <= 12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (predict->parsed()) {
            return run_predict(predict_args);
        }
        if (simulate->parsed()) {
            return run_simulate(simulate_args);
        }
        if (diagram->parsed()) {
            return run_diagram(diagram_args);
        }
        if (prob->parsed()) {
            return run_prob(prob_args);
        }
        if (mc->parsed()) {
            return run_mc(mc_args);
        }
        if (paths->parsed()) {
            return run_paths(paths_args);
        }
    } catch (const sticky::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
