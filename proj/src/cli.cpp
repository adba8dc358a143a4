#include "qts/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <fmt/ostream.h>

#include "qts/assets.hpp"
#include "qts/coupling_map.hpp"
#include "qts/errors.hpp"
#include "qts/map_search.hpp"
#include "qts/qasm.hpp"
#include "qts/router.hpp"
#include "qts/simulate.hpp"
#include "qts/tabu_search.hpp"

namespace qts::cli {

namespace {

/// Unreadable input file; reported with the parse exit code.
class IoError : public Error {
public:
    using Error::Error;
};

std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(fmt::format("{}: cannot open file", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Program load_circuit(std::string const& path) {
    if (path.empty()) return parse_qasm(assets::teleport_qasm);
    return parse_qasm(read_file(path));
}

/// `none`, an inline pair list, or a path to a file holding one.
std::optional<CouplingMap> load_map(std::string const& arg) {
    if (arg.empty() || arg == "none") return std::nullopt;
    if (arg.front() == '[') return parse_coupling_map(arg);
    return parse_coupling_map(read_file(arg));
}

std::string describe(RoutingReport const& r) {
    return fmt::format("direct={} reversed={} swaps={} inserted={}", r.direct_count, r.reversed_count,
                       r.swap_count, r.inserted_gate_count);
}

PopulationMode parse_mode(std::string const& mode) {
    return mode == "without" ? PopulationMode::WithoutReplacement : PopulationMode::WithReplacement;
}

/// Writes to `--out` when given, else to the command's stdout.
class Sink {
public:
    Sink(std::string const& path, std::ostream& fallback) : _fallback(fallback) {
        if (!path.empty()) {
            _file.open(path, std::ios::binary);
            if (!_file) throw IoError(fmt::format("{}: cannot write file", path));
        }
    }
    std::ostream& stream() { return _file.is_open() ? static_cast<std::ostream&>(_file) : _fallback; }

private:
    std::ofstream _file;
    std::ostream& _fallback;
};

struct CommonOptions {
    std::optional<std::uint64_t> seed;
    std::string out_path;

    std::uint64_t resolve_seed(std::ostream& err) {
        if (!seed) {
            seed = std::random_device{}() | (std::uint64_t{std::random_device{}()} << 32);
            fmt::print(err, "seed={}\n", *seed);
        }
        return *seed;
    }
};

struct SearchFlags {
    std::size_t max_iterations = SearchConfig{}.max_iterations;
    std::size_t stagnation = SearchConfig{}.stagnation_limit;
    std::optional<std::size_t> tenure;
    std::string mode = "with";

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-iter", max_iterations, "Iterations per run")->check(CLI::PositiveNumber);
        cmd->add_option("--stagnation", stagnation, "Iterations without improvement before an escape")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--tenure", tenure, "Tabu tenure (default max(2, n/4))")->check(CLI::PositiveNumber);
        cmd->add_option("--mode", mode, "Initial population: with or without replacement")
            ->check(CLI::IsMember({"with", "without"}));
    }

    SearchConfig config(std::uint64_t seed) const {
        SearchConfig c;
        c.max_iterations = max_iterations;
        c.stagnation_limit = stagnation;
        c.tabu_tenure = tenure;
        c.population_mode = parse_mode(mode);
        c.seed = seed;
        return c;
    }
};

// ---- simulate ---------------------------------------------------------------

struct SimulateArgs {
    std::string circuit;
    std::string map = "none";
    std::size_t shots = 1024;
};

int cmd_simulate(SimulateArgs const& args, CommonOptions& common, std::ostream& out, std::ostream& err) {
    Program const program = load_circuit(args.circuit);
    auto const map = load_map(args.map);
    auto const routed = route(program, map);
    std::uint64_t const seed = common.resolve_seed(err);

    StateVector const initial(routed.program.n_qubits);
    Rng rng(seed);
    Counts const counts = sample_program(routed.program, initial, args.shots, rng);
    Distribution const exact = exact_distribution(routed.program, initial);

    std::set<std::string> keys;
    for (auto const& [k, _] : counts) keys.insert(k);
    for (auto const& [k, _] : exact) keys.insert(k);

    Sink sink(common.out_path, out);
    auto& os = sink.stream();
    fmt::print(os, "# map={} shots={} seed={}\n", map ? map->to_string() : "none", args.shots, seed);
    fmt::print(os, "# {}\n", describe(routed.report));
    fmt::print(os, "bitstring,count,frequency,probability\n");
    for (auto const& k : keys) {
        auto const c = counts.find(k);
        auto const p = exact.find(k);
        std::uint64_t const n = c == counts.end() ? 0 : c->second;
        fmt::print(os, "{},{},{},{}\n", k, n, static_cast<double>(n) / static_cast<double>(args.shots),
                   p == exact.end() ? 0.0 : p->second);
    }
    return exit_ok;
}

// ---- route ------------------------------------------------------------------

struct RouteArgs {
    std::string circuit;
    std::string map = "none";
};

int cmd_route(RouteArgs const& args, CommonOptions& common, std::ostream& out) {
    Program const program = load_circuit(args.circuit);
    auto const routed = route(program, load_map(args.map));
    Sink sink(common.out_path, out);
    auto& os = sink.stream();
    fmt::print(os, "// {}\n", describe(routed.report));
    std::string layout;
    for (std::size_t i = 0; i < routed.layout.size(); ++i) layout += fmt::format("{}{}", i ? ", " : "", routed.layout[i]);
    fmt::print(os, "// layout=[{}]\n", layout);
    os << serialize_qasm(routed.program);
    return exit_ok;
}

// ---- qts --------------------------------------------------------------------

struct QtsArgs {
    std::string instance;
    SearchFlags search;
};

int cmd_qts(QtsArgs const& args, CommonOptions& common, std::ostream& out, std::ostream& err) {
    KnapsackInstance const instance = parse_knapsack(read_file(args.instance));
    std::uint64_t const seed = common.resolve_seed(err);
    SearchResult const result = qts_run(instance, args.search.config(seed));

    {
        Sink sink(common.out_path, out);
        auto& os = sink.stream();
        fmt::print(os, "iteration,current_eval,best_eval\n");
        for (auto const& t : result.trace) {
            fmt::print(os, "{},{},{}\n", t.iteration, t.current_evaluation, t.best_evaluation);
        }
    }
    fmt::print(out, "best_eval={} best_iter={} iterations={} escapes={} best_solution={} seed={}\n",
               result.best_evaluation, result.best_iteration, result.iterations_run, result.escapes,
               result.best_solution.to_string(), seed);
    return exit_ok;
}

// ---- search-map -------------------------------------------------------------

struct SearchMapArgs {
    std::string circuit;
    std::string candidates;
    std::size_t budget = 6;
    std::size_t runs = 100;
    std::size_t qubits = 0;
    SearchFlags search;
};

std::vector<ScoredMap> parallel_runs(MapSearchProblem const& problem, SearchFlags const& flags, std::uint64_t master,
                                     std::size_t runs) {
    std::vector<std::optional<ScoredMap>> slots(runs);
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i = cursor++; i < runs; i = cursor++) {
            slots[i] = search_best_map(problem, flags.config(derive_seed(master, i)));
        }
    };
    std::size_t const n_threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(runs, 1));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
        worker();
    }
    std::vector<ScoredMap> results;
    results.reserve(runs);
    for (auto& s : slots) results.push_back(std::move(*s));
    return results;
}

int cmd_search_map(SearchMapArgs const& args, CommonOptions& common, std::ostream& out, std::ostream& err) {
    MapSearchProblem problem;
    problem.circuit = load_circuit(args.circuit);
    problem.edge_budget = args.budget;
    if (!args.candidates.empty()) {
        problem.candidate_edges = parse_edge_list(read_file(args.candidates));
    } else {
        std::size_t const n = std::max(args.qubits, problem.circuit.n_qubits);
        problem.candidate_edges = all_directed_pairs(n);
        if (problem.candidate_edges.size() > StateVector::max_qubits) {
            fmt::print(err, "{} qubits give {} candidate edges (limit {}); pass --candidates\n", n,
                       problem.candidate_edges.size(), StateVector::max_qubits);
            return exit_usage;
        }
    }
    problem.validate();
    std::uint64_t const seed = common.resolve_seed(err);
    auto const results = parallel_runs(problem, args.search, seed, args.runs);

    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].score > results[best].score) best = i;
    }

    {
        Sink sink(common.out_path, out);
        auto& os = sink.stream();
        fmt::print(os, "run,seed,best_score,best_iteration,iterations_run,edges,unsupported\n");
        for (std::size_t i = 0; i < results.size(); ++i) {
            auto const& r = results[i];
            fmt::print(os, "{},{},{},{},{},{},{}\n", i, derive_seed(seed, i), r.score, r.best_iteration,
                       r.iterations_run, r.map.edges().size(), r.support.unsupported);
        }
    }
    if (results.empty()) return exit_ok;
    auto const& winner = results[best];
    fmt::print(out, "{}\n", winner.map.to_string());
    fmt::print(out, "score={}\n", winner.score);
    fmt::print(out, "run={} unsupported={} {}\n", best, winner.support.unsupported,
               winner.routing ? describe(*winner.routing) : std::string("routing=unroutable"));
    return exit_ok;
}

// ---- bench-teleport ---------------------------------------------------------

struct BenchArgs {
    std::size_t shots = 4096;
};

int cmd_bench_teleport(BenchArgs const& args, CommonOptions& common, std::ostream& out, std::ostream& err) {
    Program const teleport = parse_qasm(assets::teleport_qasm);
    std::uint64_t const seed = common.resolve_seed(err);
    // |psi> = (|0> + sqrt(2)|1>) / sqrt(3)
    Amplitude const alpha{1.0 / std::sqrt(3.0), 0.0};
    Amplitude const beta{std::sqrt(2.0 / 3.0), 0.0};
    std::size_t const teleported_bit = 2;

    struct Row {
        std::string name;
        RoutingReport report;
        std::pair<double, double> exact;
        Distribution sampled;
        std::uint64_t zeros = 0;
        std::uint64_t ones = 0;
    };
    std::vector<std::pair<std::string, std::optional<CouplingMap>>> const maps{
        {"none", std::nullopt},
        {"b", parse_coupling_map(assets::map_b)},
        {"c", parse_coupling_map(assets::map_c)},
    };

    std::vector<Row> rows;
    for (std::size_t m = 0; m < maps.size(); ++m) {
        auto const routed = route(teleport, maps[m].second);
        StateVector const input = prepare_input(routed.program.n_qubits, alpha, beta);
        Row row{maps[m].first, routed.report, cbit_marginal(exact_distribution(routed.program, input), teleported_bit),
                {}};
        Rng rng(derive_seed(seed, m));
        Counts const counts = sample_program(routed.program, input, args.shots, rng);
        for (auto const& [label, n] : counts) {
            (label[label.size() - 1 - teleported_bit] == '1' ? row.ones : row.zeros) += n;
        }
        row.sampled = {{"0", static_cast<double>(row.zeros) / args.shots}, {"1", static_cast<double>(row.ones) / args.shots}};
        rows.push_back(std::move(row));
    }

    Sink sink(common.out_path, out);
    auto& os = sink.stream();
    fmt::print(os, "map,p0_exact,p1_exact,count0,count1,direct,reversed,swaps,inserted\n");
    for (auto const& r : rows) {
        fmt::print(os, "{},{},{},{},{},{},{},{},{}\n", r.name, r.exact.first, r.exact.second, r.zeros, r.ones,
                   r.report.direct_count, r.report.reversed_count, r.report.swap_count, r.report.inserted_gate_count);
    }
    fmt::print(os, "\npair,tvd_exact,tvd_sampled,tvd_bound\n");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            Distribution const a{{"0", rows[i].exact.first}, {"1", rows[i].exact.second}};
            Distribution const b{{"0", rows[j].exact.first}, {"1", rows[j].exact.second}};
            // 4 sigma per outcome on the difference of two independent estimates
            double bound = 0.0;
            for (auto const& [k, p] : a) bound += 4.0 * std::sqrt(2.0 * p * (1.0 - p) / static_cast<double>(args.shots));
            fmt::print(os, "{}-{},{},{},{}\n", rows[i].name, rows[j].name, total_variation(a, b),
                       total_variation(rows[i].sampled, rows[j].sampled), 0.5 * bound);
        }
    }
    return exit_ok;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum tabu search and coupling-map tools", "qts"};
    app.require_subcommand(1);
    CommonOptions common;
    auto add_common = [&](CLI::App* cmd, bool with_seed) {
        if (with_seed) cmd->add_option("--seed", common.seed, "Random seed (printed when omitted)");
        cmd->add_option("--out", common.out_path, "Write the CSV/QASM output to this file");
    };

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Route and sample a circuit");
    simulate->add_option("circuit", sim.circuit, "QASM file (bundled teleport circuit if omitted)");
    simulate->add_option("--map", sim.map, "Coupling map file, inline pair list, or none");
    simulate->add_option("--shots", sim.shots, "Number of shots")->check(CLI::PositiveNumber);
    add_common(simulate, true);

    RouteArgs rt;
    auto* route_cmd = app.add_subcommand("route", "Rewrite a circuit onto a coupling map");
    route_cmd->add_option("circuit", rt.circuit, "QASM file (bundled teleport circuit if omitted)");
    route_cmd->add_option("--map", rt.map, "Coupling map file, inline pair list, or none");
    add_common(route_cmd, false);

    QtsArgs qa;
    auto* qts_cmd = app.add_subcommand("qts", "Run the quantum tabu search on a knapsack instance");
    qts_cmd->add_option("instance", qa.instance, "Instance file: `n cap` then n lines `b w`")->required();
    qa.search.attach(qts_cmd);
    add_common(qts_cmd, true);

    SearchMapArgs sm;
    auto* search_cmd = app.add_subcommand("search-map", "Search coupling maps for a circuit");
    search_cmd->add_option("circuit", sm.circuit, "QASM file (bundled teleport circuit if omitted)");
    search_cmd->add_option("--candidates", sm.candidates, "Pair-list file of candidate edges");
    search_cmd->add_option("--budget", sm.budget, "Maximum number of edges");
    search_cmd->add_option("--qubits", sm.qubits, "Physical qubits for the default all-pairs candidate set");
    search_cmd->add_option("--runs", sm.runs, "Independent runs")->check(CLI::PositiveNumber);
    sm.search.attach(search_cmd);
    add_common(search_cmd, true);

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench-teleport", "Compare teleportation under maps none, b and c");
    bench_cmd->add_option("--shots", bench.shots, "Shots per map")->check(CLI::PositiveNumber);
    add_common(bench_cmd, true);

    std::vector<char const*> argv;
    argv.reserve(args.size());
    for (auto const& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*simulate) return cmd_simulate(sim, common, out, err);
        if (*route_cmd) return cmd_route(rt, common, out);
        if (*qts_cmd) return cmd_qts(qa, common, out, err);
        if (*search_cmd) return cmd_search_map(sm, common, out, err);
        if (*bench_cmd) return cmd_bench_teleport(bench, common, out, err);
    } catch (ParseError const& e) {
        fmt::print(err, "{}\n", e.what());
        return exit_parse;
    } catch (FormatError const& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_parse;
    } catch (IoError const& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_parse;
    } catch (SizeError const& e) {
        fmt::print(err, "error: {}\n", e.what());
        return exit_usage;
    } catch (RoutingError const& e) {
        fmt::print(err, "routing error: {}\n", e.what());
        return exit_routing;
    } catch (std::exception const& e) {
        fmt::print(err, "internal error: {}\n", e.what());
        return exit_internal;
    }
    return exit_usage;
}

}  // namespace qts::cli
