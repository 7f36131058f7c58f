// treelabel: command-line front end for the tree labeling solvers.
//
//   treelabel solve [FILE] --algorithm auto --cost manhattan --format newick
//   treelabel check [FILE] | --gen-n 7 --gen-max 12 --count 1000 --seed 1
//   treelabel gen --n 8 --min-label 0 --max-label 20 --seed 1
//   treelabel bench --algorithms dp,interval --nodes 1000 --m 100,200 --seed 1

#include "treelabel/bench.hpp"
#include "treelabel/check.hpp"
#include "treelabel/dp_solver.hpp"
#include "treelabel/error.hpp"
#include "treelabel/generate.hpp"
#include "treelabel/interval_solver.hpp"
#include "treelabel/ktuple.hpp"
#include "treelabel/newick.hpp"
#include "treelabel/oracle.hpp"
#include "treelabel/solve.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

using namespace treelabel;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_precondition = 2;
constexpr int exit_disagreement = 3;

struct RunConfig {
    std::string input = "-";
    std::string algorithm = "auto";
    std::string cost = "manhattan";
    std::string tie = "lowest";
    bool tuple = false;
    std::string format = "newick";
    std::string dump_table;
    std::string dump_intervals;

    std::uint64_t seed = 0;
    std::size_t gen_n = 0;
    Label gen_min = 0;
    Label gen_max = 12;
    std::size_t count = 1;
    std::string arity = "binary";
    std::size_t max_arity = 4;
    std::string fault;

    std::string algorithms = "dp,interval";
    std::vector<std::size_t> nodes;
    std::vector<Label> m_grid;
    std::size_t reps = 5;
};

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotBinaryTree:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::CostOverflowRisk:
    case ErrorCode::DifferenceOutOfRange:
    case ErrorCode::TupleDecompositionNotMonotone:
        return exit_precondition;
    default:
        return exit_input;
    }
}

std::string one_line(std::string s) {
    for (char& c : s) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return s;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& text, bool append) {
    std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
    if (!out) {
        fail(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    }
    out << text;
}

OracleOptions oracle_options() {
    OracleOptions opts;
    if (const char* env = std::getenv("TREELABEL_BUDGET")) {
        try {
            opts.budget = std::stoull(env);
        } catch (const std::exception&) {
            fail(ErrorCode::InvalidArgument, "TREELABEL_BUDGET is not a number");
        }
    }
    return opts;
}

ArityProfile parse_arity(const std::string& name) {
    if (name == "binary") {
        return ArityProfile::binary;
    }
    if (name == "random") {
        return ArityProfile::random;
    }
    fail(ErrorCode::InvalidArgument, "arity must be 'binary' or 'random'");
}

std::vector<std::string> trees_of(const RunConfig& cfg) {
    auto trees = split_newick_batch(read_input(cfg.input));
    if (trees.empty()) {
        fail(ErrorCode::EmptyTree, "input contains no tree");
    }
    return trees;
}

void dump_tables(const RunConfig& cfg, const Tree& t, const LeafLabeling& l, const CostFunction& c,
                 std::size_t index, bool batch) {
    const std::string header = batch ? "# tree " + std::to_string(index) + "\n" : "";
    if (!cfg.dump_table.empty()) {
        write_file(cfg.dump_table, header + dp_up(t, l, c).to_csv(), index > 0);
    }
    if (!cfg.dump_intervals.empty()) {
        write_file(cfg.dump_intervals, header + bottom_up_intervals(t, l).to_csv(), index > 0);
    }
}

int cmd_solve_scalar(const RunConfig& cfg) {
    const CostFunction cost = CostFunction::parse(cfg.cost);
    const TieRule tie = parse_tie_rule(cfg.tie);
    const Algorithm requested = parse_algorithm(cfg.algorithm);
    const OracleOptions oracle = oracle_options();
    const auto trees = trees_of(cfg);
    // Parse everything first so a bad tree later in a batch fails before output.
    std::vector<LabeledTreeDocument> docs;
    for (std::size_t k = 0; k < trees.size(); ++k) {
        docs.push_back(parse_newick(trees[k], cfg.input));
    }
    std::ostringstream out;
    for (std::size_t k = 0; k < docs.size(); ++k) {
        const auto& doc = docs[k];
        const Algorithm algorithm = resolve_algorithm(requested, doc.tree, cost);
        Labeling result = solve(doc.tree, doc.leaf_labels, cost, algorithm, tie, oracle);
        result.total_cost = eval_total(doc.tree, cost, result);
        dump_tables(cfg, doc.tree, doc.leaf_labels, cost, k, docs.size() > 1);
        if (cfg.format == "json") {
            nlohmann::ordered_json j;
            j["cost"] = result.total_cost;
            nlohmann::ordered_json labels = nlohmann::ordered_json::object();
            for (std::size_t v = 0; v < result.values.size(); ++v) {
                labels[std::to_string(v)] = result.values[v];
            }
            j["labels"] = labels;
            j["algorithm"] = algorithm_name(algorithm);
            j["g_min"] = doc.leaf_labels.range().g_min;
            j["g_max"] = doc.leaf_labels.range().g_max;
            j["m"] = doc.leaf_labels.range().m;
            out << j.dump() << '\n';
        } else {
            out << serialize_labeled(doc, result) << '\n';
        }
    }
    std::cout << out.str();
    return exit_ok;
}

int cmd_solve_tuple(const RunConfig& cfg) {
    const CostFunction cost = CostFunction::parse(cfg.cost);
    const TieRule tie = parse_tie_rule(cfg.tie);
    const Algorithm requested = parse_algorithm(cfg.algorithm);
    const auto trees = trees_of(cfg);
    std::vector<TupleTreeDocument> docs;
    for (const auto& text : trees) {
        docs.push_back(parse_newick_tuples(text));
    }
    std::ostringstream out;
    for (const auto& doc : docs) {
        TupleLabeling result = solve_ktuple(doc.tree, doc.leaf_labels, cost, requested, tie);
        result.total_cost = tuple_cost(doc.tree, cost, result);
        if (cfg.format == "json") {
            nlohmann::ordered_json j;
            j["cost"] = result.total_cost;
            j["k"] = result.k;
            nlohmann::ordered_json labels = nlohmann::ordered_json::object();
            for (std::size_t v = 0; v < result.values.size(); ++v) {
                labels[std::to_string(v)] = result.values[v];
            }
            j["labels"] = labels;
            j["algorithm"] = algorithm_name(resolve_algorithm(requested, doc.tree, cost));
            std::vector<Label> g_min, g_max, m;
            for (std::size_t i = 0; i < result.k; ++i) {
                const auto range = doc.leaf_labels.coordinate(doc.tree, i).range();
                g_min.push_back(range.g_min);
                g_max.push_back(range.g_max);
                m.push_back(range.m);
            }
            j["g_min"] = g_min;
            j["g_max"] = g_max;
            j["m"] = m;
            out << j.dump() << '\n';
        } else {
            out << serialize_tuples(doc.tree, result) << '\n';
        }
    }
    std::cout << out.str();
    return exit_ok;
}

int cmd_solve(const RunConfig& cfg) {
    if (cfg.format != "newick" && cfg.format != "json") {
        fail(ErrorCode::InvalidArgument, "format must be 'newick' or 'json'");
    }
    return cfg.tuple ? cmd_solve_tuple(cfg) : cmd_solve_scalar(cfg);
}

Interval broken_merge(Interval a, Interval b) {
    // hull instead of intersection-or-gap
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

int cmd_check(const RunConfig& cfg) {
    CheckOptions options;
    options.cost = CostFunction::parse(cfg.cost);
    options.oracle = oracle_options();
    if (cfg.fault == "broken-merge") {
        options.merge = broken_merge;
    } else if (!cfg.fault.empty()) {
        fail(ErrorCode::InvalidArgument, "unknown fault '" + cfg.fault + "'");
    }

    std::vector<Instance> instances;
    if (cfg.gen_n > 0) {
        Rng rng(cfg.seed);
        TreeShape shape;
        shape.arity = parse_arity(cfg.arity);
        shape.max_arity = cfg.max_arity;
        for (std::size_t k = 0; k < cfg.count; ++k) {
            shape.leaves = static_cast<std::size_t>(
                rng.uniform(std::min<std::int64_t>(2, static_cast<std::int64_t>(cfg.gen_n)),
                            static_cast<std::int64_t>(cfg.gen_n)));
            instances.push_back(random_instance(rng, shape, cfg.gen_min, cfg.gen_max));
        }
    } else {
        for (const auto& text : trees_of(cfg)) {
            auto doc = parse_newick(text, cfg.input);
            instances.push_back(Instance{std::move(doc.tree), std::move(doc.leaf_labels)});
        }
    }

    const CheckReport report = run_check(instances, options);
    std::cout << report.to_text();
    return report.all_agree() ? exit_ok : exit_disagreement;
}

int cmd_gen(const RunConfig& cfg) {
    if (cfg.gen_n == 0) {
        fail(ErrorCode::InvalidArgument, "--n must be at least 1");
    }
    if (cfg.gen_min > cfg.gen_max) {
        fail(ErrorCode::InvalidArgument, "--min-label exceeds --max-label");
    }
    Rng rng(cfg.seed);
    TreeShape shape;
    shape.leaves = cfg.gen_n;
    shape.arity = parse_arity(cfg.arity);
    shape.max_arity = cfg.max_arity;
    std::ostringstream out;
    for (std::size_t k = 0; k < cfg.count; ++k) {
        Instance inst = random_instance(rng, shape, cfg.gen_min, cfg.gen_max);
        out << serialize_leaves(inst.tree, inst.leaf_labels) << '\n';
    }
    std::cout << out.str();
    return exit_ok;
}

int cmd_bench(const RunConfig& cfg) {
    std::vector<Algorithm> algorithms;
    std::stringstream names(cfg.algorithms);
    for (std::string name; std::getline(names, name, ',');) {
        Algorithm a = parse_algorithm(name);
        if (a == Algorithm::automatic) {
            fail(ErrorCode::InvalidArgument, "bench needs concrete algorithms");
        }
        algorithms.push_back(a);
    }
    if (cfg.reps < 5) {
        fail(ErrorCode::InvalidArgument, "bench needs at least 5 repetitions");
    }
    for (Algorithm a : algorithms) {
        if (a != Algorithm::oracle) {
            continue;
        }
        OracleOptions budget = oracle_options();
        for (std::size_t nodes : cfg.nodes) {
            for (Label m : cfg.m_grid) {
                Instance inst = bench_instance(cfg.seed, nodes, m);
                if (oracle_evaluations(inst.tree, inst.leaf_labels) > budget.budget) {
                    fail(ErrorCode::BudgetExceeded, "oracle grid point N=" + std::to_string(nodes) +
                                                        " m=" + std::to_string(m) +
                                                        " exceeds the budget");
                }
            }
        }
    }
    auto rows = run_bench(algorithms, cfg.nodes, cfg.m_grid, cfg.reps, cfg.seed);
    std::cout << bench_csv(rows);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-cost integer labeling of tree nodes"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* solve_cmd = app.add_subcommand("solve", "Label the internal nodes of each input tree");
    solve_cmd->add_option("input", cfg.input, "Newick file, '-' for stdin");
    solve_cmd->add_option("--algorithm", cfg.algorithm, "dp | interval | oracle | auto")
        ->check(CLI::IsMember({"dp", "interval", "oracle", "auto"}));
    solve_cmd->add_option("--cost", cfg.cost, "manhattan | power:<λ> | table:<c0,c1,...>");
    solve_cmd->add_option("--tie", cfg.tie, "lowest | highest | midpoint")
        ->check(CLI::IsMember({"lowest", "highest", "midpoint"}));
    solve_cmd->add_flag("--tuple", cfg.tuple, "Leaf names are '|'-separated k-tuples");
    solve_cmd->add_option("--format", cfg.format, "newick | json")
        ->check(CLI::IsMember({"newick", "json"}));
    solve_cmd->add_option("--dump-table", cfg.dump_table, "Write the DP cost table as CSV");
    solve_cmd->add_option("--dump-intervals", cfg.dump_intervals, "Write node intervals as CSV");

    auto* check_cmd = app.add_subcommand("check", "Compare dp, interval and oracle costs");
    check_cmd->add_option("input", cfg.input, "Newick file, '-' for stdin");
    check_cmd->add_option("--cost", cfg.cost, "Cost spec");
    check_cmd->add_option("--gen-n", cfg.gen_n, "Generate instances with up to this many leaves");
    check_cmd->add_option("--gen-min", cfg.gen_min, "Smallest generated leaf label");
    check_cmd->add_option("--gen-max", cfg.gen_max, "Largest generated leaf label");
    check_cmd->add_option("--count", cfg.count, "Number of generated instances");
    check_cmd->add_option("--arity", cfg.arity, "binary | random");
    check_cmd->add_option("--max-arity", cfg.max_arity, "Largest arity for --arity random");
    check_cmd->add_option("--seed", cfg.seed, "Generator seed");
    check_cmd->add_option("--inject-fault", cfg.fault, "Harness self-test: broken-merge")
        ->group("");

    auto* gen_cmd = app.add_subcommand("gen", "Write random labeled trees as Newick");
    gen_cmd->add_option("--n", cfg.gen_n, "Leaves per tree")->required();
    gen_cmd->add_option("--min-label", cfg.gen_min, "Smallest leaf label");
    gen_cmd->add_option("--max-label", cfg.gen_max, "Largest leaf label");
    gen_cmd->add_option("--arity", cfg.arity, "binary | random");
    gen_cmd->add_option("--max-arity", cfg.max_arity, "Largest arity for --arity random");
    gen_cmd->add_option("--count", cfg.count, "Number of trees");
    gen_cmd->add_option("--seed", cfg.seed, "Generator seed")->required();

    auto* bench_cmd = app.add_subcommand("bench", "Time solvers over an (N, m) grid, CSV output");
    bench_cmd->add_option("--algorithms", cfg.algorithms, "Comma-separated: dp,interval,oracle");
    bench_cmd->add_option("--nodes", cfg.nodes, "Node counts")->delimiter(',')->required();
    bench_cmd->add_option("--m", cfg.m_grid, "Label range sizes")->delimiter(',')->required();
    bench_cmd->add_option("--reps", cfg.reps, "Timed repetitions per point (>= 5)");
    bench_cmd->add_option("--seed", cfg.seed, "Instance seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error:Usage:" << one_line(e.what()) << '\n';
        return exit_input;
    }

    try {
        if (solve_cmd->parsed()) {
            return cmd_solve(cfg);
        }
        if (check_cmd->parsed()) {
            return cmd_check(cfg);
        }
        if (gen_cmd->parsed()) {
            return cmd_gen(cfg);
        }
        return cmd_bench(cfg);
    } catch (const Error& e) {
        std::cerr << "error:" << error_code_name(e.code()) << ':' << one_line(e.what()) << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error:Internal:" << one_line(e.what()) << '\n';
        return exit_input;
    }
}
