#include "treelabel/bench.hpp"

#include "treelabel/error.hpp"

#include <algorithm>
#include <chrono>

namespace treelabel {

Instance bench_instance(std::uint64_t seed, std::size_t nodes, Label m) {
    if (m < 1) {
        fail(ErrorCode::InvalidArgument, "m must be positive");
    }
    // splitmix-style mixing of the grid point into the seed
    std::uint64_t mixed = seed ^ (0x9e3779b97f4a7c15ULL * (nodes + 1)) ^
                          (0xbf58476d1ce4e5b9ULL * static_cast<std::uint64_t>(m));
    Rng rng(mixed);
    TreeShape shape;
    shape.leaves = std::max<std::size_t>(1, (nodes + 1) / 2);
    Tree t = random_tree(rng, shape);
    std::vector<Label> labels(t.leaf_count());
    for (auto& p : labels) {
        p = rng.uniform(0, m - 1);
    }
    labels[0] = 0;
    if (labels.size() > 1) {
        labels[1] = m - 1;
    }
    LeafLabeling l = LeafLabeling::from_leaf_order(t, labels);
    return Instance{std::move(t), std::move(l)};
}

BenchRow bench_point(Algorithm algorithm, const Instance& instance, std::size_t repetitions) {
    if (repetitions == 0) {
        fail(ErrorCode::InvalidArgument, "at least one repetition is required");
    }
    const CostFunction cost = CostFunction::manhattan();
    volatile Cost sink = solve(instance.tree, instance.leaf_labels, cost, algorithm).total_cost;
    std::vector<std::int64_t> times;
    times.reserve(repetitions);
    for (std::size_t r = 0; r < repetitions; ++r) {
        auto start = std::chrono::steady_clock::now();
        sink = solve(instance.tree, instance.leaf_labels, cost, algorithm).total_cost;
        auto stop = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    }
    (void)sink;
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    const std::int64_t median =
        times.size() % 2 ? times[mid] : (times[mid - 1] + times[mid]) / 2;
    return BenchRow{algorithm, instance.tree.node_count(), instance.leaf_labels.range().m,
                    repetitions, median};
}

std::vector<BenchRow> run_bench(std::span<const Algorithm> algorithms,
                                std::span<const std::size_t> node_grid,
                                std::span<const Label> m_grid, std::size_t repetitions,
                                std::uint64_t seed) {
    std::vector<BenchRow> rows;
    for (std::size_t nodes : node_grid) {
        for (Label m : m_grid) {
            const Instance instance = bench_instance(seed, nodes, m);
            for (Algorithm a : algorithms) {
                rows.push_back(bench_point(a, instance, repetitions));
            }
        }
    }
    return rows;
}

std::string bench_csv(std::span<const BenchRow> rows) {
    std::string out = "algorithm,N,m,repetitions,median_ns\n";
    for (const auto& r : rows) {
        out += std::string(algorithm_name(r.algorithm)) + ',' + std::to_string(r.node_count) + ',' +
               std::to_string(r.m) + ',' + std::to_string(r.repetitions) + ',' +
               std::to_string(r.median_ns) + '\n';
    }
    return out;
}

} // namespace treelabel
