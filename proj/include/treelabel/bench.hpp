#pragma once

#include "treelabel/generate.hpp"
#include "treelabel/solve.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace treelabel {

struct BenchRow {
    Algorithm algorithm = Algorithm::dp;
    std::size_t node_count = 0;
    Label m = 1;
    std::size_t repetitions = 0;
    std::int64_t median_ns = 0;
};

// Binary tree with about `nodes` nodes (2n - 1 for n = max(1, (nodes + 1) / 2)
// leaves) and leaf labels spanning exactly [0, m - 1]. Depends only on
// (seed, nodes, m), so every algorithm sees the same instance.
Instance bench_instance(std::uint64_t seed, std::size_t nodes, Label m);

// One untimed warmup, then the median of `repetitions` timed solves under
// Manhattan cost.
BenchRow bench_point(Algorithm algorithm, const Instance& instance, std::size_t repetitions);

std::vector<BenchRow> run_bench(std::span<const Algorithm> algorithms,
                                std::span<const std::size_t> node_grid,
                                std::span<const Label> m_grid, std::size_t repetitions,
                                std::uint64_t seed);

std::string bench_csv(std::span<const BenchRow> rows);

} // namespace treelabel
