#pragma once

#include "treelabel/cost.hpp"
#include "treelabel/generate.hpp"
#include "treelabel/interval_solver.hpp"
#include "treelabel/oracle.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace treelabel {

struct CheckOptions {
    CostFunction cost = CostFunction::manhattan();
    OracleOptions oracle;
    // Swappable so the harness can be tested against a broken merge.
    MergeRule merge = merge_intervals;
};

struct InstanceCheck {
    std::size_t index = 0;
    std::string newick;
    std::size_t node_count = 0;
    Label m = 1;
    // Costs recomputed from each solver's labels; empty when not applicable.
    std::optional<Cost> dp;
    std::optional<Cost> interval;
    std::optional<Cost> oracle;
    bool agree = true;
};

struct PairTally {
    std::size_t compared = 0;
    std::size_t agreed = 0;
};

struct CheckReport {
    std::vector<InstanceCheck> instances;
    PairTally dp_oracle;
    PairTally interval_dp;
    PairTally interval_oracle;

    bool all_agree() const;
    // Failing instance with the fewest nodes, then the smallest range.
    std::optional<std::size_t> minimal_failure() const;
    std::string to_text() const;
};

// Runs dp, interval (binary trees under Manhattan cost) and the oracle (when
// within budget) on every instance and compares their costs.
CheckReport run_check(std::span<const Instance> instances, const CheckOptions& options);

} // namespace treelabel
