#pragma once

#include "treelabel/cost.hpp"
#include "treelabel/tree.hpp"

#include <cstdint>
#include <vector>

namespace treelabel {

struct OracleOptions {
    // Maximum number of full labelings evaluated, m^(internal nodes).
    std::uint64_t budget = 10'000'000;
    // Maximum number of optimal labelings kept in OptimumSet::labelings.
    std::size_t labeling_cap = 1000;
};

struct OptimumSet {
    Cost cost = 0;
    // Optimal labelings in enumeration order, at most labeling_cap of them.
    std::vector<Labeling> labelings;
    bool truncated = false;
    // Labels of the root over all optimal labelings, ascending.
    std::vector<Label> root_labels;
    // Same for every node, indexed by NodeId.
    std::vector<std::vector<Label>> node_labels;
};

// Number of labelings brute_force_min would evaluate, saturating at UINT64_MAX.
std::uint64_t oracle_evaluations(const Tree& t, const LeafLabeling& l);

// Exhaustive scan of every assignment of internal labels in [g_min, g_max].
// Internal nodes are taken in postorder, the first one as the most significant
// digit, labels ascending. Throws BudgetExceeded.
OptimumSet brute_force_min(const Tree& t, const LeafLabeling& l, const CostFunction& c,
                           const OracleOptions& options = {});

// Labels of `node` that occur in at least one optimal labeling, ascending.
std::vector<Label> enumerate_optimal(const Tree& t, const LeafLabeling& l, const CostFunction& c,
                                     NodeId node, const OracleOptions& options = {});

} // namespace treelabel
