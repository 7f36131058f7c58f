#include "treelabel/oracle.hpp"

#include "treelabel/error.hpp"

#include <limits>

namespace treelabel {

std::uint64_t oracle_evaluations(const Tree& t, const LeafLabeling& l) {
    const auto m = static_cast<std::uint64_t>(l.range().m);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < t.internal_count(); ++k) {
        if (__builtin_mul_overflow(total, m, &total)) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return total;
}

OptimumSet brute_force_min(const Tree& t, const LeafLabeling& l, const CostFunction& c,
                           const OracleOptions& options) {
    if (l.node_count() != t.node_count()) {
        fail(ErrorCode::InvalidArgument, "leaf labeling belongs to a different tree");
    }
    const std::uint64_t evaluations = oracle_evaluations(t, l);
    if (evaluations > options.budget) {
        fail(ErrorCode::BudgetExceeded, std::to_string(l.range().m) + "^" +
                                            std::to_string(t.internal_count()) +
                                            " labelings exceed the oracle budget of " +
                                            std::to_string(options.budget));
    }
    check_cost_overflow(t, c, l.range());

    const LabelRange range = l.range();
    const auto m = static_cast<std::size_t>(range.m);
    const auto thetas = theta_table(c, range.m);

    std::vector<NodeId> internal;
    for (NodeId v : t.postorder()) {
        if (!t.is_leaf(v)) {
            internal.push_back(v);
        }
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::size_t v = 0; v < t.node_count(); ++v) {
        if (auto p = t.parent(static_cast<NodeId>(v))) {
            edges.emplace_back(*p, static_cast<NodeId>(v));
        }
    }

    std::vector<Label> values(t.node_count());
    for (NodeId leaf : t.leaves()) {
        values[leaf] = l.label(leaf);
    }
    for (NodeId v : internal) {
        values[v] = range.g_min;
    }

    OptimumSet out;
    out.cost = std::numeric_limits<Cost>::max();
    // seen[v][label - g_min]: label occurs at v in some optimum found so far
    std::vector<std::vector<char>> seen(t.node_count(), std::vector<char>(m, 0));

    while (true) {
        Cost total = 0;
        for (auto [p, v] : edges) {
            Label d = values[p] - values[v];
            total += thetas[static_cast<std::size_t>(d < 0 ? -d : d)];
        }
        if (total < out.cost) {
            out.cost = total;
            out.labelings.clear();
            out.truncated = false;
            for (auto& row : seen) {
                std::fill(row.begin(), row.end(), 0);
            }
        }
        if (total == out.cost) {
            if (out.labelings.size() < options.labeling_cap) {
                out.labelings.push_back(Labeling{values, total});
            } else {
                out.truncated = true;
            }
            for (std::size_t v = 0; v < values.size(); ++v) {
                seen[v][static_cast<std::size_t>(values[v] - range.g_min)] = 1;
            }
        }

        // odometer: last internal node is the fastest digit
        std::size_t digit = internal.size();
        while (digit > 0) {
            Label& x = values[internal[digit - 1]];
            if (x < range.g_max) {
                ++x;
                break;
            }
            x = range.g_min;
            --digit;
        }
        if (digit == 0) {
            break;
        }
    }

    out.node_labels.resize(t.node_count());
    for (std::size_t v = 0; v < t.node_count(); ++v) {
        for (std::size_t i = 0; i < m; ++i) {
            if (seen[v][i]) {
                out.node_labels[v].push_back(range.g_min + static_cast<Label>(i));
            }
        }
    }
    out.root_labels = out.node_labels[t.root()];
    return out;
}

std::vector<Label> enumerate_optimal(const Tree& t, const LeafLabeling& l, const CostFunction& c,
                                     NodeId node, const OracleOptions& options) {
    if (node >= t.node_count()) {
        fail(ErrorCode::InvalidArgument, "node " + std::to_string(node) + " is not in the tree");
    }
    OracleOptions lean = options;
    lean.labeling_cap = 0;
    return brute_force_min(t, l, c, lean).node_labels[node];
}

} // namespace treelabel
