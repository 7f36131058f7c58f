#include "treelabel/dp_solver.hpp"

#include "treelabel/error.hpp"

namespace treelabel {

namespace {

std::size_t pick(std::span<const std::size_t> candidates, TieRule tie) {
    switch (tie) {
    case TieRule::lowest:
        return candidates.front();
    case TieRule::highest:
        return candidates.back();
    case TieRule::midpoint:
        return candidates[(candidates.size() - 1) / 2];
    }
    return candidates.front();
}

// min_j [θ(|i - j|) + S_child(j)] by direct scan over the whole range.
ExtendedCost edge_minimum(std::span<const Cost> theta_by_diff, std::span<const ExtendedCost> child,
                          std::size_t i) {
    ExtendedCost best = ExtendedCost::infinity();
    for (std::size_t j = 0; j < child.size(); ++j) {
        std::size_t d = i > j ? i - j : j - i;
        ExtendedCost candidate = ExtendedCost(theta_by_diff[d]) + child[j];
        if (candidate < best) {
            best = candidate;
        }
    }
    return best;
}

CostTable init_table(const Tree& t, const LeafLabeling& l, const CostFunction& c) {
    if (l.node_count() != t.node_count()) {
        fail(ErrorCode::InvalidArgument, "leaf labeling belongs to a different tree");
    }
    check_cost_overflow(t, c, l.range());
    CostTable table(l.range(), t.node_count());
    for (NodeId leaf : t.leaves()) {
        auto row = table.row(leaf);
        std::fill(row.begin(), row.end(), ExtendedCost::infinity());
        row[table.index_of(l.label(leaf))] = ExtendedCost(0);
    }
    return table;
}

} // namespace

TieRule parse_tie_rule(std::string_view name) {
    if (name == "lowest") {
        return TieRule::lowest;
    }
    if (name == "highest") {
        return TieRule::highest;
    }
    if (name == "midpoint") {
        return TieRule::midpoint;
    }
    fail(ErrorCode::InvalidArgument, "unknown tie rule '" + std::string(name) + "'");
}

std::string_view tie_rule_name(TieRule rule) {
    switch (rule) {
    case TieRule::lowest: return "lowest";
    case TieRule::highest: return "highest";
    case TieRule::midpoint: return "midpoint";
    }
    return "lowest";
}

CostTable::CostTable(LabelRange range, std::size_t node_count)
    : range_(range), node_count_(node_count),
      cells_(node_count * static_cast<std::size_t>(range.m)) {}

std::span<ExtendedCost> CostTable::row(NodeId k) {
    const auto m = static_cast<std::size_t>(range_.m);
    return std::span<ExtendedCost>(cells_).subspan(k * m, m);
}

std::span<const ExtendedCost> CostTable::row(NodeId k) const {
    const auto m = static_cast<std::size_t>(range_.m);
    return std::span<const ExtendedCost>(cells_).subspan(k * m, m);
}

std::string CostTable::to_csv() const {
    std::string out = "node";
    for (Label i = range_.g_min; i <= range_.g_max; ++i) {
        out += ',' + std::to_string(i);
    }
    out += '\n';
    for (std::size_t k = 0; k < node_count_; ++k) {
        out += std::to_string(k);
        for (ExtendedCost cell : row(static_cast<NodeId>(k))) {
            out += ',';
            out += cell.is_infinite() ? std::string("inf") : std::to_string(cell.value());
        }
        out += '\n';
    }
    return out;
}

CostTable dp_up(const Tree& t, const LeafLabeling& l, const CostFunction& c) {
    CostTable table = init_table(t, l, c);
    const auto thetas = theta_table(c, l.range().m);
    for (NodeId a : t.postorder()) {
        if (t.is_leaf(a)) {
            continue;
        }
        auto row = table.row(a);
        std::fill(row.begin(), row.end(), ExtendedCost(0));
        for (NodeId b : t.children(a)) {
            auto child = table.row(b);
            for (std::size_t i = 0; i < row.size(); ++i) {
                row[i] = row[i] + edge_minimum(thetas, child, i);
            }
        }
    }
    return table;
}

CostTable dp_up_binary(const Tree& t, const LeafLabeling& l, const CostFunction& c) {
    if (!is_binary(t)) {
        fail(ErrorCode::NotBinaryTree, "two-child recurrence needs a binary tree");
    }
    CostTable table = init_table(t, l, c);
    const auto thetas = theta_table(c, l.range().m);
    for (NodeId a : t.postorder()) {
        if (t.is_leaf(a)) {
            continue;
        }
        auto left = table.row(t.children(a)[0]);
        auto right = table.row(t.children(a)[1]);
        auto row = table.row(a);
        for (std::size_t i = 0; i < row.size(); ++i) {
            row[i] = edge_minimum(thetas, left, i) + edge_minimum(thetas, right, i);
        }
    }
    return table;
}

RootOptimum min_total(const CostTable& ct, NodeId root) {
    auto row = ct.row(root);
    ExtendedCost best = ExtendedCost::infinity();
    for (ExtendedCost cell : row) {
        if (cell < best) {
            best = cell;
        }
    }
    RootOptimum out;
    out.cost = best.value();
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == best) {
            out.argmin_labels.push_back(ct.label_of(i));
        }
    }
    return out;
}

Labeling dp_down(const Tree& t, const CostTable& ct, const CostFunction& c, TieRule tie) {
    const auto thetas = theta_table(c, ct.range().m);
    const auto m = static_cast<std::size_t>(ct.range().m);
    std::vector<std::size_t> chosen(t.node_count());
    std::vector<std::size_t> candidates;
    candidates.reserve(m);

    RootOptimum root = min_total(ct, t.root());
    for (Label label : root.argmin_labels) {
        candidates.push_back(ct.index_of(label));
    }
    chosen[t.root()] = pick(candidates, tie);

    for (NodeId v : t.preorder()) {
        if (v == t.root()) {
            continue;
        }
        const std::size_t i = chosen[*t.parent(v)];
        auto row = ct.row(v);
        ExtendedCost best = ExtendedCost::infinity();
        candidates.clear();
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t d = i > j ? i - j : j - i;
            ExtendedCost candidate = ExtendedCost(thetas[d]) + row[j];
            if (candidate < best) {
                best = candidate;
                candidates.clear();
            }
            if (candidate == best) {
                candidates.push_back(j);
            }
        }
        chosen[v] = pick(candidates, tie);
    }

    Labeling out;
    out.values.resize(t.node_count());
    for (std::size_t v = 0; v < chosen.size(); ++v) {
        out.values[v] = ct.label_of(chosen[v]);
    }
    out.total_cost = root.cost;
    return out;
}

Labeling solve_dp(const Tree& t, const LeafLabeling& l, const CostFunction& c, TieRule tie) {
    return dp_down(t, dp_up(t, l, c), c, tie);
}

} // namespace treelabel
