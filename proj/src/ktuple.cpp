#include "treelabel/ktuple.hpp"

#include "treelabel/error.hpp"
#include "treelabel/newick.hpp"

#include <charconv>

namespace treelabel {

namespace {

void require_monotone(const Tuple& tuple, std::size_t node) {
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        if (tuple[i - 1] > tuple[i]) {
            fail(ErrorCode::TupleNotMonotone,
                 "tuple " + format_tuple(tuple) + " at node " + std::to_string(node) +
                     " is not nondecreasing");
        }
    }
}

std::optional<Tuple> parse_tuple(std::string_view name) {
    Tuple out;
    while (true) {
        auto bar = name.find('|');
        std::string_view part = name.substr(0, bar);
        if (!part.empty() && part.front() == '+') {
            part.remove_prefix(1);
        }
        Label value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
            return std::nullopt;
        }
        out.push_back(value);
        if (bar == std::string_view::npos) {
            return out;
        }
        name.remove_prefix(bar + 1);
    }
}

} // namespace

TupleLeafLabeling::TupleLeafLabeling(const Tree& t, std::size_t k,
                                     std::vector<std::optional<Tuple>> by_node)
    : k_(k), by_node_(std::move(by_node)) {
    if (k_ == 0) {
        fail(ErrorCode::InvalidArgument, "tuple size k must be positive");
    }
    if (by_node_.size() != t.node_count()) {
        fail(ErrorCode::InvalidArgument, "tuple labeling does not match the tree size");
    }
    for (std::size_t v = 0; v < by_node_.size(); ++v) {
        const bool leaf = t.is_leaf(static_cast<NodeId>(v));
        if (leaf && !by_node_[v]) {
            fail(ErrorCode::MissingNodeLabel, "leaf " + std::to_string(v) + " has no tuple");
        }
        if (!leaf && by_node_[v]) {
            fail(ErrorCode::InvalidArgument,
                 "internal node " + std::to_string(v) + " carries a leaf tuple");
        }
        if (leaf) {
            if (by_node_[v]->size() != k_) {
                fail(ErrorCode::InvalidArgument, "leaf " + std::to_string(v) + " has a " +
                                                     std::to_string(by_node_[v]->size()) +
                                                     "-tuple, expected " + std::to_string(k_));
            }
            require_monotone(*by_node_[v], v);
        }
    }
}

LeafLabeling TupleLeafLabeling::coordinate(const Tree& t, std::size_t i) const {
    std::vector<std::optional<Label>> labels(by_node_.size());
    for (std::size_t v = 0; v < by_node_.size(); ++v) {
        if (by_node_[v]) {
            labels[v] = (*by_node_[v])[i];
        }
    }
    return LeafLabeling(t, std::move(labels));
}

Cost tuple_cost(const Tree& t, const CostFunction& c, const TupleLabeling& full) {
    if (full.values.size() != t.node_count()) {
        fail(ErrorCode::MissingNodeLabel, "tuple labeling does not cover the tree");
    }
    for (std::size_t v = 0; v < full.values.size(); ++v) {
        if (full.values[v].size() != full.k) {
            fail(ErrorCode::MissingNodeLabel, "node " + std::to_string(v) + " lacks a " +
                                                  std::to_string(full.k) + "-tuple");
        }
        require_monotone(full.values[v], v);
    }
    Cost total = 0;
    std::vector<Label> column(t.node_count());
    for (std::size_t i = 0; i < full.k; ++i) {
        for (std::size_t v = 0; v < column.size(); ++v) {
            column[v] = full.values[v][i];
        }
        if (__builtin_add_overflow(total, eval_total(t, c, column), &total)) {
            fail(ErrorCode::CostOverflowRisk, "tuple cost overflows");
        }
    }
    return total;
}

TupleLabeling solve_ktuple(const Tree& t, const TupleLeafLabeling& l, const CostFunction& c,
                           Algorithm algorithm, TieRule tie) {
    if (algorithm == Algorithm::interval && !is_binary(t)) {
        fail(ErrorCode::NotBinaryTree, "the interval algorithm needs a binary tree");
    }
    TupleLabeling out;
    out.k = l.k();
    out.values.assign(t.node_count(), Tuple(l.k()));
    Cost scalar_sum = 0;
    for (std::size_t i = 0; i < l.k(); ++i) {
        LeafLabeling coord = l.coordinate(t, i);
        check_cost_overflow(t, c, coord.range(), static_cast<Cost>(l.k()));
        Labeling solved = solve(t, coord, c, algorithm, tie);
        for (std::size_t v = 0; v < solved.values.size(); ++v) {
            out.values[v][i] = solved.values[v];
        }
        scalar_sum += solved.total_cost;
    }

    for (std::size_t v = 0; v < out.values.size(); ++v) {
        const Tuple& tuple = out.values[v];
        for (std::size_t i = 1; i < tuple.size(); ++i) {
            if (tuple[i - 1] > tuple[i]) {
                std::vector<std::string> names(t.node_count());
                for (NodeId leaf : t.leaves()) {
                    names[leaf] = format_tuple(l.label(leaf));
                }
                fail(ErrorCode::TupleDecompositionNotMonotone,
                     "coordinate solutions give node " + std::to_string(v) + " the tuple " +
                         format_tuple(tuple) + "; reproducer: " + serialize_newick(t, names));
            }
        }
    }
    out.total_cost = scalar_sum;
    return out;
}

TupleTreeDocument parse_newick_tuples(std::string_view text) {
    NewickTopology topo = parse_newick_topology(text);
    std::vector<std::optional<Tuple>> tuples(topo.tree.node_count());
    std::size_t k = 0;
    for (NodeId leaf : topo.tree.leaves()) {
        auto tuple = parse_tuple(topo.names[leaf]);
        if (!tuple) {
            fail(ErrorCode::NonIntegerLeafName,
                 "leaf name '" + topo.names[leaf] + "' is not a '|'-separated integer tuple");
        }
        if (k == 0) {
            k = tuple->size();
        }
        tuples[leaf] = std::move(*tuple);
    }
    TupleLeafLabeling labels(topo.tree, k, std::move(tuples));
    return TupleTreeDocument{std::move(topo.tree), std::move(labels)};
}

std::string format_tuple(const Tuple& tuple) {
    std::string out;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) {
            out += '|';
        }
        out += std::to_string(tuple[i]);
    }
    return out;
}

std::string serialize_tuples(const Tree& t, const TupleLabeling& full) {
    if (full.values.size() != t.node_count()) {
        fail(ErrorCode::MissingNodeLabel, "tuple labeling does not cover the tree");
    }
    std::vector<std::string> names(t.node_count());
    for (std::size_t v = 0; v < names.size(); ++v) {
        names[v] = format_tuple(full.values[v]);
    }
    return serialize_newick(t, names);
}

} // namespace treelabel
