#pragma once

#include "treelabel/cost.hpp"
#include "treelabel/solve.hpp"
#include "treelabel/tree.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace treelabel {

using Tuple = std::vector<Label>;

// Uniform k-tuple labels on the leaves; every tuple is nondecreasing.
class TupleLeafLabeling {
public:
    // Throws TupleNotMonotone, MissingNodeLabel or InvalidArgument (wrong k).
    TupleLeafLabeling(const Tree& t, std::size_t k, std::vector<std::optional<Tuple>> by_node);

    std::size_t k() const noexcept { return k_; }
    const Tuple& label(NodeId leaf) const { return *by_node_[leaf]; }
    const std::vector<std::optional<Tuple>>& by_node() const noexcept { return by_node_; }

    // Scalar leaf labeling of coordinate i (0-based).
    LeafLabeling coordinate(const Tree& t, std::size_t i) const;

private:
    std::size_t k_;
    std::vector<std::optional<Tuple>> by_node_;
};

struct TupleLabeling {
    std::size_t k = 0;
    std::vector<Tuple> values;
    Cost total_cost = 0;
};

// Σ over edges of Σ_i θ(|π_i(v) - π_i(w)|). Throws MissingNodeLabel or
// TupleNotMonotone.
Cost tuple_cost(const Tree& t, const CostFunction& c, const TupleLabeling& full);

// Solves each coordinate as an independent scalar problem and audits that the
// stacked result is nondecreasing at every node. A failed audit throws
// TupleDecompositionNotMonotone whose message carries a Newick reproducer.
TupleLabeling solve_ktuple(const Tree& t, const TupleLeafLabeling& l, const CostFunction& c,
                           Algorithm algorithm = Algorithm::automatic,
                           TieRule tie = TieRule::lowest);

struct TupleTreeDocument {
    Tree tree;
    TupleLeafLabeling leaf_labels;
};

// Leaf names are '|'-separated nondecreasing integers, all of the same length.
TupleTreeDocument parse_newick_tuples(std::string_view text);
std::string format_tuple(const Tuple& tuple);
std::string serialize_tuples(const Tree& t, const TupleLabeling& full);

} // namespace treelabel
