#pragma once

#include "treelabel/cost.hpp"
#include "treelabel/tree.hpp"

#include <span>
#include <string>
#include <vector>

namespace treelabel {

// How a solver picks among equally optimal labels.
enum class TieRule { lowest, highest, midpoint };

TieRule parse_tie_rule(std::string_view name);
std::string_view tie_rule_name(TieRule rule);

// S_k(i): the minimal cost of the subtree under node k given k is labeled i,
// for i in [g_min, g_max]. Rows are stored contiguously, one per node.
class CostTable {
public:
    CostTable(LabelRange range, std::size_t node_count);

    const LabelRange& range() const noexcept { return range_; }
    std::size_t node_count() const noexcept { return node_count_; }

    std::span<ExtendedCost> row(NodeId k);
    std::span<const ExtendedCost> row(NodeId k) const;
    ExtendedCost at(NodeId k, Label label) const { return row(k)[index_of(label)]; }

    std::size_t index_of(Label label) const {
        return static_cast<std::size_t>(label - range_.g_min);
    }
    Label label_of(std::size_t index) const { return range_.g_min + static_cast<Label>(index); }

    // One line per node: "node,<S(g_min)>,...,<S(g_max)>", "inf" for infinity,
    // preceded by a header "node,<g_min>,...,<g_max>".
    std::string to_csv() const;

private:
    LabelRange range_;
    std::size_t node_count_;
    std::vector<ExtendedCost> cells_;
};

// Postorder table fill for arbitrary arity:
//   S_a(i) = sum over children b of min_j [θ(|i - j|) + S_b(j)].
// Leaves get 0 at their label and infinity elsewhere. Throws CostOverflowRisk
// or DifferenceOutOfRange from the entry guard.
CostTable dp_up(const Tree& t, const LeafLabeling& l, const CostFunction& c);

// Two-child specialization, written as the explicit two-term sum. Throws
// NotBinaryTree. Produces the same table as dp_up on binary trees.
CostTable dp_up_binary(const Tree& t, const LeafLabeling& l, const CostFunction& c);

struct RootOptimum {
    Cost cost = 0;
    // All labels attaining cost at the root, ascending.
    std::vector<Label> argmin_labels;
};

RootOptimum min_total(const CostTable& ct, NodeId root);

// Preorder reconstruction: root takes the tie-rule choice among the root
// argmin; each child of a node labeled i takes the tie-rule choice among the
// j minimizing θ(|i - j|) + S_child(j).
Labeling dp_down(const Tree& t, const CostTable& ct, const CostFunction& c,
                 TieRule tie = TieRule::lowest);

Labeling solve_dp(const Tree& t, const LeafLabeling& l, const CostFunction& c,
                  TieRule tie = TieRule::lowest);

} // namespace treelabel
