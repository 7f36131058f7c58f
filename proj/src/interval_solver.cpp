#include "treelabel/interval_solver.hpp"

#include "treelabel/error.hpp"

#include <algorithm>

namespace treelabel {

Interval merge_intervals(Interval a, Interval b) {
    if (std::max(a.lo, b.lo) <= std::min(a.hi, b.hi)) {
        return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    }
    if (a.hi < b.lo) {
        return {a.hi, b.lo};
    }
    return {b.hi, a.lo};
}

std::string IntervalAssignment::to_csv() const {
    std::string out = "node,lo,hi\n";
    for (std::size_t v = 0; v < intervals.size(); ++v) {
        out += std::to_string(v) + ',' + std::to_string(intervals[v].lo) + ',' +
               std::to_string(intervals[v].hi) + '\n';
    }
    return out;
}

IntervalAssignment bottom_up_intervals(const Tree& t, const LeafLabeling& l, MergeRule merge) {
    if (!is_binary(t)) {
        fail(ErrorCode::NotBinaryTree, "the interval solver needs every internal node to have two children");
    }
    if (l.node_count() != t.node_count()) {
        fail(ErrorCode::InvalidArgument, "leaf labeling belongs to a different tree");
    }
    check_cost_overflow(t, CostFunction::manhattan(), l.range());
    IntervalAssignment out;
    out.intervals.resize(t.node_count());
    for (NodeId v : t.postorder()) {
        if (t.is_leaf(v)) {
            Label p = l.label(v);
            out.intervals[v] = {p, p};
        } else {
            auto kids = t.children(v);
            out.intervals[v] = merge(out.intervals[kids[0]], out.intervals[kids[1]]);
        }
    }
    return out;
}

Labeling top_down_labels(const Tree& t, const IntervalAssignment& iv, TieRule tie) {
    if (iv.intervals.size() != t.node_count()) {
        fail(ErrorCode::InvalidArgument, "interval assignment belongs to a different tree");
    }
    Labeling out;
    out.values.resize(t.node_count());
    const Interval root = iv.intervals[t.root()];
    switch (tie) {
    case TieRule::lowest:
        out.values[t.root()] = root.lo;
        break;
    case TieRule::highest:
        out.values[t.root()] = root.hi;
        break;
    case TieRule::midpoint:
        out.values[t.root()] = root.lo + (root.hi - root.lo) / 2;
        break;
    }
    Cost total = 0;
    for (NodeId v : t.preorder()) {
        if (v == t.root()) {
            continue;
        }
        const Label parent_label = out.values[*t.parent(v)];
        const Label label = clamp_to(parent_label, iv.intervals[v]);
        out.values[v] = label;
        total += parent_label > label ? parent_label - label : label - parent_label;
    }
    out.total_cost = total;
    return out;
}

Labeling solve_interval(const Tree& t, const LeafLabeling& l, TieRule tie) {
    return top_down_labels(t, bottom_up_intervals(t, l), tie);
}

} // namespace treelabel
