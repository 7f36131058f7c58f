#pragma once

#include "treelabel/cost.hpp"
#include "treelabel/dp_solver.hpp"
#include "treelabel/tree.hpp"

#include <string>
#include <vector>

namespace treelabel {

struct Interval {
    Label lo = 0;
    Label hi = 0;

    bool contains(Label x) const { return lo <= x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Intersection when the two overlap, otherwise the gap between them.
Interval merge_intervals(Interval a, Interval b);

// Nearest point of iv to x.
inline Label clamp_to(Label x, Interval iv) { return x < iv.lo ? iv.lo : (x > iv.hi ? iv.hi : x); }

struct IntervalAssignment {
    std::vector<Interval> intervals;

    // "node,lo,hi" per line with a header.
    std::string to_csv() const;
};

using MergeRule = Interval (*)(Interval, Interval);

// Leaves get [p, p]; internal nodes the merge of their two children, in
// postorder. Throws NotBinaryTree.
IntervalAssignment bottom_up_intervals(const Tree& t, const LeafLabeling& l,
                                       MergeRule merge = merge_intervals);

// Root takes the tie-rule point of its interval, every other node the point of
// its interval nearest to its parent's label. total_cost is the Manhattan sum.
Labeling top_down_labels(const Tree& t, const IntervalAssignment& iv,
                         TieRule tie = TieRule::lowest);

// Manhattan cost only.
Labeling solve_interval(const Tree& t, const LeafLabeling& l, TieRule tie = TieRule::lowest);

} // namespace treelabel
