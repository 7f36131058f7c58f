#include "treelabel/dp_solver.hpp"
#include "treelabel/error.hpp"
#include "treelabel/generate.hpp"
#include "treelabel/interval_solver.hpp"
#include "treelabel/newick.hpp"
#include "treelabel/oracle.hpp"

#include <doctest.h>

using namespace treelabel;

TEST_CASE("merge rule") {
    CHECK(merge_intervals({2, 6}, {4, 9}) == Interval{4, 6});
    CHECK(merge_intervals({1, 5}, {9, 9}) == Interval{5, 9});
    CHECK(merge_intervals({3, 3}, {3, 3}) == Interval{3, 3});
    CHECK(merge_intervals({7, 9}, {1, 2}) == Interval{2, 7});
    // touching boundaries meet in a single point
    CHECK(merge_intervals({1, 4}, {4, 8}) == Interval{4, 4});
    CHECK(merge_intervals({4, 8}, {1, 4}) == Interval{4, 4});
    CHECK(merge_intervals({1, 10}, {3, 4}) == Interval{3, 4});
}

TEST_CASE("merge rule is symmetric and lies inside the hull") {
    Rng rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        Label a = rng.uniform(-10, 10), b = rng.uniform(-10, 10);
        Label c = rng.uniform(-10, 10), d = rng.uniform(-10, 10);
        Interval x{std::min(a, b), std::max(a, b)}, y{std::min(c, d), std::max(c, d)};
        Interval merged = merge_intervals(x, y);
        CHECK(merged == merge_intervals(y, x));
        CHECK(merged.lo <= merged.hi);
        CHECK(merged.lo >= std::min(x.lo, y.lo));
        CHECK(merged.hi <= std::max(x.hi, y.hi));
        // minimizers of dist(i, x) + dist(i, y)
        auto dist = [](Label i, Interval iv) { return i < iv.lo ? iv.lo - i : (i > iv.hi ? i - iv.hi : 0); };
        Cost best = std::numeric_limits<Cost>::max();
        for (Label i = -10; i <= 10; ++i) {
            best = std::min(best, dist(i, x) + dist(i, y));
        }
        for (Label i = -10; i <= 10; ++i) {
            CHECK((dist(i, x) + dist(i, y) == best) == merged.contains(i));
        }
    }
}

TEST_CASE("bottom-up intervals") {
    auto cherry = parse_newick("(2,7);");
    CHECK(bottom_up_intervals(cherry.tree, cherry.leaf_labels).intervals[0] == Interval{2, 7});

    auto five = parse_newick("((1,5),9);");
    auto iv = bottom_up_intervals(five.tree, five.leaf_labels);
    CHECK(iv.intervals[1] == Interval{1, 5});
    CHECK(iv.intervals[0] == Interval{5, 9});
    CHECK(iv.intervals[4] == Interval{9, 9});
    CHECK(iv.to_csv() == "node,lo,hi\n0,5,9\n1,1,5\n2,1,1\n3,5,5\n4,9,9\n");

    auto equal = parse_newick("(4,4);");
    CHECK(bottom_up_intervals(equal.tree, equal.leaf_labels).intervals[0] == Interval{4, 4});

    auto single = parse_newick("6;");
    CHECK(solve_interval(single.tree, single.leaf_labels).values == std::vector<Label>{6});
}

TEST_CASE("non-binary trees are rejected") {
    for (const char* text : {"(1,3,8);", "((1,2,3),4);"}) {
        auto doc = parse_newick(text);
        try {
            solve_interval(doc.tree, doc.leaf_labels);
            FAIL("non-binary tree accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotBinaryTree);
        }
    }
}

TEST_CASE("top-down labels") {
    auto cherry = parse_newick("(2,7);");
    Labeling c = solve_interval(cherry.tree, cherry.leaf_labels);
    CHECK(c.values == std::vector<Label>{2, 2, 7});
    CHECK(c.total_cost == 5);
    CHECK(solve_interval(cherry.tree, cherry.leaf_labels, TieRule::highest).values[0] == 7);
    CHECK(solve_interval(cherry.tree, cherry.leaf_labels, TieRule::midpoint).values[0] == 4);

    auto five = parse_newick("((1,5),9);");
    Labeling f = solve_interval(five.tree, five.leaf_labels);
    CHECK(f.values == std::vector<Label>{5, 5, 1, 5, 9});
    CHECK(f.total_cost == 8);

    auto equal = parse_newick("((4,4),4);");
    Labeling e = solve_interval(equal.tree, equal.leaf_labels);
    CHECK(e.total_cost == 0);
    CHECK(e.values == std::vector<Label>{4, 4, 4, 4, 4});
}

TEST_CASE("a child's interval can be wider than its optimal labels") {
    // Inner node of ((1,5),9): every label in [1,5] is optimal for its own
    // subtree, but the parent edge toward 9 leaves only 5 globally optimal.
    auto five = parse_newick("((1,5),9);");
    auto iv = bottom_up_intervals(five.tree, five.leaf_labels);
    CHECK(iv.intervals[1] == Interval{1, 5});
    CHECK(enumerate_optimal(five.tree, five.leaf_labels, CostFunction::manhattan(), 1) ==
          std::vector<Label>{5});
    CHECK(enumerate_optimal(five.tree, five.leaf_labels, CostFunction::manhattan(), 0) ==
          std::vector<Label>{5, 6, 7, 8, 9});
}

TEST_CASE("interval solver against dp and oracle") {
    Rng rng(99);
    const CostFunction manhattan = CostFunction::manhattan();
    for (int trial = 0; trial < 500; ++trial) {
        TreeShape shape;
        shape.leaves = static_cast<std::size_t>(rng.uniform(1, 8));
        Instance inst = random_instance(rng, shape, 0, 10);
        const Tree& t = inst.tree;
        const LeafLabeling& l = inst.leaf_labels;
        auto iv = bottom_up_intervals(t, l);
        Labeling out = top_down_labels(t, iv);
        CHECK(out.total_cost == eval_total(t, manhattan, out));
        CostTable ct = dp_up(t, l, manhattan);
        CHECK(out.total_cost == min_total(ct, t.root()).cost);

        for (std::size_t v = 0; v < t.node_count(); ++v) {
            const Interval node_iv = iv.intervals[v];
            CHECK(node_iv.contains(out.values[v]));
            CHECK(node_iv.lo >= l.range().g_min);
            CHECK(node_iv.hi <= l.range().g_max);
            // the interval is exactly the argmin of the node's subtree cost row
            auto row = ct.row(static_cast<NodeId>(v));
            ExtendedCost best = *std::min_element(row.begin(), row.end());
            for (std::size_t i = 0; i < row.size(); ++i) {
                CHECK((row[i] == best) == node_iv.contains(ct.label_of(i)));
            }
        }

        if (oracle_evaluations(t, l) <= 1'000'000) {
            OptimumSet optimum = brute_force_min(t, l, manhattan);
            CHECK(out.total_cost == optimum.cost);
            // the root interval is exactly the set of optimal root labels
            std::vector<Label> root_iv;
            for (Label x = iv.intervals[t.root()].lo; x <= iv.intervals[t.root()].hi; ++x) {
                root_iv.push_back(x);
            }
            CHECK(optimum.root_labels == root_iv);
            for (std::size_t v = 0; v < t.node_count(); ++v) {
                const auto& labels = optimum.node_labels[v];
                CHECK(std::binary_search(labels.begin(), labels.end(), out.values[v]));
            }
        }

        for (Label shift : {Label{-5}, Label{17}}) {
            Labeling moved = solve_interval(t, l.shifted(shift));
            CHECK(moved.total_cost == out.total_cost);
            for (std::size_t v = 0; v < t.node_count(); ++v) {
                CHECK(moved.values[v] == out.values[v] + shift);
            }
        }
        CHECK(solve_interval(t, l.reflected()).total_cost == out.total_cost);
    }
}
