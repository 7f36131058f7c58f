#include "treelabel/error.hpp"
#include "treelabel/generate.hpp"
#include "treelabel/newick.hpp"
#include "treelabel/oracle.hpp"

#include <doctest.h>

using namespace treelabel;

TEST_CASE("worked instances") {
    auto cherry = parse_newick("(2,7);");
    OptimumSet c = brute_force_min(cherry.tree, cherry.leaf_labels, CostFunction::manhattan());
    CHECK(c.cost == 5);
    CHECK(c.root_labels == std::vector<Label>{2, 3, 4, 5, 6, 7});
    CHECK(c.labelings.size() == 6);
    CHECK_FALSE(c.truncated);

    auto five = parse_newick("((1,5),9);");
    OptimumSet m = brute_force_min(five.tree, five.leaf_labels, CostFunction::manhattan());
    CHECK(m.cost == 8);
    CHECK(m.root_labels == std::vector<Label>{5, 6, 7, 8, 9});
    // enumeration order: inner node (first in postorder) is the major digit
    REQUIRE(m.labelings.size() == 5);
    CHECK(m.labelings.front().values == std::vector<Label>{5, 5, 1, 5, 9});
    CHECK(m.labelings.back().values == std::vector<Label>{9, 5, 1, 5, 9});

    OptimumSet s = brute_force_min(five.tree, five.leaf_labels, CostFunction::power(2));
    CHECK(s.cost == 23);
    REQUIRE(s.labelings.size() == 2);
    CHECK(s.labelings[0].values == std::vector<Label>{6, 4, 1, 5, 9});
    CHECK(s.labelings[1].values == std::vector<Label>{7, 4, 1, 5, 9});

    auto single = parse_newick("3;");
    OptimumSet one = brute_force_min(single.tree, single.leaf_labels, CostFunction::manhattan());
    CHECK(one.cost == 0);
    CHECK(one.root_labels == std::vector<Label>{3});

    auto equal = parse_newick("(4,4);");
    CHECK(enumerate_optimal(equal.tree, equal.leaf_labels, CostFunction::manhattan(), 0) ==
          std::vector<Label>{4});
    CHECK(enumerate_optimal(cherry.tree, cherry.leaf_labels, CostFunction::manhattan(), 0) ==
          std::vector<Label>{2, 3, 4, 5, 6, 7});
    CHECK(enumerate_optimal(five.tree, five.leaf_labels, CostFunction::manhattan(), 0) ==
          std::vector<Label>{5, 6, 7, 8, 9});
    CHECK(enumerate_optimal(five.tree, five.leaf_labels, CostFunction::manhattan(), 2) ==
          std::vector<Label>{1});
}

TEST_CASE("hand-written scan agrees on ((1,5),9)") {
    auto five = parse_newick("((1,5),9);");
    for (const auto& c : {CostFunction::manhattan(), CostFunction::power(2), CostFunction::power(3)}) {
        Cost best = std::numeric_limits<Cost>::max();
        for (Label inner = 1; inner <= 9; ++inner) {
            for (Label root = 1; root <= 9; ++root) {
                Cost total = c(std::abs(inner - 1)) + c(std::abs(inner - 5)) +
                             c(std::abs(root - inner)) + c(std::abs(root - 9));
                best = std::min(best, total);
            }
        }
        CHECK(brute_force_min(five.tree, five.leaf_labels, c).cost == best);
    }
}

TEST_CASE("budget and truncation") {
    auto doc = parse_newick("(((0,20),(3,4)),((5,6),(7,8)));");
    OracleOptions tight;
    tight.budget = 1000;
    try {
        brute_force_min(doc.tree, doc.leaf_labels, CostFunction::manhattan(), tight);
        FAIL("budget ignored");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
    CHECK(oracle_evaluations(doc.tree, doc.leaf_labels) == 1801088541);  // 21^7

    auto cherry = parse_newick("(0,9);");
    OracleOptions capped;
    capped.labeling_cap = 3;
    OptimumSet s = brute_force_min(cherry.tree, cherry.leaf_labels, CostFunction::manhattan(), capped);
    CHECK(s.labelings.size() == 3);
    CHECK(s.truncated);
    CHECK(s.root_labels.size() == 10);
}

TEST_CASE("oracle self-consistency and Lemma 2") {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        TreeShape shape;
        shape.leaves = static_cast<std::size_t>(rng.uniform(2, 5));
        shape.arity = trial % 3 == 0 ? ArityProfile::random : ArityProfile::binary;
        Instance inst = random_instance(rng, shape, 0, 8);
        const Tree& t = inst.tree;
        const auto c = trial % 2 ? CostFunction::manhattan() : CostFunction::power(2);
        OptimumSet opt = brute_force_min(t, inst.leaf_labels, c);
        REQUIRE_FALSE(opt.labelings.empty());
        for (const auto& labeling : opt.labelings) {
            CHECK(eval_total(t, c, labeling) == opt.cost);
            CHECK(labeling.total_cost == opt.cost);
            if (c.kind() == CostFunction::Kind::manhattan && is_binary(t)) {
                // root lies between its two children within the same optimum
                auto kids = t.children(t.root());
                Label a = labeling.values[kids[0]], b = labeling.values[kids[1]];
                Label r = labeling.values[t.root()];
                CHECK(std::min(a, b) <= r);
                CHECK(r <= std::max(a, b));
            }
        }
    }
}

TEST_CASE("Lemma 3: cherry root labels fill the leaf interval") {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Label a = rng.uniform(-10, 10), b = rng.uniform(-10, 10);
        auto doc = parse_newick("(" + std::to_string(a) + "," + std::to_string(b) + ");");
        std::vector<Label> expected;
        for (Label x = std::min(a, b); x <= std::max(a, b); ++x) {
            expected.push_back(x);
        }
        CHECK(enumerate_optimal(doc.tree, doc.leaf_labels, CostFunction::manhattan(), 0) == expected);
    }
}
