#pragma once

#include "treelabel/cost.hpp"
#include "treelabel/tree.hpp"

#include <cstdint>
#include <random>

namespace treelabel {

// Seeded source with a fully specified output sequence: mt19937_64 plus
// rejection sampling, so a seed reproduces the same instances everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

enum class ArityProfile { binary, random };

struct TreeShape {
    std::size_t leaves = 2;
    ArityProfile arity = ArityProfile::binary;
    // Upper bound on children per node for ArityProfile::random.
    std::size_t max_arity = 4;
};

// Joins uniformly chosen groups of current subtrees until one remains (two at
// a time for binary, 2..max_arity otherwise). Nodes come out numbered in
// preorder, matching what parse_newick assigns.
Tree random_tree(Rng& rng, const TreeShape& shape);

struct Instance {
    Tree tree;
    LeafLabeling leaf_labels;
};

// Leaf labels uniform in [label_min, label_max].
Instance random_instance(Rng& rng, const TreeShape& shape, Label label_min, Label label_max);

// Strictly increasing table θ(0..length-1) with θ(0) = 0 and steps in [1, max_step].
CostFunction random_cost_table(Rng& rng, std::size_t length, Cost max_step = 5);

} // namespace treelabel
