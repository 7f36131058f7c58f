#pragma once

#include "treelabel/cost.hpp"
#include "treelabel/tree.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace treelabel {

// Topology plus the raw node names read from a Newick string. Nodes are
// numbered in preorder, so left-to-right children get ascending ids.
struct NewickTopology {
    Tree tree;
    std::vector<std::string> names;
};

struct LabeledTreeDocument {
    Tree tree;
    LeafLabeling leaf_labels;
    std::string source_name;
};

// Throws SyntaxError or EmptyTree. Branch lengths are dropped.
NewickTopology parse_newick_topology(std::string_view text);

// Leaf names must be decimal integers; NonIntegerLeafName otherwise.
LabeledTreeDocument parse_newick(std::string_view text, std::string source_name = {});

// Renders leaves as their labels and internal nodes named by their assigned
// label, e.g. "((1,5)5,9)5;". MissingNodeLabel when full does not cover doc.tree.
std::string serialize_labeled(const LabeledTreeDocument& doc, const Labeling& full);

// Leaves named by their labels, internal nodes unnamed: "((1,5),9);".
std::string serialize_leaves(const Tree& t, const LeafLabeling& l);

// Generic writer: one name per node.
std::string serialize_newick(const Tree& t, const std::vector<std::string>& names);

// Splits a stream of ';'-terminated trees; blank text between trees is skipped.
std::vector<std::string> split_newick_batch(std::string_view text);

} // namespace treelabel
