#include "treelabel/tree.hpp"

#include "treelabel/error.hpp"

#include <algorithm>
#include <string>

namespace treelabel {

Tree Tree::build(std::span<const std::optional<NodeId>> parent_of,
                 const std::vector<bool>& leaf_flags) {
    const std::size_t n = parent_of.size();
    if (n == 0) {
        fail(ErrorCode::NoRoot, "tree has no nodes");
    }
    if (leaf_flags.size() != n) {
        fail(ErrorCode::InvalidArgument, "leaf_flags and parent_of differ in length");
    }

    std::optional<NodeId> root;
    for (std::size_t v = 0; v < n; ++v) {
        const auto& p = parent_of[v];
        if (!p) {
            if (root) {
                fail(ErrorCode::MultipleRoots, "nodes " + std::to_string(*root) + " and " +
                                                   std::to_string(v) + " both lack a parent");
            }
            root = static_cast<NodeId>(v);
        } else if (*p >= n) {
            fail(ErrorCode::InvalidArgument, "parent of node " + std::to_string(v) +
                                                 " is out of range");
        }
    }
    if (!root) {
        fail(ErrorCode::NoRoot, "every node has a parent");
    }

    // Walk up from every node; a walk that revisits a node before reaching a
    // node already known to lead to the root is a cycle.
    enum : std::uint8_t { unseen, on_path, done };
    std::vector<std::uint8_t> state(n, unseen);
    state[*root] = done;
    std::vector<NodeId> path;
    for (std::size_t start = 0; start < n; ++start) {
        path.clear();
        NodeId v = static_cast<NodeId>(start);
        while (state[v] == unseen) {
            state[v] = on_path;
            path.push_back(v);
            v = *parent_of[v];
        }
        if (state[v] == on_path) {
            fail(ErrorCode::CycleDetected, "node " + std::to_string(v) + " lies on a cycle");
        }
        for (NodeId u : path) {
            state[u] = done;
        }
    }

    Tree t;
    t.parent_.assign(parent_of.begin(), parent_of.end());
    t.is_leaf_ = leaf_flags;
    t.root_ = *root;

    std::vector<std::size_t> degree(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (parent_of[v]) {
            ++degree[*parent_of[v]];
        }
    }
    t.child_offset_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        t.child_offset_[v + 1] = t.child_offset_[v] + degree[v];
    }
    t.child_index_.resize(n - 1);
    std::vector<std::size_t> fill(t.child_offset_.begin(), t.child_offset_.end() - 1);
    // Ascending v gives ascending child order.
    for (std::size_t v = 0; v < n; ++v) {
        if (parent_of[v]) {
            t.child_index_[fill[*parent_of[v]]++] = static_cast<NodeId>(v);
        }
    }

    for (std::size_t v = 0; v < n; ++v) {
        if (leaf_flags[v] && degree[v] != 0) {
            fail(ErrorCode::LeafWithChildren, "leaf " + std::to_string(v) + " has children");
        }
        if (!leaf_flags[v] && degree[v] == 0) {
            fail(ErrorCode::InternalWithoutChildren,
                 "internal node " + std::to_string(v) + " has no children");
        }
        if (leaf_flags[v]) {
            t.leaves_.push_back(static_cast<NodeId>(v));
        }
    }

    t.preorder_.reserve(n);
    std::vector<NodeId> stack{t.root_};
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        t.preorder_.push_back(v);
        auto kids = t.children(v);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            stack.push_back(*it);
        }
    }
    if (t.preorder_.size() != n) {
        fail(ErrorCode::UnreachableNode, "not every node is reachable from the root");
    }

    // Postorder with children in stored order: reverse of a preorder that
    // visits children right to left.
    t.postorder_.reserve(n);
    stack.assign(1, t.root_);
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        t.postorder_.push_back(v);
        for (NodeId c : t.children(v)) {
            stack.push_back(c);
        }
    }
    std::reverse(t.postorder_.begin(), t.postorder_.end());
    return t;
}

std::span<const NodeId> Tree::children(NodeId v) const {
    return std::span<const NodeId>(child_index_).subspan(
        child_offset_[v], child_offset_[v + 1] - child_offset_[v]);
}

bool is_binary(const Tree& t) {
    for (std::size_t v = 0; v < t.node_count(); ++v) {
        if (!t.is_leaf(static_cast<NodeId>(v)) && t.children(static_cast<NodeId>(v)).size() != 2) {
            return false;
        }
    }
    return true;
}

} // namespace treelabel
