#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace treelabel {

using NodeId = std::uint32_t;

// Immutable rooted tree. Children are kept in ascending NodeId order and both
// traversal orders are computed once at construction.
class Tree {
public:
    // Validates the parent array and the leaf flags. Throws Error with one of
    // CycleDetected, MultipleRoots, NoRoot, LeafWithChildren,
    // InternalWithoutChildren, UnreachableNode or InvalidArgument.
    static Tree build(std::span<const std::optional<NodeId>> parent_of,
                      const std::vector<bool>& leaf_flags);

    std::size_t node_count() const noexcept { return parent_.size(); }
    std::size_t leaf_count() const noexcept { return leaves_.size(); }
    std::size_t internal_count() const noexcept { return node_count() - leaf_count(); }

    NodeId root() const noexcept { return root_; }
    std::optional<NodeId> parent(NodeId v) const { return parent_[v]; }
    std::span<const NodeId> children(NodeId v) const;
    bool is_leaf(NodeId v) const { return is_leaf_[v]; }

    // Leaves in ascending NodeId order.
    const std::vector<NodeId>& leaves() const noexcept { return leaves_; }
    const std::vector<NodeId>& postorder() const noexcept { return postorder_; }
    const std::vector<NodeId>& preorder() const noexcept { return preorder_; }

private:
    Tree() = default;

    std::vector<std::optional<NodeId>> parent_;
    std::vector<bool> is_leaf_;
    // children of v are child_index_[child_offset_[v] .. child_offset_[v + 1])
    std::vector<std::size_t> child_offset_;
    std::vector<NodeId> child_index_;
    std::vector<NodeId> leaves_;
    std::vector<NodeId> postorder_;
    std::vector<NodeId> preorder_;
    NodeId root_ = 0;
};

inline Tree build_tree(std::span<const std::optional<NodeId>> parent_of,
                       const std::vector<bool>& leaf_flags) {
    return Tree::build(parent_of, leaf_flags);
}

inline const std::vector<NodeId>& postorder(const Tree& t) { return t.postorder(); }
inline const std::vector<NodeId>& preorder(const Tree& t) { return t.preorder(); }

// True iff every internal node has exactly two children.
bool is_binary(const Tree& t);

} // namespace treelabel
