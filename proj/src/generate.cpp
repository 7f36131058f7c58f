#include "treelabel/generate.hpp"

#include "treelabel/error.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

namespace treelabel {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        fail(ErrorCode::InvalidArgument, "empty sampling range");
    }
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::int64_t>(next());
    }
    const std::uint64_t bound = span + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = next();
    while (x >= limit) {
        x = next();
    }
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % bound);
}

Tree random_tree(Rng& rng, const TreeShape& shape) {
    if (shape.leaves == 0) {
        fail(ErrorCode::InvalidArgument, "a tree needs at least one leaf");
    }
    if (shape.arity == ArityProfile::random && shape.max_arity < 2) {
        fail(ErrorCode::InvalidArgument, "max arity must be at least 2");
    }

    std::vector<std::vector<NodeId>> children(shape.leaves);
    std::vector<NodeId> pool(shape.leaves);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        pool[i] = static_cast<NodeId>(i);
    }
    while (pool.size() > 1) {
        std::size_t k = 2;
        if (shape.arity == ArityProfile::random) {
            const auto cap = std::min(shape.max_arity, pool.size());
            k = static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(cap)));
        }
        // partial Fisher-Yates: move k random members to the back
        for (std::size_t j = 0; j < k; ++j) {
            const auto last = pool.size() - 1 - j;
            const auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(last)));
            std::swap(pool[pick], pool[last]);
        }
        const auto parent = static_cast<NodeId>(children.size());
        children.emplace_back(pool.end() - static_cast<std::ptrdiff_t>(k), pool.end());
        pool.resize(pool.size() - k);
        pool.push_back(parent);
    }

    // renumber in preorder
    const NodeId old_root = pool.front();
    std::vector<NodeId> new_id(children.size());
    std::vector<std::optional<NodeId>> parent_of(children.size());
    std::vector<bool> leaf_flags(children.size());
    std::vector<std::pair<NodeId, std::optional<NodeId>>> stack{{old_root, std::nullopt}};
    NodeId next = 0;
    while (!stack.empty()) {
        auto [old, parent] = stack.back();
        stack.pop_back();
        const NodeId id = next++;
        new_id[old] = id;
        parent_of[id] = parent;
        leaf_flags[id] = children[old].empty();
        for (auto it = children[old].rbegin(); it != children[old].rend(); ++it) {
            stack.emplace_back(*it, id);
        }
    }
    return Tree::build(parent_of, leaf_flags);
}

Instance random_instance(Rng& rng, const TreeShape& shape, Label label_min, Label label_max) {
    Tree t = random_tree(rng, shape);
    std::vector<Label> labels(t.leaf_count());
    for (auto& p : labels) {
        p = rng.uniform(label_min, label_max);
    }
    LeafLabeling l = LeafLabeling::from_leaf_order(t, labels);
    return Instance{std::move(t), std::move(l)};
}

CostFunction random_cost_table(Rng& rng, std::size_t length, Cost max_step) {
    std::vector<Cost> values(std::max<std::size_t>(length, 1));
    for (std::size_t d = 1; d < values.size(); ++d) {
        values[d] = values[d - 1] + rng.uniform(1, max_step);
    }
    return CostFunction::table(std::move(values));
}

} // namespace treelabel
