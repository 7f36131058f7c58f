#pragma once

#include "treelabel/tree.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treelabel {

using Label = std::int64_t;
using Cost = std::int64_t;

// Nonnegative cost extended with a distinct infinity. inf + x == inf.
class ExtendedCost {
public:
    constexpr ExtendedCost() = default;
    constexpr explicit ExtendedCost(Cost value) : value_(value) {}

    static constexpr ExtendedCost infinity() {
        ExtendedCost c;
        c.infinite_ = true;
        return c;
    }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    constexpr bool is_finite() const noexcept { return !infinite_; }
    // Only meaningful when finite.
    constexpr Cost value() const noexcept { return value_; }

    friend constexpr ExtendedCost operator+(ExtendedCost a, ExtendedCost b) {
        if (a.infinite_ || b.infinite_) {
            return infinity();
        }
        return ExtendedCost(a.value_ + b.value_);
    }

    friend constexpr bool operator==(ExtendedCost a, ExtendedCost b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(ExtendedCost a, ExtendedCost b) {
        if (a.infinite_ || b.infinite_) {
            return a.infinite_ <=> b.infinite_;
        }
        return a.value_ <=> b.value_;
    }

private:
    Cost value_ = 0;
    bool infinite_ = false;
};

// Strictly increasing edge cost θ over nonnegative label differences, θ(0) = 0.
class CostFunction {
public:
    enum class Kind { manhattan, power, table };

    static CostFunction manhattan();
    // θ(d) = d^exponent, exponent >= 1.
    static CostFunction power(int exponent);
    // θ(d) = values[d]. Throws NonMonotoneCost unless values[0] == 0 and the
    // table is strictly increasing.
    static CostFunction table(std::vector<Cost> values);

    // "manhattan", "power:<λ>" or "table:<c0,c1,...>".
    static CostFunction parse(std::string_view spec);
    std::string to_string() const;

    Kind kind() const noexcept { return kind_; }
    int exponent() const noexcept { return exponent_; }
    std::span<const Cost> table_values() const noexcept { return table_; }

    // DifferenceOutOfRange past the end of a table; CostOverflowRisk if a power
    // does not fit in Cost.
    Cost operator()(Cost difference) const;

private:
    Kind kind_ = Kind::manhattan;
    int exponent_ = 1;
    std::vector<Cost> table_;
};

inline Cost theta(const CostFunction& c, Cost difference) { return c(difference); }

struct LabelRange {
    Label g_min = 0;
    Label g_max = 0;
    Label m = 1;

    friend bool operator==(const LabelRange&, const LabelRange&) = default;
};

// Integer labels observed at the leaves of one tree.
class LeafLabeling {
public:
    // by_node has one entry per node; exactly the leaves must carry a value.
    LeafLabeling(const Tree& t, std::vector<std::optional<Label>> by_node);
    // Labels for t.leaves(), in that order.
    static LeafLabeling from_leaf_order(const Tree& t, std::span<const Label> labels);

    Label label(NodeId leaf) const { return *by_node_[leaf]; }
    const std::vector<std::optional<Label>>& by_node() const noexcept { return by_node_; }
    std::size_t node_count() const noexcept { return by_node_.size(); }
    const LabelRange& range() const noexcept { return range_; }

    LeafLabeling shifted(Label offset) const;
    // π -> (g_min + g_max) - π.
    LeafLabeling reflected() const;

private:
    LeafLabeling() = default;

    std::vector<std::optional<Label>> by_node_;
    LabelRange range_;
};

inline LabelRange label_range(const LeafLabeling& l) { return l.range(); }

// Labels on every node plus the cost they were produced with.
struct Labeling {
    std::vector<Label> values;
    Cost total_cost = 0;
};

// Sum over all edges of θ(|π(parent) - π(child)|). MissingNodeLabel when
// values does not cover the tree; CostOverflowRisk if the sum overflows.
Cost eval_total(const Tree& t, const CostFunction& c, std::span<const Label> values);
inline Cost eval_total(const Tree& t, const CostFunction& c, const Labeling& full) {
    return eval_total(t, c, full.values);
}
// Variant for partially specified labelings.
Cost eval_total(const Tree& t, const CostFunction& c, std::span<const std::optional<Label>> values);

// θ(0..m-1) as a vector; throws DifferenceOutOfRange or CostOverflowRisk.
std::vector<Cost> theta_table(const CostFunction& c, Label m);

// Solve-entry guard: throws CostOverflowRisk when `multiplier` * (N - 1) *
// θ(m - 1) could exceed the Cost range, DifferenceOutOfRange when a table is
// shorter than m.
void check_cost_overflow(const Tree& t, const CostFunction& c, const LabelRange& range,
                         Cost multiplier = 1);

} // namespace treelabel
