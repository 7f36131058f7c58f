#include "treelabel/cost.hpp"

#include "treelabel/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace treelabel {

namespace {

template <class T>
bool parse_integer(std::string_view text, T& out) {
    if (text.empty()) {
        return false;
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
        if (text.empty() || text.front() == '-') {
            return false;
        }
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
}

bool checked_mul(Cost a, Cost b, Cost& out) { return !__builtin_mul_overflow(a, b, &out); }
bool checked_add(Cost a, Cost b, Cost& out) { return !__builtin_add_overflow(a, b, &out); }

} // namespace

CostFunction CostFunction::manhattan() { return CostFunction(); }

CostFunction CostFunction::power(int exponent) {
    if (exponent < 1) {
        fail(ErrorCode::InvalidArgument, "power exponent must be a positive integer");
    }
    CostFunction c;
    c.kind_ = exponent == 1 ? Kind::manhattan : Kind::power;
    c.exponent_ = exponent;
    return c;
}

CostFunction CostFunction::table(std::vector<Cost> values) {
    if (values.empty() || values.front() != 0) {
        fail(ErrorCode::NonMonotoneCost, "cost table must start with 0");
    }
    for (std::size_t d = 1; d < values.size(); ++d) {
        if (values[d] <= values[d - 1]) {
            fail(ErrorCode::NonMonotoneCost,
                 "cost table is not strictly increasing at difference " + std::to_string(d));
        }
    }
    CostFunction c;
    c.kind_ = Kind::table;
    c.table_ = std::move(values);
    return c;
}

CostFunction CostFunction::parse(std::string_view spec) {
    if (spec == "manhattan") {
        return manhattan();
    }
    if (spec.starts_with("power:")) {
        int exponent = 0;
        if (!parse_integer(spec.substr(6), exponent) || exponent < 1) {
            fail(ErrorCode::InvalidArgument, "bad power exponent in cost spec '" +
                                                 std::string(spec) + "'");
        }
        return power(exponent);
    }
    if (spec.starts_with("table:")) {
        std::vector<Cost> values;
        std::string_view rest = spec.substr(6);
        while (true) {
            auto comma = rest.find(',');
            Cost v = 0;
            if (!parse_integer(rest.substr(0, comma), v) || v < 0) {
                fail(ErrorCode::InvalidArgument, "bad table entry in cost spec '" +
                                                     std::string(spec) + "'");
            }
            values.push_back(v);
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        return table(std::move(values));
    }
    fail(ErrorCode::InvalidArgument, "unknown cost spec '" + std::string(spec) + "'");
}

std::string CostFunction::to_string() const {
    switch (kind_) {
    case Kind::manhattan:
        return "manhattan";
    case Kind::power:
        return "power:" + std::to_string(exponent_);
    case Kind::table: {
        std::string s = "table:";
        for (std::size_t i = 0; i < table_.size(); ++i) {
            if (i) {
                s += ',';
            }
            s += std::to_string(table_[i]);
        }
        return s;
    }
    }
    return {};
}

Cost CostFunction::operator()(Cost difference) const {
    if (difference < 0) {
        fail(ErrorCode::InvalidArgument, "negative label difference");
    }
    switch (kind_) {
    case Kind::manhattan:
        return difference;
    case Kind::power: {
        Cost result = 1;
        for (int i = 0; i < exponent_; ++i) {
            if (!checked_mul(result, difference, result)) {
                fail(ErrorCode::CostOverflowRisk, "theta(" + std::to_string(difference) +
                                                      ") overflows");
            }
        }
        return result;
    }
    case Kind::table:
        if (static_cast<std::size_t>(difference) >= table_.size()) {
            fail(ErrorCode::DifferenceOutOfRange,
                 "difference " + std::to_string(difference) + " is past the end of a table of " +
                     std::to_string(table_.size()) + " costs");
        }
        return table_[static_cast<std::size_t>(difference)];
    }
    return 0;
}

LeafLabeling::LeafLabeling(const Tree& t, std::vector<std::optional<Label>> by_node)
    : by_node_(std::move(by_node)) {
    if (by_node_.size() != t.node_count()) {
        fail(ErrorCode::InvalidArgument, "leaf labeling does not match the tree size");
    }
    for (std::size_t v = 0; v < by_node_.size(); ++v) {
        const bool leaf = t.is_leaf(static_cast<NodeId>(v));
        if (leaf && !by_node_[v]) {
            fail(ErrorCode::MissingNodeLabel, "leaf " + std::to_string(v) + " has no label");
        }
        if (!leaf && by_node_[v]) {
            fail(ErrorCode::InvalidArgument,
                 "internal node " + std::to_string(v) + " carries a leaf label");
        }
    }
    bool first = true;
    for (NodeId leaf : t.leaves()) {
        Label p = *by_node_[leaf];
        if (first) {
            range_.g_min = range_.g_max = p;
            first = false;
        }
        range_.g_min = std::min(range_.g_min, p);
        range_.g_max = std::max(range_.g_max, p);
    }
    Cost width = 0;
    if (__builtin_sub_overflow(range_.g_max, range_.g_min, &width) ||
        !checked_add(width, 1, range_.m)) {
        fail(ErrorCode::CostOverflowRisk, "leaf label range is too wide");
    }
}

LeafLabeling LeafLabeling::from_leaf_order(const Tree& t, std::span<const Label> labels) {
    if (labels.size() != t.leaf_count()) {
        fail(ErrorCode::InvalidArgument, "expected one label per leaf");
    }
    std::vector<std::optional<Label>> by_node(t.node_count());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        by_node[t.leaves()[i]] = labels[i];
    }
    return LeafLabeling(t, std::move(by_node));
}

LeafLabeling LeafLabeling::shifted(Label offset) const {
    LeafLabeling out = *this;
    for (auto& p : out.by_node_) {
        if (p) {
            *p += offset;
        }
    }
    out.range_.g_min += offset;
    out.range_.g_max += offset;
    return out;
}

LeafLabeling LeafLabeling::reflected() const {
    LeafLabeling out = *this;
    const Label pivot = range_.g_min + range_.g_max;
    for (auto& p : out.by_node_) {
        if (p) {
            *p = pivot - *p;
        }
    }
    return out;
}

Cost eval_total(const Tree& t, const CostFunction& c, std::span<const Label> values) {
    if (values.size() != t.node_count()) {
        fail(ErrorCode::MissingNodeLabel, "labeling covers " + std::to_string(values.size()) +
                                              " of " + std::to_string(t.node_count()) + " nodes");
    }
    Cost total = 0;
    for (std::size_t v = 0; v < values.size(); ++v) {
        auto p = t.parent(static_cast<NodeId>(v));
        if (!p) {
            continue;
        }
        Cost diff = 0;
        if (__builtin_sub_overflow(values[*p], values[v], &diff) || diff == INT64_MIN) {
            fail(ErrorCode::CostOverflowRisk, "label difference overflows");
        }
        if (!checked_add(total, c(diff < 0 ? -diff : diff), total)) {
            fail(ErrorCode::CostOverflowRisk, "total cost overflows");
        }
    }
    return total;
}

Cost eval_total(const Tree& t, const CostFunction& c, std::span<const std::optional<Label>> values) {
    if (values.size() != t.node_count()) {
        fail(ErrorCode::MissingNodeLabel, "labeling does not cover the tree");
    }
    std::vector<Label> full(values.size());
    for (std::size_t v = 0; v < values.size(); ++v) {
        if (!values[v]) {
            fail(ErrorCode::MissingNodeLabel, "node " + std::to_string(v) + " has no label");
        }
        full[v] = *values[v];
    }
    return eval_total(t, c, full);
}

std::vector<Cost> theta_table(const CostFunction& c, Label m) {
    std::vector<Cost> out(static_cast<std::size_t>(m));
    for (Label d = 0; d < m; ++d) {
        out[static_cast<std::size_t>(d)] = c(d);
    }
    return out;
}

void check_cost_overflow(const Tree& t, const CostFunction& c, const LabelRange& range,
                         Cost multiplier) {
    Cost worst = 0;
    try {
        worst = c(range.m - 1);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DifferenceOutOfRange) {
            throw;
        }
        fail(ErrorCode::CostOverflowRisk, "theta(m - 1) does not fit the cost accumulator");
    }
    Cost edges = static_cast<Cost>(t.node_count()) - 1;
    Cost bound = 0;
    if (!checked_mul(worst, edges, bound) || !checked_mul(bound, multiplier, bound)) {
        fail(ErrorCode::CostOverflowRisk,
             "(N - 1) * theta(m - 1) exceeds the cost accumulator range");
    }
}

} // namespace treelabel
