#pragma once

// Test-only helpers: topology enumeration and a tuple-space brute force that
// shares no code with the solvers it checks.

#include "treelabel/cost.hpp"
#include "treelabel/ktuple.hpp"
#include "treelabel/newick.hpp"
#include "treelabel/tree.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace treelabel::testing {

// Newick shapes with 'x' standing for each leaf, e.g. "((x,x),x)".
inline std::vector<std::string> binary_shapes(std::size_t leaves) {
    if (leaves == 1) {
        return {"x"};
    }
    std::vector<std::string> out;
    for (std::size_t k = 1; k < leaves; ++k) {
        for (const auto& left : binary_shapes(k)) {
            for (const auto& right : binary_shapes(leaves - k)) {
                out.push_back("(" + left + "," + right + ")");
            }
        }
    }
    return out;
}

// Ordered trees whose internal nodes all have at least two children.
inline std::vector<std::string> plane_shapes(std::size_t leaves) {
    if (leaves == 1) {
        return {"x"};
    }
    std::vector<std::string> out;
    // compositions of `leaves` into >= 2 parts, each part an independent shape
    std::function<void(std::size_t, std::vector<std::string>)> extend =
        [&](std::size_t remaining, std::vector<std::string> parts) {
            if (remaining == 0) {
                if (parts.size() >= 2) {
                    std::string s = "(";
                    for (std::size_t i = 0; i < parts.size(); ++i) {
                        s += (i ? "," : "") + parts[i];
                    }
                    out.push_back(s + ")");
                }
                return;
            }
            for (std::size_t k = 1; k <= remaining; ++k) {
                if (k == leaves) {
                    continue;
                }
                for (const auto& sub : plane_shapes(k)) {
                    auto next = parts;
                    next.push_back(sub);
                    extend(remaining - k, next);
                }
            }
        };
    extend(leaves, {});
    return out;
}

inline std::size_t count_leaves(const std::string& shape) {
    std::size_t n = 0;
    for (char c : shape) {
        n += c == 'x' ? 1 : 0;
    }
    return n;
}

// Replaces the i-th 'x' by names[i] and appends ';'.
inline std::string fill_shape(const std::string& shape, const std::vector<std::string>& names) {
    std::string out;
    std::size_t i = 0;
    for (char c : shape) {
        if (c == 'x') {
            out += names[i++];
        } else {
            out += c;
        }
    }
    return out + ";";
}

// Calls f(labels) for every vector of `count` labels drawn from [lo, hi].
inline void for_each_labeling(std::size_t count, Label lo, Label hi,
                              const std::function<void(const std::vector<Label>&)>& f) {
    std::vector<Label> labels(count, lo);
    while (true) {
        f(labels);
        std::size_t i = count;
        while (i > 0) {
            if (labels[i - 1] < hi) {
                ++labels[i - 1];
                break;
            }
            labels[i - 1] = lo;
            --i;
        }
        if (i == 0) {
            return;
        }
    }
}


struct TupleOptimum {
    Cost cost = std::numeric_limits<Cost>::max();
    std::size_t optimal_count = 0;
};

// Minimum of Σ_edges Σ_i θ(|Δ_i|) over nondecreasing k-tuples on internal
// nodes, coordinate i restricted to that coordinate's leaf range.
inline TupleOptimum tuple_space_brute_force(const Tree& t, const TupleLeafLabeling& l,
                                            const CostFunction& c) {
    const std::size_t k = l.k();
    std::vector<Label> lo(k, std::numeric_limits<Label>::max());
    std::vector<Label> hi(k, std::numeric_limits<Label>::min());
    for (NodeId leaf : t.leaves()) {
        for (std::size_t i = 0; i < k; ++i) {
            lo[i] = std::min(lo[i], l.label(leaf)[i]);
            hi[i] = std::max(hi[i], l.label(leaf)[i]);
        }
    }
    // every admissible tuple in the box
    std::vector<Tuple> choices;
    Tuple current(k);
    std::function<void(std::size_t)> build = [&](std::size_t i) {
        if (i == k) {
            choices.push_back(current);
            return;
        }
        for (Label x = lo[i]; x <= hi[i]; ++x) {
            if (i > 0 && x < current[i - 1]) {
                continue;
            }
            current[i] = x;
            build(i + 1);
        }
    };
    build(0);

    std::vector<NodeId> internal;
    for (std::size_t v = 0; v < t.node_count(); ++v) {
        if (!t.is_leaf(static_cast<NodeId>(v))) {
            internal.push_back(static_cast<NodeId>(v));
        }
    }
    std::vector<Tuple> values(t.node_count());
    for (NodeId leaf : t.leaves()) {
        values[leaf] = l.label(leaf);
    }

    TupleOptimum best;
    std::vector<std::size_t> digit(internal.size(), 0);
    while (true) {
        for (std::size_t j = 0; j < internal.size(); ++j) {
            values[internal[j]] = choices[digit[j]];
        }
        Cost total = 0;
        for (std::size_t v = 0; v < t.node_count(); ++v) {
            if (auto p = t.parent(static_cast<NodeId>(v))) {
                for (std::size_t i = 0; i < k; ++i) {
                    Label d = values[*p][i] - values[v][i];
                    total += c(d < 0 ? -d : d);
                }
            }
        }
        if (total < best.cost) {
            best.cost = total;
            best.optimal_count = 0;
        }
        best.optimal_count += total == best.cost ? 1 : 0;

        std::size_t j = internal.size();
        while (j > 0) {
            if (++digit[j - 1] < choices.size()) {
                break;
            }
            digit[j - 1] = 0;
            --j;
        }
        if (j == 0) {
            break;
        }
    }
    return best;
}

} // namespace treelabel::testing
