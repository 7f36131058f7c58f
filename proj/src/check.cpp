#include "treelabel/check.hpp"

#include "treelabel/dp_solver.hpp"
#include "treelabel/newick.hpp"

#include <sstream>

namespace treelabel {

namespace {

void tally(PairTally& pair, const std::optional<Cost>& a, const std::optional<Cost>& b) {
    if (a && b) {
        ++pair.compared;
        pair.agreed += *a == *b ? 1 : 0;
    }
}

std::string cost_or_dash(const std::optional<Cost>& c) { return c ? std::to_string(*c) : "-"; }

} // namespace

bool CheckReport::all_agree() const {
    for (const auto& i : instances) {
        if (!i.agree) {
            return false;
        }
    }
    return true;
}

std::optional<std::size_t> CheckReport::minimal_failure() const {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < instances.size(); ++k) {
        const auto& i = instances[k];
        if (i.agree) {
            continue;
        }
        if (!best || i.node_count < instances[*best].node_count ||
            (i.node_count == instances[*best].node_count && i.m < instances[*best].m)) {
            best = k;
        }
    }
    return best;
}

std::string CheckReport::to_text() const {
    std::ostringstream out;
    out << "instances: " << instances.size() << '\n';
    out << "pair,compared,agreed\n";
    out << "dp-oracle," << dp_oracle.compared << ',' << dp_oracle.agreed << '\n';
    out << "interval-dp," << interval_dp.compared << ',' << interval_dp.agreed << '\n';
    out << "interval-oracle," << interval_oracle.compared << ',' << interval_oracle.agreed << '\n';
    if (auto k = minimal_failure()) {
        const auto& i = instances[*k];
        out << "disagreement on instance " << i.index << ": dp=" << cost_or_dash(i.dp)
            << " interval=" << cost_or_dash(i.interval) << " oracle=" << cost_or_dash(i.oracle)
            << '\n';
        out << "reproducer: " << i.newick << '\n';
    } else {
        out << "all solvers agree\n";
    }
    return out.str();
}

CheckReport run_check(std::span<const Instance> instances, const CheckOptions& options) {
    CheckReport report;
    const bool manhattan = options.cost.kind() == CostFunction::Kind::manhattan;
    for (std::size_t k = 0; k < instances.size(); ++k) {
        const Tree& t = instances[k].tree;
        const LeafLabeling& l = instances[k].leaf_labels;
        InstanceCheck row;
        row.index = k;
        row.newick = serialize_leaves(t, l);
        row.node_count = t.node_count();
        row.m = l.range().m;

        row.dp = eval_total(t, options.cost, solve_dp(t, l, options.cost));
        if (manhattan && is_binary(t)) {
            auto iv = bottom_up_intervals(t, l, options.merge);
            row.interval = eval_total(t, options.cost, top_down_labels(t, iv));
        }
        if (oracle_evaluations(t, l) <= options.oracle.budget) {
            OracleOptions lean = options.oracle;
            lean.labeling_cap = 1;
            auto optimum = brute_force_min(t, l, options.cost, lean);
            row.oracle = eval_total(t, options.cost, optimum.labelings.front());
        }

        tally(report.dp_oracle, row.dp, row.oracle);
        tally(report.interval_dp, row.interval, row.dp);
        tally(report.interval_oracle, row.interval, row.oracle);
        row.agree = (!row.oracle || *row.oracle == *row.dp) &&
                    (!row.interval || *row.interval == *row.dp);
        report.instances.push_back(std::move(row));
    }
    return report;
}

} // namespace treelabel
