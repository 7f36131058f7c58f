#include "treelabel/solve.hpp"

#include "treelabel/error.hpp"
#include "treelabel/interval_solver.hpp"

#include <string>

namespace treelabel {

Algorithm parse_algorithm(std::string_view name) {
    if (name == "dp") {
        return Algorithm::dp;
    }
    if (name == "interval") {
        return Algorithm::interval;
    }
    if (name == "oracle") {
        return Algorithm::oracle;
    }
    if (name == "auto") {
        return Algorithm::automatic;
    }
    fail(ErrorCode::InvalidArgument, "unknown algorithm '" + std::string(name) + "'");
}

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::dp: return "dp";
    case Algorithm::interval: return "interval";
    case Algorithm::oracle: return "oracle";
    case Algorithm::automatic: return "auto";
    }
    return "auto";
}

Algorithm resolve_algorithm(Algorithm requested, const Tree& t, const CostFunction& c) {
    const bool manhattan = c.kind() == CostFunction::Kind::manhattan;
    if (requested == Algorithm::automatic) {
        return manhattan && is_binary(t) ? Algorithm::interval : Algorithm::dp;
    }
    if (requested == Algorithm::interval && !manhattan) {
        fail(ErrorCode::InvalidArgument,
             "the interval algorithm only handles manhattan cost, got " + c.to_string());
    }
    return requested;
}

Labeling solve(const Tree& t, const LeafLabeling& l, const CostFunction& c, Algorithm algorithm,
               TieRule tie, const OracleOptions& oracle) {
    switch (resolve_algorithm(algorithm, t, c)) {
    case Algorithm::interval:
        return solve_interval(t, l, tie);
    case Algorithm::oracle: {
        OracleOptions opts = oracle;
        opts.labeling_cap = 1;
        return brute_force_min(t, l, c, opts).labelings.front();
    }
    case Algorithm::dp:
    case Algorithm::automatic:
        break;
    }
    return solve_dp(t, l, c, tie);
}

} // namespace treelabel
