#pragma once

#include "treelabel/cost.hpp"
#include "treelabel/dp_solver.hpp"
#include "treelabel/oracle.hpp"
#include "treelabel/tree.hpp"

#include <string_view>

namespace treelabel {

enum class Algorithm { dp, interval, oracle, automatic };

Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);

// automatic -> interval for a binary tree under Manhattan cost, dp otherwise.
// interval with any other cost is rejected with InvalidArgument.
Algorithm resolve_algorithm(Algorithm requested, const Tree& t, const CostFunction& c);

// Oracle results take the first optimal labeling in enumeration order.
Labeling solve(const Tree& t, const LeafLabeling& l, const CostFunction& c, Algorithm algorithm,
               TieRule tie = TieRule::lowest, const OracleOptions& oracle = {});

} // namespace treelabel
