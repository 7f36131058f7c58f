#include "treelabel/error.hpp"

namespace treelabel {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::MultipleRoots: return "MultipleRoots";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::LeafWithChildren: return "LeafWithChildren";
    case ErrorCode::InternalWithoutChildren: return "InternalWithoutChildren";
    case ErrorCode::UnreachableNode: return "UnreachableNode";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NonIntegerLeafName: return "NonIntegerLeafName";
    case ErrorCode::EmptyTree: return "EmptyTree";
    case ErrorCode::MissingNodeLabel: return "MissingNodeLabel";
    case ErrorCode::DifferenceOutOfRange: return "DifferenceOutOfRange";
    case ErrorCode::NonMonotoneCost: return "NonMonotoneCost";
    case ErrorCode::CostOverflowRisk: return "CostOverflowRisk";
    case ErrorCode::NotBinaryTree: return "NotBinaryTree";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TupleNotMonotone: return "TupleNotMonotone";
    case ErrorCode::TupleDecompositionNotMonotone: return "TupleDecompositionNotMonotone";
    }
    return "Unknown";
}

} // namespace treelabel
