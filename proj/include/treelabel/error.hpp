#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treelabel {

enum class ErrorCode {
    InvalidArgument,
    CycleDetected,
    MultipleRoots,
    NoRoot,
    LeafWithChildren,
    InternalWithoutChildren,
    UnreachableNode,
    SyntaxError,
    NonIntegerLeafName,
    EmptyTree,
    MissingNodeLabel,
    DifferenceOutOfRange,
    NonMonotoneCost,
    CostOverflowRisk,
    NotBinaryTree,
    BudgetExceeded,
    TupleNotMonotone,
    TupleDecompositionNotMonotone,
};

std::string_view error_code_name(ErrorCode code);

// All failures raised by the library carry a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace treelabel
