#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace antikit {

enum class ErrorCode {
    LoopEdge,
    DuplicateEdge,
    TwoCycle,
    VertexOutOfRange,
    ParseError,
    InvalidArgument,
    AnchorHasNoOutEdge,
    SizeNotReached,
    ExchangeStuck,
    TooLargeForOracle,
    HypothesisViolated,
    PackingFailed,
    InfeasibleSplit,
    NotRealizable,
    EmptyInput,
    ConsistencyMismatch,
    ThresholdViolated,
    TypicalityExhausted,
    BudgetExceeded,
    TooLarge,
    IoFailure,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure the library reports. The code is stable
/// and is what callers (and the CLI exit path) should switch on.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace antikit
