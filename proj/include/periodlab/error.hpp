#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace periodlab {

enum class ErrorCode {
    InfiniteQuotient,
    IllFormedHom,
    GroupMismatch,
    GroupTooLarge,
    InvalidGroup,
    NonPrimitive,
    IndefiniteInDefiniteRoutine,
    DiscriminantMismatch,
    NotFundamental,
    NotQuadratic,
    NoSuchCharacter,
    ModelTooSmall,
    MissingOrigin,
    InsufficientProvenance,
    NotDistinguished,
    InvalidSourceCount,
    GaloisInvariantChi,
    ReducibleParameter,
    PlaceMismatch,
    NotAGroup,
    InvalidOrder,
    NotSplit,
    PreconditionFailed,
    NoSolution,
    InvalidAction,
    NoSubgroup,
    BadReduction,
    ClassGroupMismatch,
    FixtureTooSmall,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace periodlab
