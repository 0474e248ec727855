#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fuchs {

enum class ErrorKind {
    Parse,
    InvalidArgument,
    NonSquare,
    SizeMismatch,
    LengthMismatch,
    PartitionSizeMismatch,
    PointMismatch,
    IndexOutOfRange,
    NotAPermutation,
    DuplicatePole,
    NotNormalizable,
    SchemeUnavailable,
    NotIrreducible,
    NotOkuboConvertible,
    EigenvalueCollision,
    ConditionsFail,
    ZeroRho,
    DegenerateExtension,
    NotQ2,
    CRViolated,
    NotGeneric,
    NotONFShape,
    InconsistentColumns,
    NegativePart,
    PreconditionFail,
    Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    // The message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

// CLI exit status for an error kind: 1 precondition, 2 parse, 3 invariant breach.
int exit_code_for(ErrorKind kind);

} // namespace fuchs
