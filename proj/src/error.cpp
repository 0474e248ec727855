#include "fuchs/error.hpp"

namespace fuchs {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::PartitionSizeMismatch: return "PartitionSizeMismatch";
    case ErrorKind::PointMismatch: return "PointMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::DuplicatePole: return "DuplicatePole";
    case ErrorKind::NotNormalizable: return "NotNormalizable";
    case ErrorKind::SchemeUnavailable: return "SchemeUnavailable";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotOkuboConvertible: return "NotOkuboConvertible";
    case ErrorKind::EigenvalueCollision: return "EigenvalueCollision";
    case ErrorKind::ConditionsFail: return "ConditionsFail";
    case ErrorKind::ZeroRho: return "ZeroRho";
    case ErrorKind::DegenerateExtension: return "DegenerateExtension";
    case ErrorKind::NotQ2: return "NotQ2";
    case ErrorKind::CRViolated: return "CRViolated";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::NotONFShape: return "NotONFShape";
    case ErrorKind::InconsistentColumns: return "InconsistentColumns";
    case ErrorKind::NegativePart: return "NegativePart";
    case ErrorKind::PreconditionFail: return "PreconditionFail";
    case ErrorKind::Internal: return "InternalError";
    }
    return "UnknownError";
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Internal: return 3;
    default: return 1;
    }
}

} // namespace fuchs
