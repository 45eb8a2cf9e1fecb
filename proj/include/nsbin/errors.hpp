#pragma once

#include <stdexcept>
#include <string>

namespace nsbin {

enum class ErrorKind {
    InvalidSyntax,
    InvalidArgument,
    MissingZero,
    DuplicateElement,
    NegativeElement,
    TooLarge,
    OracleCapExceeded,
    BudgetExceeded,
    ArgumentOverflow,
    DimensionMismatch,
    InternalExactnessFailure,
    OddElementRequired,
    StabilityFailure,
    InvalidT,
};

inline const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidSyntax: return "InvalidSyntax";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MissingZero: return "MissingZero";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::NegativeElement: return "NegativeElement";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ArgumentOverflow: return "ArgumentOverflow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InternalExactnessFailure: return "InternalExactnessFailure";
    case ErrorKind::OddElementRequired: return "OddElementRequired";
    case ErrorKind::StabilityFailure: return "StabilityFailure";
    case ErrorKind::InvalidT: return "InvalidT";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace nsbin
