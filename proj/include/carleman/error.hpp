#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace carleman {

enum class ErrorKind {
    DimensionMismatch,
    NotDivisible,
    ParseError,
    ParameterOutOfRange,
    TableNotNormalized,
    InsufficientTable,
    PrecisionExhausted,
    OrderBoundExceeded,
    SingularGenerator,
    NotInvariant,
    NotInAlgebra,
    IndexOutOfRange,
    NotSymmetric,
    NotBlockSymmetric,
    NotLogConvex,
    SizeBoundExceeded,
    DeltaDivisionFailed,
    NotASubgroup,
    BasisNotStable,
    NotEquivariant,
    NotInModule,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI in particular) can report it in a structured way.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace carleman
