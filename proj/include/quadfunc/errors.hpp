#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace quadfunc {

struct DegreeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroPolynomialError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SideConditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct InsufficientConstraints : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown only when a symbolic identity that must hold fails to.
struct AuditFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace quadfunc
