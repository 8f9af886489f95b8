#pragma once

#include <stdexcept>
#include <string>

namespace qrook {

struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

// Specialization hit a zero denominator.
struct PoleAtPoint : std::domain_error {
    using std::domain_error::domain_error;
};

// Two consecutive tableau entries carry equal contents where the seminormal
// formula divides by their difference.
struct DegenerateContent : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConventionNotFound : std::logic_error {
    using std::logic_error::logic_error;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace qrook
