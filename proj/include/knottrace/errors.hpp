#pragma once

#include <stdexcept>
#include <string>

namespace knottrace {

// What a complex failed during validation.
enum class Violation {
    Parse,          // malformed input text
    Grading,        // non-integer or negative i/j-drop on an arrow
    Differential,   // d^2 != 0
    Symmetry,       // graded homology ranks not symmetric in the Alexander grading
    Normalization,  // dim H(B) != 1
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(Violation kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    Violation kind() const { return kind_; }

private:
    Violation kind_;
};

// A mathematically impossible state was reached: an exhaustive case split
// failed, inference rows disagreed, or a subquotient had the wrong homology.
// Distinct from ValidationError so callers can map it to a separate exit code.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

const char* violation_name(Violation v);

}  // namespace knottrace
