#pragma once

#include <stdexcept>
#include <string>

namespace jumploci {

// Malformed input documents: wrong shapes, unknown fields, bad literals.
// `path` names the offending location for CLI diagnostics.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what, std::string path = {})
        : std::runtime_error(path.empty() ? what : path + ": " + what), path(std::move(path)) {}
    std::string path;
};

// Structurally well-formed input that violates a mathematical law
// (non-associative tensor, non-Maurer-Cartan element, singular basis
// change, ...). Carries a witness string for reports.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what, std::string witness = {})
        : std::runtime_error(what), witness(std::move(witness)) {}
    std::string witness;
};

} // namespace jumploci
