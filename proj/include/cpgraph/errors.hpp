#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpgraph {

/// Where a diagnostic points: a 1-based line/column in DSL text, or a JSON
/// pointer into a structured document. Line 0 means "no text position".
struct SourceLocation {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string pointer;

    std::string str() const;
};

struct Diagnostic {
    SourceLocation location;
    std::string message;

    std::string str() const;
};

/// Base class of every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text or structured input (syntax or schema). CLI exit code 1.
class ParseError : public Error {
public:
    explicit ParseError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// Well-formed input describing an invalid graph: dangling endpoints,
/// duplicate ids, undeclared vertices, empty graph where one is required.
/// CLI exit code 2.
class GraphError : public Error {
public:
    explicit GraphError(std::string message, std::vector<Diagnostic> diagnostics = {});
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// A precondition on an operation argument failed (wrong path length, not a
/// cycle, negative weight, ...). CLI exit code 2.
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// An enumeration cap or search budget was hit. Never accompanied by a
/// partial result. CLI exit code 3.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Two independent routes to the same answer disagreed. CLI exit code 4.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

} // namespace cpgraph
