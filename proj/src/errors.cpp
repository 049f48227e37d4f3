#include "cpgraph/errors.hpp"

#include <sstream>

namespace cpgraph {

std::string SourceLocation::str() const {
    std::ostringstream os;
    if (line > 0) {
        os << "line " << line;
        if (column > 0) os << ", column " << column;
    } else if (!pointer.empty()) {
        os << pointer;
    } else {
        os << "<document>";
    }
    return os.str();
}

std::string Diagnostic::str() const { return location.str() + ": " + message; }

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
    std::string out;
    for (const auto& d : diagnostics) {
        if (!out.empty()) out += "\n";
        out += d.str();
    }
    return out;
}

} // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

GraphError::GraphError(std::string message, std::vector<Diagnostic> diagnostics)
    : Error(diagnostics.empty() ? message : message + "\n" + join_diagnostics(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

} // namespace cpgraph
