#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vdmrec {

struct Position {
    int line = 0;   // 1-based; 0 means "unknown"
    int column = 0; // 1-based

    bool known() const { return line > 0; }
};

enum class Severity { Error, Warning };

// One diagnostic. `code` is a stable machine-readable identifier
// (e.g. "TypeMismatch", "SyntaxError", "OrphanAnnotation").
struct Diagnostic {
    Severity severity = Severity::Error;
    Position pos;
    std::string code;
    std::string message;
    std::string file; // filled in by the driver, may be empty in unit use
};

inline bool has_errors(const std::vector<Diagnostic>& ds) {
    for (const auto& d : ds)
        if (d.severity == Severity::Error) return true;
    return false;
}

// Renders "file:line:col: severity[code]: message".
std::string render_diagnostic(const Diagnostic& d);

} // namespace vdmrec
