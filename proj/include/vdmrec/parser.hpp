#pragma once

#include <string>
#include <vector>

#include "vdmrec/ast.hpp"
#include "vdmrec/lexer.hpp"

namespace vdmrec {

struct ParseError : std::runtime_error {
    Position pos;
    std::string code; // "SyntaxError", "AnnotationSyntaxError", ...
    ParseError(Position p, std::string c, const std::string& msg)
        : std::runtime_error(msg), pos(p), code(std::move(c)) {}
};

// Parses a whole module. Lex/parse failures of the module skeleton are
// reported as diagnostics on the result; annotation problems and unknown
// annotation names become warnings per the accepted-subset rules.
SourceModule parse_module(const std::string& text, const std::string& module_name);

// Parses a single expression (CLI `--args`, tests). Throws ParseError.
ExprPtr parse_expression(const std::string& text);

} // namespace vdmrec
