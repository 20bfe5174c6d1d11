#pragma once

#include <string>
#include <string_view>

#include "stomap/diagram.hpp"

namespace stomap {

/// Parses the textual diagram language:
///
///   expr     := term (";" term)*       a ; b  means  a then b
///   term     := factor ("*" factor)*   tensor
///   factor   := "del" | "e" | "s" | "c(" fraction ")" | "id(" nat ")"
///             | "z(" nat ")" | "zinv(" nat ")" | "p(" nat "," nat ")"
///             | "iota(" nat "," nat ")" | "(" expr ")"
///   fraction := nat | nat "/" nat      within [0,1]
///
/// Both binary operators associate to the left. Syntax errors and invalid
/// token arguments raise ParseError; mismatched strand counts raise ArityError.
Diagram parse_diagram(std::string_view text);

/// Prints a diagram in the same language. parse_diagram(print_diagram(d)) is
/// structurally equal to d. The family tokens z, zinv, p and iota are
/// expanded at parse time and never printed.
std::string print_diagram(const Diagram& d);

}  // namespace stomap
