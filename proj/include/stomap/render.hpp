#pragma once

#include <string>

#include "stomap/diagram.hpp"

namespace stomap {

/// One text row per slice between a row of input strands and a row of output
/// strands. Glyphs: `|` strand, `x` del, `\_/` merge, `><` crossing and
/// `/[λ]\` branch box.
std::string render_ascii(const Diagram& d);

/// Graphviz digraph with nodes in1..inN, out1..outM and one node per generator.
std::string render_dot(const Diagram& d);

}  // namespace stomap
