#include "stomap/render.hpp"

#include <sstream>
#include <vector>

namespace stomap {

namespace {

std::string strands(std::size_t n) {
  if (n == 0) return ".";
  std::string row = "|";
  for (std::size_t i = 1; i < n; ++i) row += " |";
  return row;
}

std::string glyph(const Generator& g) {
  switch (g.kind()) {
    case GenKind::Del: return "x";
    case GenKind::E: return "\\_/";
    case GenKind::S: return "><";
    case GenKind::C: return "/[" + g.param().to_string() + "]\\";
  }
  return "?";
}

std::string label(const Generator& g) {
  switch (g.kind()) {
    case GenKind::Del: return "del";
    case GenKind::E: return "e";
    case GenKind::S: return "s";
    case GenKind::C: return "c(" + g.param().to_string() + ")";
  }
  return "?";
}

}  // namespace

std::string render_ascii(const Diagram& d) {
  const SliceForm form = to_slices(d);
  std::ostringstream out;
  out << strands(form.dom()) << '\n';
  for (const auto& slice : form.slices()) {
    std::vector<std::string> cells(slice.left, "|");
    cells.push_back(glyph(slice.gen));
    cells.insert(cells.end(), slice.right, "|");
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? " " : "") << cells[i];
    out << '\n';
  }
  out << strands(form.cod()) << '\n';
  return out.str();
}

std::string render_dot(const Diagram& d) {
  const SliceForm form = to_slices(d);
  std::ostringstream out;
  out << "digraph diagram {\n  rankdir=TB;\n";
  std::vector<std::string> current;
  for (std::size_t i = 1; i <= form.dom(); ++i) {
    const std::string name = "in" + std::to_string(i);
    out << "  " << name << " [label=\"in " << i << "\", shape=plaintext];\n";
    current.push_back(name);
  }
  std::size_t id = 0;
  for (const auto& slice : form.slices()) {
    const std::string name = "g" + std::to_string(id++);
    const char* shape = slice.gen.kind() == GenKind::C ? "box" : "circle";
    out << "  " << name << " [label=\"" << label(slice.gen) << "\", shape=" << shape << "];\n";
    const auto first = current.begin() + static_cast<std::ptrdiff_t>(slice.left);
    const auto last = first + static_cast<std::ptrdiff_t>(slice.gen.dom());
    for (auto it = first; it != last; ++it) out << "  " << *it << " -> " << name << ";\n";
    const auto pos = current.erase(first, last);
    current.insert(pos, slice.gen.cod(), name);
  }
  for (std::size_t i = 0; i < current.size(); ++i) {
    out << "  out" << i + 1 << " [label=\"out " << i + 1 << "\", shape=plaintext];\n";
    out << "  " << current[i] << " -> out" << i + 1 << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace stomap
