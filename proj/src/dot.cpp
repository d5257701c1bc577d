#include "partlat/dot.hpp"

namespace partlat {

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const Poset& p, std::string_view name) {
  std::string out = "digraph " + quoted(name) + " {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=plaintext];\n";
  out += "  edge [arrowhead=none];\n";
  for (Elem x = 0; x < p.size(); ++x) {
    out += "  n" + std::to_string(x) + " [label=" + quoted(p.label(x)) + "];\n";
  }
  for (auto [lo, hi] : covers(p)) {
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  }
  return out + "}\n";
}

std::string emit_dot(const Lattice& l, std::string_view name) { return emit_dot(l.poset(), name); }

std::string emit_dot(const PartialLattice& l, std::string_view name) {
  return emit_dot(induced_order(l), name);
}

}  // namespace partlat
