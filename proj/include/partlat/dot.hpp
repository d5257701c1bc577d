#pragma once

#include <string>
#include <string_view>

#include "partlat/plattice.hpp"

namespace partlat {

/// Graphviz digraph of the cover relation, drawn bottom-up. Nodes appear in
/// carrier order, edges in sorted cover order.
std::string emit_dot(const Poset& p, std::string_view name = "order");
std::string emit_dot(const Lattice& l, std::string_view name = "lattice");
/// Hasse diagram of the induced order.
std::string emit_dot(const PartialLattice& l, std::string_view name = "plattice");

}  // namespace partlat
