#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partlat/plattice.hpp"

namespace partlat {

/// The two-point extension L* of a partial lattice L.
///
/// Star indices 0..n-1 are the source elements in source order (so `embed`
/// is the identity map), followed by ⊥* when the source meet is partial and
/// ⊤* when the source join is partial. ⊥* lies below and ⊤* above every
/// other star element.
struct Extension {
  PartialLattice source;
  Lattice star;
  std::vector<Elem> embed;
  std::optional<Elem> added_bottom;
  std::optional<Elem> added_top;

  Elem star_join(Elem a, Elem b) const { return star.join(a, b); }
  Elem star_meet(Elem a, Elem b) const { return star.meet(a, b); }

  /// Source index of a star element, or nothing for an adjoined bound.
  std::optional<Elem> to_source(Elem star_element) const {
    return star_element < source.size() ? std::optional<Elem>(star_element) : std::nullopt;
  }
  bool is_added(Elem star_element) const { return star_element >= source.size(); }
};

Extension two_point_extension(const PartialLattice& l);

/// Totalization of a partial lattice by a single fresh element c: every
/// undefined cell, and every cell involving c, evaluates to c.
struct OnePointAlgebra {
  std::vector<std::string> labels;
  std::vector<Elem> join;  ///< row-major, total
  std::vector<Elem> meet;
  std::optional<Elem> fresh;  ///< absent when the source was already total

  std::size_t size() const noexcept { return labels.size(); }

  /// Tries to read the totalized tables as a partial lattice. Returns the
  /// violated axiom with witness, or nothing when validation succeeds.
  std::optional<AxiomViolation> validation_failure() const;
};

/// Label of the fresh element of the one-point extension.
inline constexpr std::string_view kFreshLabel = "c*";

OnePointAlgebra one_point_extension(const PartialLattice& l);

}  // namespace partlat
