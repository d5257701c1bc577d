#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "partlat/congruence.hpp"

namespace partlat {

/// A total map between carriers. Partiality lives in the operations of the
/// source and target, not in the map.
struct Morphism {
  PartialLattice source;
  PartialLattice target;
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map.at(x); }
};

enum class HomClass { not_hom, hom, closed_hom };

const char* to_string(HomClass c) noexcept;

struct HomReport {
  HomClass kind = HomClass::closed_hom;
  /// For not_hom: a pair whose defined source value is not preserved.
  /// For hom: a pair defined on the target side only.
  std::optional<std::pair<Elem, Elem>> witness;
  Operation operation = Operation::join;
};

/// Throws BadParameter if `map` is not a total map from source into target.
HomReport check_hom(std::span<const Elem> map, const PartialLattice& source,
                    const PartialLattice& target);
inline HomReport check_hom(const Morphism& m) { return check_hom(m.map, m.source, m.target); }

/// Mutually inverse closed homomorphisms.
struct IsoWitness {
  Morphism forward;
  Morphism backward;
};

/// Restriction of a star-level homomorphism to the source carriers. Throws
/// ImageEscapes when a source element is sent to an adjoined bound, and
/// BadParameter when `hstar` is not a homomorphism between the two stars.
Morphism restrict_hom(const Morphism& hstar, const PartialLattice& l1, const PartialLattice& l2);

/// The star map x ↦ h(x), ⊥* ↦ ⊥*, ⊤* ↦ ⊤*, as a homomorphism between the
/// stars read as partial lattices. Throws NotClosed unless h is a closed
/// homomorphism.
Morphism extend_hom(const Morphism& h);

/// Partition of the source by equal images.
Partition kernel(const Morphism& h);

/// x ↦ [x]E into quotient(l, e). Throws NotACongruence.
Morphism canonical_projection(const PartialLattice& l, const Partition& e);

struct HomTheoremReport {
  Partition kernel;
  /// h(L1) with the operations of the target restricted to it.
  PartialLattice image;
  PartialLattice quotient;
  /// image → quotient, h(x) ↦ [x] ker h.
  IsoWitness iso;
};

/// Throws NotClosed, SideConditionFails.
HomTheoremReport hom_theorem_check(const Morphism& h);

/// (L/E)* ≅ L*/Θ(E) via [x]E ↦ [x]Θ(E) and the adjoined bounds to the
/// classes of the adjoined bounds of L*. Throws NotACongruence; a failed
/// verification is a library bug and throws std::logic_error.
IsoWitness extension_quotient_iso(const PartialLattice& l, const Partition& e);

/// Order isomorphism a → b, if any.
std::optional<std::vector<Elem>> find_order_isomorphism(const Poset& a, const Poset& b);

std::optional<IsoWitness> find_isomorphism(const Lattice& a, const Lattice& b);
/// Isomorphism of partial lattices; they are isomorphic iff their induced
/// orders are.
std::optional<IsoWitness> find_isomorphism(const PartialLattice& a, const PartialLattice& b);

/// Checks that the witness really is a pair of inverse closed homomorphisms.
bool verify_iso(const IsoWitness& w);

}  // namespace partlat
