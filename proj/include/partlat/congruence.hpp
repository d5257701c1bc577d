#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "partlat/extension.hpp"

namespace partlat {

/// Equivalence relation on 0..n-1. Block ids are canonical: block i is the
/// block whose least member is the i-th smallest among all least members.
/// Partitions compare by their block_of arrays.
class Partition {
 public:
  static Partition identity(std::size_t n);
  static Partition full(std::size_t n);
  /// Any labelling of elements by block keys; keys are renumbered.
  static Partition from_keys(const std::vector<std::size_t>& keys);
  /// Listed blocks; unlisted elements become singletons. Throws BadParameter
  /// for out-of-range or repeated elements.
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return count_; }
  std::size_t block_of(Elem x) const { return block_of_.at(x); }
  bool same_block(Elem a, Elem b) const { return block_of_.at(a) == block_of_.at(b); }
  const std::vector<std::size_t>& block_of() const noexcept { return block_of_; }

  /// Blocks in id order, members ascending.
  std::vector<std::vector<Elem>> blocks() const;
  std::vector<Elem> members(std::size_t block) const;
  Elem representative(std::size_t block) const;

  /// Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;
  /// Common refinement (intersection of the relations).
  Partition meet(const Partition& other) const;
  /// Finest common coarsening (equivalence closure of the union).
  Partition join(const Partition& other) const;
  /// Restriction to the elements 0..m-1.
  Partition restrict_prefix(std::size_t m) const;
  /// Extension to 0..m-1 (m ≥ size) with new elements as singletons.
  Partition extend_prefix(std::size_t m) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.block_of_ == b.block_of_;
  }
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.block_of_ <=> b.block_of_;
  }

 private:
  explicit Partition(std::vector<std::size_t> block_of);

  std::vector<std::size_t> block_of_;
  std::size_t count_ = 0;
};

/// True when the partition is a lattice congruence of `k`.
bool is_compatible(const Lattice& k, const Partition& p);

/// Least lattice congruence of `k` containing `seed`.
Partition generate_congruence(const Lattice& k, const Partition& seed);

/// Θ(E) on the star and its restriction to the source carrier.
struct CongruenceWitness {
  Partition theta;
  Partition restriction;
  bool is_congruence = false;
};

CongruenceWitness check_partial_congruence(const Extension& x, const Partition& e);
CongruenceWitness check_partial_congruence(const PartialLattice& l, const Partition& e);
inline bool is_partial_congruence(const PartialLattice& l, const Partition& e) {
  return check_partial_congruence(l, e).is_congruence;
}

/// All congruences of `k`, sorted.
std::vector<Partition> all_congruences(const Lattice& k);

/// All congruences of a partial lattice, sorted.
std::vector<Partition> all_partial_congruences(const PartialLattice& l);

bool con_is_closed_under_meets(const PartialLattice& l);

/// Whether the Θ(E)-classes of the adjoined bounds are singletons. A bound
/// that was not adjoined counts as satisfied.
struct BoundClasses {
  bool bottom_singleton = true;
  bool top_singleton = true;
  bool both() const noexcept { return bottom_singleton && top_singleton; }
};

BoundClasses bound_classes(const Extension& x, const Partition& theta);

/// L/E. Blocks are labelled "[x]" after their least member x and appear in
/// block-id order. Throws NotACongruence.
PartialLattice quotient(const PartialLattice& l, const Partition& e);

/// Which case of the quotient operation rule applies to [a]E op [b]E.
struct QuotientCase {
  enum class Kind {
    defined,          ///< bound set of (a,b) nonempty: [a op b]E
    undefined,        ///< bound set empty and the adjoined bound's Θ-class is a singleton
    alpha,            ///< bound set empty; [α]E with α the least source member of that class
  };
  Kind kind = Kind::defined;
  std::optional<std::size_t> block;  ///< block id of E, when defined
  std::optional<Elem> alpha;
};

const char* to_string(QuotientCase::Kind kind) noexcept;

QuotientCase quotient_case(const PartialLattice& l, const Partition& e, Operation op, Elem a,
                           Elem b);
inline QuotientCase quotient_join_case(const PartialLattice& l, const Partition& e, Elem a,
                                       Elem b) {
  return quotient_case(l, e, Operation::join, a, b);
}
inline QuotientCase quotient_meet_case(const PartialLattice& l, const Partition& e, Elem a,
                                       Elem b) {
  return quotient_case(l, e, Operation::meet, a, b);
}

/// K/θ for a lattice congruence θ: element i is block i, [a] ≤ [b] iff
/// a∨b θ b, labels "[x]" after the least member. Throws NotACongruence.
Lattice quotient_lattice(const Lattice& k, const Partition& theta);

}  // namespace partlat
