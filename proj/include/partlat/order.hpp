#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partlat/error.hpp"

namespace partlat {

/// Elements are dense indices 0..n-1 into a carrier; labels are for I/O only.
using Elem = std::size_t;

/// Labels of the elements adjoined by the two-point extension. They cannot
/// appear in user input.
inline constexpr std::string_view kBottomLabel = "⊥*";
inline constexpr std::string_view kTopLabel = "⊤*";

/// Finite nonempty poset stored as a row-major n×n order matrix.
/// Immutable once constructed.
class Poset {
 public:
  /// Takes a full order matrix and checks reflexivity, antisymmetry and
  /// transitivity. Throws BadParameter / DuplicateLabel / CycleDetected.
  static Poset from_matrix(std::vector<std::string> labels,
                           std::vector<std::uint8_t> leq);

  std::size_t size() const noexcept { return labels_.size(); }
  bool leq(Elem a, Elem b) const { return leq_[a * size() + b] != 0; }
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }

  const std::string& label(Elem a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Elem> find(std::string_view label) const;

  const std::vector<std::uint8_t>& matrix() const noexcept { return leq_; }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  Poset(std::vector<std::string> labels, std::vector<std::uint8_t> leq)
      : labels_(std::move(labels)), leq_(std::move(leq)) {}

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
};

/// Reflexive-transitive closure of `relation` (pairs a ≤ b by label).
Poset make_poset(std::vector<std::string> labels,
                 const std::vector<std::pair<std::string, std::string>>& relation);

/// U(a,b): all x with a ≤ x and b ≤ x, ascending by index.
std::vector<Elem> upper_bounds(const Poset& p, Elem a, Elem b);
/// L(a,b): all x with x ≤ a and x ≤ b, ascending by index.
std::vector<Elem> lower_bounds(const Poset& p, Elem a, Elem b);

/// Least element of `set` under p, if there is one.
std::optional<Elem> least_element(const Poset& p, const std::vector<Elem>& set);
std::optional<Elem> greatest_element(const Poset& p, const std::vector<Elem>& set);

/// Result of checking the lower and upper bound properties.
struct PlosReport {
  enum class Failure { none, upper, lower };

  bool ok = true;
  Failure failure = Failure::none;
  PairWitness witness{};
  /// The nonempty bound set lacking a least (upper) or greatest (lower) member.
  std::vector<Elem> bound_set;
};

/// Every nonempty U(x,y) must have a least element and every nonempty L(x,y)
/// a greatest one. Reports the first failing pair in index order.
PlosReport check_plos(const Poset& p);
inline bool is_plos(const Poset& p) { return check_plos(p).ok; }

/// Strict covers x ⋖ y, sorted.
std::vector<std::pair<Elem, Elem>> covers(const Poset& p);

/// Finite nonempty lattice: a poset with total join and meet tables.
class Lattice {
 public:
  const Poset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }
  const std::string& label(Elem a) const { return poset_.label(a); }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  friend Lattice validate_lattice(Poset p);
  Lattice(Poset p, std::vector<Elem> join, std::vector<Elem> meet, Elem bottom, Elem top)
      : poset_(std::move(p)),
        join_(std::move(join)),
        meet_(std::move(meet)),
        bottom_(bottom),
        top_(top) {}

  Poset poset_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  Elem bottom_;
  Elem top_;
};

/// Totalizes sup/inf; throws NotALattice naming the first pair that has no
/// supremum or infimum.
Lattice validate_lattice(Poset p);

enum class NamedLattice {
  chain,    ///< k-element chain 0 < 1 < ... < k-1
  diamond,  ///< M_n: bottom, n pairwise incomparable atoms, top (n ≥ 2)
  pentagon, ///< N5: 0 < x < z < 1, 0 < y < 1 (parameter ignored)
  boolean,  ///< subsets of a k-set, 2^k elements (k ≤ 10)
};

/// Throws BadParameter on out-of-range sizes.
Lattice named_lattice(NamedLattice kind, std::size_t parameter = 0);

bool is_distributive(const Lattice& l);
bool is_modular(const Lattice& l);

}  // namespace partlat
