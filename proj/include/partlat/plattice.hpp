#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partlat/order.hpp"

namespace partlat {

/// Row-major n×n operation table; an empty cell means "undefined".
using OpTable = std::vector<std::optional<Elem>>;

enum class Operation { join, meet };

const char* to_string(Operation op) noexcept;

/// Axiom families of a partial lattice, in validation order.
enum class Axiom { idempotency, commutativity, duality, associativity };

const char* to_string(Axiom axiom) noexcept;

class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom axiom, Operation op, std::vector<Elem> witness, const std::string& what)
      : Error(what), axiom_(axiom), op_(op), witness_(std::move(witness)) {}
  Axiom axiom() const noexcept { return axiom_; }
  Operation operation() const noexcept { return op_; }
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  Axiom axiom_;
  Operation op_;
  std::vector<Elem> witness_;
};

/// A finite partial algebra (L, ∨, ∧) with strong idempotency, commutativity,
/// associativity and the duality conditions. Only obtainable through
/// validate_partial_lattice / from_plos / to_partial, so every value is valid.
class PartialLattice {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  std::optional<Elem> join(Elem a, Elem b) const { return join_[a * size() + b]; }
  std::optional<Elem> meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  std::optional<Elem> apply(Operation op, Elem a, Elem b) const {
    return op == Operation::join ? join(a, b) : meet(a, b);
  }

  const std::string& label(Elem a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Elem> find(std::string_view label) const;

  const OpTable& join_table() const noexcept { return join_; }
  const OpTable& meet_table() const noexcept { return meet_; }

  /// Label-sensitive, cell-for-cell equality.
  friend bool operator==(const PartialLattice&, const PartialLattice&) = default;

 private:
  friend PartialLattice validate_partial_lattice(std::vector<std::string>, OpTable, OpTable);
  PartialLattice(std::vector<std::string> labels, OpTable join, OpTable meet)
      : labels_(std::move(labels)), join_(std::move(join)), meet_(std::move(meet)) {}

  std::vector<std::string> labels_;
  OpTable join_;
  OpTable meet_;
};

/// Checks idempotency, commutativity, duality, then associativity (all in the
/// strong sense) and throws AxiomViolation for the first failure.
/// Throws BadParameter / DuplicateLabel for malformed tables.
PartialLattice validate_partial_lattice(std::vector<std::string> labels, OpTable join,
                                        OpTable meet);

/// x ≤ y iff x∨y = y.
Poset induced_order(const PartialLattice& l);

/// sup/inf where the bound sets are nonempty, undefined otherwise.
/// Throws NotPlos when the order lacks the bound properties.
PartialLattice from_plos(const Poset& p);

/// A total lattice read as a partial lattice.
PartialLattice to_partial(const Lattice& l);

bool lp_roundtrip(const PartialLattice& l);
bool pl_roundtrip(const Poset& p);

// -- fixed identity schemas -------------------------------------------------

enum class IdentitySchema {
  absorption_join,    ///< (x∨y)∧x ≈ x
  absorption_meet,    ///< (x∧y)∨x ≈ x
  distributive_meet,  ///< x∧(y∨z) ≈ (x∧y)∨(x∧z)
  distributive_join,  ///< x∨(y∧z) ≈ (x∨y)∧(x∨z)
};

/// weak: sides agree wherever both are defined.
/// strong: additionally both sides are defined for exactly the same arguments.
enum class IdentityMode { weak, strong };

const char* to_string(IdentitySchema schema) noexcept;

struct IdentityReport {
  IdentitySchema schema{};
  IdentityMode mode{};
  bool holds = true;
  /// First failing assignment (x, y) or (x, y, z).
  std::optional<std::vector<Elem>> witness;
  /// Assignments of pairwise distinct elements where every subterm of both
  /// sides is defined.
  std::size_t fully_defined_distinct = 0;
};

IdentityReport check_identity(const PartialLattice& l, IdentitySchema schema,
                              IdentityMode mode);

/// Both absorption laws; returns the first failing report, or the holding
/// report for absorption_meet when both hold.
IdentityReport check_absorption(const PartialLattice& l, IdentityMode mode);

enum class Totality { both_total, join_partial, meet_partial, both_partial };

const char* to_string(Totality t) noexcept;

Totality classify_totality(const PartialLattice& l);

inline bool join_is_total(Totality t) {
  return t == Totality::both_total || t == Totality::meet_partial;
}
inline bool meet_is_total(Totality t) {
  return t == Totality::both_total || t == Totality::join_partial;
}

}  // namespace partlat
