#include "partlat/plattice.hpp"

#include <algorithm>
#include <set>

namespace partlat {

const char* to_string(Operation op) noexcept { return op == Operation::join ? "join" : "meet"; }

const char* to_string(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::idempotency: return "idempotency";
    case Axiom::commutativity: return "commutativity";
    case Axiom::duality: return "duality";
    case Axiom::associativity: return "associativity";
  }
  return "?";
}

const char* to_string(IdentitySchema schema) noexcept {
  switch (schema) {
    case IdentitySchema::absorption_join: return "(x∨y)∧x ≈ x";
    case IdentitySchema::absorption_meet: return "(x∧y)∨x ≈ x";
    case IdentitySchema::distributive_meet: return "x∧(y∨z) ≈ (x∧y)∨(x∧z)";
    case IdentitySchema::distributive_join: return "x∨(y∧z) ≈ (x∨y)∧(x∨z)";
  }
  return "?";
}

const char* to_string(Totality t) noexcept {
  switch (t) {
    case Totality::both_total: return "both_total";
    case Totality::join_partial: return "join_partial";
    case Totality::meet_partial: return "meet_partial";
    case Totality::both_partial: return "both_partial";
  }
  return "?";
}

std::optional<Elem> PartialLattice::find(std::string_view label) const {
  for (Elem i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

namespace {

std::string cell_name(Operation op) { return op == Operation::join ? "∨" : "∧"; }

std::string show(const std::vector<std::string>& labels, std::optional<Elem> v) {
  return v ? labels[*v] : std::string("undefined");
}

// Compound application where an undefined argument makes the result undefined.
std::optional<Elem> apply(const OpTable& t, std::size_t n, std::optional<Elem> a,
                          std::optional<Elem> b) {
  if (!a || !b) return std::nullopt;
  return t[*a * n + *b];
}

void check_table(const OpTable& t, std::size_t n, const char* name) {
  if (t.size() != n * n) throw BadParameter(std::string(name) + " table must be n×n");
  for (const auto& cell : t) {
    if (cell && *cell >= n) throw BadParameter(std::string(name) + " table entry out of range");
  }
}

void check_idempotent(const std::vector<std::string>& labels, const OpTable& t, Operation op) {
  const std::size_t n = labels.size();
  for (Elem x = 0; x < n; ++x) {
    if (t[x * n + x] != x) {
      throw AxiomViolation(Axiom::idempotency, op, {x},
                           "idempotency fails: " + labels[x] + cell_name(op) + labels[x] +
                               " = " + show(labels, t[x * n + x]));
    }
  }
}

void check_commutative(const std::vector<std::string>& labels, const OpTable& t, Operation op) {
  const std::size_t n = labels.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      if (t[x * n + y] != t[y * n + x]) {
        throw AxiomViolation(Axiom::commutativity, op, {x, y},
                             "commutativity fails: " + labels[x] + cell_name(op) + labels[y] +
                                 " = " + show(labels, t[x * n + y]) + " but " + labels[y] +
                                 cell_name(op) + labels[x] + " = " + show(labels, t[y * n + x]));
      }
    }
  }
}

// x∨y = y ⇒ x∧y = x and x∧y = x ⇒ x∨y = y. Under commutativity this is the
// same as the pair of conditions with the roles of x and y swapped.
void check_duality(const std::vector<std::string>& labels, const OpTable& join,
                   const OpTable& meet) {
  const std::size_t n = labels.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (join[x * n + y] == y && meet[x * n + y] != x) {
        throw AxiomViolation(Axiom::duality, Operation::join, {x, y},
                             "duality fails: " + labels[x] + "∨" + labels[y] + " = " + labels[y] +
                                 " but " + labels[x] + "∧" + labels[y] + " = " +
                                 show(labels, meet[x * n + y]));
      }
      if (meet[x * n + y] == x && join[x * n + y] != y) {
        throw AxiomViolation(Axiom::duality, Operation::meet, {x, y},
                             "duality fails: " + labels[x] + "∧" + labels[y] + " = " + labels[x] +
                                 " but " + labels[x] + "∨" + labels[y] + " = " +
                                 show(labels, join[x * n + y]));
      }
    }
  }
}

void check_associative(const std::vector<std::string>& labels, const OpTable& t, Operation op) {
  const std::size_t n = labels.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        auto left = apply(t, n, t[x * n + y], z);
        auto right = apply(t, n, x, t[y * n + z]);
        if (left != right) {
          const auto o = cell_name(op);
          throw AxiomViolation(Axiom::associativity, op, {x, y, z},
                               "associativity fails: (" + labels[x] + o + labels[y] + ")" + o +
                                   labels[z] + " = " + show(labels, left) + " but " + labels[x] +
                                   o + "(" + labels[y] + o + labels[z] + ") = " +
                                   show(labels, right));
        }
      }
    }
  }
}

}  // namespace

PartialLattice validate_partial_lattice(std::vector<std::string> labels, OpTable join,
                                        OpTable meet) {
  if (labels.empty()) throw BadParameter("carrier must be nonempty");
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw DuplicateLabel(l);
  }
  const std::size_t n = labels.size();
  check_table(join, n, "join");
  check_table(meet, n, "meet");

  check_idempotent(labels, join, Operation::join);
  check_idempotent(labels, meet, Operation::meet);
  check_commutative(labels, join, Operation::join);
  check_commutative(labels, meet, Operation::meet);
  check_duality(labels, join, meet);
  check_associative(labels, join, Operation::join);
  check_associative(labels, meet, Operation::meet);
  return PartialLattice(std::move(labels), std::move(join), std::move(meet));
}

Poset induced_order(const PartialLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::uint8_t> leq(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) leq[x * n + y] = l.join(x, y) == y ? 1 : 0;
  return Poset::from_matrix(l.labels(), std::move(leq));
}

PartialLattice from_plos(const Poset& p) {
  auto report = check_plos(p);
  if (!report.ok) {
    const auto& [a, b] = report.witness;
    const bool upper = report.failure == PlosReport::Failure::upper;
    std::string set;
    for (Elem x : report.bound_set) set += (set.empty() ? "" : ",") + p.label(x);
    throw NotPlos(report.witness, std::string(upper ? "U(" : "L(") + p.label(a) + "," +
                                      p.label(b) + ") = {" + set + "} has no " +
                                      (upper ? "least" : "greatest") + " element");
  }
  const std::size_t n = p.size();
  OpTable join(n * n);
  OpTable meet(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      join[a * n + b] = least_element(p, upper_bounds(p, a, b));
      meet[a * n + b] = greatest_element(p, lower_bounds(p, a, b));
    }
  }
  return validate_partial_lattice(p.labels(), std::move(join), std::move(meet));
}

PartialLattice to_partial(const Lattice& l) {
  const std::size_t n = l.size();
  OpTable join(n * n);
  OpTable meet(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      join[a * n + b] = l.join(a, b);
      meet[a * n + b] = l.meet(a, b);
    }
  }
  return validate_partial_lattice(l.poset().labels(), std::move(join), std::move(meet));
}

bool lp_roundtrip(const PartialLattice& l) { return from_plos(induced_order(l)) == l; }

bool pl_roundtrip(const Poset& p) { return induced_order(from_plos(p)) == p; }

IdentityReport check_identity(const PartialLattice& l, IdentitySchema schema,
                              IdentityMode mode) {
  using Opt = std::optional<Elem>;
  auto j = [&](Opt a, Opt b) -> Opt { return a && b ? l.join(*a, *b) : std::nullopt; };
  auto m = [&](Opt a, Opt b) -> Opt { return a && b ? l.meet(*a, *b) : std::nullopt; };

  IdentityReport report;
  report.schema = schema;
  report.mode = mode;
  auto judge = [&](Opt lhs, Opt rhs, std::vector<Elem> args) {
    bool bad = mode == IdentityMode::strong ? lhs.has_value() != rhs.has_value() : false;
    bad = bad || (lhs && rhs && *lhs != *rhs);
    if (bad && report.holds) {
      report.holds = false;
      report.witness = std::move(args);
    }
  };

  const std::size_t n = l.size();
  const bool binary = schema == IdentitySchema::absorption_join ||
                      schema == IdentitySchema::absorption_meet;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (binary) {
        Opt inner = schema == IdentitySchema::absorption_join ? j(x, y) : m(x, y);
        Opt lhs = schema == IdentitySchema::absorption_join ? m(inner, x) : j(inner, x);
        if (x != y && lhs) ++report.fully_defined_distinct;
        judge(lhs, x, {x, y});
        continue;
      }
      for (Elem z = 0; z < n; ++z) {
        Opt lhs, rhs, parts[3];
        if (schema == IdentitySchema::distributive_meet) {
          parts[0] = j(y, z);
          parts[1] = m(x, y);
          parts[2] = m(x, z);
          lhs = m(x, parts[0]);
          rhs = j(parts[1], parts[2]);
        } else {
          parts[0] = m(y, z);
          parts[1] = j(x, y);
          parts[2] = j(x, z);
          lhs = j(x, parts[0]);
          rhs = m(parts[1], parts[2]);
        }
        if (x != y && y != z && x != z && lhs && rhs && parts[1] && parts[2]) {
          ++report.fully_defined_distinct;
        }
        judge(lhs, rhs, {x, y, z});
      }
    }
  }
  return report;
}

IdentityReport check_absorption(const PartialLattice& l, IdentityMode mode) {
  auto first = check_identity(l, IdentitySchema::absorption_join, mode);
  if (!first.holds) return first;
  return check_identity(l, IdentitySchema::absorption_meet, mode);
}

Totality classify_totality(const PartialLattice& l) {
  auto total = [](const OpTable& t) {
    return std::all_of(t.begin(), t.end(), [](const auto& c) { return c.has_value(); });
  };
  const bool j = total(l.join_table());
  const bool m = total(l.meet_table());
  if (j && m) return Totality::both_total;
  if (m) return Totality::join_partial;
  if (j) return Totality::meet_partial;
  return Totality::both_partial;
}

}  // namespace partlat
