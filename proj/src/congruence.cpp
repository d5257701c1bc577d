#include "partlat/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace partlat {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false when a and b were already together.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  std::vector<std::size_t> keys() {
    std::vector<std::size_t> out(parent_.size());
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = find(x);
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

}  // namespace

// -- Partition ---------------------------------------------------------------

Partition::Partition(std::vector<std::size_t> block_of) : block_of_(std::move(block_of)) {
  count_ = block_of_.empty() ? 0 : *std::max_element(block_of_.begin(), block_of_.end()) + 1;
}

Partition Partition::identity(std::size_t n) {
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return Partition(std::move(ids));
}

Partition Partition::full(std::size_t n) { return Partition(std::vector<std::size_t>(n, 0)); }

Partition Partition::from_keys(const std::vector<std::size_t>& keys) {
  std::vector<std::size_t> ids(keys.size());
  std::vector<std::pair<std::size_t, std::size_t>> seen;  // key -> id
  for (std::size_t x = 0; x < keys.size(); ++x) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& kv) { return kv.first == keys[x]; });
    if (it == seen.end()) {
      seen.emplace_back(keys[x], seen.size());
      ids[x] = seen.back().second;
    } else {
      ids[x] = it->second;
    }
  }
  return Partition(std::move(ids));
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks) {
  std::vector<std::size_t> keys(n);
  std::iota(keys.begin(), keys.end(), std::size_t{0});
  std::vector<bool> listed(n, false);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Elem x : blocks[b]) {
      if (x >= n) throw BadParameter("partition element out of range");
      if (listed[x]) throw BadParameter("element listed in more than one block");
      listed[x] = true;
      keys[x] = n + b;
    }
  }
  return from_keys(keys);
}

std::vector<std::vector<Elem>> Partition::blocks() const {
  std::vector<std::vector<Elem>> out(count_);
  for (Elem x = 0; x < size(); ++x) out[block_of_[x]].push_back(x);
  return out;
}

std::vector<Elem> Partition::members(std::size_t block) const {
  std::vector<Elem> out;
  for (Elem x = 0; x < size(); ++x)
    if (block_of_[x] == block) out.push_back(x);
  return out;
}

Elem Partition::representative(std::size_t block) const {
  for (Elem x = 0; x < size(); ++x)
    if (block_of_[x] == block) return x;
  throw std::out_of_range("no such block");
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  std::vector<std::size_t> image(count_, coarser.size());
  for (Elem x = 0; x < size(); ++x) {
    auto& slot = image[block_of_[x]];
    if (slot == coarser.size()) slot = coarser.block_of_[x];
    else if (slot != coarser.block_of_[x]) return false;
  }
  return true;
}

Partition Partition::meet(const Partition& other) const {
  if (other.size() != size()) throw BadParameter("partition sizes differ");
  std::vector<std::size_t> keys(size());
  for (Elem x = 0; x < size(); ++x) keys[x] = block_of_[x] * other.count_ + other.block_of_[x];
  return from_keys(keys);
}

Partition Partition::join(const Partition& other) const {
  if (other.size() != size()) throw BadParameter("partition sizes differ");
  DisjointSets ds(size());
  for (const auto* p : {this, &other}) {
    std::vector<std::size_t> first(p->count_, size());
    for (Elem x = 0; x < size(); ++x) {
      auto& f = first[p->block_of_[x]];
      if (f == size()) f = x;
      else ds.unite(f, x);
    }
  }
  return from_keys(ds.keys());
}

Partition Partition::restrict_prefix(std::size_t m) const {
  if (m > size()) throw BadParameter("restriction larger than carrier");
  return from_keys(std::vector<std::size_t>(block_of_.begin(), block_of_.begin() + m));
}

Partition Partition::extend_prefix(std::size_t m) const {
  if (m < size()) throw BadParameter("extension smaller than carrier");
  std::vector<std::size_t> keys = block_of_;
  for (std::size_t x = size(); x < m; ++x) keys.push_back(count_ + x);
  return from_keys(keys);
}

// -- lattice congruences -----------------------------------------------------

bool is_compatible(const Lattice& k, const Partition& p) {
  if (p.size() != k.size()) return false;
  for (Elem a = 0; a < k.size(); ++a) {
    for (Elem b = a + 1; b < k.size(); ++b) {
      if (!p.same_block(a, b)) continue;
      for (Elem c = 0; c < k.size(); ++c) {
        if (!p.same_block(k.join(a, c), k.join(b, c))) return false;
        if (!p.same_block(k.meet(a, c), k.meet(b, c))) return false;
      }
    }
  }
  return true;
}

Partition generate_congruence(const Lattice& k, const Partition& seed) {
  const std::size_t n = k.size();
  if (seed.size() != n) throw BadParameter("seed does not partition the lattice carrier");

  // The closure is the equivalence generated by the recorded edges; it is
  // compatible once every edge has been pushed through every translation.
  DisjointSets ds(n);
  std::vector<std::pair<Elem, Elem>> work;
  auto unite = [&](Elem a, Elem b) {
    if (ds.unite(a, b)) work.emplace_back(a, b);
  };
  for (const auto& block : seed.blocks())
    for (std::size_t i = 1; i < block.size(); ++i) unite(block.front(), block[i]);

  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (Elem c = 0; c < n; ++c) {
      unite(k.join(a, c), k.join(b, c));
      unite(k.meet(a, c), k.meet(b, c));
    }
  }
  return Partition::from_keys(ds.keys());
}

std::vector<Partition> all_congruences(const Lattice& k) {
  const std::size_t n = k.size();
  std::set<Partition> found{Partition::identity(n)};
  std::vector<Partition> principal;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      auto theta = generate_congruence(k, Partition::from_blocks(n, {{a, b}}));
      if (found.insert(theta).second) principal.push_back(theta);
    }
  }
  // Close under joins; every congruence is a join of principal ones.
  std::vector<Partition> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& p : frontier) {
      for (const auto& q : principal) {
        auto joined = generate_congruence(k, p.join(q));
        if (found.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

// -- partial lattice congruences --------------------------------------------

CongruenceWitness check_partial_congruence(const Extension& x, const Partition& e) {
  const std::size_t n = x.source.size();
  if (e.size() != n) throw BadParameter("partition does not cover the carrier");
  auto theta = generate_congruence(x.star, e.extend_prefix(x.star.size()));
  auto restriction = theta.restrict_prefix(n);
  const bool ok = restriction == e;
  return {std::move(theta), std::move(restriction), ok};
}

CongruenceWitness check_partial_congruence(const PartialLattice& l, const Partition& e) {
  return check_partial_congruence(two_point_extension(l), e);
}

std::vector<Partition> all_partial_congruences(const PartialLattice& l) {
  const auto x = two_point_extension(l);
  std::set<Partition> out;
  for (const auto& theta : all_congruences(x.star)) out.insert(theta.restrict_prefix(l.size()));
  return {out.begin(), out.end()};
}

bool con_is_closed_under_meets(const PartialLattice& l) {
  const auto con = all_partial_congruences(l);
  for (std::size_t i = 0; i < con.size(); ++i) {
    for (std::size_t j = i + 1; j < con.size(); ++j) {
      if (!std::binary_search(con.begin(), con.end(), con[i].meet(con[j]))) return false;
    }
  }
  return true;
}

BoundClasses bound_classes(const Extension& x, const Partition& theta) {
  BoundClasses out;
  auto singleton = [&](Elem b) { return theta.members(theta.block_of(b)).size() == 1; };
  if (x.added_bottom) out.bottom_singleton = singleton(*x.added_bottom);
  if (x.added_top) out.top_singleton = singleton(*x.added_top);
  return out;
}

namespace {

// Least source member of the Θ-class of star element s.
std::optional<Elem> source_member(const Extension& x, const Partition& theta, Elem s) {
  const auto block = theta.block_of(s);
  for (Elem y = 0; y < x.source.size(); ++y)
    if (theta.block_of(y) == block) return y;
  return std::nullopt;
}

CongruenceWitness require_congruence(const Extension& x, const Partition& e) {
  auto w = check_partial_congruence(x, e);
  if (!w.is_congruence) {
    throw NotACongruence("not a congruence: Θ(E) restricted to the carrier has " +
                         std::to_string(w.restriction.block_count()) + " blocks, E has " +
                         std::to_string(e.block_count()));
  }
  return w;
}

}  // namespace

PartialLattice quotient(const PartialLattice& l, const Partition& e) {
  const auto x = two_point_extension(l);
  const auto w = require_congruence(x, e);
  const std::size_t q = e.block_count();

  std::vector<std::string> labels;
  std::vector<Elem> reps;
  for (std::size_t b = 0; b < q; ++b) {
    reps.push_back(e.representative(b));
    labels.push_back("[" + l.label(reps.back()) + "]");
  }

  OpTable join(q * q);
  OpTable meet(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      if (auto y = source_member(x, w.theta, x.star_join(reps[i], reps[j])))
        join[i * q + j] = e.block_of(*y);
      if (auto y = source_member(x, w.theta, x.star_meet(reps[i], reps[j])))
        meet[i * q + j] = e.block_of(*y);
    }
  }
  return validate_partial_lattice(std::move(labels), std::move(join), std::move(meet));
}

const char* to_string(QuotientCase::Kind kind) noexcept {
  switch (kind) {
    case QuotientCase::Kind::defined: return "defined";
    case QuotientCase::Kind::undefined: return "undefined";
    case QuotientCase::Kind::alpha: return "alpha";
  }
  return "?";
}

QuotientCase quotient_case(const PartialLattice& l, const Partition& e, Operation op, Elem a,
                           Elem b) {
  const auto x = two_point_extension(l);
  const auto w = require_congruence(x, e);
  if (auto v = l.apply(op, a, b)) {
    return {QuotientCase::Kind::defined, e.block_of(*v), std::nullopt};
  }
  const auto bound = op == Operation::join ? x.added_top : x.added_bottom;
  if (!bound) throw std::logic_error("undefined cell without an adjoined bound");
  const auto members = w.theta.members(w.theta.block_of(*bound));
  if (members.size() == 1) return {QuotientCase::Kind::undefined, std::nullopt, std::nullopt};
  auto alpha = source_member(x, w.theta, *bound);
  if (!alpha) throw std::logic_error("bound class without a source member");
  return {QuotientCase::Kind::alpha, e.block_of(*alpha), *alpha};
}

Lattice quotient_lattice(const Lattice& k, const Partition& theta) {
  if (!is_compatible(k, theta)) throw NotACongruence("partition is not a lattice congruence");
  const std::size_t q = theta.block_count();
  std::vector<std::string> labels;
  std::vector<Elem> reps;
  for (std::size_t b = 0; b < q; ++b) {
    reps.push_back(theta.representative(b));
    labels.push_back("[" + k.label(reps.back()) + "]");
  }
  std::vector<std::uint8_t> leq(q * q, 0);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      leq[i * q + j] = theta.block_of(k.join(reps[i], reps[j])) == j ? 1 : 0;
  return validate_lattice(Poset::from_matrix(std::move(labels), std::move(leq)));
}

}  // namespace partlat
