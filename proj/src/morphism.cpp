#include "partlat/morphism.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace partlat {

const char* to_string(HomClass c) noexcept {
  switch (c) {
    case HomClass::not_hom: return "not_hom";
    case HomClass::hom: return "hom";
    case HomClass::closed_hom: return "closed_hom";
  }
  return "?";
}

HomReport check_hom(std::span<const Elem> map, const PartialLattice& source,
                    const PartialLattice& target) {
  if (map.size() != source.size()) throw BadParameter("map must be total on the source");
  for (Elem y : map)
    if (y >= target.size()) throw BadParameter("map leaves the target carrier");

  std::optional<HomReport> not_closed;
  for (Operation op : {Operation::join, Operation::meet}) {
    for (Elem a = 0; a < source.size(); ++a) {
      for (Elem b = 0; b < source.size(); ++b) {
        const auto s = source.apply(op, a, b);
        const auto t = target.apply(op, map[a], map[b]);
        if (s && (!t || *t != map[*s])) return {HomClass::not_hom, std::pair{a, b}, op};
        if (!s && t && !not_closed) not_closed = HomReport{HomClass::hom, std::pair{a, b}, op};
      }
    }
  }
  if (not_closed) return *not_closed;
  return {HomClass::closed_hom, std::nullopt, Operation::join};
}

namespace {

std::string describe(const HomReport& r, const PartialLattice& source) {
  std::string out = to_string(r.kind);
  if (r.witness) {
    out += " at " + source.label(r.witness->first) + (r.operation == Operation::join ? "∨" : "∧") +
           source.label(r.witness->second);
  }
  return out;
}

}  // namespace

Morphism restrict_hom(const Morphism& hstar, const PartialLattice& l1, const PartialLattice& l2) {
  const auto x1 = two_point_extension(l1);
  const auto x2 = two_point_extension(l2);
  if (hstar.source != to_partial(x1.star) || hstar.target != to_partial(x2.star)) {
    throw BadParameter("star map is not between the two-point extensions");
  }
  if (check_hom(hstar).kind == HomClass::not_hom) {
    throw BadParameter("star map is not a homomorphism");
  }
  std::vector<Elem> map(l1.size());
  for (Elem x = 0; x < l1.size(); ++x) {
    const Elem y = hstar(x);
    if (x2.is_added(y)) {
      throw ImageEscapes(x, "'" + l1.label(x) + "' is sent to adjoined bound " + x2.star.label(y));
    }
    map[x] = y;
  }
  Morphism h{l1, l2, std::move(map)};
  if (check_hom(h).kind == HomClass::not_hom) {
    throw std::logic_error("restriction of a star homomorphism is not a homomorphism");
  }
  return h;
}

Morphism extend_hom(const Morphism& h) {
  const auto report = check_hom(h);
  if (report.kind != HomClass::closed_hom) {
    throw NotClosed("map is " + describe(report, h.source) + ", not a closed homomorphism");
  }
  const auto x1 = two_point_extension(h.source);
  const auto x2 = two_point_extension(h.target);
  std::vector<Elem> map(x1.star.size());
  for (Elem x = 0; x < h.source.size(); ++x) map[x] = h(x);
  if (x1.added_bottom) {
    if (!x2.added_bottom) throw std::logic_error("closed hom but target has no adjoined bottom");
    map[*x1.added_bottom] = *x2.added_bottom;
  }
  if (x1.added_top) {
    if (!x2.added_top) throw std::logic_error("closed hom but target has no adjoined top");
    map[*x1.added_top] = *x2.added_top;
  }
  Morphism hstar{to_partial(x1.star), to_partial(x2.star), std::move(map)};
  if (check_hom(hstar).kind == HomClass::not_hom) {
    throw std::logic_error("extension of a closed homomorphism is not a homomorphism");
  }
  return hstar;
}

Partition kernel(const Morphism& h) { return Partition::from_keys(h.map); }

Morphism canonical_projection(const PartialLattice& l, const Partition& e) {
  auto q = quotient(l, e);
  return Morphism{l, std::move(q), e.block_of()};
}

bool verify_iso(const IsoWitness& w) {
  const auto& f = w.forward;
  const auto& g = w.backward;
  if (f.source != g.target || f.target != g.source) return false;
  if (f.map.size() != f.target.size()) return false;
  for (Elem x = 0; x < f.source.size(); ++x)
    if (g(f(x)) != x) return false;
  for (Elem y = 0; y < g.source.size(); ++y)
    if (f(g(y)) != y) return false;
  return check_hom(f).kind == HomClass::closed_hom && check_hom(g).kind == HomClass::closed_hom;
}

namespace {

std::vector<Elem> invert(const std::vector<Elem>& map) {
  std::vector<Elem> inv(map.size());
  for (Elem x = 0; x < map.size(); ++x) inv[map[x]] = x;
  return inv;
}

}  // namespace

HomTheoremReport hom_theorem_check(const Morphism& h) {
  const auto report = check_hom(h);
  if (report.kind != HomClass::closed_hom) {
    throw NotClosed("map is " + describe(report, h.source) + ", not a closed homomorphism");
  }
  auto ker = kernel(h);
  const auto x1 = two_point_extension(h.source);
  const auto w = check_partial_congruence(x1, ker);
  if (!w.is_congruence) throw std::logic_error("kernel of a closed hom is not a congruence");
  const auto bounds = bound_classes(x1, w.theta);
  if (!bounds.both()) {
    std::string which = !bounds.bottom_singleton ? "bottom" : "";
    if (!bounds.top_singleton) which += which.empty() ? "top" : " and top";
    throw SideConditionFails(!bounds.bottom_singleton, !bounds.top_singleton,
                             "Θ(ker h)-class of the adjoined " + which + " is not a singleton");
  }

  // h(L1) with the target operations restricted to it.
  std::vector<Elem> image = h.map;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  const std::size_t m = image.size();
  auto position = [&](Elem y) -> std::optional<Elem> {
    auto it = std::lower_bound(image.begin(), image.end(), y);
    if (it == image.end() || *it != y) return std::nullopt;
    return static_cast<Elem>(it - image.begin());
  };
  std::vector<std::string> labels;
  for (Elem y : image) labels.push_back(h.target.label(y));
  OpTable join(m * m);
  OpTable meet(m * m);
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      if (auto t = h.target.join(image[i], image[j])) join[i * m + j] = position(*t);
      if (auto t = h.target.meet(image[i], image[j])) meet[i * m + j] = position(*t);
    }
  }
  auto sub = validate_partial_lattice(std::move(labels), std::move(join), std::move(meet));
  auto q = quotient(h.source, ker);

  std::vector<Elem> forward(m);
  for (Elem x = 0; x < h.source.size(); ++x) forward[*position(h(x))] = ker.block_of(x);
  IsoWitness iso{Morphism{sub, q, forward}, Morphism{q, sub, invert(forward)}};
  if (!verify_iso(iso)) throw std::logic_error("image is not isomorphic to L1/ker h");
  return {std::move(ker), std::move(sub), std::move(q), std::move(iso)};
}

IsoWitness extension_quotient_iso(const PartialLattice& l, const Partition& e) {
  const auto x = two_point_extension(l);
  const auto w = check_partial_congruence(x, e);
  if (!w.is_congruence) throw NotACongruence("partition is not a congruence");
  const auto q = quotient(l, e);
  const auto xq = two_point_extension(q);
  const auto star_quotient = quotient_lattice(x.star, w.theta);

  std::vector<Elem> f(xq.star.size());
  for (std::size_t b = 0; b < q.size(); ++b) f[b] = w.theta.block_of(e.representative(b));
  if (xq.added_bottom) {
    if (!x.added_bottom) throw std::logic_error("(L/E)* has a bottom but L* does not");
    f[*xq.added_bottom] = w.theta.block_of(*x.added_bottom);
  }
  if (xq.added_top) {
    if (!x.added_top) throw std::logic_error("(L/E)* has a top but L* does not");
    f[*xq.added_top] = w.theta.block_of(*x.added_top);
  }

  std::vector<bool> hit(star_quotient.size(), false);
  if (f.size() != star_quotient.size()) throw std::logic_error("(L/E)* and L*/Θ(E) differ in size");
  for (Elem y : f) {
    if (hit[y]) throw std::logic_error("(L/E)* → L*/Θ(E) is not injective");
    hit[y] = true;
  }
  IsoWitness iso{Morphism{to_partial(xq.star), to_partial(star_quotient), f},
                 Morphism{to_partial(star_quotient), to_partial(xq.star), invert(f)}};
  if (!verify_iso(iso)) throw std::logic_error("(L/E)* → L*/Θ(E) is not an isomorphism");
  return iso;
}

namespace {

// Per-element invariants preserved by order isomorphisms.
using Signature = std::array<std::size_t, 6>;

std::vector<Signature> signatures(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> height(n, 0), depth(n, 0);
  for (std::size_t round = 0; round < n; ++round) {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (p.less(y, x)) height[x] = std::max(height[x], height[y] + 1);
        if (p.less(x, y)) depth[x] = std::max(depth[x], depth[y] + 1);
      }
    }
  }
  std::vector<Signature> out(n, Signature{});
  for (Elem x = 0; x < n; ++x) {
    out[x][0] = height[x];
    out[x][1] = depth[x];
    for (Elem y = 0; y < n; ++y) {
      if (p.leq(y, x)) ++out[x][2];
      if (p.leq(x, y)) ++out[x][3];
    }
  }
  for (auto [lo, hi] : covers(p)) {
    ++out[hi][4];
    ++out[lo][5];
  }
  return out;
}

bool extend(const Poset& a, const Poset& b, const std::vector<Signature>& sa,
            const std::vector<Signature>& sb, std::vector<Elem>& map, std::vector<bool>& used,
            Elem next) {
  if (next == a.size()) return true;
  for (Elem y = 0; y < b.size(); ++y) {
    if (used[y] || sa[next] != sb[y]) continue;
    bool consistent = true;
    for (Elem x = 0; x < next && consistent; ++x) {
      consistent = a.leq(x, next) == b.leq(map[x], y) && a.leq(next, x) == b.leq(y, map[x]);
    }
    if (!consistent) continue;
    map[next] = y;
    used[y] = true;
    if (extend(a, b, sa, sb, map, used, next + 1)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Elem>> find_order_isomorphism(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return std::nullopt;
  const auto sa = signatures(a);
  const auto sb = signatures(b);
  auto sorted_a = sa;
  auto sorted_b = sb;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;

  std::vector<Elem> map(a.size());
  std::vector<bool> used(b.size(), false);
  if (!extend(a, b, sa, sb, map, used, 0)) return std::nullopt;
  return map;
}

std::optional<IsoWitness> find_isomorphism(const PartialLattice& a, const PartialLattice& b) {
  auto map = find_order_isomorphism(induced_order(a), induced_order(b));
  if (!map) return std::nullopt;
  IsoWitness w{Morphism{a, b, *map}, Morphism{b, a, invert(*map)}};
  if (!verify_iso(w)) throw std::logic_error("order isomorphism does not preserve operations");
  return w;
}

std::optional<IsoWitness> find_isomorphism(const Lattice& a, const Lattice& b) {
  return find_isomorphism(to_partial(a), to_partial(b));
}

}  // namespace partlat
