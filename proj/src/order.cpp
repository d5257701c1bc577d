#include "partlat/order.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace partlat {

CycleDetected::CycleDetected(std::vector<std::string> cycle)
    : Error([&] {
        std::string msg = "relation is not antisymmetric: ";
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          if (i != 0) msg += " < ";
          msg += cycle[i];
        }
        return msg;
      }()),
      cycle_(std::move(cycle)) {}

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.empty()) throw BadParameter("carrier must be nonempty");
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw DuplicateLabel(l);
  }
}

// Shortest path from `from` to `to` along the direct input edges.
std::vector<Elem> edge_path(const std::vector<std::vector<Elem>>& succ, Elem from, Elem to) {
  std::vector<Elem> parent(succ.size(), succ.size());
  std::deque<Elem> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (Elem y : succ[x]) {
      if (parent[y] == succ.size()) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<Elem> path;
  for (Elem x = to; x != from; x = parent[x]) path.push_back(x);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Poset Poset::from_matrix(std::vector<std::string> labels, std::vector<std::uint8_t> leq) {
  check_labels(labels);
  const std::size_t n = labels.size();
  if (leq.size() != n * n) throw BadParameter("order matrix must be n×n");
  auto at = [&](Elem i, Elem j) { return leq[i * n + j] != 0; };
  for (Elem i = 0; i < n; ++i) {
    if (!at(i, i)) throw BadParameter("order is not reflexive at '" + labels[i] + "'");
    for (Elem j = 0; j < n; ++j) {
      if (i != j && at(i, j) && at(j, i)) throw CycleDetected({labels[i], labels[j], labels[i]});
      for (Elem k = 0; k < n; ++k) {
        if (at(i, j) && at(j, k) && !at(i, k)) {
          throw BadParameter("order is not transitive: " + labels[i] + " ≤ " + labels[j] +
                             " ≤ " + labels[k]);
        }
      }
    }
  }
  for (auto& cell : leq) cell = cell != 0 ? 1 : 0;
  return Poset(std::move(labels), std::move(leq));
}

std::optional<Elem> Poset::find(std::string_view label) const {
  for (Elem i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Poset make_poset(std::vector<std::string> labels,
                 const std::vector<std::pair<std::string, std::string>>& relation) {
  check_labels(labels);
  const std::size_t n = labels.size();
  auto index = [&](const std::string& name) -> Elem {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw UnknownLabel(name);
    return static_cast<Elem>(it - labels.begin());
  };

  std::vector<std::vector<Elem>> succ(n);
  std::vector<std::uint8_t> leq(n * n, 0);
  for (Elem i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [lo, hi] : relation) {
    Elem a = index(lo);
    Elem b = index(hi);
    if (a == b) continue;
    succ[a].push_back(b);
    leq[a * n + b] = 1;
  }
  // Warshall closure.
  for (Elem k = 0; k < n; ++k)
    for (Elem i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (Elem j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;

  for (Elem i = 0; i < n; ++i) {
    for (Elem j = i + 1; j < n; ++j) {
      if (leq[i * n + j] && leq[j * n + i]) {
        auto there = edge_path(succ, i, j);
        auto back = edge_path(succ, j, i);
        std::vector<std::string> cycle;
        for (Elem x : there) cycle.push_back(labels[x]);
        for (std::size_t t = 1; t < back.size(); ++t) cycle.push_back(labels[back[t]]);
        throw CycleDetected(std::move(cycle));
      }
    }
  }
  return Poset::from_matrix(std::move(labels), std::move(leq));
}

std::vector<Elem> upper_bounds(const Poset& p, Elem a, Elem b) {
  std::vector<Elem> out;
  for (Elem x = 0; x < p.size(); ++x) {
    if (p.leq(a, x) && p.leq(b, x)) out.push_back(x);
  }
  return out;
}

std::vector<Elem> lower_bounds(const Poset& p, Elem a, Elem b) {
  std::vector<Elem> out;
  for (Elem x = 0; x < p.size(); ++x) {
    if (p.leq(x, a) && p.leq(x, b)) out.push_back(x);
  }
  return out;
}

std::optional<Elem> least_element(const Poset& p, const std::vector<Elem>& set) {
  if (set.empty()) return std::nullopt;
  Elem candidate = set.front();
  for (Elem x : set) {
    if (p.leq(x, candidate)) candidate = x;
  }
  for (Elem x : set) {
    if (!p.leq(candidate, x)) return std::nullopt;
  }
  return candidate;
}

std::optional<Elem> greatest_element(const Poset& p, const std::vector<Elem>& set) {
  if (set.empty()) return std::nullopt;
  Elem candidate = set.front();
  for (Elem x : set) {
    if (p.leq(candidate, x)) candidate = x;
  }
  for (Elem x : set) {
    if (!p.leq(x, candidate)) return std::nullopt;
  }
  return candidate;
}

PlosReport check_plos(const Poset& p) {
  for (Elem a = 0; a < p.size(); ++a) {
    for (Elem b = a; b < p.size(); ++b) {
      auto up = upper_bounds(p, a, b);
      if (!up.empty() && !least_element(p, up)) {
        return {false, PlosReport::Failure::upper, {a, b}, std::move(up)};
      }
      auto down = lower_bounds(p, a, b);
      if (!down.empty() && !greatest_element(p, down)) {
        return {false, PlosReport::Failure::lower, {a, b}, std::move(down)};
      }
    }
  }
  return {};
}

std::vector<std::pair<Elem, Elem>> covers(const Poset& p) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < p.size(); ++x) {
    for (Elem y = 0; y < p.size(); ++y) {
      if (!p.less(x, y)) continue;
      bool between = false;
      for (Elem z = 0; z < p.size() && !between; ++z) {
        between = p.less(x, z) && p.less(z, y);
      }
      if (!between) out.emplace_back(x, y);
    }
  }
  return out;
}

Lattice validate_lattice(Poset p) {
  const std::size_t n = p.size();
  std::vector<Elem> join(n * n);
  std::vector<Elem> meet(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      auto sup = least_element(p, upper_bounds(p, a, b));
      if (!sup) {
        throw NotALattice({a, b}, "no least upper bound for (" + p.label(a) + ", " +
                                      p.label(b) + ")");
      }
      auto inf = greatest_element(p, lower_bounds(p, a, b));
      if (!inf) {
        throw NotALattice({a, b}, "no greatest lower bound for (" + p.label(a) + ", " +
                                      p.label(b) + ")");
      }
      join[a * n + b] = *sup;
      meet[a * n + b] = *inf;
    }
  }
  // Nonempty and total, so the meet and join of everything exist.
  Elem bottom = 0;
  Elem top = 0;
  for (Elem x = 1; x < n; ++x) {
    bottom = meet[bottom * n + x];
    top = join[top * n + x];
  }
  return Lattice(std::move(p), std::move(join), std::move(meet), bottom, top);
}

Lattice named_lattice(NamedLattice kind, std::size_t parameter) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> rel;
  switch (kind) {
    case NamedLattice::chain:
      if (parameter < 1) throw BadParameter("chain needs at least one element");
      for (std::size_t i = 0; i < parameter; ++i) {
        labels.push_back(std::to_string(i));
        if (i > 0) rel.emplace_back(labels[i - 1], labels[i]);
      }
      break;
    case NamedLattice::diamond:
      if (parameter < 2) throw BadParameter("M_n needs n >= 2");
      labels.push_back("0");
      for (std::size_t i = 1; i <= parameter; ++i) {
        labels.push_back("a" + std::to_string(i));
        rel.emplace_back("0", labels.back());
        rel.emplace_back(labels.back(), "1");
      }
      labels.push_back("1");
      break;
    case NamedLattice::pentagon:
      labels = {"0", "x", "y", "z", "1"};
      rel = {{"0", "x"}, {"x", "z"}, {"z", "1"}, {"0", "y"}, {"y", "1"}};
      break;
    case NamedLattice::boolean: {
      if (parameter > 10) throw BadParameter("boolean lattice too large");
      const std::size_t count = std::size_t{1} << parameter;
      for (std::size_t s = 0; s < count; ++s) {
        std::string bits(parameter, '0');
        for (std::size_t b = 0; b < parameter; ++b) {
          if (s >> b & 1U) bits[parameter - 1 - b] = '1';
        }
        labels.push_back(parameter == 0 ? "e" : bits);
      }
      for (std::size_t s = 0; s < count; ++s)
        for (std::size_t b = 0; b < parameter; ++b)
          if (!(s >> b & 1U)) rel.emplace_back(labels[s], labels[s | (std::size_t{1} << b)]);
      break;
    }
  }
  return validate_lattice(make_poset(std::move(labels), rel));
}

bool is_distributive(const Lattice& l) {
  const std::size_t n = l.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

bool is_modular(const Lattice& l) {
  const std::size_t n = l.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem z = 0; z < n; ++z) {
      if (!l.poset().leq(x, z)) continue;
      for (Elem y = 0; y < n; ++y)
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) return false;
    }
  return true;
}

}  // namespace partlat
