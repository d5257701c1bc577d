#pragma once

// Shared inputs and brute-force oracles. The oracles deliberately avoid the
// library's closure and search code: they enumerate every partition of the
// carrier and test compatibility cell by cell.

#include <algorithm>
#include <string>
#include <vector>

#include "partlat/congruence.hpp"
#include "partlat/document.hpp"
#include "partlat/enumerate.hpp"

namespace partlat::testing {

inline const char* const kFig1 =
    "poset\nelements 0 a b c d 1\n"
    "rel 0<a\nrel 0<b\nrel a<c\nrel a<d\nrel b<c\nrel b<d\nrel c<1\nrel d<1\n";
inline const char* const kFig2 = "poset\nelements 0 l r 1\nrel 0<l\nrel 0<r\nrel r<1\n";
inline const char* const kFig3 = "poset\nelements 0 l r 1\nrel 0<l\nrel 0<r\nrel l<1\nrel r<1\n";
inline const char* const kFig4 = "poset\nelements a b c\nrel a<c\n";
inline const char* const kFig9 = "poset\nelements a b c d\nrel a<c\nrel b<c\nrel b<d\n";

inline PartialLattice load(const std::string& text) {
  return to_partial_lattice(parse_document(text));
}

inline Partition blocks_by_label(const std::vector<std::string>& labels,
                                 const std::string& text) {
  return parse_partition(text, labels);
}

inline PartialLattice antichain(std::size_t n) {
  std::string text = "poset\nelements";
  for (std::size_t i = 0; i < n; ++i) text += " x" + std::to_string(i);
  return load(text + "\n");
}

/// Every partition of 0..n-1 as a block-key vector (restricted growth strings).
inline std::vector<std::vector<std::size_t>> all_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> rgs(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t max_used) -> void {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (std::size_t k = 0; k <= max_used + 1; ++k) {
      rgs[i] = k;
      self(self, i + 1, std::max(max_used, k));
    }
  };
  if (n == 0) return {{}};
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

/// Substitution property checked on every related pair and every c.
inline bool oracle_compatible(const Lattice& k, const std::vector<std::size_t>& key) {
  const auto n = k.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (key[a] != key[b]) continue;
      for (Elem c = 0; c < n; ++c) {
        if (key[k.join(a, c)] != key[k.join(b, c)]) return false;
        if (key[k.meet(a, c)] != key[k.meet(b, c)]) return false;
      }
    }
  return true;
}

/// All congruences of k by exhaustive search.
inline std::vector<std::vector<std::size_t>> oracle_congruences(const Lattice& k) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& key : all_partitions(k.size()))
    if (oracle_compatible(k, key)) out.push_back(std::move(key));
  return out;
}

inline bool key_contains(const std::vector<std::size_t>& coarse, const Partition& fine) {
  for (Elem a = 0; a < fine.size(); ++a)
    for (Elem b = 0; b < fine.size(); ++b)
      if (fine.same_block(a, b) && coarse[a] != coarse[b]) return false;
  return true;
}

/// The least congruence containing `seed`, as the compatible partition with
/// the most blocks among those containing it.
inline Partition oracle_generate(const std::vector<std::vector<std::size_t>>& congruences,
                                 const Partition& seed) {
  const std::vector<std::size_t>* best = nullptr;
  std::size_t best_blocks = 0;
  for (const auto& key : congruences) {
    if (!key_contains(key, seed)) continue;
    const auto blocks = static_cast<std::size_t>(*std::max_element(key.begin(), key.end())) + 1;
    if (!best || blocks > best_blocks) {
      best = &key;
      best_blocks = blocks;
    }
  }
  return Partition::from_keys(*best);
}

}  // namespace partlat::testing
