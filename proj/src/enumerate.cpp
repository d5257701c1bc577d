#include "partlat/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

namespace partlat {

namespace {

// rows[i] has bit j set when i ≤ j.
using Rows = std::array<std::uint8_t, kMaxEnumerated>;

// Row-major bit string of the relabelled matrix, column 0 most significant
// within a row and row 0 most significant overall.
std::uint64_t canonical_code(const Rows& rows, std::size_t n) {
  std::array<std::size_t, kMaxEnumerated> perm{};
  std::iota(perm.begin(), perm.begin() + n, std::size_t{0});
  std::array<std::uint8_t, kMaxEnumerated> best{};
  bool have_best = false;
  do {
    bool smaller = !have_best;
    bool abandon = false;
    std::array<std::uint8_t, kMaxEnumerated> cur{};
    for (std::size_t i = 0; i < n && !abandon; ++i) {
      std::uint8_t row = 0;
      for (std::size_t j = 0; j < n; ++j) {
        row = static_cast<std::uint8_t>(row << 1 | (rows[perm[i]] >> perm[j] & 1U));
      }
      cur[i] = row;
      if (!smaller) {
        if (row > best[i]) abandon = true;
        else if (row < best[i]) smaller = true;
      }
    }
    if (!abandon && smaller) {
      best = cur;
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + n));

  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) code = code << n | best[i];
  return code;
}

}  // namespace

std::vector<Poset> enumerate_posets(std::size_t n) {
  if (n < 1 || n > kMaxEnumerated) {
    throw BadParameter("enumeration size must be between 1 and " +
                       std::to_string(kMaxEnumerated));
  }
  // Every poset has a natural labelling (a linear extension), so it suffices
  // to range over strict relations contained in i < j.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::set<std::uint64_t> codes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Rows rows{};
    for (std::size_t i = 0; i < n; ++i) rows[i] = static_cast<std::uint8_t>(1U << i);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1U) rows[pairs[b].first] |= static_cast<std::uint8_t>(1U << pairs[b].second);
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (std::size_t j = 0; j < n && transitive; ++j) {
        if (rows[i] >> j & 1U) transitive = (rows[j] & ~rows[i]) == 0;
      }
    }
    if (transitive) codes.insert(canonical_code(rows, n));
  }

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));

  std::vector<Poset> out;
  for (std::uint64_t code : codes) {
    std::vector<std::uint8_t> leq(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        leq[i * n + j] = code >> ((n - 1 - i) * n + (n - 1 - j)) & 1U;
    out.push_back(Poset::from_matrix(labels, std::move(leq)));
  }
  return out;
}

std::vector<PartialLattice> enumerate_partial_lattices_of_size(std::size_t n) {
  std::vector<PartialLattice> out;
  for (const auto& p : enumerate_posets(n)) {
    if (is_plos(p)) out.push_back(from_plos(p));
  }
  return out;
}

std::vector<PartialLattice> enumerate_partial_lattices(std::size_t n_max) {
  if (n_max < 1 || n_max > kMaxEnumerated) {
    throw BadParameter("n_max must be between 1 and " + std::to_string(kMaxEnumerated));
  }
  std::vector<PartialLattice> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto level = enumerate_partial_lattices_of_size(n);
    std::move(level.begin(), level.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace partlat
