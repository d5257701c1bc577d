#pragma once

#include <cstdint>
#include <vector>

#include "partlat/plattice.hpp"

namespace partlat {

/// Largest carrier the enumerator accepts.
inline constexpr std::size_t kMaxEnumerated = 6;

/// All posets with exactly n elements, one per isomorphism class, each given
/// by its canonical order matrix (the lexicographically least over all
/// relabellings) with labels a, b, c, ... Sorted by canonical matrix.
/// Throws BadParameter unless 1 ≤ n ≤ kMaxEnumerated.
std::vector<Poset> enumerate_posets(std::size_t n);

/// Partial lattices of exactly n elements up to isomorphism: the posets above
/// that have the bound properties, read through from_plos.
std::vector<PartialLattice> enumerate_partial_lattices_of_size(std::size_t n);

/// All partial lattices with 1..n_max elements, by size then canonical order.
std::vector<PartialLattice> enumerate_partial_lattices(std::size_t n_max);

}  // namespace partlat
