#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace partlat {

struct VerifyCheck {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  /// The first few failing instances, serialized in the input format.
  std::vector<std::string> examples;
};

struct VerifyReport {
  std::size_t structures = 0;
  std::size_t congruences = 0;  ///< (L, E) pairs visited
  std::vector<VerifyCheck> checks;
  bool ok() const;
};

/// Runs every universally quantified property over all partial lattices on
/// at most n_max elements. Throws BadParameter outside 1..kMaxEnumerated.
VerifyReport verify_corpus(std::size_t n_max);

std::string format_report(const VerifyReport& report);

}  // namespace partlat
