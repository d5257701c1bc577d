#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partlat/order.hpp"

namespace partlat {

/// Which structure a figure depicts, relative to its base partial lattice L
/// and (for quotient stages) a congruence E.
enum class FixtureStage {
  poset,          ///< the base order itself, possibly not a partial lattice
  plattice,       ///< L
  star,           ///< L*
  quotient,       ///< L/E
  quotient_star,  ///< (L/E)*
  star_quotient,  ///< L*/Θ(E)
};

const char* to_string(FixtureStage stage) noexcept;

/// Expected Hasse diagram, compared literally (labels included).
struct ExpectedDiagram {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
};

struct FixtureCase {
  std::string id;  ///< "fig4"
  std::string caption;
  std::string input;       ///< base structure in the text format
  std::string congruence;  ///< E in partition syntax, empty when unused
  FixtureStage stage = FixtureStage::plattice;
  ExpectedDiagram diagram;
  /// Θ(E) classes by star label, any order.
  std::vector<std::vector<std::string>> theta;
  /// Bounds adjoined by the two-point extension of the stage's partial
  /// lattice (L for plattice/star/star_quotient, L/E for the quotient stages).
  std::optional<std::pair<bool, bool>> adds_bottom_top;
  /// Named lattice the depicted structure must be isomorphic to.
  std::optional<std::pair<NamedLattice, std::size_t>> shape;
  /// For the poset stage: the pair whose bound set breaks the bound properties.
  std::optional<std::pair<std::string, std::string>> plos_witness;
};

/// Figures 1-18.
const std::vector<FixtureCase>& figure_fixtures();
const FixtureCase* find_fixture(std::string_view id);

struct FixtureOutcome {
  std::string rendering;  ///< human-readable description of the structure
  std::string dot;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Builds the figure's structure and checks every expectation.
FixtureOutcome run_fixture(const FixtureCase& fixture);

}  // namespace partlat
