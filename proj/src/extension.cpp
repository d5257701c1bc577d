#include "partlat/extension.hpp"

#include <numeric>
#include <stdexcept>

namespace partlat {

Extension two_point_extension(const PartialLattice& l) {
  const Totality totality = classify_totality(l);
  const std::size_t n = l.size();
  const Poset order = induced_order(l);

  std::vector<std::string> labels = l.labels();
  std::optional<Elem> bottom;
  std::optional<Elem> top;
  if (!meet_is_total(totality)) {
    bottom = labels.size();
    labels.emplace_back(kBottomLabel);
  }
  if (!join_is_total(totality)) {
    top = labels.size();
    labels.emplace_back(kTopLabel);
  }

  const std::size_t m = labels.size();
  std::vector<std::uint8_t> leq(m * m, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) leq[a * m + b] = order.leq(a, b) ? 1 : 0;
  for (Elem x = 0; x < m; ++x) {
    if (bottom) leq[*bottom * m + x] = 1;
    if (top) leq[x * m + *top] = 1;
  }

  std::vector<Elem> embed(n);
  std::iota(embed.begin(), embed.end(), Elem{0});
  return Extension{l, validate_lattice(Poset::from_matrix(std::move(labels), std::move(leq))),
                   std::move(embed), bottom, top};
}

std::optional<AxiomViolation> OnePointAlgebra::validation_failure() const {
  OpTable j(join.begin(), join.end());
  OpTable m(meet.begin(), meet.end());
  try {
    validate_partial_lattice(labels, std::move(j), std::move(m));
  } catch (const AxiomViolation& e) {
    return e;
  }
  return std::nullopt;
}

OnePointAlgebra one_point_extension(const PartialLattice& l) {
  const std::size_t n = l.size();
  OnePointAlgebra out;
  out.labels = l.labels();
  if (classify_totality(l) == Totality::both_total) {
    out.join.resize(n * n);
    out.meet.resize(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        out.join[a * n + b] = *l.join(a, b);
        out.meet[a * n + b] = *l.meet(a, b);
      }
    }
    return out;
  }

  const Elem c = n;
  const std::size_t m = n + 1;
  out.labels.emplace_back(kFreshLabel);
  out.fresh = c;
  out.join.assign(m * m, c);
  out.meet.assign(m * m, c);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      out.join[a * m + b] = l.join(a, b).value_or(c);
      out.meet[a * m + b] = l.meet(a, b).value_or(c);
    }
  }
  return out;
}

}  // namespace partlat
