#include "partlat/verify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "partlat/document.hpp"
#include "partlat/enumerate.hpp"
#include "partlat/morphism.hpp"

namespace partlat {

namespace {

constexpr std::size_t kKeptExamples = 3;

class Tally {
 public:
  VerifyCheck& operator[](const std::string& name) {
    auto [it, fresh] = index_.try_emplace(name, checks_.size());
    if (fresh) checks_.push_back({name, 0, 0, {}});
    return checks_[it->second];
  }
  std::vector<VerifyCheck> take() { return std::move(checks_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<VerifyCheck> checks_;
};

std::string serialize(const PartialLattice& l, const Partition* e = nullptr,
                      const std::string& detail = {}) {
  auto out = print_document(to_document(l));
  if (e) out += "# E = " + format_partition(*e, l.labels()) + "\n";
  if (!detail.empty()) out += "# " + detail + "\n";
  return out;
}

void record(VerifyCheck& check, bool passed, const auto& describe) {
  ++check.instances;
  if (passed) return;
  ++check.failures;
  if (check.examples.size() < kKeptExamples) check.examples.push_back(describe());
}

// Result of [a] op [b] in L/E as a block id, or nothing when undefined.
std::optional<std::size_t> case_result(const QuotientCase& c) {
  if (c.kind == QuotientCase::Kind::undefined) return std::nullopt;
  return c.block;
}

void check_structure(const PartialLattice& l, Tally& t) {
  const auto n = l.size();
  const auto p = induced_order(l);
  auto here = [&] { return serialize(l); };

  record(t["induced order is partially lattice-ordered"], is_plos(p), here);
  record(t["L -> order -> L is the identity"], lp_roundtrip(l), here);
  record(t["order -> L -> order is the identity"], pl_roundtrip(p), here);
  record(t["weak absorption"], check_absorption(l, IdentityMode::weak).holds, here);
  if (check_absorption(l, IdentityMode::strong).holds) {
    record(t["strong absorption implies total"],
           classify_totality(l) == Totality::both_total, here);
  }

  bool orders_agree = true;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      orders_agree = orders_agree && ((l.join(i, j) == j) == (l.meet(i, j) == i));
  record(t["join order equals meet order"], orders_agree, here);

  const auto x = two_point_extension(l);
  bool star_ok = true;
  try {
    validate_lattice(x.star.poset());
  } catch (const Error&) {
    star_ok = false;
  }
  record(t["star is a lattice"], star_ok, here);

  bool reflects = true;
  bool case_law = true;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem j = x.star_join(a, b);
      const Elem m = x.star_meet(a, b);
      reflects = reflects && (l.join(a, b) == x.to_source(j)) && (l.meet(a, b) == x.to_source(m));
      case_law = case_law && ((x.added_top && j == *x.added_top) == upper_bounds(p, a, b).empty());
      case_law = case_law && ((x.added_bottom && m == *x.added_bottom) ==
                              lower_bounds(p, a, b).empty());
    }
  }
  record(t["embedding reflects operations"], reflects, here);
  record(t["star case law"], case_law, here);

  std::vector<Elem> identity(n);
  for (Elem i = 0; i < n; ++i) identity[i] = i;
  record(t["L is a weak subalgebra of L*"],
         check_hom(identity, l, to_partial(x.star)).kind != HomClass::not_hom, here);

  const auto partial = all_partial_congruences(l);
  std::set<Partition> restricted;
  for (const auto& theta : all_congruences(x.star)) restricted.insert(theta.restrict_prefix(n));
  const std::set<Partition> direct(partial.begin(), partial.end());
  bool members_ok = std::all_of(direct.begin(), direct.end(),
                                [&](const Partition& e) { return is_partial_congruence(l, e); });
  record(t["star congruences restrict onto Con L"], members_ok && restricted == direct, here);
  record(t["Con L closed under meets"], con_is_closed_under_meets(l), here);
}

void check_congruence(const PartialLattice& l, const Partition& e, Tally& t) {
  const auto n = l.size();
  auto here = [&](const std::string& detail = {}) { return serialize(l, &e, detail); };

  std::optional<PartialLattice> q;
  std::string why;
  try {
    q = quotient(l, e);
  } catch (const Error& ex) {
    why = ex.what();
  }
  record(t["quotient is a partial lattice"], q.has_value(), [&] { return here(why); });
  if (!q) return;

  bool well_defined = true;
  bool agrees = true;
  for (Operation op : {Operation::join, Operation::meet}) {
    std::vector<std::optional<std::size_t>> result(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        result[a * n + b] = case_result(quotient_case(l, e, op, a, b));
        agrees = agrees && result[a * n + b] == q->apply(op, e.block_of(a), e.block_of(b));
      }
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem a2 = 0; a2 < n; ++a2)
        for (Elem b = 0; b < n; ++b)
          for (Elem b2 = 0; b2 < n; ++b2)
            if (e.same_block(a, a2) && e.same_block(b, b2))
              well_defined = well_defined && result[a * n + b] == result[a2 * n + b2];
  }
  record(t["quotient operations are well defined"], well_defined, here);
  record(t["quotient case agrees with the quotient table"], agrees, here);

  const auto qp = induced_order(*q);
  const auto p = induced_order(l);
  bool bounds_ok = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (upper_bounds(qp, e.block_of(a), e.block_of(b)).empty())
        bounds_ok = bounds_ok && upper_bounds(p, a, b).empty();
  record(t["empty quotient upper bounds imply empty upper bounds"], bounds_ok, here);

  const auto proj = canonical_projection(l, e);
  const auto kind = check_hom(proj).kind;
  record(t["projection is a homomorphism with kernel E"],
         kind != HomClass::not_hom && kernel(proj) == e, here);

  bool iso_ok = false;
  why.clear();
  try {
    iso_ok = verify_iso(extension_quotient_iso(l, e));
  } catch (const std::exception& ex) {
    why = ex.what();
  }
  record(t["(L/E)* is isomorphic to L*/Θ(E)"], iso_ok, [&] { return here(why); });

  if (kind == HomClass::closed_hom) {
    bool round_trip = false;
    why.clear();
    try {
      round_trip = restrict_hom(extend_hom(proj), l, proj.target).map == proj.map;
    } catch (const std::exception& ex) {
      why = ex.what();
    }
    record(t["closed hom extends and restricts back"], round_trip, [&] { return here(why); });
  }
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.failures == 0; });
}

VerifyReport verify_corpus(std::size_t n_max) {
  VerifyReport report;
  Tally tally;
  for (const auto& l : enumerate_partial_lattices(n_max)) {
    ++report.structures;
    check_structure(l, tally);
    for (const auto& e : all_partial_congruences(l)) {
      ++report.congruences;
      check_congruence(l, e, tally);
    }
  }
  report.checks = tally.take();
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::string out = std::to_string(report.structures) + " partial lattices, " +
                    std::to_string(report.congruences) + " (L, E) pairs\n";
  for (const auto& c : report.checks) {
    out += (c.failures == 0 ? "ok   " : "FAIL ") + c.name + " (" + std::to_string(c.instances) +
           " instances";
    if (c.failures != 0) out += ", " + std::to_string(c.failures) + " failing";
    out += ")\n";
    for (const auto& ex : c.examples) out += ex;
  }
  return out;
}

}  // namespace partlat
