// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "partlat/fixtures.hpp"
#include "partlat/morphism.hpp"
#include "partlat/verify.hpp"
#include "support.hpp"

using namespace partlat;
using namespace partlat::testing;

namespace {

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& what) { notes_.push_back(what); }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int number, const char* title, double limit_seconds,
                   const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("unexpected exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream limit;
  limit << seconds << "s, limit " << limit_seconds << "s";
  c.expect(seconds < limit_seconds, "runtime " + limit.str());

  std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << number << ": " << title << " ("
            << seconds << "s)\n";
  for (const auto& f : c.failures()) std::cout << "    failed: " << f << "\n";
  for (const auto& n : c.notes()) std::cout << "    " << n << "\n";
  return c.ok();
}

std::set<std::set<std::string>> theta_by_label(const PartialLattice& l, const std::string& e) {
  const auto x = two_point_extension(l);
  const auto w = check_partial_congruence(x, parse_partition(e, l.labels()));
  std::set<std::set<std::string>> out;
  for (const auto& block : w.theta.blocks()) {
    std::set<std::string> names;
    for (Elem s : block) names.insert(x.star.label(s));
    out.insert(names);
  }
  return out;
}

bool is_iso(const Lattice& a, const Lattice& b) { return find_isomorphism(a, b).has_value(); }

void figure_suite(Criterion& c) {
  for (const auto& f : figure_fixtures()) {
    for (const auto& failure : run_fixture(f).failures) c.expect(false, f.id + ": " + failure);
  }

  const std::string B(kBottomLabel), T(kTopLabel);
  const auto n5 = named_lattice(NamedLattice::pentagon);
  const auto m2 = named_lattice(NamedLattice::diamond, 2);

  const auto l4 = load(kFig4);
  const auto x4 = two_point_extension(l4);
  c.expect(x4.added_bottom && x4.added_top, "fig4 extension adds both bounds");
  c.expect(is_iso(x4.star, n5), "fig4 star is isomorphic to N5");

  const auto plos = check_plos(to_poset(parse_document(kFig1)));
  c.expect(!plos.ok && plos.witness == PairWitness{1, 2}, "fig1 fails the bound properties at (a,b)");

  const auto l1 = load(kFig2);
  const auto l2 = load(kFig3);
  const auto hom = check_hom(std::vector<Elem>{0, 1, 2, 3}, l1, l2);
  if (hom.kind != HomClass::hom) {
    std::string detail = std::string("identity fig2 -> fig3 is a homomorphism that is not closed: "
                                     "measured ") + to_string(hom.kind);
    if (hom.witness) {
      detail += " at " + std::string(to_string(hom.operation)) + "(" + l1.label(hom.witness->first) +
                "," + l1.label(hom.witness->second) + ")";
    }
    c.expect(false, detail);
  }
  const auto x1 = two_point_extension(l1);
  const auto x2 = two_point_extension(l2);
  c.expect(is_iso(x1.star, n5), "fig2 star is isomorphic to N5");
  c.expect(!x2.added_bottom && !x2.added_top && to_partial(x2.star) == l2,
           "fig3 star equals fig3");

  c.expect(theta_by_label(l4, "a c|b") ==
               std::set<std::set<std::string>>{{B}, {"a", "c"}, {"b"}, {T}},
           "fig4 Θ(E) classes");
  const auto e4 = parse_partition("a c|b", l4.labels());
  const auto q4 = quotient(l4, e4);
  c.expect(q4.size() == 2 && !q4.join(0, 1) && !q4.meet(0, 1), "fig6 quotient is a 2-antichain");
  const auto iso4 = extension_quotient_iso(l4, e4);
  c.expect(verify_iso(iso4), "fig7/fig8 isomorphism verifies");
  c.expect(find_isomorphism(iso4.forward.source, to_partial(m2)) &&
               find_isomorphism(iso4.forward.target, to_partial(m2)),
           "fig7 and fig8 are both the 4-element diamond");

  const auto l9 = load(kFig9);
  c.expect(theta_by_label(l9, "a|b d|c") ==
               std::set<std::set<std::string>>{{B}, {"a"}, {"b", "d"}, {"c", T}},
           "fig11 Θ(E) classes");
  const auto q11 = quotient(l9, parse_partition("a|b d|c", l9.labels()));
  const auto x11 = two_point_extension(q11);
  c.expect(x11.added_bottom && !x11.added_top, "fig12 adds the bottom only");

  c.expect(theta_by_label(l9, "a c|b|d") ==
               std::set<std::set<std::string>>{{B, "b"}, {"a", "c"}, {"d"}, {T}},
           "fig14 Θ(E) classes");
  const auto x14 = two_point_extension(quotient(l9, parse_partition("a c|b|d", l9.labels())));
  c.expect(!x14.added_bottom && x14.added_top, "fig15 adds the top only");

  const auto q17 = quotient(l9, parse_partition("a|b c|d", l9.labels()));
  const auto x17 = two_point_extension(q17);
  c.expect(is_iso(x17.star, named_lattice(NamedLattice::chain, 3)), "fig17 is a 3-chain");
  c.expect(to_partial(x17.star) == q17, "fig17 (L/E)* equals L/E");
}

void distributivity(Criterion& c) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto l = antichain(n);
    const auto ns = std::to_string(n);
    for (auto schema : {IdentitySchema::distributive_meet, IdentitySchema::distributive_join}) {
      const auto r = check_identity(l, schema, IdentityMode::strong);
      c.expect(r.holds, ns + "-antichain passes " + to_string(schema));
      c.expect(r.fully_defined_distinct == 0, ns + "-antichain has a fully defined triple");
    }
    const auto mn = named_lattice(NamedLattice::diamond, n);
    c.expect(is_iso(two_point_extension(l).star, mn), "star of the " + ns + "-antichain is M_" + ns);
    c.expect(!is_distributive(mn), "M_" + ns + " is not distributive");
    c.note("M_" + ns + ": distributive=" + (is_distributive(mn) ? "true" : "false") +
           ", modular=" + (is_modular(mn) ? "true" : "false"));
  }
}

void corpus(Criterion& c) {
  const auto report = verify_corpus(5);
  c.note(std::to_string(report.structures) + " partial lattices, " +
         std::to_string(report.congruences) + " congruences, " +
         std::to_string(report.checks.size()) + " properties");
  for (const auto& check : report.checks) {
    if (check.failures == 0) continue;
    std::string detail = check.name + ": " + std::to_string(check.failures) + " failing";
    for (const auto& ex : check.examples) detail += "\n" + ex;
    c.expect(false, detail);
  }
}

void closure_oracle(Criterion& c) {
  std::size_t lattices = 0, seeds = 0;
  for (const auto& l : enumerate_partial_lattices(5)) {
    const auto k = two_point_extension(l).star;
    if (k.size() > 6) continue;
    ++lattices;
    const auto congruences = oracle_congruences(k);
    for (Elem a = 0; a < k.size(); ++a)
      for (Elem b = a + 1; b < k.size(); ++b) {
        ++seeds;
        const auto seed = Partition::from_blocks(k.size(), {{a, b}});
        if (generate_congruence(k, seed) != oracle_generate(congruences, seed)) {
          c.expect(false, "closure differs from the oracle on\n" +
                              print_document(to_document(l)) + "seed " + k.label(a) + " " +
                              k.label(b));
        }
      }
  }
  c.note(std::to_string(lattices) + " lattices, " + std::to_string(seeds) + " seeds");
}

void one_point(Criterion& c) {
  const auto l = load(kFig4);
  const auto a = one_point_extension(l);
  const auto failure = a.validation_failure();
  c.expect(failure.has_value(), "one-point extension of fig4 fails validation");
  if (!failure) return;
  const auto& w = failure->witness();
  c.note(failure->what());
  const auto n = a.size();
  const auto lat = a.labels;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const auto x = w[i], y = w[i + 1];
    c.note("cell: " + lat[x] + " join " + lat[y] + " = " + lat[a.join[x * n + y]] + ", " + lat[x] +
           " meet " + lat[y] + " = " + lat[a.meet[x * n + y]]);
  }
}

void cli_contract(Criterion& c) {
  for (int i = 4; i <= 18; ++i) {
    const auto id = "fig" + std::to_string(i);
    std::istringstream in;
    std::ostringstream out, err;
    const int code = run_cli({"demo", id}, in, out, err);
    c.expect(code == 0, "demo " + id + " exits " + std::to_string(code) + " " + err.str());
    c.expect(out.str().find("elements:") != std::string::npos, "demo " + id + " prints a structure");
  }
  const std::regex position(R"(^-:\d+:\d+: )");
  for (const char* bad : {"poset\nelements a b\nrel a<\n", "lattice\n",
                          "plattice\nelements a b\njoin a b = q\n"}) {
    std::istringstream in(bad);
    std::ostringstream out, err;
    const int code = run_cli({"validate", "-"}, in, out, err);
    c.expect(code == 2, "malformed input exits " + std::to_string(code));
    c.expect(std::regex_search(err.str(), position), "diagnostic has line and column: " + err.str());
  }
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion(1, "figure fixtures", 1.0, figure_suite);
  ok &= run_criterion(2, "antichain distributivity and M_n", 1.0, distributivity);
  ok &= run_criterion(3, "exhaustive theorem verification, n <= 5", 120.0, corpus);
  ok &= run_criterion(4, "congruence closure against brute force", 120.0, closure_oracle);
  ok &= run_criterion(5, "one-point extension counterexample", 1.0, one_point);
  ok &= run_criterion(6, "CLI contract", 60.0, cli_contract);
  return ok ? 0 : 1;
}
