#include "partlat/fixtures.hpp"

#include <algorithm>
#include <set>

#include "partlat/document.hpp"
#include "partlat/dot.hpp"
#include "partlat/morphism.hpp"

namespace partlat {

const char* to_string(FixtureStage stage) noexcept {
  switch (stage) {
    case FixtureStage::poset: return "poset";
    case FixtureStage::plattice: return "L";
    case FixtureStage::star: return "L*";
    case FixtureStage::quotient: return "L/E";
    case FixtureStage::quotient_star: return "(L/E)*";
    case FixtureStage::star_quotient: return "L*/Θ(E)";
  }
  return "?";
}

namespace {

constexpr const char* kFig1 =
    "poset\n"
    "elements 0 a b c d 1\n"
    "rel 0<a\nrel 0<b\nrel a<c\nrel a<d\nrel b<c\nrel b<d\nrel c<1\nrel d<1\n";
constexpr const char* kFig2 = "poset\nelements 0 l r 1\nrel 0<l\nrel 0<r\nrel r<1\n";
constexpr const char* kFig3 = "poset\nelements 0 l r 1\nrel 0<l\nrel 0<r\nrel l<1\nrel r<1\n";
constexpr const char* kFig4 = "plattice\nelements a b c\njoin a c = c\nmeet a c = a\n";
constexpr const char* kFig9 = "poset\nelements a b c d\nrel a<c\nrel b<c\nrel b<d\n";

const std::string kBot(kBottomLabel);
const std::string kTop(kTopLabel);

std::vector<FixtureCase> build_fixtures() {
  using S = FixtureStage;
  using N = NamedLattice;
  std::vector<FixtureCase> f;

  f.push_back({"fig1", "poset without the upper bound property", kFig1, "", S::poset,
               {{"0", "a", "b", "c", "d", "1"},
                {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"},
                 {"c", "1"}, {"d", "1"}}},
               {}, std::nullopt, std::nullopt, std::pair<std::string, std::string>{"a", "b"}});
  f.push_back({"fig2", "L1, top over one atom only", kFig2, "", S::plattice,
               {{"0", "l", "r", "1"}, {{"0", "l"}, {"0", "r"}, {"r", "1"}}},
               {}, std::pair{false, true}, std::nullopt, std::nullopt});
  f.push_back({"fig3", "L2, the four-element Boolean lattice", kFig3, "", S::plattice,
               {{"0", "l", "r", "1"}, {{"0", "l"}, {"0", "r"}, {"l", "1"}, {"r", "1"}}},
               {}, std::pair{false, false}, std::pair{N::boolean, std::size_t{2}}, std::nullopt});

  f.push_back({"fig4", "L: a < c, b isolated", kFig4, "", S::plattice,
               {{"a", "b", "c"}, {{"a", "c"}}},
               {}, std::pair{true, true}, std::nullopt, std::nullopt});
  f.push_back({"fig5", "L* of fig4", kFig4, "", S::star,
               {{"a", "b", "c", kBot, kTop},
                {{kBot, "a"}, {"a", "c"}, {"c", kTop}, {kBot, "b"}, {"b", kTop}}},
               {}, std::pair{true, true}, std::pair{N::pentagon, std::size_t{0}}, std::nullopt});
  const std::vector<std::vector<std::string>> theta4 = {{kBot}, {"a", "c"}, {"b"}, {kTop}};
  f.push_back({"fig6", "L/E for E = {a,c}{b}", kFig4, "a c|b", S::quotient,
               {{"[a]", "[b]"}, {}}, theta4, std::pair{true, true}, std::nullopt, std::nullopt});
  f.push_back({"fig7", "(L/E)* for E = {a,c}{b}", kFig4, "a c|b", S::quotient_star,
               {{"[a]", "[b]", kBot, kTop},
                {{kBot, "[a]"}, {kBot, "[b]"}, {"[a]", kTop}, {"[b]", kTop}}},
               theta4, std::pair{true, true}, std::pair{N::diamond, std::size_t{2}}, std::nullopt});
  f.push_back({"fig8", "L*/Θ(E) for E = {a,c}{b}", kFig4, "a c|b", S::star_quotient,
               {{"[a]", "[b]", "[" + kBot + "]", "[" + kTop + "]"},
                {{"[" + kBot + "]", "[a]"}, {"[" + kBot + "]", "[b]"}, {"[a]", "[" + kTop + "]"},
                 {"[b]", "[" + kTop + "]"}}},
               theta4, std::pair{true, true}, std::pair{N::diamond, std::size_t{2}}, std::nullopt});

  f.push_back({"fig9", "L: a < c, b < c, b < d", kFig9, "", S::plattice,
               {{"a", "b", "c", "d"}, {{"a", "c"}, {"b", "c"}, {"b", "d"}}},
               {}, std::pair{true, true}, std::nullopt, std::nullopt});
  f.push_back({"fig10", "L* of fig9", kFig9, "", S::star,
               {{"a", "b", "c", "d", kBot, kTop},
                {{kBot, "a"}, {kBot, "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}, {"c", kTop},
                 {"d", kTop}}},
               {}, std::pair{true, true}, std::nullopt, std::nullopt});

  const std::vector<std::vector<std::string>> theta11 = {{kBot}, {"a"}, {"b", "d"}, {"c", kTop}};
  f.push_back({"fig11", "L/E for E = {a}{b,d}{c}", kFig9, "a|b d|c", S::quotient,
               {{"[a]", "[b]", "[c]"}, {{"[a]", "[c]"}, {"[b]", "[c]"}}},
               theta11, std::pair{true, false}, std::nullopt, std::nullopt});
  f.push_back({"fig12", "(L/E)* for E = {a}{b,d}{c}", kFig9, "a|b d|c", S::quotient_star,
               {{"[a]", "[b]", "[c]", kBot},
                {{kBot, "[a]"}, {kBot, "[b]"}, {"[a]", "[c]"}, {"[b]", "[c]"}}},
               theta11, std::pair{true, false}, std::pair{N::diamond, std::size_t{2}},
               std::nullopt});
  f.push_back({"fig13", "L*/Θ(E) for E = {a}{b,d}{c}", kFig9, "a|b d|c", S::star_quotient,
               {{"[a]", "[b]", "[c]", "[" + kBot + "]"},
                {{"[" + kBot + "]", "[a]"}, {"[" + kBot + "]", "[b]"}, {"[a]", "[c]"},
                 {"[b]", "[c]"}}},
               theta11, std::pair{true, true}, std::pair{N::diamond, std::size_t{2}},
               std::nullopt});

  const std::vector<std::vector<std::string>> theta14 = {{kBot, "b"}, {"a", "c"}, {"d"}, {kTop}};
  f.push_back({"fig14", "L/E for E = {a,c}{b}{d}", kFig9, "a c|b|d", S::quotient,
               {{"[a]", "[b]", "[d]"}, {{"[b]", "[a]"}, {"[b]", "[d]"}}},
               theta14, std::pair{false, true}, std::nullopt, std::nullopt});
  f.push_back({"fig15", "(L/E)* for E = {a,c}{b}{d}", kFig9, "a c|b|d", S::quotient_star,
               {{"[a]", "[b]", "[d]", kTop},
                {{"[b]", "[a]"}, {"[b]", "[d]"}, {"[a]", kTop}, {"[d]", kTop}}},
               theta14, std::pair{false, true}, std::pair{N::diamond, std::size_t{2}},
               std::nullopt});
  f.push_back({"fig16", "L*/Θ(E) for E = {a,c}{b}{d}", kFig9, "a c|b|d", S::star_quotient,
               {{"[a]", "[b]", "[d]", "[" + kTop + "]"},
                {{"[b]", "[a]"}, {"[b]", "[d]"}, {"[a]", "[" + kTop + "]"},
                 {"[d]", "[" + kTop + "]"}}},
               theta14, std::pair{true, true}, std::pair{N::diamond, std::size_t{2}},
               std::nullopt});

  const std::vector<std::vector<std::string>> theta17 = {{kBot, "a"}, {"b", "c"}, {"d", kTop}};
  f.push_back({"fig17", "L/E for E = {a}{b,c}{d}, a lattice", kFig9, "a|b c|d", S::quotient,
               {{"[a]", "[b]", "[d]"}, {{"[a]", "[b]"}, {"[b]", "[d]"}}},
               theta17, std::pair{false, false}, std::pair{N::chain, std::size_t{3}},
               std::nullopt});
  f.push_back({"fig18", "L*/Θ(E) for E = {a}{b,c}{d}", kFig9, "a|b c|d", S::star_quotient,
               {{"[a]", "[b]", "[d]"}, {{"[a]", "[b]"}, {"[b]", "[d]"}}},
               theta17, std::pair{true, true}, std::pair{N::chain, std::size_t{3}},
               std::nullopt});
  return f;
}

std::string render_order(const Poset& p) {
  std::string out = "elements:";
  for (const auto& l : p.labels()) out += " " + l;
  out += "\ncovers:";
  for (auto [lo, hi] : covers(p)) out += " " + p.label(lo) + "<" + p.label(hi);
  return out + "\n";
}

std::string render_tables(const PartialLattice& l) {
  std::string out;
  for (const auto& c : to_document(l).cells) {
    out += std::string("  ") + to_string(c.op) + " " + c.x + " " + c.y + " = " + c.z + "\n";
  }
  return out;
}

void compare_diagram(const Poset& p, const ExpectedDiagram& want, std::vector<std::string>& fail) {
  std::set<std::string> have_elems(p.labels().begin(), p.labels().end());
  std::set<std::string> want_elems(want.elements.begin(), want.elements.end());
  if (have_elems != want_elems || want_elems.size() != want.elements.size()) {
    fail.push_back("element set differs from the figure");
    return;
  }
  std::set<std::pair<std::string, std::string>> have_covers;
  for (auto [lo, hi] : covers(p)) have_covers.emplace(p.label(lo), p.label(hi));
  std::set<std::pair<std::string, std::string>> want_covers(want.covers.begin(), want.covers.end());
  for (const auto& c : want_covers)
    if (!have_covers.contains(c)) fail.push_back("missing cover " + c.first + "<" + c.second);
  for (const auto& c : have_covers)
    if (!want_covers.contains(c)) fail.push_back("unexpected cover " + c.first + "<" + c.second);
}

void compare_theta(const Partition& theta, const Lattice& star,
                   const std::vector<std::vector<std::string>>& want,
                   std::vector<std::string>& fail) {
  std::set<std::set<std::string>> have_blocks;
  for (const auto& block : theta.blocks()) {
    std::set<std::string> names;
    for (Elem x : block) names.insert(star.label(x));
    have_blocks.insert(std::move(names));
  }
  std::set<std::set<std::string>> want_blocks;
  for (const auto& block : want) want_blocks.emplace(block.begin(), block.end());
  if (have_blocks != want_blocks) {
    fail.push_back("Θ(E) classes differ: got " + format_partition(theta, star.poset().labels()));
  }
}

std::string adds_text(const Extension& x) {
  std::string out;
  if (x.added_bottom) out += " " + kBot;
  if (x.added_top) out += " " + kTop;
  return out.empty() ? " none" : out;
}

void compare_adds(const Extension& x, const std::optional<std::pair<bool, bool>>& want,
                  const char* what, std::vector<std::string>& fail) {
  if (!want) return;
  if (x.added_bottom.has_value() != want->first || x.added_top.has_value() != want->second) {
    fail.push_back(std::string("extension of ") + what + " adds" + adds_text(x));
  }
}

}  // namespace

const std::vector<FixtureCase>& figure_fixtures() {
  static const std::vector<FixtureCase> fixtures = build_fixtures();
  return fixtures;
}

const FixtureCase* find_fixture(std::string_view id) {
  for (const auto& f : figure_fixtures())
    if (f.id == id) return &f;
  return nullptr;
}

FixtureOutcome run_fixture(const FixtureCase& fixture) {
  FixtureOutcome out;
  auto& fail = out.failures;
  const auto doc = parse_document(fixture.input);

  if (fixture.stage == FixtureStage::poset) {
    const auto p = to_poset(doc);
    const auto report = check_plos(p);
    out.rendering = std::string("poset (") + fixture.caption + ")\n" + render_order(p);
    out.dot = emit_dot(p, fixture.id);
    compare_diagram(p, fixture.diagram, fail);
    if (report.ok) {
      out.rendering += "partially lattice-ordered: yes\n";
    } else {
      const bool upper = report.failure == PlosReport::Failure::upper;
      std::string set;
      for (Elem x : report.bound_set) set += (set.empty() ? "" : ",") + p.label(x);
      out.rendering += std::string("partially lattice-ordered: no, ") + (upper ? "U(" : "L(") +
                       p.label(report.witness.first) + "," + p.label(report.witness.second) +
                       ") = {" + set + "} has no " + (upper ? "least" : "greatest") +
                       " element\n";
    }
    if (fixture.plos_witness) {
      const auto& [wa, wb] = *fixture.plos_witness;
      const auto a = p.label(report.witness.first);
      const auto b = p.label(report.witness.second);
      if (report.ok || !((a == wa && b == wb) || (a == wb && b == wa))) {
        fail.push_back("expected bound-property failure at (" + wa + "," + wb + ")");
      }
    }
    return out;
  }

  const auto l = to_partial_lattice(doc);
  const auto x = two_point_extension(l);
  Poset shown = induced_order(l);
  std::string tables;

  switch (fixture.stage) {
    case FixtureStage::plattice:
      tables = render_tables(l);
      compare_adds(x, fixture.adds_bottom_top, "L", fail);
      out.rendering = "L* adds:" + adds_text(x) + "\n";
      break;
    case FixtureStage::star:
      shown = x.star.poset();
      tables = render_tables(to_partial(x.star));
      compare_adds(x, fixture.adds_bottom_top, "L", fail);
      out.rendering = "added:" + adds_text(x) + "\n";
      break;
    default: {
      const auto e = parse_partition(fixture.congruence, l.labels());
      const auto w = check_partial_congruence(x, e);
      out.rendering = "E = " + format_partition(e, l.labels()) + "\nΘ(E) = " +
                      format_partition(w.theta, x.star.poset().labels()) + "\n";
      if (!w.is_congruence) {
        fail.push_back("E is not a congruence");
        return out;
      }
      if (!fixture.theta.empty()) compare_theta(w.theta, x.star, fixture.theta, fail);
      const auto q = quotient(l, e);
      const auto xq = two_point_extension(q);
      if (fixture.stage == FixtureStage::quotient) {
        shown = induced_order(q);
        tables = render_tables(q);
        compare_adds(xq, fixture.adds_bottom_top, "L/E", fail);
        out.rendering += "(L/E)* adds:" + adds_text(xq) + "\n";
      } else if (fixture.stage == FixtureStage::quotient_star) {
        shown = xq.star.poset();
        tables = render_tables(to_partial(xq.star));
        compare_adds(xq, fixture.adds_bottom_top, "L/E", fail);
        out.rendering += "(L/E)* adds:" + adds_text(xq) + "\n";
      } else {
        const auto lq = quotient_lattice(x.star, w.theta);
        shown = lq.poset();
        tables = render_tables(to_partial(lq));
        compare_adds(x, fixture.adds_bottom_top, "L", fail);
        try {
          extension_quotient_iso(l, e);
          out.rendering += "(L/E)* ≅ L*/Θ(E): verified\n";
        } catch (const std::exception& ex) {
          fail.push_back(std::string("(L/E)* ≅ L*/Θ(E) failed: ") + ex.what());
        }
      }
    }
  }

  out.rendering = std::string(to_string(fixture.stage)) + " (" + fixture.caption + ")\n" +
                  render_order(shown) + out.rendering + "operations:\n" + tables;
  out.dot = emit_dot(shown, fixture.id);
  compare_diagram(shown, fixture.diagram, fail);
  if (fixture.shape) {
    const auto named = named_lattice(fixture.shape->first, fixture.shape->second);
    if (!find_order_isomorphism(shown, named.poset())) {
      fail.push_back("not isomorphic to the expected named lattice");
    }
  }
  return out;
}

}  // namespace partlat
