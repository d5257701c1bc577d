#include <doctest.h>

#include "partlat/order.hpp"
#include "support.hpp"

using namespace partlat;
using partlat::testing::kFig1;

namespace {

Poset fig1() { return to_poset(parse_document(kFig1)); }

}  // namespace

TEST_CASE("make_poset closes the relation") {
  const auto p = make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.leq(0, 2));
  CHECK(p.leq(1, 1));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(p.find("c") == Elem{2});
  CHECK_FALSE(p.find("z"));
}

TEST_CASE("make_poset rejects bad input") {
  CHECK_THROWS_AS(make_poset({"a", "a"}, {}), DuplicateLabel);
  CHECK_THROWS_AS(make_poset({"a"}, {{"a", "q"}}), UnknownLabel);
  CHECK_THROWS_AS(make_poset({}, {}), BadParameter);
  try {
    make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    FAIL("expected a cycle");
  } catch (const CycleDetected& e) {
    CHECK(e.cycle().size() >= 3);
  }
}

TEST_CASE("from_matrix validates the order axioms") {
  CHECK_THROWS(Poset::from_matrix({"a", "b"}, {1, 1, 1, 1}));
  CHECK_THROWS(Poset::from_matrix({"a", "b"}, {0, 0, 0, 1}));
  CHECK_THROWS(Poset::from_matrix({"a", "b"}, {1, 0}));
  CHECK_THROWS(Poset::from_matrix({"a", "b", "c"}, {1, 1, 0, 0, 1, 1, 0, 0, 1}));
}

TEST_CASE("fig1 lacks the upper bound property at (a,b)") {
  const auto p = fig1();
  const auto r = check_plos(p);
  REQUIRE_FALSE(r.ok);
  CHECK(r.failure == PlosReport::Failure::upper);
  CHECK(p.label(r.witness.first) == "a");
  CHECK(p.label(r.witness.second) == "b");
  std::vector<std::string> set;
  for (Elem x : r.bound_set) set.push_back(p.label(x));
  CHECK(set == std::vector<std::string>{"c", "d", "1"});
  CHECK_FALSE(is_plos(p));
}

TEST_CASE("antichain and chain are partially lattice-ordered") {
  CHECK(is_plos(make_poset({"x", "y", "z"}, {})));
  CHECK(is_plos(named_lattice(NamedLattice::chain, 4).poset()));
}

TEST_CASE("bound sets match the definition on every small poset") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
          std::vector<Elem> up, down;
          for (Elem x = 0; x < n; ++x) {
            if (p.matrix()[a * n + x] && p.matrix()[b * n + x]) up.push_back(x);
            if (p.matrix()[x * n + a] && p.matrix()[x * n + b]) down.push_back(x);
          }
          CHECK(upper_bounds(p, a, b) == up);
          CHECK(lower_bounds(p, a, b) == down);
        }
    }
  }
}

TEST_CASE("validate_lattice succeeds exactly for bounded partially lattice-ordered sets") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      bool all_nonempty = true;
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          all_nonempty = all_nonempty && !upper_bounds(p, a, b).empty() &&
                         !lower_bounds(p, a, b).empty();
      bool validated = true;
      try {
        validate_lattice(p);
      } catch (const NotALattice&) {
        validated = false;
      }
      CHECK(validated == (is_plos(p) && all_nonempty));
    }
  }
}

TEST_CASE("validated lattices satisfy absorption") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      if (!is_plos(p)) continue;
      try {
        const auto l = validate_lattice(p);
        for (Elem a = 0; a < n; ++a)
          for (Elem b = 0; b < n; ++b) {
            CHECK(l.join(a, l.meet(a, b)) == a);
            CHECK(l.meet(a, l.join(a, b)) == a);
          }
      } catch (const NotALattice&) {
      }
    }
  }
}

TEST_CASE("NotALattice names a pair without a bound") {
  const auto p = make_poset({"a", "b"}, {});
  try {
    validate_lattice(p);
    FAIL("antichain is not a lattice");
  } catch (const NotALattice& e) {
    CHECK(e.witness().first != e.witness().second);
  }
}

TEST_CASE("covers are the pairs with nothing strictly between") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate_posets(n)) {
      std::vector<std::pair<Elem, Elem>> expected;
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          if (!p.less(x, y)) continue;
          bool between = false;
          for (Elem z = 0; z < n; ++z) between = between || (p.less(x, z) && p.less(z, y));
          if (!between) expected.emplace_back(x, y);
        }
      CHECK(covers(p) == expected);
    }
  }
}

TEST_CASE("named lattices") {
  const auto n5 = named_lattice(NamedLattice::pentagon);
  CHECK(n5.size() == 5);
  CHECK(covers(n5.poset()).size() == 5);
  CHECK_FALSE(is_modular(n5));
  CHECK_FALSE(is_distributive(n5));

  for (std::size_t k = 3; k <= 5; ++k) {
    const auto m = named_lattice(NamedLattice::diamond, k);
    CHECK(m.size() == k + 2);
    CHECK_FALSE(is_distributive(m));
    CHECK(is_modular(m));
  }
  CHECK(is_distributive(named_lattice(NamedLattice::boolean, 2)));
  CHECK(is_distributive(named_lattice(NamedLattice::boolean, 3)));
  CHECK(is_distributive(named_lattice(NamedLattice::chain, 4)));
  CHECK(named_lattice(NamedLattice::boolean, 0).size() == 1);
  CHECK_THROWS_AS(named_lattice(NamedLattice::chain, 0), BadParameter);
  CHECK_THROWS_AS(named_lattice(NamedLattice::diamond, 1), BadParameter);
}
