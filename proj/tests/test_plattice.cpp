#include <doctest.h>

#include "partlat/plattice.hpp"
#include "support.hpp"

using namespace partlat;
using namespace partlat::testing;

namespace {

constexpr auto U = std::nullopt;

OpTable diagonal(std::size_t n) {
  OpTable t(n * n);
  for (Elem i = 0; i < n; ++i) t[i * n + i] = i;
  return t;
}

// Fig4 tables with elements a=0, b=1, c=2.
std::pair<OpTable, OpTable> fig4_tables() {
  auto join = diagonal(3);
  auto meet = diagonal(3);
  join[0 * 3 + 2] = join[2 * 3 + 0] = Elem{2};
  meet[0 * 3 + 2] = meet[2 * 3 + 0] = Elem{0};
  return {join, meet};
}

template <class F>
void expect_violation(Axiom axiom, F&& make) {
  try {
    make();
    FAIL("expected an axiom violation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == axiom);
  }
}

}  // namespace

TEST_CASE("fig4 tables validate and induce a < c") {
  auto [join, meet] = fig4_tables();
  const auto l = validate_partial_lattice({"a", "b", "c"}, join, meet);
  CHECK(l.join(0, 2) == Elem{2});
  CHECK(l.join(0, 1) == U);
  const auto p = induced_order(l);
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.comparable(0, 1));
  CHECK(l == load(kFig4));
}

TEST_CASE("removing a meet from fig4 breaks duality at (a,c)") {
  auto [join, meet] = fig4_tables();
  meet[0 * 3 + 2] = meet[2 * 3 + 0] = U;
  try {
    validate_partial_lattice({"a", "b", "c"}, join, meet);
    FAIL("expected a duality violation");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == Axiom::duality);
    CHECK(e.witness() == std::vector<Elem>{0, 2});
  }
}

TEST_CASE("each axiom is checked") {
  expect_violation(Axiom::idempotency, [] {
    auto t = diagonal(2);
    t[0] = U;
    return validate_partial_lattice({"a", "b"}, t, diagonal(2));
  });
  expect_violation(Axiom::commutativity, [] {
    auto t = diagonal(2);
    t[0 * 2 + 1] = Elem{1};
    return validate_partial_lattice({"a", "b"}, t, diagonal(2));
  });
  // a∨b = c while b∨c is undefined: (a∨b)∨c exists, a∨(b∨c) does not.
  expect_violation(Axiom::associativity, [] {
    auto t = diagonal(3);
    t[0 * 3 + 1] = t[1 * 3 + 0] = Elem{2};
    return validate_partial_lattice({"a", "b", "c"}, t, diagonal(3));
  });
  CHECK_THROWS_AS(validate_partial_lattice({"a", "b"}, diagonal(3), diagonal(2)), BadParameter);
  CHECK_THROWS_AS(validate_partial_lattice({"a", "a"}, diagonal(2), diagonal(2)), DuplicateLabel);
}

TEST_CASE("from_plos rejects fig1 with the offending bound set") {
  const auto p = to_poset(parse_document(kFig1));
  try {
    from_plos(p);
    FAIL("fig1 is not partially lattice-ordered");
  } catch (const NotPlos& e) {
    CHECK(std::string(e.what()).find("U(a,b) = {c,d,1} has no least element") !=
          std::string::npos);
  }
}

TEST_CASE("totality classes") {
  CHECK(classify_totality(load(kFig2)) == Totality::join_partial);
  CHECK(classify_totality(load(kFig3)) == Totality::both_total);
  CHECK(classify_totality(load(kFig4)) == Totality::both_partial);
  CHECK(classify_totality(load("poset\nelements a b c\nrel a<b\nrel a<c\n")) ==
        Totality::join_partial);
  CHECK(classify_totality(load("poset\nelements a b c\nrel a<c\nrel b<c\n")) ==
        Totality::meet_partial);
}

TEST_CASE("absorption on fig4") {
  const auto l = load(kFig4);
  CHECK(check_absorption(l, IdentityMode::weak).holds);
  const auto strong = check_absorption(l, IdentityMode::strong);
  CHECK_FALSE(strong.holds);
  REQUIRE(strong.witness);
  CHECK(strong.witness->size() == 2);
}

TEST_CASE("antichains pass strong distributivity without any fully defined triple") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto l = antichain(n);
    for (auto schema : {IdentitySchema::distributive_meet, IdentitySchema::distributive_join}) {
      const auto r = check_identity(l, schema, IdentityMode::strong);
      CHECK(r.holds);
      CHECK(r.fully_defined_distinct == 0);
    }
  }
}

TEST_CASE("distributivity scan catches the diamond") {
  const auto m3 = to_partial(named_lattice(NamedLattice::diamond, 3));
  const auto r = check_identity(m3, IdentitySchema::distributive_meet, IdentityMode::strong);
  CHECK_FALSE(r.holds);
  CHECK(r.fully_defined_distinct > 0);
  CHECK(check_identity(to_partial(named_lattice(NamedLattice::boolean, 3)),
                       IdentitySchema::distributive_join, IdentityMode::strong)
            .holds);
}

TEST_CASE("order correspondence over every partial lattice on at most five elements") {
  for (const auto& l : enumerate_partial_lattices(5)) {
    const auto p = induced_order(l);
    CHECK(is_plos(p));
    CHECK(from_plos(p) == l);
    CHECK(induced_order(from_plos(p)) == p);
    CHECK(lp_roundtrip(l));
    CHECK(pl_roundtrip(p));
  }
}

TEST_CASE("absorption laws over the corpus") {
  for (const auto& l : enumerate_partial_lattices(5)) {
    CHECK(check_absorption(l, IdentityMode::weak).holds);
    if (check_absorption(l, IdentityMode::strong).holds) {
      CHECK(classify_totality(l) == Totality::both_total);
    }
  }
}

TEST_CASE("join order and meet order coincide over the corpus") {
  for (const auto& l : enumerate_partial_lattices(5)) {
    const auto n = l.size();
    for (Elem i = 0; i < n; ++i)
      for (Elem j = 0; j < n; ++j) CHECK((l.join(i, j) == j) == (l.meet(i, j) == i));
  }
}
