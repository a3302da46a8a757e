#include <doctest.h>

#include "ualg/dilatation.hpp"
#include "ualg/gallery/boolean.hpp"
#include "ualg/gallery/powerset.hpp"

using namespace ualg;

TEST_CASE("semilattice dilatations") {
  for (const auto& events : {std::vector<std::string>{"x"}, {"x", "y"}, {"x", "y", "z"}}) {
    const auto s = gallery::build_powerset_semilattice(events);
    const std::size_t n = s.algebra.size();
    const auto rep = build_representation(s.algebra, s.frame);
    const auto a = analyze_dilatations(s.algebra, rep);
    CHECK(a.delta == std::vector<UnaryMap>{UnaryMap::constant(n, 0), UnaryMap::identity(n)});
    CHECK(a.full);
    CHECK(a.routes_agree);
    CHECK(a.indicatorless.empty());
    // The empty set indicates k_0; every other subset indicates the identity.
    CHECK(a.indicators[0] == std::vector<Elem>{0});
    CHECK(a.indicators[1].size() == n - 1);

    const auto result = build_endowed_monoid(s.algebra, a);
    REQUIRE(result.monoid);
    CHECK(result.gamma_homomorphic);
    const auto& m = *result.monoid;
    CHECK(m.unit == 1);
    CHECK(check_monoid_laws(m).passed());
    CHECK(check_distributivities(s.algebra, m).passed());
    const auto iso = two_element_lattice_iso(m, 1, 0);
    REQUIRE(iso);
    CHECK(*iso == std::vector<int>{0, 1});
    CHECK_FALSE(two_element_lattice_iso(m, 0, 0));
  }
}

TEST_CASE("boolean dilatations") {
  const auto b = gallery::build_boolean_example();
  const auto rep = build_representation(b.algebra, b.frame);
  const auto a = analyze_dilatations(b.algebra, rep);
  CHECK(a.delta == std::vector<UnaryMap>{UnaryMap::identity(4)});
  CHECK(a.indicator_set == std::vector<Elem>{1});
  CHECK(a.non_indicators() == std::vector<Elem>{0, 2, 3});
  CHECK_FALSE(a.full);
  CHECK(a.routes_agree);

  const auto result = build_endowed_monoid(b.algebra, a);
  CHECK_FALSE(result.monoid);
  CHECK(result.non_indicators == std::vector<Elem>{0, 2, 3});
  REQUIRE(result.images.size() == 3);
  // ¬ . identity leaves Delta; ∧ of identities stays; the constant ⊥ leaves.
  CHECK_FALSE(result.images[0].inherited);
  CHECK(result.images[1].inherited);
  CHECK_FALSE(result.images[2].inherited);
}

TEST_CASE("dilatations need a basis") {
  const auto s = gallery::build_powerset_semilattice({"x", "y"});
  const auto rep = build_representation(s.algebra, Frame{Rank({"u", "v"}), {1, 1}});
  CHECK_THROWS_AS(analyze_dilatations(s.algebra, rep), AlgebraError);
}

TEST_CASE("commutative based algebras are dilatation full") {
  const auto s = gallery::build_powerset_semilattice({"x", "y"});
  const auto r = check_commutative_fullness(s.algebra, s.frame);
  CHECK(r.commutative);
  CHECK(r.full);
  CHECK(r.monoid_built);
  CHECK(r.equalized_conjugates_are_endos);
  CHECK(r.passed);

  const auto b = gallery::build_boolean_example();
  const auto rb = check_commutative_fullness(b.algebra, b.frame);
  CHECK_FALSE(rb.commutative);
  CHECK(rb.passed);
}
