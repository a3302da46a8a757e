#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ualg/checked.hpp"
#include "ualg/gallery/boolean.hpp"
#include "ualg/gallery/gaussian.hpp"
#include "ualg/gallery/integers.hpp"
#include "ualg/gallery/pert.hpp"
#include "ualg/gallery/powerset.hpp"
#include "ualg/representation.hpp"

using namespace ualg;
using namespace ualg::gallery;

namespace {

bool all_hold(const std::vector<SampledReport>& reports) {
  bool ok = true;
  for (const auto& r : reports) {
    INFO(r.law << ": " << r.witness);
    CHECK(r.holds);
    ok = ok && r.holds;
  }
  return ok;
}

}  // namespace

TEST_CASE("powerset semilattice construction") {
  const auto s = build_powerset_semilattice({"x", "y"});
  CHECK(s.algebra.carrier().names() == std::vector<std::string>{"{}", "{x}", "{y}", "{x,y}"});
  CHECK(s.frame.U == std::vector<Elem>{1, 2});
  CHECK_THROWS_AS(build_powerset_semilattice({}), GuardExceeded);
  CHECK_THROWS_AS(build_powerset_semilattice({"a", "b", "c", "d", "e"}), GuardExceeded);
}

TEST_CASE("the union formula agrees with the generic extension") {
  for (const auto& events : {std::vector<std::string>{"x"}, {"x", "y"}, {"x", "y", "z"}}) {
    const auto s = build_powerset_semilattice(events);
    const auto rep = build_representation(s.algebra, s.frame);
    REQUIRE(rep.bijective());
    for (std::size_t c = 0; c < rep.matrix_count(); ++c) {
      const auto m = rep.matrix(c);
      const std::vector<std::uint32_t> masks(m.begin(), m.end());
      for (std::uint32_t y = 0; y < s.algebra.size(); ++y) {
        CHECK(rep.extend(m)(y) == union_extension(masks, y));
      }
      CHECK(union_extension(masks, 0) == 0);
    }
  }
}

TEST_CASE("graph example") {
  const Rank x({"a", "b", "c", "d"});
  const std::vector<std::uint32_t> m{0b0110, 0b1000, 0b1000, 0};
  CHECK(subset_name(x, union_extension(m, 0b0001)) == "{b,c}");
  CHECK(subset_name(x, union_extension(m, 0b0011)) == "{b,c,d}");
  const auto rows = incidence_matrix(x, m);
  CHECK(rows[0] == std::vector<int>{0, 1, 1, 0});
  CHECK(rows[3] == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("incidence transform") {
  const auto s = build_powerset_semilattice({"x", "y"});
  const auto t = incidence_transform(s);
  CHECK(t.isomorphism);
  CHECK(t.bits.carrier().name(t.j(1)) == "10");
  CHECK(t.bits.carrier().name(t.j(2)) == "01");
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) CHECK(t.j(a | b) == (t.j(a) | t.j(b)));
  }
}

TEST_CASE("PERT extension on the four-event project") {
  const auto p = four_event_project();
  CHECK(pert_eta(p, {{"a", 0}}) == Schedule{{"b", 1}, {"c", 3}});
  CHECK(pert_eta(p, {{"b", 1}, {"c", 3}}) == Schedule{{"d", 8}});
  CHECK(pert_eta(p, {}).empty());
  CHECK_THROWS_AS(pert_eta(p, {{"z", 0}}), AlgebraError);
}

TEST_CASE("PERT forward pass") {
  const auto p = four_event_project();
  const auto t = pert_forward_pass(p, {{"a", 0}});
  REQUIRE(t.size() == 3);
  CHECK(t[0] == Schedule{{"b", 1}, {"c", 3}});
  CHECK(t[1] == Schedule{{"d", 8}});
  CHECK(t[2].empty());
  CHECK(accumulate({{"a", 0}}, t) == longest_path_times(p, {{"a", 0}}));
  CHECK(pert_forward_pass(p, {}) == std::vector<Schedule>{{}});

  const auto cyclic = make_project({"u", "v"}, {{"u", {{"v", 1}}}, {"v", {{"u", 1}}}});
  CHECK_THROWS_WITH_AS(pert_forward_pass(cyclic, {{"u", 0}}), doctest::Contains("cycle"), CycleError);
  CHECK_THROWS_AS(longest_path_times(cyclic, {}), CycleError);
  CHECK_THROWS_AS(make_project({"u"}, {{"u", {{"w", 1}}}}), AlgebraError);
}

TEST_CASE("forward pass matches path enumeration on random projects") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const auto events = static_cast<std::size_t>(draw(rng, 1, 6));
    const auto p = random_acyclic_project(rng, events, 9);
    const auto seed = random_schedule(rng, p.events, 9);
    std::map<std::string, std::map<std::string, std::uint64_t>> arcs(p.successors.begin(), p.successors.end());
    const auto expected = oracle::longest_paths(arcs, seed);
    const Schedule got = accumulate(seed, pert_forward_pass(p, seed));
    CHECK(got == Schedule(expected.begin(), expected.end()));
    CHECK(longest_path_times(p, seed) == got);
  }
  CHECK(pert_forward_pass_check({0, 200}).holds);
}

TEST_CASE("PERT dilatations, nu and j") {
  const Schedule a{{"b", 1}, {"c", 3}};
  CHECK(pert_gamma(a) == PertDilatation{3});
  CHECK(pert_gamma({}) == PertDilatation{});
  CHECK(apply_dilatation(PertDilatation{3}, {{"d", 8}}) == Schedule{{"d", 11}});
  CHECK(apply_dilatation(PertDilatation{}, {{"d", 8}}).empty());
  CHECK(pert_nu(a) == 4);
  CHECK(pert_nu({}) == 0);
  CHECK(nat_oplus(4, 8) == 11);
  CHECK(nat_oplus(4, 0) == 0);
  CHECK(nat_successor(0) == 0);
  CHECK(nat_successor(4) == 5);

  const auto j = pert_j({{"b", 1}}, {"a", "b"});
  CHECK(j.at("a") == PertDilatation{});
  CHECK(j.at("b") == PertDilatation{1});
  CHECK(pert_j_inverse(j) == Schedule{{"b", 1}});
  for (const auto& [x, d] : pert_j({}, {"a", "b"})) CHECK_FALSE(d.delay);
  CHECK_THROWS_AS(pert_j({{"z", 1}}, {"a"}), AlgebraError);
}

TEST_CASE("PERT sampled laws") {
  const auto reports = pert_checks({"a", "b", "c", "d"}, {0, 1000});
  CHECK(reports.size() == 9 + 7);
  CHECK(all_hold(reports));
}

TEST_CASE("PERT overflow is an error") {
  CHECK_THROWS_AS(delay({{"a", std::numeric_limits<Time>::max()}}, 1), OverflowError);
}

TEST_CASE("integers") {
  CHECK(int_sample(int_extend(5)) == 5);
  CHECK(endowed_product({3}, {-4}) == IntMultiplier{-12});
  CHECK(image_sum({3}, {-4}) == IntMultiplier{-1});
  CHECK(additive_image({7}, -3) == -21);
  CHECK(bounded_closure(3) == std::set<std::int64_t>{1, 2, 3, 4});
  CHECK(bounded_closure(0) == std::set<std::int64_t>{1});
  CHECK_THROWS_AS(IntMultiplier{std::numeric_limits<std::int64_t>::max()}(2), OverflowError);
  CHECK(all_hold(integers_checks({0, 1000})));
}

TEST_CASE("gaussian integers") {
  CHECK(gaussian_gamma({2, 3}, {1, -1}) == GaussianInt{5, -5});
  const GaussianMatrix kb{GaussianInt{1, -1}, GaussianInt{1, -1}};
  CHECK(gaussian_extend(kb)({2, 3}) == GaussianInt{5, -5});
  const EndoMatrix id{1, 0, 0, 1};
  CHECK(gaussian_sample(id) == GaussianMatrix{GaussianInt{1, 0}, GaussianInt{0, 1}});
  CHECK(show(GaussianInt{5, -5}) == "5-5i");
  CHECK(all_hold(gaussian_checks({7, 1000})));
}

TEST_CASE("boolean example") {
  const auto b = build_boolean_example();
  CHECK(b.algebra.carrier().names() == std::vector<std::string>{"⊥", "x", "¬x", "⊤"});
  CHECK(b.frame.U == std::vector<Elem>{1});
  CHECK(enumerate_endomorphisms(b.algebra, {EndoMethod::brute}).size() == 4);
}
