#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"
#include "ualg/gallery/boolean.hpp"
#include "ualg/gallery/powerset.hpp"
#include "ualg/representation.hpp"

using namespace ualg;

namespace {

std::set<std::vector<Elem>> as_set(const std::vector<UnaryMap>& maps) {
  std::set<std::vector<Elem>> out;
  for (const auto& m : maps) out.insert(m.values);
  return out;
}

}  // namespace

TEST_CASE("endomorphism counts") {
  const auto s2 = gallery::build_powerset_semilattice({"x", "y"});
  const auto s3 = gallery::build_powerset_semilattice({"x", "y", "z"});
  const auto b = gallery::build_boolean_example();
  for (auto method : {EndoMethod::brute, EndoMethod::backtrack}) {
    CHECK(enumerate_endomorphisms(s2.algebra, {method}).size() == 16);
    CHECK(as_set(enumerate_endomorphisms(b.algebra, {method})) == oracle::endomorphisms(b.algebra));
  }
  CHECK(as_set(enumerate_endomorphisms(s2.algebra)) == oracle::endomorphisms(s2.algebra));
  CHECK(enumerate_endomorphisms(s3.algebra).size() == 512);
  CHECK(enumerate_endomorphisms(b.algebra).size() == 4);
}

TEST_CASE("brute force and backtracking agree") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Algebra alg = support::random_small_algebra(rng, 5);
    const auto brute = enumerate_endomorphisms(alg, {EndoMethod::brute});
    const auto back = enumerate_endomorphisms(alg, {EndoMethod::backtrack});
    CHECK(brute == back);
    CHECK(std::is_sorted(back.begin(), back.end()));
    if (alg.size() <= 4) CHECK(as_set(back) == oracle::endomorphisms(alg));
  }
}

TEST_CASE("brute force respects its cap") {
  const auto s3 = gallery::build_powerset_semilattice({"x", "y", "z"});
  CHECK_THROWS_AS(enumerate_endomorphisms(s3.algebra, {EndoMethod::brute, 1000}), GuardExceeded);
}

TEST_CASE("the canonical semilattice frame is a basis") {
  for (const auto& events : {std::vector<std::string>{"x"}, {"x", "y"}, {"x", "y", "z"}}) {
    const auto s = gallery::build_powerset_semilattice(events);
    const auto rep = build_representation(s.algebra, s.frame);
    REQUIRE(rep.bijective());
    CHECK(rep.endos.size() == rep.matrix_count());
    for (std::size_t i = 0; i < rep.endos.size(); ++i) {
      std::vector<Elem> sample;
      for (Elem u : s.frame.U) sample.push_back(rep.endos[i](u));
      CHECK(rep.extend(sample) == rep.endos[i]);
    }
    for (std::size_t c = 0; c < rep.matrix_count(); ++c) {
      const auto m = rep.matrix(c);
      const auto& h = rep.extend(m);
      for (std::size_t x = 0; x < m.size(); ++x) CHECK(h(s.frame.U[x]) == m[x]);
    }
  }
}

TEST_CASE("conjugates are chi_a(M) = eta_M(a)") {
  const auto s = gallery::build_powerset_semilattice({"x", "y"});
  const auto rep = build_representation(s.algebra, s.frame);
  REQUIRE(rep.conjugates.size() == 4);
  for (Elem a = 0; a < 4; ++a) {
    for (std::size_t c = 0; c < rep.matrix_count(); ++c) {
      const auto m = rep.matrix(c);
      CHECK(rep.conjugates[a](m) == rep.extend(m)(a));
    }
  }
  const auto conj = conjugate_algebra(s.algebra, rep);
  CHECK(conj.op(3).symbol() == "chi_{x,y}");
}

TEST_CASE("a constant frame collides") {
  const auto s = gallery::build_powerset_semilattice({"x", "y"});
  const auto rep = build_representation(s.algebra, support::frame_of({1, 1}));
  CHECK_FALSE(rep.bijective());
  REQUIRE(rep.collision);
  const auto [i, j] = *rep.collision;
  CHECK(rep.endos[i] != rep.endos[j]);
  CHECK(rep.sampling[i] == rep.sampling[j]);
  CHECK_THROWS_AS(rep.extend(std::vector<Elem>{0, 0}), AlgebraError);
}

TEST_CASE("empty frames") {
  const auto s = gallery::build_powerset_semilattice({"x"});
  const auto rep = build_representation(s.algebra, Frame{});
  CHECK_FALSE(rep.bijective());
  CHECK(rep.explanation.find("empty frame") != std::string::npos);

  const Algebra trivial("t", Carrier({"e"}), {Operation("k", FunctionTable(1, Rank{}, {0}))});
  const auto rt = build_representation(trivial, Frame{});
  CHECK(rt.bijective());
  CHECK(rt.conjugates[0].rows() == 1);

  // Generated by its nullary operations, so the identity is the only endomorphism.
  const Algebra pointed("p", Carrier({"a", "b"}),
                        {Operation("a", FunctionTable(2, Rank{}, {0})),
                         Operation("s", FunctionTable(2, Rank::indexed(1), {1, 0}))});
  CHECK(build_representation(pointed, Frame{}).bijective());
}

TEST_CASE("frame validation") {
  const auto s = gallery::build_powerset_semilattice({"x"});
  CHECK_THROWS_AS(build_representation(s.algebra, Frame{Rank({"u"}), {7}}), AlgebraError);
  CHECK_THROWS_AS(build_representation(s.algebra, Frame{Rank({"u"}), {}}), AlgebraError);
}

TEST_CASE("basis theorem on the examples") {
  const auto s2 = gallery::build_powerset_semilattice({"x", "y"});
  const auto b = gallery::build_boolean_example();
  for (const auto* ex : {&s2.algebra, &b.algebra}) {
    const Frame& f = ex == &s2.algebra ? s2.frame : b.frame;
    const auto r = verify_basis_theorem(*ex, f);
    CHECK(r.passed());
    CHECK(r.generator);
    CHECK(r.bijective);
    CHECK(r.members_commute);
    CHECK(r.same_endomorphisms);
    CHECK(r.conjugates_match);
    REQUIRE(r.non_members_rejected);
    CHECK(*r.non_members_rejected);
    CHECK(r.non_members_checked == checked_power(ex->size(), ex->size()) - (ex == &b.algebra ? 4 : 16));
  }
}

TEST_CASE("basis theorem biconditional on random algebras") {
  std::mt19937_64 rng(41);
  int generators = 0;
  for (int trial = 0; trial < 200 && generators < 40; ++trial) {
    const Algebra alg = support::random_small_algebra(rng, 4);
    const auto k = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    std::vector<Elem> choice(k);
    for (auto& c : choice) c = std::uniform_int_distribution<Elem>(0, alg.size() - 1)(rng);
    try {
      const auto r = verify_basis_theorem(alg, support::frame_of(choice));
      if (!r.generator) continue;
      ++generators;
      CHECK(r.biconditional);
      CHECK(r.passed());
    } catch (const GuardExceeded&) {
    }
  }
  CHECK(generators >= 20);
}

TEST_CASE("find_basis") {
  const auto s = gallery::build_powerset_semilattice({"x", "y"});
  const auto f = find_basis(s.algebra);
  REQUIRE(f);
  CHECK(f->U.size() == 2);
  CHECK(build_representation(s.algebra, *f).bijective());

  const Algebra swap("s", Carrier({"a", "b"}), {Operation("s", FunctionTable(2, Rank::indexed(1), {1, 0}))});
  const auto sf = find_basis(swap);
  REQUIRE(sf);
  CHECK(sf->U == std::vector<Elem>{0});

  // The 3-chain under max has 10 monotone endomorphisms, not a power of 3.
  const Algebra chain("c", Carrier({"0", "1", "2"}),
                      {Operation("max", FunctionTable::tabulate(3, Rank::indexed(2), [](std::span<const Elem> p) {
                         return std::max(p[0], p[1]);
                       }))});
  CHECK(enumerate_endomorphisms(chain).size() == 10);
  CHECK_FALSE(find_basis(chain));
}
