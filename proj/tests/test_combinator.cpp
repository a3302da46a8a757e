#include <doctest.h>

#include <random>

#include "support.hpp"
#include "ualg/combinator.hpp"

using namespace ualg;

namespace {

Indexing random_indexing(std::mt19937_64& rng, std::size_t n, std::size_t i, std::size_t j) {
  Indexing m{Rank::indexed(i), Rank::indexed(j), {}};
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (std::size_t r = 0; r < i; ++r) {
    std::vector<Elem> row(j);
    for (auto& v : row) v = pick(rng);
    m.rows.push_back(row);
  }
  return m;
}

}  // namespace

TEST_CASE("constant tables") {
  const auto k = constant_fn(3, 2, Rank::indexed(2));
  CHECK(k.rows() == 9);
  for (Elem v : k.values()) CHECK(v == 2);
  CHECK(constant_fn(3, 1, Rank{}).values() == std::vector<Elem>{1});
}

TEST_CASE("exchange transposes") {
  const Indexing m = make_indexing(Rank({"a", "b"}), {{Rank({"x", "y", "z"}), {0, 1, 2}},
                                                     {Rank({"x", "y", "z"}), {2, 2, 0}}});
  const Indexing c = exchange(m);
  CHECK(c.domain == Rank({"x", "y", "z"}));
  CHECK(c.inner == Rank({"a", "b"}));
  CHECK(c.rows == std::vector<std::vector<Elem>>{{0, 2}, {1, 2}, {2, 0}});
}

TEST_CASE("exchange is an involution") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto i = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    const auto j = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    const Indexing m = random_indexing(rng, 3, i, j);
    CHECK(exchange(exchange(m)) == m);
  }
}

TEST_CASE("empty domains keep their inner rank") {
  const Indexing m = make_indexing(Rank{}, {}, Rank::indexed(2));
  const Indexing c = exchange(m);
  CHECK(c.rows.size() == 2);
  CHECK(c.rows[0].empty());
  CHECK(exchange(c) == m);
  CHECK_THROWS_AS(make_indexing(Rank{}, {}), AlgebraError);
  CHECK_THROWS_WITH_AS(
      make_indexing(Rank::indexed(2), {{Rank::indexed(1), {0}}, {Rank::indexed(2), {0, 0}}}),
      doctest::Contains("inconsistent inner ranks"), AlgebraError);
}

TEST_CASE("set-ary composition evaluates pointwise") {
  std::mt19937_64 rng(5);
  const std::size_t n = 3;
  const Rank y = Rank::indexed(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = support::random_table(rng, n, 3);
    std::vector<FunctionTable> parts;
    for (int p = 0; p < 3; ++p) parts.push_back(support::random_table(rng, n, 2));
    const auto l = set_ary_compose(g, parts, y);
    for_each_point(n, 2, [&](std::span<const Elem> point) {
      const std::vector<Elem> inner{parts[0](point), parts[1](point), parts[2](point)};
      CHECK(l(point) == g(inner));
    });
  }
}

TEST_CASE("composition with projections and nullary operations") {
  std::mt19937_64 rng(9);
  const auto g = support::random_table(rng, 3, 2);
  const Rank y = Rank::indexed(2);
  const std::vector<FunctionTable> ps{projection(3, y, 0), projection(3, y, 1)};
  CHECK(set_ary_compose(g, ps, y) == g);
  const FunctionTable k(3, Rank{}, {1});
  CHECK(set_ary_compose(k, {}, y) == constant_fn(3, 1, y));
  CHECK_THROWS_AS(set_ary_compose(g, std::vector<FunctionTable>{projection(3, y, 0)}, y), AlgebraError);
}

TEST_CASE("equalize and post_compose") {
  const Rank y = Rank::indexed(3);
  CHECK(equalize(projection(4, y, 2)) == UnaryMap::identity(4));
  CHECK(equalize(constant_fn(4, 3, y)) == UnaryMap::constant(4, 3));
  const UnaryMap swap{{1, 0}};
  const auto t = post_compose(swap, projection(2, y, 0));
  CHECK(equalize(t) == swap);
}
