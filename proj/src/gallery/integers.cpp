#include "ualg/gallery/integers.hpp"

#include <string>

#include "ualg/checked.hpp"

namespace ualg::gallery {

std::int64_t IntMultiplier::operator()(std::int64_t b) const { return checked_mul(m, b); }

std::int64_t int_sample(const IntMultiplier& h) { return h(1); }

IntMultiplier int_extend(std::int64_t a) { return {a}; }

std::int64_t additive_image(const IntMultiplier& h, std::int64_t b) {
  const std::int64_t unit = h(1);
  std::int64_t sum = 0;
  for (std::int64_t i = 0; i < (b < 0 ? -b : b); ++i) sum = checked_add(sum, unit);
  return b < 0 ? checked_sub(std::int64_t{0}, sum) : sum;
}

IntMultiplier endowed_product(const IntMultiplier& d, const IntMultiplier& e) {
  return {checked_mul(d.m, e.m)};
}

IntMultiplier image_sum(const IntMultiplier& d, const IntMultiplier& e) {
  return {checked_add(d.m, e.m)};
}

IntMultiplier image_negate(const IntMultiplier& d) { return {checked_sub(std::int64_t{0}, d.m)}; }

IntMultiplier image_zero() { return {0}; }

std::set<std::int64_t> bounded_closure(std::size_t steps) {
  const std::set<std::int64_t> generators{1};
  std::set<std::int64_t> reached = generators;
  for (std::size_t k = 0; k < steps; ++k) {
    std::set<std::int64_t> next = reached;
    for (std::int64_t a : reached) {
      for (std::int64_t u : generators) next.insert(checked_add(a, u));
    }
    reached = std::move(next);
  }
  return reached;
}

namespace {

std::string triple(std::int64_t a, std::int64_t b, std::int64_t c) {
  return " at (" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

std::vector<SampledReport> integers_checks(SampleSpec spec) {
  std::vector<SampledReport> out;
  std::uint64_t index = 0;
  auto next = [&](std::size_t count) { return SampleSpec{derive_seed(spec.seed, index++), count}; };

  // Five sampled b per multiplier m in [-100, 100].
  std::size_t trial = 0;
  out.push_back(check_sampled("epsilon . r = identity on multipliers", next(201 * 5),
                              [&](std::mt19937_64& rng) -> std::optional<std::string> {
    const IntMultiplier h{-100 + static_cast<std::int64_t>(trial++ / 5)};
    const std::int64_t b = draw(rng, -1000, 1000);
    if (int_extend(int_sample(h))(b) == additive_image(h, b)) return std::nullopt;
    return "m = " + std::to_string(h.m) + ", b = " + std::to_string(b);
  }));

  out.push_back(check_sampled("r . epsilon = identity on integers", next(spec.count),
                              [](std::mt19937_64& rng) -> std::optional<std::string> {
    const std::int64_t a = draw(rng, -1'000'000'000, 1'000'000'000);
    if (int_sample(int_extend(a)) == a) return std::nullopt;
    return "a = " + std::to_string(a);
  }));

  out.push_back(check_sampled("gamma_a(b) = epsilon_a(b)", next(spec.count),
                              [](std::mt19937_64& rng) -> std::optional<std::string> {
    const std::int64_t a = draw(rng, -1'000'000, 1'000'000);
    const std::int64_t b = draw(rng, -1'000'000, 1'000'000);
    // chi_a at the constant matrix k_b is eta_{k_b}(a).
    if (int_extend(b)(a) == int_extend(a)(b)) return std::nullopt;
    return "a = " + std::to_string(a) + ", b = " + std::to_string(b);
  }));

  out.push_back(check_sampled("endowed operations are multiplication and addition",
                              next(spec.count),
                              [](std::mt19937_64& rng) -> std::optional<std::string> {
    const IntMultiplier d{draw(rng, -1000, 1000)};
    const IntMultiplier e{draw(rng, -1000, 1000)};
    const std::int64_t x = draw(rng, -1000, 1000);
    if (endowed_product(d, e)(x) != d(e(x))) return "composition" + triple(d.m, e.m, x);
    if (image_sum(d, e)(x) != checked_add(d(x), e(x))) return "pointwise sum" + triple(d.m, e.m, x);
    if (image_negate(d)(x) != -d(x)) return "negation" + triple(d.m, e.m, x);
    if (image_zero()(x) != 0) return "zero at " + std::to_string(x);
    return std::nullopt;
  }));

  out.push_back(check_sampled("endowed monoid ring laws", next(spec.count),
                              [](std::mt19937_64& rng) -> std::optional<std::string> {
    const IntMultiplier a{draw(rng, -1000, 1000)};
    const IntMultiplier b{draw(rng, -1000, 1000)};
    const IntMultiplier c{draw(rng, -1000, 1000)};
    const std::string at = triple(a.m, b.m, c.m);
    if (endowed_product(endowed_product(a, b), c) != endowed_product(a, endowed_product(b, c))) {
      return "product associativity" + at;
    }
    if (image_sum(image_sum(a, b), c) != image_sum(a, image_sum(b, c))) return "sum associativity" + at;
    if (endowed_product(a, image_sum(b, c)) != image_sum(endowed_product(a, b), endowed_product(a, c))) {
      return "left distributivity" + at;
    }
    if (endowed_product(image_sum(a, b), c) != image_sum(endowed_product(a, c), endowed_product(b, c))) {
      return "right distributivity" + at;
    }
    if (endowed_product(a, int_extend(1)) != a || endowed_product(int_extend(1), a) != a) {
      return "product unit" + at;
    }
    if (image_sum(a, image_zero()) != a) return "sum unit" + at;
    if (image_sum(a, image_negate(a)) != image_zero()) return "additive inverse" + at;
    if (endowed_product(a, b) != endowed_product(b, a) || image_sum(a, b) != image_sum(b, a)) {
      return "commutativity" + at;
    }
    return std::nullopt;
  }));

  out.push_back(check_sampled("multipliers distribute over addition", next(spec.count),
                              [](std::mt19937_64& rng) -> std::optional<std::string> {
    const IntMultiplier d{draw(rng, -1000, 1000)};
    const std::int64_t a = draw(rng, -1'000'000, 1'000'000);
    const std::int64_t b = draw(rng, -1'000'000, 1'000'000);
    if (d(checked_add(a, b)) == checked_add(d(a), d(b))) return std::nullopt;
    return "m(a+b) != ma + mb" + triple(d.m, a, b);
  }));

  std::size_t steps = 0;
  out.push_back(check_sampled("closure of {1} under + after k steps is {1..k+1}",
                              {spec.seed, 51},
                              [&](std::mt19937_64&) -> std::optional<std::string> {
    const std::size_t k = steps++;
    const auto reached = bounded_closure(k);
    std::set<std::int64_t> expected;
    for (std::int64_t v = 1; v <= static_cast<std::int64_t>(k) + 1; ++v) expected.insert(v);
    if (reached != expected) return "k = " + std::to_string(k) + ": closure differs";
    if (reached.contains(0) || reached.contains(-1)) {
      return "k = " + std::to_string(k) + ": 0 or -1 reached";
    }
    return std::nullopt;
  }));
  return out;
}

}  // namespace ualg::gallery
