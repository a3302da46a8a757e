#include "ualg/gallery/gaussian.hpp"

#include "ualg/checked.hpp"
#include "ualg/commutativity.hpp"

namespace ualg::gallery {

std::string show(const GaussianInt& a) {
  std::string out = std::to_string(a.re);
  out += a.im < 0 ? "-" : "+";
  out += std::to_string(a.im < 0 ? -a.im : a.im) + "i";
  return out;
}

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
  return {checked_add(a.re, b.re), checked_add(a.im, b.im)};
}

GaussianInt operator-(const GaussianInt& a) {
  return {checked_sub(std::int64_t{0}, a.re), checked_sub(std::int64_t{0}, a.im)};
}

GaussianInt scale(std::int64_t k, const GaussianInt& a) {
  return {checked_mul(k, a.re), checked_mul(k, a.im)};
}

GaussianInt EndoMatrix::operator()(const GaussianInt& z) const {
  return {checked_add(checked_mul(a, z.re), checked_mul(b, z.im)),
          checked_add(checked_mul(c, z.re), checked_mul(d, z.im))};
}

GaussianMatrix gaussian_sample(const EndoMatrix& h) { return {h({1, 0}), h({0, 1})}; }

EndoMatrix gaussian_extend(const GaussianMatrix& m) {
  return {m[0].re, m[1].re, m[0].im, m[1].im};
}

GaussianInt gaussian_gamma(const GaussianInt& a, const GaussianInt& b) {
  return scale(checked_add(a.re, a.im), b);
}

std::array<std::int64_t, 2> gaussian_j(const GaussianInt& a) { return {a.re, a.im}; }

GaussianInt gaussian_j_inverse(const std::array<std::int64_t, 2>& m) {
  return scale(m[0], {1, 0}) + scale(m[1], {0, 1});
}

SymbolicAlgebra<GaussianInt> gaussian_algebra(std::int64_t bound) {
  SymbolicAlgebra<GaussianInt> alg;
  alg.name = "gaussian-integers";
  alg.ops.push_back({"+", 2, [](std::span<const GaussianInt> p) { return p[0] + p[1]; }});
  alg.ops.push_back({"0", 0, [](std::span<const GaussianInt>) { return GaussianInt{}; }});
  alg.ops.push_back({"-", 1, [](std::span<const GaussianInt> p) { return -p[0]; }});
  alg.sample = [bound](std::mt19937_64& rng) {
    return GaussianInt{draw(rng, -bound, bound), draw(rng, -bound, bound)};
  };
  alg.show = [](const GaussianInt& a) { return show(a); };
  return alg;
}

namespace {

GaussianInt random_gaussian(std::mt19937_64& rng, std::int64_t bound) {
  return {draw(rng, -bound, bound), draw(rng, -bound, bound)};
}

GaussianMatrix random_matrix(std::mt19937_64& rng, std::int64_t bound) {
  return {random_gaussian(rng, bound), random_gaussian(rng, bound)};
}

// chi_a(M) = eta_M(a).
GaussianInt chi(const GaussianInt& a, const GaussianMatrix& m) { return gaussian_extend(m)(a); }

std::string show(const GaussianMatrix& m) { return "(" + show(m[0]) + ", " + show(m[1]) + ")"; }

}  // namespace

std::vector<SampledReport> gaussian_checks(SampleSpec spec) {
  std::vector<SampledReport> out = is_commutative_sampled(gaussian_algebra(1'000'000), spec);
  std::uint64_t index = 100;
  auto next = [&] { return SampleSpec{derive_seed(spec.seed, index++), spec.count}; };

  out.push_back(check_sampled("eta . r_U = identity on matrices", next(),
                              [](std::mt19937_64& rng) -> std::optional<std::string> {
    const EndoMatrix h{draw(rng, -50, 50), draw(rng, -50, 50), draw(rng, -50, 50), draw(rng, -50, 50)};
    const EndoMatrix back = gaussian_extend(gaussian_sample(h));
    const GaussianInt z = random_gaussian(rng, 1000);
    if (back == h && back(z) == h(z)) return std::nullopt;
    return "h = [" + std::to_string(h.a) + " " + std::to_string(h.b) + "; " + std::to_string(h.c) +
           " " + std::to_string(h.d) + "]";
  }));

  out.push_back(check_sampled("r_U . eta = identity on M", next(),
                              [](std::mt19937_64& rng) -> std::optional<std::string> {
    const GaussianMatrix m = random_matrix(rng, 50);
    if (gaussian_sample(gaussian_extend(m)) == m) return std::nullopt;
    return "M = " + show(m);
  }));

  out.push_back(check_sampled("gamma_a(b) = (a' + a'') b", next(),
                              [](std::mt19937_64& rng) -> std::optional<std::string> {
    const GaussianInt a = random_gaussian(rng, 1'000'000);
    const GaussianInt b = random_gaussian(rng, 1'000'000);
    if (chi(a, {b, b}) == gaussian_gamma(a, b)) return std::nullopt;
    return "a = " + show(a) + ", b = " + show(b);
  }));

  out.push_back(check_sampled("every gamma_a is an endomorphism", next(),
                              [](std::mt19937_64& rng) -> std::optional<std::string> {
    const GaussianInt a = random_gaussian(rng, 1000);
    const GaussianInt x = random_gaussian(rng, 1'000'000);
    const GaussianInt y = random_gaussian(rng, 1'000'000);
    if (gaussian_gamma(a, x + y) != gaussian_gamma(a, x) + gaussian_gamma(a, y)) {
      return "additivity at a = " + show(a) + ", x = " + show(x) + ", y = " + show(y);
    }
    if (gaussian_gamma(a, -x) != -gaussian_gamma(a, x)) return "negation at a = " + show(a);
    if (gaussian_gamma(a, {}) != GaussianInt{}) return "zero at a = " + show(a);
    return std::nullopt;
  }));

  out.push_back(check_sampled("conjugates commute", next(),
                              [](std::mt19937_64& rng) -> std::optional<std::string> {
    const GaussianInt a = random_gaussian(rng, 50);
    const GaussianInt b = random_gaussian(rng, 50);
    const std::array<GaussianMatrix, 2> m{random_matrix(rng, 50), random_matrix(rng, 50)};
    const GaussianInt lhs = chi(a, {chi(b, m[0]), chi(b, m[1])});
    const GaussianMatrix col0{m[0][0], m[1][0]};
    const GaussianMatrix col1{m[0][1], m[1][1]};
    const GaussianInt rhs = chi(b, {chi(a, col0), chi(a, col1)});
    if (lhs == rhs) return std::nullopt;
    return "a = " + show(a) + ", b = " + show(b) + ", M = (" + show(m[0]) + ", " + show(m[1]) + ")";
  }));

  // Exhaustive over the box [-10, 10]^2 in both directions.
  std::int64_t cell = 0;
  out.push_back(check_sampled("j round trips on [-10, 10]^2", {spec.seed, 21 * 21},
                              [&](std::mt19937_64&) -> std::optional<std::string> {
    const std::int64_t u = cell / 21 - 10;
    const std::int64_t v = cell % 21 - 10;
    ++cell;
    const GaussianInt a{u, v};
    if (gaussian_j_inverse(gaussian_j(a)) != a) return "l(j(a)) at a = " + show(a);
    const std::array<std::int64_t, 2> m{u, v};
    if (gaussian_j(gaussian_j_inverse(m)) != m) {
      return "j(l(m)) at m = (" + std::to_string(u) + ", " + std::to_string(v) + ")";
    }
    return std::nullopt;
  }));
  return out;
}

}  // namespace ualg::gallery
