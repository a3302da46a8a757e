#pragma once

// The additive group of Gaussian integers; endomorphisms are 2x2 integer
// matrices acting on (re, im).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ualg/sampling.hpp"

namespace ualg::gallery {

struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;
  bool operator==(const GaussianInt&) const = default;
};

std::string show(const GaussianInt& a);
GaussianInt operator+(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a);
/// Integer scalar times a Gaussian integer.
GaussianInt scale(std::int64_t k, const GaussianInt& a);

/// h(a) = (a*re + b*im) + (c*re + d*im) i.
struct EndoMatrix {
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  GaussianInt operator()(const GaussianInt& z) const;
  bool operator==(const EndoMatrix&) const = default;
};

/// Frame U_0 = 1, U_1 = i.
using GaussianMatrix = std::array<GaussianInt, 2>;

/// r_U(h) = (h(1), h(i)).
GaussianMatrix gaussian_sample(const EndoMatrix& h);
/// eta_M(a) = M0.re a' + M1.re a'' + (M0.im a' + M1.im a'') i.
EndoMatrix gaussian_extend(const GaussianMatrix& m);

/// gamma_a(b) = (a' + a'') b.
GaussianInt gaussian_gamma(const GaussianInt& a, const GaussianInt& b);

/// j(a) = (multiplier a', multiplier a''); the inverse is m0(1) + m1(i).
std::array<std::int64_t, 2> gaussian_j(const GaussianInt& a);
GaussianInt gaussian_j_inverse(const std::array<std::int64_t, 2>& m);

SymbolicAlgebra<GaussianInt> gaussian_algebra(std::int64_t bound);

std::vector<SampledReport> gaussian_checks(SampleSpec spec);

}  // namespace ualg::gallery
