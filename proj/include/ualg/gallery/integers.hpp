#pragma once

// The additive group of integers with its endomorphisms as multipliers.

#include <cstdint>
#include <set>
#include <vector>

#include "ualg/sampling.hpp"

namespace ualg::gallery {

/// The endomorphism b -> m*b of (Z, +).
struct IntMultiplier {
  std::int64_t m = 0;
  std::int64_t operator()(std::int64_t b) const;
  bool operator==(const IntMultiplier&) const = default;
};

/// r(h) = h(1).
std::int64_t int_sample(const IntMultiplier& h);
/// epsilon_a(b) = a*b.
IntMultiplier int_extend(std::int64_t a);

/// h(b) evaluated additively as +-(h(1) + ... + h(1)); |b| summands.
std::int64_t additive_image(const IntMultiplier& h, std::int64_t b);

/// Endowed product: composition of multipliers.
IntMultiplier endowed_product(const IntMultiplier& d, const IntMultiplier& e);
/// Image of +: the pointwise sum.
IntMultiplier image_sum(const IntMultiplier& d, const IntMultiplier& e);
IntMultiplier image_negate(const IntMultiplier& d);
IntMultiplier image_zero();

/// Elements reachable from {1} with at most k additions of a generator.
std::set<std::int64_t> bounded_closure(std::size_t steps);

std::vector<SampledReport> integers_checks(SampleSpec spec);

}  // namespace ualg::gallery
