#pragma once

// Seeded sampling of universally quantified laws over infinite carriers.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace ualg {

struct SampleSpec {
  std::uint64_t seed = 0;
  std::size_t count = 1000;
};

/// Outcome of a law checked on `samples` seeded draws.
struct SampledReport {
  std::string law;
  bool holds = true;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::optional<std::size_t> failing_sample;
  std::string witness;
};

/// Derived seed for the index-th independent check under a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Runs `trial` on `count` draws from one generator seeded with `seed`.
/// A trial returns nullopt on success or a rendering of the failing instance.
SampledReport check_sampled(std::string law, SampleSpec spec,
                            const std::function<std::optional<std::string>(std::mt19937_64&)>& trial);

/// Uniform integer in [lo, hi].
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// An operation on an infinite carrier, given by a rule.
template <class T>
struct SymbolicOp {
  std::string symbol;
  std::size_t arity = 0;
  std::function<T(std::span<const T>)> apply;

  T operator()(std::span<const T> args) const { return apply(args); }
};

/// A rule-based algebra. Exhaustive machinery does not apply to it; its laws
/// are checked on seeded samples drawn by `sample`.
template <class T>
struct SymbolicAlgebra {
  std::string name;
  std::vector<SymbolicOp<T>> ops;
  std::function<T(std::mt19937_64&)> sample;
  std::function<std::string(const T&)> show;
};

}  // namespace ualg
