#pragma once

// Shared fixtures: data paths and random tabulated algebras.

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "ualg/core.hpp"
#include "ualg/frame.hpp"

namespace support {

inline std::string data(const std::string& name) {
  return (std::filesystem::path(UALG_DATA_DIR) / name).string();
}

inline ualg::FunctionTable random_table(std::mt19937_64& rng, std::size_t n, std::size_t arity) {
  std::uniform_int_distribution<ualg::Elem> pick(0, static_cast<ualg::Elem>(n - 1));
  return ualg::FunctionTable::tabulate(n, ualg::Rank::indexed(arity),
                                       [&](std::span<const ualg::Elem>) { return pick(rng); });
}

inline ualg::Carrier carrier(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return ualg::Carrier(std::move(names));
}

/// One operation per entry of `ranks`, tables uniformly random.
inline ualg::Algebra random_algebra(std::mt19937_64& rng, std::size_t n,
                                    const std::vector<std::size_t>& ranks) {
  std::vector<ualg::Operation> ops;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    ops.emplace_back("f" + std::to_string(i), random_table(rng, n, ranks[i]));
  }
  return ualg::Algebra("random", carrier(n), std::move(ops));
}

/// Random carrier size in [2, max_n] and one to three operations of rank <= 2.
inline ualg::Algebra random_small_algebra(std::mt19937_64& rng, std::size_t max_n) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
  std::vector<std::size_t> ranks(std::uniform_int_distribution<std::size_t>(1, 3)(rng));
  for (auto& r : ranks) r = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  return random_algebra(rng, n, ranks);
}

/// The frame U_i = choice[i] with labels u0, u1, ...
inline ualg::Frame frame_of(const std::vector<ualg::Elem>& choice) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < choice.size(); ++i) labels.push_back("u" + std::to_string(i));
  return {ualg::Rank(std::move(labels)), choice};
}

}  // namespace support
