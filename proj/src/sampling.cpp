#include "ualg/sampling.hpp"

namespace ualg {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SampledReport check_sampled(std::string law, SampleSpec spec,
                            const std::function<std::optional<std::string>(std::mt19937_64&)>& trial) {
  SampledReport report{std::move(law), true, spec.seed, 0, std::nullopt, {}};
  std::mt19937_64 rng(spec.seed);
  for (std::size_t i = 0; i < spec.count; ++i) {
    ++report.samples;
    if (auto failure = trial(rng)) {
      report.holds = false;
      report.failing_sample = i;
      report.witness = std::move(*failure);
      break;
    }
  }
  return report;
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace ualg
