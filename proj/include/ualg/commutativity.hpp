#pragma once

// The medial law f(g . m) = g(f . c_m) for pairs of operations, elementary
// functions and conjugates.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ualg/core.hpp"
#include "ualg/elementary.hpp"
#include "ualg/representation.hpp"
#include "ualg/sampling.hpp"

namespace ualg {

inline constexpr std::uint64_t kDefaultCaseGuard = std::uint64_t{1} << 24;

struct MedialReport {
  std::string f;
  std::string g;
  bool holds = true;
  /// m: R -> A^S, row r holding m_r; present only when the law fails.
  std::optional<std::vector<std::vector<Elem>>> witness;
  std::uint64_t cases = 0;
};

/// Exhaustive over all |A|^(|R|*|S|) arrays m. The first counterexample in
/// canonical order is kept.
MedialReport ops_commute(const FunctionTable& f, const FunctionTable& g, std::string f_name = "f",
                         std::string g_name = "g", std::uint64_t guard = kDefaultCaseGuard);
MedialReport ops_commute(const Operation& f, const Operation& g,
                         std::uint64_t guard = kDefaultCaseGuard);

/// Re-evaluates both sides of the law at one array m.
bool medial_holds_at(const FunctionTable& f, const FunctionTable& g,
                     const std::vector<std::vector<Elem>>& m);

struct CommutativityReport {
  bool commutative = true;
  std::vector<MedialReport> pairs;
  /// Set when both directions of some pair disagreed (never expected).
  bool symmetry_violated = false;

  const MedialReport* first_failure() const;
};

/// All ordered pairs of fundamental operations. With `both_directions` the
/// pair (g, f) is recomputed rather than inferred from (f, g).
CommutativityReport is_commutative(const Algebra& alg, bool both_directions = false,
                                   std::uint64_t guard = kDefaultCaseGuard);

struct ElementaryCommutationReport {
  bool skipped = false;
  bool holds = true;
  std::size_t functions = 0;
  std::size_t pairs_checked = 0;
  std::size_t projection_checks = 0;
  bool projections_commute = true;
  std::optional<MedialReport> failure;
  std::string note;
};

/// Every pair of Y-ary elementary functions of a commutative algebra commutes;
/// also checks every fundamental operation against every projection p_x.
ElementaryCommutationReport check_elementary_commutation(
    const Algebra& alg, const Rank& arity, std::size_t table_guard = kDefaultTableGuard,
    std::uint64_t guard = kDefaultCaseGuard);

struct ConjugateCommutationReport {
  bool skipped = false;
  bool holds = true;
  std::uint64_t instances = 0;
  std::optional<MedialReport> failure;
  std::string note;
};

/// chi_a(chi_b . M) = chi_b(chi_a . c_M) for all a, b and all M: X -> A^X.
ConjugateCommutationReport check_conjugate_commutation(const Algebra& alg,
                                                       const Representation& rep,
                                                       std::uint64_t guard = kDefaultCaseGuard);

/// Medial law for one pair of a rule-based algebra on seeded samples.
template <class T>
SampledReport ops_commute_sampled(const SymbolicAlgebra<T>& alg, std::size_t fi, std::size_t gi,
                                  SampleSpec spec) {
  const auto& f = alg.ops.at(fi);
  const auto& g = alg.ops.at(gi);
  return check_sampled(
      "medial(" + f.symbol + "," + g.symbol + ")", spec,
      [&](std::mt19937_64& rng) -> std::optional<std::string> {
        std::vector<std::vector<T>> m(f.arity, std::vector<T>(g.arity));
        for (auto& row : m) {
          for (auto& cell : row) cell = alg.sample(rng);
        }
        std::vector<T> rows;
        for (const auto& row : m) rows.push_back(g(row));
        const T lhs = f(rows);
        std::vector<T> cols;
        for (std::size_t s = 0; s < g.arity; ++s) {
          std::vector<T> column;
          for (std::size_t r = 0; r < f.arity; ++r) column.push_back(m[r][s]);
          cols.push_back(f(column));
        }
        const T rhs = g(cols);
        if (lhs == rhs) return std::nullopt;
        std::ostringstream out;
        out << "m = [";
        for (std::size_t r = 0; r < m.size(); ++r) {
          out << (r ? "; " : "");
          for (std::size_t s = 0; s < m[r].size(); ++s) out << (s ? ", " : "") << alg.show(m[r][s]);
        }
        out << "]: " << alg.show(lhs) << " != " << alg.show(rhs);
        return out.str();
      });
}

/// All ordered pairs, each with its own derived seed.
template <class T>
std::vector<SampledReport> is_commutative_sampled(const SymbolicAlgebra<T>& alg, SampleSpec spec) {
  std::vector<SampledReport> reports;
  std::uint64_t index = 0;
  for (std::size_t fi = 0; fi < alg.ops.size(); ++fi) {
    for (std::size_t gi = 0; gi < alg.ops.size(); ++gi) {
      reports.push_back(
          ops_commute_sampled(alg, fi, gi, {derive_seed(spec.seed, index++), spec.count}));
    }
  }
  return reports;
}

}  // namespace ualg
