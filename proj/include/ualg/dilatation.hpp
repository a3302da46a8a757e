#pragma once

// Dilatations, their indicators, the dilatation generator and the endowed
// dilatation monoid of a based algebra.

#include <optional>
#include <string>
#include <vector>

#include "ualg/commutativity.hpp"
#include "ualg/core.hpp"
#include "ualg/representation.hpp"

namespace ualg {

struct DilatationAnalysis {
  /// Endomorphisms that are also rank-less elementary functions, sorted.
  std::vector<UnaryMap> delta;
  /// indicators[i]: elements d with chi_d . k = delta[i].
  std::vector<std::vector<Elem>> indicators;
  /// D, the union of all indicator sets.
  std::vector<Elem> indicator_set;
  /// gamma_d as an index into delta; empty for non-indicators.
  std::vector<std::optional<std::size_t>> gamma;
  bool full = false;
  /// The intersection route and the indicator route agree.
  bool routes_agree = false;
  /// Dilatations with no indicator at all.
  std::vector<std::size_t> indicatorless;

  std::vector<Elem> non_indicators() const;
  std::optional<std::size_t> index_of(const UnaryMap& m) const;
};

/// Requires a basis. Computes Delta as E n L' and, independently, tests each
/// chi_d . k for membership in E.
DilatationAnalysis analyze_dilatations(const Algebra& alg, const Representation& rep,
                                       std::size_t table_guard = kDefaultTableGuard);

/// The image of one fundamental operation on Delta, phi(e)(a) = f(c_e(a)).
struct ImageOp {
  std::string symbol;
  Rank rank;
  /// Tabulated over Delta indices when every value stays inside Delta.
  std::optional<FunctionTable> table;
  bool inherited = false;
};

std::vector<ImageOp> image_ops(const Algebra& alg, const DilatationAnalysis& analysis);

struct EndowedMonoid {
  std::vector<UnaryMap> delta;
  std::size_t unit = 0;
  /// product[i][j] = index of delta[i] . delta[j].
  std::vector<std::vector<std::size_t>> product;
  /// One image operation per fundamental operation, over the carrier Delta.
  std::vector<Operation> image_ops;
};

struct EndowedMonoidResult {
  std::optional<EndowedMonoid> monoid;
  /// Elements that indicate no dilatation (when absent).
  std::vector<Elem> non_indicators;
  /// Per-operation inherited/not tags; always filled.
  std::vector<ImageOp> images;
  /// gamma(f(a)) = phi_f(gamma . a) for all f and a.
  bool gamma_homomorphic = false;
};

/// Absent unless the carrier is dilatation full. Throws AlgebraError if a
/// full carrier yields an image value outside Delta.
EndowedMonoidResult build_endowed_monoid(const Algebra& alg, const DilatationAnalysis& analysis);

struct MonoidLawReport {
  bool associative = true;
  bool unital = true;
  bool commutative = true;
  std::size_t constant_members = 0;
  bool passed() const { return associative && unital && commutative && constant_members <= 1; }
};

MonoidLawReport check_monoid_laws(const EndowedMonoid& monoid);

struct DistributivityReport {
  /// delta . phi(e) = phi(b_delta . e).
  bool composition_over_images = true;
  /// phi(e)(a) = f(c_e(a)), re-evaluated.
  bool image_definition = true;
  /// delta(f(a)) = f(delta . a).
  bool dilatations_over_operations = true;
  std::uint64_t cases = 0;
  std::string witness;
  bool passed() const {
    return composition_over_images && image_definition && dilatations_over_operations;
  }
};

DistributivityReport check_distributivities(const Algebra& alg, const EndowedMonoid& monoid,
                                            std::uint64_t guard = kDefaultCaseGuard);

/// Bijection Delta -> {0, 1} carrying product to meet, the binary image to
/// join, the nullary image to 0 and the unit to 1; nullopt when none exists.
std::optional<std::vector<int>> two_element_lattice_iso(const EndowedMonoid& monoid,
                                                        std::size_t zero_op,
                                                        std::size_t join_op);

struct DilatationFullnessReport {
  bool commutative = false;
  bool basis = false;
  bool full = false;
  bool monoid_built = false;
  /// chi_a . k commutes with every conjugate, for every a.
  bool equalized_conjugates_are_endos = false;
  bool passed = false;
  std::string note;
};

/// Commutative based algebras are dilatation full and have endowed monoids.
DilatationFullnessReport check_commutative_fullness(const Algebra& alg, const Frame& frame,
                                                    const EnumerationOptions& options = {});

}  // namespace ualg
