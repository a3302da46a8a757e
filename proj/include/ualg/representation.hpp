#pragma once

// Endomorphism enumeration and the analytic representation r_U: E -> A^X
// with its extension function and conjugate functions.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ualg/core.hpp"
#include "ualg/elementary.hpp"
#include "ualg/frame.hpp"

namespace ualg {

enum class EndoMethod { brute, backtrack };

struct EnumerationOptions {
  EndoMethod method = EndoMethod::backtrack;
  /// Brute force refuses carriers with |A|^|A| above this.
  std::uint64_t max_candidates = std::uint64_t{1} << 24;
};

/// All endomorphisms, sorted in canonical (lexicographic) order.
std::vector<UnaryMap> enumerate_endomorphisms(const Algebra& alg,
                                              const EnumerationOptions& options = {});

/// Matrices are points of A^X, addressed by their canonical code.
class Representation {
 public:
  Frame frame;
  std::size_t carrier_size = 0;
  std::vector<UnaryMap> endos;
  /// sampling[i] = code of endos[i] . U.
  std::vector<std::size_t> sampling;
  /// extension[code] = index of the endomorphism with that sample.
  std::optional<std::vector<std::size_t>> extension;
  /// chi_a over X, one per element; empty unless bijective.
  std::vector<FunctionTable> conjugates;

  /// Two distinct endomorphisms with equal samples.
  std::optional<std::pair<std::size_t, std::size_t>> collision;
  /// First matrix no endomorphism samples to.
  std::optional<std::vector<Elem>> unhit;
  std::string explanation;

  bool bijective() const { return extension.has_value(); }
  std::size_t matrix_count() const;
  std::vector<Elem> matrix(std::size_t code) const;
  std::size_t code(std::span<const Elem> matrix) const;
  /// eta_M; requires bijective().
  const UnaryMap& extend(std::span<const Elem> matrix) const;
};

Representation build_representation(const Algebra& alg, const Frame& frame,
                                     const EnumerationOptions& options = {});

/// The first basis in order of size, then lexicographic choice of distinct
/// elements; index labels are the element names. Nullopt when none exists.
std::optional<Frame> find_basis(const Algebra& alg, const EnumerationOptions& options = {});

/// The algebra chi: A -> A^{A^X} of the conjugate functions (one op per element).
Algebra conjugate_algebra(const Algebra& alg, const Representation& rep);

/// h(chi_a(M)) = chi_a(h . M) for every a and M; requires a basis.
bool commutes_with_conjugates(const UnaryMap& h, const Representation& rep);

/// The premise-and-conclusion check of the basis theorem for one frame.
struct BasisTheoremReport {
  bool generator = false;
  ElementaryGeneratorResult::Status elementary_route = ElementaryGeneratorResult::Status::exists;
  bool bijective = false;
  /// elementary generator exists <=> sampling bijective.
  bool biconditional = false;
  /// Every member h satisfies h(chi_a(M)) = chi_a(h . M) for all a, M.
  bool members_commute = false;
  /// Endomorphisms of the conjugate algebra equal those of the original.
  bool same_endomorphisms = false;
  /// Non-members each rejected at some (a, M); only run for |A|^|A| <= the cap.
  std::optional<bool> non_members_rejected;
  std::size_t non_members_checked = 0;
  /// The elementary chi tables match the extension-derived conjugates.
  bool conjugates_match = false;
  std::string note;

  bool passed() const;
};

BasisTheoremReport verify_basis_theorem(const Algebra& alg, const Frame& frame,
                                        const EnumerationOptions& options = {},
                                        std::size_t table_guard = kDefaultTableGuard,
                                        std::uint64_t rejection_cap = 1u << 16);

}  // namespace ualg
