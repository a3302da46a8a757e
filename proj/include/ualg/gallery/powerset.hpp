#pragma once

// The finite union semilattice on all subsets of X, with zero and binary
// union. Elements are coded by bitmask (bit i <-> i-th event).

#include <string>
#include <vector>

#include "ualg/core.hpp"
#include "ualg/frame.hpp"

namespace ualg::gallery {

struct PowersetSemilattice {
  Rank events;
  Algebra algebra;
  /// U_x = {x}.
  Frame frame;
};

/// 1 <= |X| <= 4.
PowersetSemilattice build_powerset_semilattice(const std::vector<std::string>& events);

std::string subset_name(const Rank& events, std::uint32_t mask);

/// eta_M(Y) = union of M_y over y in Y, on bitmasks.
std::uint32_t union_extension(const std::vector<std::uint32_t>& matrix, std::uint32_t subset);

/// The same semilattice transported to characteristic vectors (bit strings in
/// event order) where union becomes bitwise or.
struct IncidenceTransform {
  Algebra bits;
  /// j: subset element -> bit-vector element.
  UnaryMap j;
  /// j(f(args)) = f'(j . args) for every operation and argument tuple.
  bool isomorphism = false;
};

IncidenceTransform incidence_transform(const PowersetSemilattice& semilattice);

/// Row x holds the characteristic vector of M_x.
std::vector<std::vector<int>> incidence_matrix(const Rank& events,
                                               const std::vector<std::uint32_t>& matrix);

}  // namespace ualg::gallery
