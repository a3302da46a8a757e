#pragma once

#include <vector>

#include "ualg/core.hpp"

namespace ualg {

/// An indexing U: X -> A used to sample endomorphisms. X may be empty.
struct Frame {
  Rank X;
  std::vector<Elem> U;

  bool operator==(const Frame&) const = default;
};

/// Throws AlgebraError unless U has one in-carrier value per label of X.
void validate_frame(const Frame& frame, std::size_t carrier_size);

}  // namespace ualg
