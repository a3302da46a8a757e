#pragma once

// The free Boolean algebra on one generator x, a based algebra that is
// neither commutative nor dilatation full.

#include "ualg/core.hpp"
#include "ualg/frame.hpp"

namespace ualg::gallery {

struct BooleanExample {
  Algebra algebra;
  /// U_* = x.
  Frame frame;
};

/// Carrier (⊥, x, ¬x, ⊤); operations ¬, ∧ and the constant ⊥.
BooleanExample build_boolean_example();

}  // namespace ualg::gallery
