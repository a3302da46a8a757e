#include "ualg/gallery/boolean.hpp"

namespace ualg::gallery {

BooleanExample build_boolean_example() {
  // Elements as two-bit truth vectors: bit 0 for x true, bit 1 for x false.
  // Canonical order (⊥, x, ¬x, ⊤) is then 0, 1, 2, 3.
  const std::size_t n = 4;
  std::vector<Operation> ops;
  ops.emplace_back("¬", FunctionTable::tabulate(n, Rank::indexed(1), [](std::span<const Elem> p) {
                     return 3u ^ p[0];
                   }));
  ops.emplace_back("∧", FunctionTable::tabulate(n, Rank::indexed(2), [](std::span<const Elem> p) {
                     return p[0] & p[1];
                   }));
  ops.emplace_back("⊥", FunctionTable(n, Rank{}, {0}));
  return {Algebra("boolean", Carrier({"⊥", "x", "¬x", "⊤"}), std::move(ops)),
          Frame{Rank({"*"}), {1}}};
}

}  // namespace ualg::gallery
