#pragma once

// The constant generator, the exchange function and set-ary composition.
//
// The symbols these implement are context-dependent families; every call
// here takes the carrier size and index sets it needs as explicit arguments.

#include <optional>
#include <span>
#include <vector>

#include "ualg/core.hpp"

namespace ualg {

/// The constant table k_a over arity Y.
FunctionTable constant_fn(std::size_t carrier_size, Elem a, const Rank& arity);

/// An indexing m: I -> A^J stored row by row. `inner` is always explicit so
/// that an empty domain still knows its J.
struct Indexing {
  Rank domain;
  Rank inner;
  std::vector<std::vector<Elem>> rows;

  bool operator==(const Indexing&) const = default;
};

/// Builds m from one assignment per domain label. When the domain is empty
/// the inner rank must be supplied; otherwise it is read off the values and
/// must agree across them (and with `inner` when given).
Indexing make_indexing(Rank domain, const std::vector<Assignment>& values,
                       std::optional<Rank> inner = std::nullopt);

/// c_m: J -> A^I with [c_m(j)]_i = m_i(j).
Indexing exchange(const Indexing& m);

/// l = g . c_G, tabulated over Y. `parts` holds one table of arity Y per
/// rank label of g. When g is nullary the result is k_{g()} over Y.
FunctionTable set_ary_compose(const FunctionTable& g, std::span<const FunctionTable> parts,
                              const Rank& arity);

/// h . t, i.e. the table M -> h(t(M)).
FunctionTable post_compose(const UnaryMap& h, const FunctionTable& t);

/// The projection p_x over Y.
FunctionTable projection(std::size_t carrier_size, const Rank& arity, std::size_t label);

/// Rank-less restriction l . k: a -> l(a, a, ..., a).
UnaryMap equalize(const FunctionTable& t);

}  // namespace ualg
