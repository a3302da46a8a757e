#include "ualg/combinator.hpp"

#include <algorithm>

namespace ualg {

FunctionTable constant_fn(std::size_t carrier_size, Elem a, const Rank& arity) {
  if (a >= carrier_size) throw AlgebraError("value outside carrier");
  return FunctionTable(carrier_size, arity,
                       std::vector<Elem>(checked_power(carrier_size, arity.size()), a));
}

Indexing make_indexing(Rank domain, const std::vector<Assignment>& values,
                       std::optional<Rank> inner) {
  if (values.size() != domain.size()) {
    throw AlgebraError("indexing must hold one value per domain label");
  }
  if (domain.empty() && !inner) {
    throw AlgebraError("an indexing over an empty domain needs its inner rank stated");
  }
  Rank j = inner ? *inner : values.front().rank;
  Indexing m{std::move(domain), j, {}};
  m.rows.reserve(values.size());
  for (const auto& v : values) {
    if (v.rank != j || v.values.size() != j.size()) {
      throw AlgebraError("inconsistent inner ranks");
    }
    m.rows.push_back(v.values);
  }
  return m;
}

Indexing exchange(const Indexing& m) {
  Indexing c{m.inner, m.domain, {}};
  c.rows.assign(m.inner.size(), std::vector<Elem>(m.domain.size()));
  for (std::size_t i = 0; i < m.domain.size(); ++i) {
    if (m.rows[i].size() != m.inner.size()) throw AlgebraError("inconsistent inner ranks");
    for (std::size_t j = 0; j < m.inner.size(); ++j) c.rows[j][i] = m.rows[i][j];
  }
  return c;
}

FunctionTable set_ary_compose(const FunctionTable& g, std::span<const FunctionTable> parts,
                              const Rank& arity) {
  if (parts.size() != g.arity().size()) {
    throw AlgebraError("composition needs one part per rank label of the outer operation");
  }
  for (const auto& part : parts) {
    if (part.arity() != arity) throw AlgebraError("arity mismatch among composed parts");
    if (part.carrier_size() != g.carrier_size()) throw AlgebraError("carrier mismatch");
  }
  std::vector<Elem> inner(parts.size());
  return FunctionTable::tabulate(g.carrier_size(), arity, [&](std::span<const Elem> point) {
    const auto code = encode_point(point, g.carrier_size());
    for (std::size_t s = 0; s < parts.size(); ++s) inner[s] = parts[s].values()[code];
    return g(inner);
  });
}

FunctionTable post_compose(const UnaryMap& h, const FunctionTable& t) {
  std::vector<Elem> values;
  values.reserve(t.rows());
  for (Elem v : t.values()) values.push_back(h(v));
  return FunctionTable(t.carrier_size(), t.arity(), std::move(values));
}

FunctionTable projection(std::size_t carrier_size, const Rank& arity, std::size_t label) {
  if (label >= arity.size()) throw AlgebraError("projection label outside rank");
  return FunctionTable::tabulate(carrier_size, arity,
                                 [label](std::span<const Elem> p) { return p[label]; });
}

UnaryMap equalize(const FunctionTable& t) {
  const std::size_t n = t.carrier_size();
  UnaryMap result;
  result.values.reserve(n);
  std::vector<Elem> point(t.arity().size());
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(point.begin(), point.end(), static_cast<Elem>(a));
    result.values.push_back(t(point));
  }
  return result;
}

}  // namespace ualg
