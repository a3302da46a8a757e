#include "ualg/core.hpp"

#include <set>
#include <sstream>

namespace ualg {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > cap / base) {
      throw GuardExceeded("size " + std::to_string(base) + "^" + std::to_string(exponent) +
                          " exceeds cap " + std::to_string(cap));
    }
    result *= base;
  }
  if (result > cap) throw GuardExceeded("size exceeds cap " + std::to_string(cap));
  return result;
}

Carrier::Carrier(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<Elem>(i)).second) {
      throw AlgebraError("duplicate element name \"" + names_[i] + "\"");
    }
  }
}

std::optional<Elem> Carrier::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem Carrier::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw AlgebraError("value outside carrier: \"" + std::string(name) + "\"");
}

Rank::Rank(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw AlgebraError("duplicate rank label \"" + l + "\"");
  }
}

Rank Rank::indexed(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Rank(std::move(labels));
}

std::optional<std::size_t> Rank::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t encode_point(std::span<const Elem> point, std::size_t carrier_size) {
  std::size_t code = 0;
  for (Elem e : point) code = code * carrier_size + e;
  return code;
}

void decode_point(std::size_t code, std::size_t carrier_size, std::span<Elem> out) {
  for (std::size_t i = out.size(); i > 0; --i) {
    out[i - 1] = static_cast<Elem>(code % carrier_size);
    code /= carrier_size;
  }
}

FunctionTable::FunctionTable(std::size_t carrier_size, Rank arity, std::vector<Elem> values)
    : carrier_size_(carrier_size), arity_(std::move(arity)), values_(std::move(values)) {
  const auto expected = checked_power(carrier_size_, arity_.size());
  if (values_.size() != expected) {
    throw AlgebraError("partial table: " + std::to_string(values_.size()) + " of " +
                       std::to_string(expected) + " rows");
  }
  for (Elem v : values_) {
    if (v >= carrier_size_) throw AlgebraError("value outside carrier");
  }
}

Elem FunctionTable::eval(const Assignment& args) const {
  if (args.rank != arity_) throw AlgebraError("rank mismatch");
  if (args.values.size() != arity_.size()) throw AlgebraError("assignment size mismatch");
  for (Elem v : args.values) {
    if (v >= carrier_size_) throw AlgebraError("argument outside carrier");
  }
  return (*this)(args.values);
}

Operation::Operation(std::string symbol, FunctionTable table)
    : symbol_(std::move(symbol)), table_(std::move(table)) {}

Elem eval(const Operation& op, const Assignment& args) { return op.table().eval(args); }

Algebra::Algebra(std::string name, Carrier carrier, std::vector<Operation> ops)
    : name_(std::move(name)), carrier_(std::move(carrier)), ops_(std::move(ops)) {
  if (ops_.empty()) throw AlgebraError("empty operation list");
  for (const auto& op : ops_) {
    if (op.table().carrier_size() != carrier_.size()) {
      throw AlgebraError("operation \"" + op.symbol() + "\" tabulated over a different carrier");
    }
  }
}

std::optional<std::size_t> Algebra::find_op(std::string_view symbol) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].symbol() == symbol) return i;
  }
  return std::nullopt;
}

std::vector<Rank> Algebra::algebra_type() const {
  std::vector<Rank> type;
  type.reserve(ops_.size());
  for (const auto& op : ops_) type.push_back(op.rank());
  return type;
}

bool UnaryMap::is_constant() const {
  for (Elem v : values) {
    if (v != values.front()) return false;
  }
  return true;
}

UnaryMap UnaryMap::identity(std::size_t n) {
  UnaryMap h;
  h.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) h.values[i] = static_cast<Elem>(i);
  return h;
}

UnaryMap UnaryMap::constant(std::size_t n, Elem a) { return UnaryMap{std::vector<Elem>(n, a)}; }

UnaryMap compose(const UnaryMap& outer, const UnaryMap& inner) {
  UnaryMap result;
  result.values.reserve(inner.size());
  for (Elem v : inner.values) result.values.push_back(outer(v));
  return result;
}

bool is_endomorphism(const Algebra& alg, const UnaryMap& h) {
  if (h.size() != alg.size()) return false;
  for (const auto& op : alg.ops()) {
    std::vector<Elem> image(op.rank().size());
    bool ok = true;
    for_each_point(alg.size(), op.rank().size(), [&](std::span<const Elem> args) {
      for (std::size_t i = 0; i < args.size(); ++i) image[i] = h(args[i]);
      ok = h(op(args)) == op(image);
      return ok;
    });
    if (!ok) return false;
  }
  return true;
}

std::string render_map(const Carrier& carrier, const UnaryMap& h) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out << ", ";
    out << carrier.name(static_cast<Elem>(i)) << "->" << carrier.name(h(static_cast<Elem>(i)));
  }
  out << ']';
  return out.str();
}

std::string render_point(const Carrier& carrier, std::span<const Elem> point) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out << ", ";
    out << carrier.name(point[i]);
  }
  out << ')';
  return out.str();
}

}  // namespace ualg
