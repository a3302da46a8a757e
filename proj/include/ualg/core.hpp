#pragma once

// Finite carriers, set-ary operation tables and the algebra container.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ualg {

/// Position of an element in its carrier's canonical order.
using Elem = std::uint32_t;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive computation would exceed its configured size cap.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n^k with a hard cap; throws GuardExceeded past `cap`. 0^0 = 1.
std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent,
                            std::uint64_t cap = std::uint64_t{1} << 40);

class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(Elem e) const { return names_.at(e); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Elem> find(std::string_view name) const;
  Elem at(std::string_view name) const;

  bool operator==(const Carrier& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Elem, std::less<>> index_;
};

/// Ordered index set of an operation's arguments (possibly empty).
class Rank {
 public:
  Rank() = default;
  explicit Rank(std::vector<std::string> labels);
  /// Labels "0", "1", ..., "n-1".
  static Rank indexed(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;

  bool operator==(const Rank& other) const = default;

 private:
  std::vector<std::string> labels_;
};

/// A point of A^R: one value per rank label.
struct Assignment {
  Rank rank;
  std::vector<Elem> values;
};

// Tables are laid out lexicographically over rank-label order, last label
// varying fastest.
std::size_t encode_point(std::span<const Elem> point, std::size_t carrier_size);
void decode_point(std::size_t code, std::size_t carrier_size, std::span<Elem> out);

/// Calls fn(span<const Elem>) for every point of A^k in canonical order.
/// fn may return bool; returning false stops the walk early.
template <class Fn>
void for_each_point(std::size_t carrier_size, std::size_t length, Fn&& fn) {
  std::vector<Elem> point(length, 0);
  if (length > 0 && carrier_size == 0) return;
  while (true) {
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, std::span<const Elem>>, bool>) {
      if (!fn(std::span<const Elem>(point))) return;
    } else {
      fn(std::span<const Elem>(point));
    }
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++point[i] < carrier_size) break;
      point[i] = 0;
      if (i == 0) return;
    }
    if (length == 0) return;
  }
}

/// A total map A^Y -> A stored as a full table.
class FunctionTable {
 public:
  FunctionTable() = default;
  FunctionTable(std::size_t carrier_size, Rank arity, std::vector<Elem> values);

  template <class Fn>
  static FunctionTable tabulate(std::size_t carrier_size, Rank arity, Fn&& fn) {
    std::vector<Elem> values;
    values.reserve(checked_power(carrier_size, arity.size()));
    for_each_point(carrier_size, arity.size(),
                   [&](std::span<const Elem> p) { values.push_back(static_cast<Elem>(fn(p))); });
    return FunctionTable(carrier_size, std::move(arity), std::move(values));
  }

  const Rank& arity() const { return arity_; }
  std::size_t carrier_size() const { return carrier_size_; }
  const std::vector<Elem>& values() const { return values_; }
  std::size_t rows() const { return values_.size(); }

  Elem operator()(std::span<const Elem> args) const {
    return values_[encode_point(args, carrier_size_)];
  }
  /// Rank-checked evaluation.
  Elem eval(const Assignment& args) const;

  bool operator==(const FunctionTable& other) const = default;

 private:
  std::size_t carrier_size_ = 0;
  Rank arity_;
  std::vector<Elem> values_;
};

class Operation {
 public:
  Operation() = default;
  Operation(std::string symbol, FunctionTable table);

  const std::string& symbol() const { return symbol_; }
  const Rank& rank() const { return table_.arity(); }
  const FunctionTable& table() const { return table_; }
  Elem operator()(std::span<const Elem> args) const { return table_(args); }

 private:
  std::string symbol_;
  FunctionTable table_;
};

/// Rank-checked evaluation of an operation.
Elem eval(const Operation& op, const Assignment& args);

class Algebra {
 public:
  Algebra(std::string name, Carrier carrier, std::vector<Operation> ops);

  const std::string& name() const { return name_; }
  const Carrier& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }
  const std::vector<Operation>& ops() const { return ops_; }
  const Operation& op(std::size_t i) const { return ops_.at(i); }
  std::optional<std::size_t> find_op(std::string_view symbol) const;
  std::vector<Rank> algebra_type() const;

 private:
  std::string name_;
  Carrier carrier_;
  std::vector<Operation> ops_;
};

/// A total map A -> A; endomorphisms and dilatations live here.
struct UnaryMap {
  std::vector<Elem> values;

  Elem operator()(Elem a) const { return values[a]; }
  std::size_t size() const { return values.size(); }
  bool is_constant() const;

  static UnaryMap identity(std::size_t n);
  static UnaryMap constant(std::size_t n, Elem a);

  auto operator<=>(const UnaryMap&) const = default;
};

/// (outer . inner)(a) = outer(inner(a)).
UnaryMap compose(const UnaryMap& outer, const UnaryMap& inner);

/// True when h(f(args)) = f(h . args) for every operation and every argument tuple.
bool is_endomorphism(const Algebra& alg, const UnaryMap& h);

std::string render_map(const Carrier& carrier, const UnaryMap& h);
std::string render_point(const Carrier& carrier, std::span<const Elem> point);

}  // namespace ualg
