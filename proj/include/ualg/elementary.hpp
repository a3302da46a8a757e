#pragma once

// Elementary-function closures L_Y, rank-less functions and generator /
// independence checks for indexings.

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ualg/combinator.hpp"
#include "ualg/core.hpp"

namespace ualg {

struct Frame;

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// A term over the algebra's operations with projection leaves.
struct Term {
  struct Projection {
    std::size_t label;
  };
  struct Apply {
    std::size_t op;
    std::vector<TermPtr> args;
  };
  std::variant<Projection, Apply> node;

  static TermPtr projection(std::size_t label);
  static TermPtr apply(std::size_t op, std::vector<TermPtr> args);
};

/// Evaluates a term at one point of A^Y.
Elem evaluate(const Term& term, const Algebra& alg, std::span<const Elem> point);
FunctionTable tabulate(const Term& term, const Algebra& alg, const Rank& arity);
std::string render(const Term& term, const Algebra& alg, const Rank& arity);

struct ElementaryFunction {
  FunctionTable table;
  TermPtr witness;
  std::size_t depth = 0;
};

inline constexpr std::size_t kDefaultTableGuard = 10'000;

struct Closure {
  Rank arity;
  std::vector<ElementaryFunction> functions;
  /// False when the table-count guard stopped the fixpoint early.
  bool complete = true;

  std::vector<FunctionTable> tables() const;
  bool contains(const FunctionTable& t) const;
};

/// Least fixpoint from the projections under composition with every
/// operation, breadth-first by term depth; the first witness reached is kept.
Closure elementary_closure(const Algebra& alg, const Rank& arity,
                           std::size_t guard = kDefaultTableGuard);

/// Same, but throws GuardExceeded instead of returning a partial closure.
Closure complete_closure(const Algebra& alg, const Rank& arity,
                         std::size_t guard = kDefaultTableGuard);

/// L': the one-ary elementary functions read as unary maps, sorted.
std::vector<UnaryMap> rankless(const Algebra& alg, std::size_t guard = kDefaultTableGuard);

/// Subalgebra generated by the frame's values (nullary values included).
std::set<Elem> generated_subuniverse(const Algebra& alg, std::span<const Elem> generators);

/// chi: one conjugate table over X per carrier element.
struct ElementaryGenerator {
  std::vector<ElementaryFunction> chi;
};

struct ElementaryGeneratorResult {
  enum class Status { exists, not_generator, not_independent };
  Status status = Status::exists;
  std::optional<ElementaryGenerator> generator;
  /// Elements no elementary function reaches at U (not_generator).
  std::vector<Elem> unreachable;
  /// Two distinct functions agreeing at U (not_independent).
  std::optional<std::pair<ElementaryFunction, ElementaryFunction>> collision;
};

ElementaryGeneratorResult elementary_generator(const Algebra& alg, const Frame& frame,
                                               std::size_t guard = kDefaultTableGuard);

const char* to_string(ElementaryGeneratorResult::Status s);

}  // namespace ualg
