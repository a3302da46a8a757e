#include "ualg/elementary.hpp"

#include <limits>
#include <sstream>
#include <unordered_set>

#include "ualg/frame.hpp"

namespace ualg {

TermPtr Term::projection(std::size_t label) {
  return std::make_shared<const Term>(Term{Projection{label}});
}

TermPtr Term::apply(std::size_t op, std::vector<TermPtr> args) {
  return std::make_shared<const Term>(Term{Apply{op, std::move(args)}});
}

Elem evaluate(const Term& term, const Algebra& alg, std::span<const Elem> point) {
  if (const auto* p = std::get_if<Term::Projection>(&term.node)) return point[p->label];
  const auto& node = std::get<Term::Apply>(term.node);
  std::vector<Elem> args;
  args.reserve(node.args.size());
  for (const auto& child : node.args) args.push_back(evaluate(*child, alg, point));
  return alg.op(node.op)(args);
}

FunctionTable tabulate(const Term& term, const Algebra& alg, const Rank& arity) {
  return FunctionTable::tabulate(alg.size(), arity, [&](std::span<const Elem> point) {
    return evaluate(term, alg, point);
  });
}

std::string render(const Term& term, const Algebra& alg, const Rank& arity) {
  if (const auto* p = std::get_if<Term::Projection>(&term.node)) {
    return "p_" + arity.label(p->label);
  }
  const auto& node = std::get<Term::Apply>(term.node);
  std::ostringstream out;
  out << alg.op(node.op).symbol() << '(';
  for (std::size_t i = 0; i < node.args.size(); ++i) {
    if (i) out << ", ";
    out << render(*node.args[i], alg, arity);
  }
  out << ')';
  return out.str();
}

std::vector<FunctionTable> Closure::tables() const {
  std::vector<FunctionTable> out;
  out.reserve(functions.size());
  for (const auto& f : functions) out.push_back(f.table);
  return out;
}

bool Closure::contains(const FunctionTable& t) const {
  for (const auto& f : functions) {
    if (f.table == t) return true;
  }
  return false;
}

namespace {

struct TableHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Elem e : v) h = (h ^ e) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

// Set of tables; keyed by the base-n code of the table when it fits in 64 bits,
// by a bitmap when the whole table space is small.
class TableSet {
 public:
  TableSet(std::size_t n, std::size_t rows) : n_(n) {
    try {
      const auto space = checked_power(n, rows, std::numeric_limits<std::uint64_t>::max());
      packed_ = true;
      if (space <= kDenseLimit) dense_.assign(space, false);
    } catch (const GuardExceeded&) {
    }
  }

  bool packed() const { return packed_; }

  /// `code` is the base-n code of `t` when packed().
  bool contains(const std::vector<Elem>& t, std::uint64_t code) const {
    if (!packed_) return tables_.contains(t);
    return dense_.empty() ? codes_.contains(code) : dense_[code];
  }

  void insert(const std::vector<Elem>& t) {
    if (!packed_) {
      tables_.insert(t);
    } else if (dense_.empty()) {
      codes_.insert(pack(t));
    } else {
      dense_[pack(t)] = true;
    }
  }

  bool contains(const std::vector<Elem>& t) const { return contains(t, packed_ ? pack(t) : 0); }

 private:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

  std::uint64_t pack(const std::vector<Elem>& t) const {
    std::uint64_t code = 0;
    for (Elem e : t) code = code * n_ + e;
    return code;
  }

  std::uint64_t n_;
  bool packed_ = false;
  std::vector<bool> dense_;
  std::unordered_set<std::uint64_t> codes_;
  std::unordered_set<std::vector<Elem>, TableHash> tables_;
};

}  // namespace

Closure elementary_closure(const Algebra& alg, const Rank& arity, std::size_t guard) {
  const std::size_t n = alg.size();
  const std::size_t rows = checked_power(n, arity.size());
  Closure closure{arity, {}, true};
  TableSet seen(n, rows);
  // Tables of closure.functions, back to back.
  std::vector<Elem> flat;

  auto add = [&](std::vector<Elem> values, TermPtr witness, std::size_t depth) {
    if (seen.contains(values)) return true;
    if (closure.functions.size() >= guard) {
      closure.complete = false;
      return false;
    }
    seen.insert(values);
    flat.insert(flat.end(), values.begin(), values.end());
    closure.functions.push_back(
        {FunctionTable(n, arity, std::move(values)), std::move(witness), depth});
    return true;
  };

  for (std::size_t x = 0; x < arity.size(); ++x) {
    if (!add(projection(n, arity, x).values(), Term::projection(x), 0)) return closure;
  }

  std::size_t previous_start = 0;
  for (std::size_t depth = 1;; ++depth) {
    const std::size_t known = closure.functions.size();
    for (std::size_t oi = 0; oi < alg.ops().size(); ++oi) {
      const auto& op = alg.op(oi);
      const std::size_t k = op.rank().size();
      if (k == 0) {
        if (depth == 1 && !add(std::vector<Elem>(rows, op({})), Term::apply(oi, {}), 1)) {
          return closure;
        }
        continue;
      }
      if (known == 0) continue;
      const Elem* table = op.table().values().data();
      std::vector<const Elem*> columns(k);
      std::vector<Elem> values(rows);
      std::vector<std::size_t> pick(k, 0);
      while (true) {
        bool fresh = false;
        for (auto p : pick) fresh = fresh || p >= previous_start;
        if (!fresh) {
          // Every index is old, so the last one can jump to the first fresh table.
          pick[k - 1] = previous_start;
          if (previous_start < known) continue;
        } else {
          for (std::size_t s = 0; s < k; ++s) columns[s] = flat.data() + pick[s] * rows;
          std::uint64_t key = 0;
          for (std::size_t r = 0; r < rows; ++r) {
            std::size_t code = 0;
            for (std::size_t s = 0; s < k; ++s) code = code * n + columns[s][r];
            values[r] = table[code];
            key = key * n + values[r];
          }
          if (!seen.contains(values, key)) {
            std::vector<TermPtr> args;
            for (auto p : pick) args.push_back(closure.functions[p].witness);
            if (!add(values, Term::apply(oi, std::move(args)), depth)) return closure;
          }
        }
        std::size_t i = k;
        bool done = false;
        while (true) {
          if (i == 0) {
            done = true;
            break;
          }
          --i;
          if (++pick[i] < known) break;
          pick[i] = 0;
        }
        if (done) break;
      }
    }
    if (closure.functions.size() == known) break;
    previous_start = known;
  }
  return closure;
}

Closure complete_closure(const Algebra& alg, const Rank& arity, std::size_t guard) {
  auto closure = elementary_closure(alg, arity, guard);
  if (!closure.complete) {
    throw GuardExceeded("elementary closure exceeded " + std::to_string(guard) + " tables");
  }
  return closure;
}

std::vector<UnaryMap> rankless(const Algebra& alg, std::size_t guard) {
  const auto closure = complete_closure(alg, Rank({"*"}), guard);
  std::set<UnaryMap> maps;
  for (const auto& f : closure.functions) maps.insert(UnaryMap{f.table.values()});
  return {maps.begin(), maps.end()};
}

std::set<Elem> generated_subuniverse(const Algebra& alg, std::span<const Elem> generators) {
  std::set<Elem> reached(generators.begin(), generators.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Elem> current(reached.begin(), reached.end());
    for (const auto& op : alg.ops()) {
      const std::size_t k = op.rank().size();
      std::vector<Elem> args(k);
      for_each_point(current.size(), k, [&](std::span<const Elem> idx) {
        for (std::size_t i = 0; i < k; ++i) args[i] = current[idx[i]];
        grew = reached.insert(op(args)).second || grew;
      });
    }
  }
  return reached;
}

ElementaryGeneratorResult elementary_generator(const Algebra& alg, const Frame& frame,
                                               std::size_t guard) {
  validate_frame(frame, alg.size());
  const auto closure = complete_closure(alg, frame.X, guard);
  ElementaryGeneratorResult result;

  std::vector<std::optional<std::size_t>> first(alg.size());
  for (std::size_t i = 0; i < closure.functions.size(); ++i) {
    const Elem v = closure.functions[i].table(frame.U);
    if (!first[v]) {
      first[v] = i;
    } else if (!result.collision &&
               closure.functions[*first[v]].table != closure.functions[i].table) {
      result.collision = std::make_pair(closure.functions[*first[v]], closure.functions[i]);
    }
  }
  for (std::size_t a = 0; a < alg.size(); ++a) {
    if (!first[a]) result.unreachable.push_back(static_cast<Elem>(a));
  }
  if (!result.unreachable.empty()) {
    result.status = ElementaryGeneratorResult::Status::not_generator;
    return result;
  }
  if (result.collision) {
    result.status = ElementaryGeneratorResult::Status::not_independent;
    return result;
  }
  ElementaryGenerator chi;
  for (std::size_t a = 0; a < alg.size(); ++a) chi.chi.push_back(closure.functions[*first[a]]);
  result.generator = std::move(chi);
  return result;
}

const char* to_string(ElementaryGeneratorResult::Status s) {
  switch (s) {
    case ElementaryGeneratorResult::Status::exists: return "exists";
    case ElementaryGeneratorResult::Status::not_generator: return "not-generator";
    case ElementaryGeneratorResult::Status::not_independent: return "not-independent";
  }
  return "?";
}

}  // namespace ualg
