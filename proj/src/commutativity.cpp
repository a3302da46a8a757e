#include "ualg/commutativity.hpp"

namespace ualg {

namespace {

struct MedialSides {
  Elem lhs;
  Elem rhs;
};

MedialSides evaluate_sides(const FunctionTable& f, const FunctionTable& g,
                           std::span<const Elem> cells, std::vector<Elem>& rows,
                           std::vector<Elem>& cols, std::vector<Elem>& scratch) {
  const std::size_t r_size = f.arity().size();
  const std::size_t s_size = g.arity().size();
  for (std::size_t r = 0; r < r_size; ++r) rows[r] = g(cells.subspan(r * s_size, s_size));
  scratch.resize(r_size);
  for (std::size_t s = 0; s < s_size; ++s) {
    for (std::size_t r = 0; r < r_size; ++r) scratch[r] = cells[r * s_size + s];
    cols[s] = f(scratch);
  }
  return {f(rows), g(cols)};
}

}  // namespace

MedialReport ops_commute(const FunctionTable& f, const FunctionTable& g, std::string f_name,
                         std::string g_name, std::uint64_t guard) {
  if (f.carrier_size() != g.carrier_size()) throw AlgebraError("operations on different carriers");
  const std::size_t n = f.carrier_size();
  const std::size_t r_size = f.arity().size();
  const std::size_t s_size = g.arity().size();
  MedialReport report{std::move(f_name), std::move(g_name), true, std::nullopt, 0};
  report.cases = checked_power(n, r_size * s_size, guard);

  std::vector<Elem> rows(r_size), cols(s_size), scratch;
  for_each_point(n, r_size * s_size, [&](std::span<const Elem> cells) {
    const auto sides = evaluate_sides(f, g, cells, rows, cols, scratch);
    if (sides.lhs == sides.rhs) return true;
    report.holds = false;
    std::vector<std::vector<Elem>> m(r_size);
    for (std::size_t r = 0; r < r_size; ++r) {
      m[r].assign(cells.begin() + r * s_size, cells.begin() + (r + 1) * s_size);
    }
    report.witness = std::move(m);
    return false;
  });
  return report;
}

MedialReport ops_commute(const Operation& f, const Operation& g, std::uint64_t guard) {
  return ops_commute(f.table(), g.table(), f.symbol(), g.symbol(), guard);
}

bool medial_holds_at(const FunctionTable& f, const FunctionTable& g,
                     const std::vector<std::vector<Elem>>& m) {
  const std::size_t r_size = f.arity().size();
  const std::size_t s_size = g.arity().size();
  if (m.size() != r_size) throw AlgebraError("array rows must match the outer rank");
  std::vector<Elem> cells;
  for (const auto& row : m) {
    if (row.size() != s_size) throw AlgebraError("array columns must match the inner rank");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  std::vector<Elem> rows(r_size), cols(s_size), scratch;
  const auto sides = evaluate_sides(f, g, cells, rows, cols, scratch);
  return sides.lhs == sides.rhs;
}

const MedialReport* CommutativityReport::first_failure() const {
  for (const auto& p : pairs) {
    if (!p.holds) return &p;
  }
  return nullptr;
}

CommutativityReport is_commutative(const Algebra& alg, bool both_directions,
                                   std::uint64_t guard) {
  CommutativityReport report;
  const auto& ops = alg.ops();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i; j < ops.size(); ++j) {
      auto forward = ops_commute(ops[i], ops[j], guard);
      if (i == j) {
        report.commutative = report.commutative && forward.holds;
        report.pairs.push_back(std::move(forward));
        continue;
      }
      MedialReport backward;
      if (both_directions) {
        backward = ops_commute(ops[j], ops[i], guard);
        if (backward.holds != forward.holds) report.symmetry_violated = true;
      } else {
        // Symmetric law: a witness m for (f, g) transposes into one for (g, f).
        backward = MedialReport{ops[j].symbol(), ops[i].symbol(), forward.holds, std::nullopt,
                                forward.cases};
        if (forward.witness) {
          Indexing m{Rank::indexed(forward.witness->size()),
                     Rank::indexed(ops[j].rank().size()), *forward.witness};
          backward.witness = exchange(m).rows;
        }
      }
      report.commutative = report.commutative && forward.holds && backward.holds;
      report.pairs.push_back(std::move(forward));
      report.pairs.push_back(std::move(backward));
    }
  }
  return report;
}

ElementaryCommutationReport check_elementary_commutation(const Algebra& alg, const Rank& arity,
                                                         std::size_t table_guard,
                                                         std::uint64_t guard) {
  ElementaryCommutationReport report;
  if (!is_commutative(alg, false, guard).commutative) {
    report.skipped = true;
    report.note = "algebra is not commutative; nothing to check";
    return report;
  }
  const auto closure = complete_closure(alg, arity, table_guard);
  report.functions = closure.functions.size();
  for (const auto& f : closure.functions) {
    for (const auto& g : closure.functions) {
      ++report.pairs_checked;
      auto r = ops_commute(f.table, g.table, render(*f.witness, alg, arity),
                           render(*g.witness, alg, arity), guard);
      if (!r.holds && !report.failure) {
        report.holds = false;
        report.failure = std::move(r);
      }
    }
  }
  for (const auto& op : alg.ops()) {
    for (std::size_t x = 0; x < arity.size(); ++x) {
      ++report.projection_checks;
      auto r = ops_commute(op.table(), projection(alg.size(), arity, x), op.symbol(),
                           "p_" + arity.label(x), guard);
      if (!r.holds) {
        report.projections_commute = false;
        report.holds = false;
        if (!report.failure) report.failure = std::move(r);
      }
    }
  }
  return report;
}

ConjugateCommutationReport check_conjugate_commutation(const Algebra& alg,
                                                       const Representation& rep,
                                                       std::uint64_t guard) {
  ConjugateCommutationReport report;
  if (!rep.bijective()) {
    report.skipped = true;
    report.note = "frame is not a basis; no conjugate functions";
    return report;
  }
  const auto& carrier = alg.carrier();
  for (std::size_t a = 0; a < rep.conjugates.size(); ++a) {
    for (std::size_t b = 0; b < rep.conjugates.size(); ++b) {
      auto r = ops_commute(rep.conjugates[a], rep.conjugates[b],
                           "chi_" + carrier.name(static_cast<Elem>(a)),
                           "chi_" + carrier.name(static_cast<Elem>(b)), guard);
      report.instances += r.cases;
      if (!r.holds && !report.failure) {
        report.holds = false;
        report.failure = std::move(r);
      }
    }
  }
  return report;
}

}  // namespace ualg
