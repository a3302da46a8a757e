#include "ualg/dilatation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ualg {

std::vector<Elem> DilatationAnalysis::non_indicators() const {
  std::vector<Elem> out;
  for (std::size_t a = 0; a < gamma.size(); ++a) {
    if (!gamma[a]) out.push_back(static_cast<Elem>(a));
  }
  return out;
}

std::optional<std::size_t> DilatationAnalysis::index_of(const UnaryMap& m) const {
  auto it = std::lower_bound(delta.begin(), delta.end(), m);
  if (it == delta.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - delta.begin());
}

DilatationAnalysis analyze_dilatations(const Algebra& alg, const Representation& rep,
                                       std::size_t table_guard) {
  if (!rep.bijective()) throw AlgebraError("dilatations need a basis");
  const std::size_t n = alg.size();
  const std::set<UnaryMap> endos(rep.endos.begin(), rep.endos.end());

  DilatationAnalysis analysis;
  for (auto& m : rankless(alg, table_guard)) {
    if (endos.contains(m)) analysis.delta.push_back(std::move(m));
  }
  analysis.indicators.resize(analysis.delta.size());
  analysis.gamma.resize(n);

  bool agree = true;
  std::set<std::size_t> reached;
  for (std::size_t d = 0; d < n; ++d) {
    const UnaryMap candidate = equalize(rep.conjugates[d]);
    if (!endos.contains(candidate)) continue;
    const auto idx = analysis.index_of(candidate);
    if (!idx) {
      agree = false;
      continue;
    }
    analysis.gamma[d] = *idx;
    analysis.indicators[*idx].push_back(static_cast<Elem>(d));
    analysis.indicator_set.push_back(static_cast<Elem>(d));
    reached.insert(*idx);
  }
  for (std::size_t i = 0; i < analysis.delta.size(); ++i) {
    if (analysis.indicators[i].empty()) analysis.indicatorless.push_back(i);
  }
  if (rep.frame.X.empty() && n > 1) {
    agree = agree && analysis.delta == std::vector<UnaryMap>{UnaryMap::identity(n)};
  } else {
    agree = agree && reached.size() == analysis.delta.size();
  }
  analysis.routes_agree = agree;
  analysis.full = analysis.indicator_set.size() == n;
  return analysis;
}

std::vector<ImageOp> image_ops(const Algebra& alg, const DilatationAnalysis& analysis) {
  const std::size_t n = alg.size();
  const std::size_t size = analysis.delta.size();
  std::vector<ImageOp> images;
  for (const auto& op : alg.ops()) {
    ImageOp image{op.symbol(), op.rank(), std::nullopt, true};
    std::vector<Elem> values;
    std::vector<Elem> column(op.rank().size());
    for_each_point(size, op.rank().size(), [&](std::span<const Elem> eps) {
      UnaryMap phi;
      phi.values.resize(n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t r = 0; r < eps.size(); ++r) column[r] = analysis.delta[eps[r]](static_cast<Elem>(a));
        phi.values[a] = op(column);
      }
      const auto idx = analysis.index_of(phi);
      if (!idx) {
        image.inherited = false;
        return false;
      }
      values.push_back(static_cast<Elem>(*idx));
      return true;
    });
    if (image.inherited) image.table = FunctionTable(size, op.rank(), std::move(values));
    images.push_back(std::move(image));
  }
  return images;
}

EndowedMonoidResult build_endowed_monoid(const Algebra& alg, const DilatationAnalysis& analysis) {
  EndowedMonoidResult result;
  result.images = image_ops(alg, analysis);
  if (!analysis.full) {
    result.non_indicators = analysis.non_indicators();
    return result;
  }
  EndowedMonoid monoid;
  monoid.delta = analysis.delta;
  const auto unit = analysis.index_of(UnaryMap::identity(alg.size()));
  if (!unit) throw AlgebraError("identity missing from the dilatations");
  monoid.unit = *unit;

  const std::size_t size = monoid.delta.size();
  monoid.product.assign(size, std::vector<std::size_t>(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const auto idx = analysis.index_of(compose(monoid.delta[i], monoid.delta[j]));
      if (!idx) throw AlgebraError("dilatations not closed under composition");
      monoid.product[i][j] = *idx;
    }
  }
  for (const auto& image : result.images) {
    if (!image.table) {
      throw AlgebraError("image of \"" + image.symbol +
                         "\" leaves the dilatations on a dilatation full carrier");
    }
    monoid.image_ops.emplace_back(image.symbol, *image.table);
  }

  bool homomorphic = true;
  for (std::size_t oi = 0; oi < alg.ops().size(); ++oi) {
    const auto& op = alg.op(oi);
    const auto& phi = monoid.image_ops[oi];
    std::vector<Elem> gamma_args(op.rank().size());
    for_each_point(alg.size(), op.rank().size(), [&](std::span<const Elem> args) {
      for (std::size_t r = 0; r < args.size(); ++r) gamma_args[r] = static_cast<Elem>(*analysis.gamma[args[r]]);
      homomorphic = *analysis.gamma[op(args)] == phi(gamma_args);
      return homomorphic;
    });
    if (!homomorphic) break;
  }
  result.gamma_homomorphic = homomorphic;
  result.monoid = std::move(monoid);
  return result;
}

MonoidLawReport check_monoid_laws(const EndowedMonoid& monoid) {
  MonoidLawReport report;
  const auto& p = monoid.product;
  const std::size_t size = monoid.delta.size();
  for (std::size_t i = 0; i < size; ++i) {
    if (p[monoid.unit][i] != i || p[i][monoid.unit] != i) report.unital = false;
    if (monoid.delta[i].is_constant() && !monoid.delta[i].values.empty()) ++report.constant_members;
    for (std::size_t j = 0; j < size; ++j) {
      if (p[i][j] != p[j][i]) report.commutative = false;
      for (std::size_t k = 0; k < size; ++k) {
        if (p[p[i][j]][k] != p[i][p[j][k]]) report.associative = false;
      }
    }
  }
  return report;
}

DistributivityReport check_distributivities(const Algebra& alg, const EndowedMonoid& monoid,
                                            std::uint64_t guard) {
  DistributivityReport report;
  const std::size_t n = alg.size();
  const std::size_t size = monoid.delta.size();
  std::ostringstream witness;

  for (std::size_t oi = 0; oi < alg.ops().size(); ++oi) {
    const auto& f = alg.op(oi);
    const auto& phi = monoid.image_ops.at(oi);
    const std::size_t k = f.rank().size();
    checked_power(size, k, guard);
    std::vector<Elem> shifted(k), column(k);
    for_each_point(size, k, [&](std::span<const Elem> eps) {
      const Elem value = phi(eps);
      for (std::size_t a = 0; a < n; ++a) {
        ++report.cases;
        for (std::size_t r = 0; r < k; ++r) column[r] = monoid.delta[eps[r]](static_cast<Elem>(a));
        if (monoid.delta[value](static_cast<Elem>(a)) != f(column) && report.image_definition) {
          report.image_definition = false;
          witness << "image of " << f.symbol() << " at " << render_point(alg.carrier(), column) << "; ";
        }
      }
      for (std::size_t d = 0; d < size; ++d) {
        ++report.cases;
        for (std::size_t r = 0; r < k; ++r) shifted[r] = static_cast<Elem>(monoid.product[d][eps[r]]);
        if (monoid.product[d][value] != phi(shifted) && report.composition_over_images) {
          report.composition_over_images = false;
          witness << "composition over image of " << f.symbol() << " with dilatation " << d << "; ";
        }
      }
    });

    checked_power(n, k, guard);
    std::vector<Elem> image(k);
    for (const auto& delta : monoid.delta) {
      for_each_point(n, k, [&](std::span<const Elem> args) {
        ++report.cases;
        for (std::size_t r = 0; r < k; ++r) image[r] = delta(args[r]);
        if (delta(f(args)) != f(image) && report.dilatations_over_operations) {
          report.dilatations_over_operations = false;
          witness << "dilatation " << render_map(alg.carrier(), delta) << " over " << f.symbol()
                  << " at " << render_point(alg.carrier(), args) << "; ";
        }
      });
    }
  }
  report.witness = witness.str();
  return report;
}

std::optional<std::vector<int>> two_element_lattice_iso(const EndowedMonoid& monoid,
                                                        std::size_t zero_op,
                                                        std::size_t join_op) {
  if (monoid.delta.size() != 2) return std::nullopt;
  const auto& zero = monoid.image_ops.at(zero_op);
  const auto& join = monoid.image_ops.at(join_op);
  if (zero.rank().size() != 0 || join.rank().size() != 2) return std::nullopt;
  for (const std::vector<int>& sigma : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
    bool ok = sigma[monoid.unit] == 1 && sigma[zero({})] == 0;
    for (Elem i = 0; i < 2 && ok; ++i) {
      for (Elem j = 0; j < 2 && ok; ++j) {
        const std::vector<Elem> pair{i, j};
        ok = sigma[monoid.product[i][j]] == std::min(sigma[i], sigma[j]) &&
             sigma[join(pair)] == std::max(sigma[i], sigma[j]);
      }
    }
    if (ok) return sigma;
  }
  return std::nullopt;
}

DilatationFullnessReport check_commutative_fullness(const Algebra& alg, const Frame& frame,
                                                    const EnumerationOptions& options) {
  DilatationFullnessReport report;
  report.commutative = is_commutative(alg).commutative;
  const auto rep = build_representation(alg, frame, options);
  report.basis = rep.bijective();
  if (!report.basis) {
    report.passed = true;
    report.note = "frame is not a basis; nothing to assert";
    return report;
  }
  const auto analysis = analyze_dilatations(alg, rep);
  report.full = analysis.full;
  report.equalized_conjugates_are_endos = true;
  for (const auto& chi : rep.conjugates) {
    if (!commutes_with_conjugates(equalize(chi), rep)) report.equalized_conjugates_are_endos = false;
  }
  report.monoid_built = build_endowed_monoid(alg, analysis).monoid.has_value();
  if (report.commutative) {
    report.passed = report.full && report.monoid_built && report.equalized_conjugates_are_endos;
    report.note = report.passed ? "commutative, hence dilatation full with an endowed monoid"
                                : "commutative but not dilatation full";
  } else {
    report.passed = true;
    report.note = std::string("not commutative; carrier is ") +
                  (report.full ? "nevertheless dilatation full" : "not dilatation full");
  }
  return report;
}

}  // namespace ualg
