#include "ualg/representation.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace ualg {

void validate_frame(const Frame& frame, std::size_t carrier_size) {
  if (frame.U.size() != frame.X.size()) {
    throw AlgebraError("frame must assign one value per index");
  }
  for (Elem v : frame.U) {
    if (v >= carrier_size) throw AlgebraError("frame value outside carrier");
  }
}

namespace {

std::vector<UnaryMap> enumerate_brute(const Algebra& alg, std::uint64_t cap) {
  const std::size_t n = alg.size();
  const auto candidates = checked_power(n, n, std::numeric_limits<std::uint64_t>::max() / 2);
  if (candidates > cap) {
    throw GuardExceeded("brute-force enumeration over " + std::to_string(candidates) +
                        " candidate maps exceeds cap " + std::to_string(cap));
  }
  std::vector<UnaryMap> endos;
  for_each_point(n, n, [&](std::span<const Elem> values) {
    UnaryMap h{{values.begin(), values.end()}};
    if (is_endomorphism(alg, h)) endos.push_back(std::move(h));
  });
  return endos;
}

// Assigns h element by element in canonical order. As soon as every argument
// of a table row is assigned, the row forces h(result) = f(h . args).
class Backtracker {
 public:
  explicit Backtracker(const Algebra& alg) : alg_(alg), n_(alg.size()), watch_(n_) {
    for (std::size_t oi = 0; oi < alg.ops().size(); ++oi) {
      const auto& op = alg.op(oi);
      const std::size_t k = op.rank().size();
      std::vector<Elem> args(k);
      for (std::size_t r = 0; r < op.table().rows(); ++r) {
        decode_point(r, n_, args);
        Row row{oi, args, op.table().values()[r]};
        const std::size_t id = rows_.size();
        rows_.push_back(row);
        if (k == 0) {
          roots_.push_back(id);
          continue;
        }
        std::set<Elem> distinct(args.begin(), args.end());
        for (Elem e : distinct) watch_[e].push_back(id);
      }
    }
  }

  std::vector<UnaryMap> run() {
    h_.assign(n_, kUnset);
    trail_.clear();
    found_.clear();
    bool ok = true;
    std::vector<Elem> queue;
    for (std::size_t id : roots_) ok = ok && fire(id, queue);
    if (ok && drain(queue)) search();
    return found_;
  }

 private:
  static constexpr Elem kUnset = std::numeric_limits<Elem>::max();
  struct Row {
    std::size_t op;
    std::vector<Elem> args;
    Elem result;
  };

  bool assign(Elem e, Elem v, std::vector<Elem>& queue) {
    if (h_[e] == kUnset) {
      h_[e] = v;
      trail_.push_back(e);
      queue.push_back(e);
      return true;
    }
    return h_[e] == v;
  }

  bool fire(std::size_t id, std::vector<Elem>& queue) {
    const Row& row = rows_[id];
    image_.resize(row.args.size());
    for (std::size_t i = 0; i < row.args.size(); ++i) {
      if (h_[row.args[i]] == kUnset) return true;
      image_[i] = h_[row.args[i]];
    }
    return assign(row.result, alg_.op(row.op)(image_), queue);
  }

  bool drain(std::vector<Elem>& queue) {
    while (!queue.empty()) {
      const Elem e = queue.back();
      queue.pop_back();
      for (std::size_t id : watch_[e]) {
        if (!fire(id, queue)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      h_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
  }

  void search() {
    const auto next = std::find(h_.begin(), h_.end(), kUnset);
    if (next == h_.end()) {
      found_.push_back(UnaryMap{h_});
      return;
    }
    const Elem e = static_cast<Elem>(next - h_.begin());
    for (Elem v = 0; v < n_; ++v) {
      const std::size_t mark = trail_.size();
      std::vector<Elem> queue;
      if (assign(e, v, queue) && drain(queue)) search();
      undo(mark);
    }
  }

  const Algebra& alg_;
  std::size_t n_;
  std::vector<Row> rows_;
  std::vector<std::size_t> roots_;
  std::vector<std::vector<std::size_t>> watch_;
  std::vector<Elem> h_;
  std::vector<Elem> trail_;
  std::vector<Elem> image_;
  std::vector<UnaryMap> found_;
};

}  // namespace

std::vector<UnaryMap> enumerate_endomorphisms(const Algebra& alg,
                                              const EnumerationOptions& options) {
  std::vector<UnaryMap> endos = options.method == EndoMethod::brute
                                    ? enumerate_brute(alg, options.max_candidates)
                                    : Backtracker(alg).run();
  std::sort(endos.begin(), endos.end());
  return endos;
}

std::size_t Representation::matrix_count() const {
  return checked_power(carrier_size, frame.X.size());
}

std::vector<Elem> Representation::matrix(std::size_t code) const {
  std::vector<Elem> m(frame.X.size());
  decode_point(code, carrier_size, m);
  return m;
}

std::size_t Representation::code(std::span<const Elem> matrix) const {
  return encode_point(matrix, carrier_size);
}

const UnaryMap& Representation::extend(std::span<const Elem> matrix) const {
  if (!extension) throw AlgebraError("frame is not a basis: no extension function");
  return endos[(*extension)[code(matrix)]];
}

Representation build_representation(const Algebra& alg, const Frame& frame,
                                     const EnumerationOptions& options) {
  validate_frame(frame, alg.size());
  Representation rep;
  rep.frame = frame;
  rep.carrier_size = alg.size();
  rep.endos = enumerate_endomorphisms(alg, options);

  const std::size_t matrices = checked_power(alg.size(), frame.X.size(), std::uint64_t{1} << 24);
  std::vector<std::optional<std::size_t>> hit(matrices);
  std::vector<Elem> sample(frame.X.size());
  rep.sampling.reserve(rep.endos.size());
  for (std::size_t i = 0; i < rep.endos.size(); ++i) {
    for (std::size_t x = 0; x < sample.size(); ++x) sample[x] = rep.endos[i](frame.U[x]);
    const std::size_t c = encode_point(sample, alg.size());
    rep.sampling.push_back(c);
    if (hit[c]) {
      if (!rep.collision) rep.collision = std::make_pair(*hit[c], i);
    } else {
      hit[c] = i;
    }
  }
  for (std::size_t c = 0; c < matrices; ++c) {
    if (!hit[c]) {
      rep.unhit = rep.matrix(c);
      break;
    }
  }

  if (rep.collision || rep.unhit) {
    if (frame.X.empty() && alg.size() > 1) {
      rep.explanation =
          "an empty frame represents the endomorphisms only when the identity is the sole one";
    } else if (rep.collision) {
      rep.explanation = "sampling is not injective";
    } else {
      rep.explanation = "sampling misses a matrix";
    }
    return rep;
  }

  std::vector<std::size_t> extension(matrices);
  for (std::size_t c = 0; c < matrices; ++c) extension[c] = *hit[c];
  // Both composites must be identities.
  for (std::size_t i = 0; i < rep.endos.size(); ++i) {
    if (extension[rep.sampling[i]] != i) throw AlgebraError("extension is not a left inverse");
  }
  for (std::size_t c = 0; c < matrices; ++c) {
    if (rep.sampling[extension[c]] != c) throw AlgebraError("extension is not a right inverse");
  }
  rep.extension = std::move(extension);

  rep.conjugates.reserve(alg.size());
  for (std::size_t a = 0; a < alg.size(); ++a) {
    std::vector<Elem> values(matrices);
    for (std::size_t c = 0; c < matrices; ++c) {
      values[c] = rep.endos[(*rep.extension)[c]](static_cast<Elem>(a));
    }
    rep.conjugates.emplace_back(alg.size(), frame.X, std::move(values));
  }
  rep.explanation = "sampling is a bijection onto the matrices";
  return rep;
}

std::optional<Frame> find_basis(const Algebra& alg, const EnumerationOptions& options) {
  const std::size_t n = alg.size();
  const auto endos = enumerate_endomorphisms(alg, options);
  for (std::size_t k = 0; k <= n; ++k) {
    const auto matrices = checked_power(n, k, std::numeric_limits<std::uint64_t>::max() / 2);
    if (matrices > endos.size()) break;
    if (matrices != endos.size()) continue;
    std::vector<Elem> choice(k);
    for (std::size_t i = 0; i < k; ++i) choice[i] = static_cast<Elem>(i);
    std::vector<bool> hit(matrices);
    std::vector<Elem> sample(k);
    while (true) {
      std::fill(hit.begin(), hit.end(), false);
      bool injective = true;
      for (const auto& h : endos) {
        for (std::size_t x = 0; x < k; ++x) sample[x] = h(choice[x]);
        const std::size_t c = encode_point(sample, n);
        if (hit[c]) {
          injective = false;
          break;
        }
        hit[c] = true;
      }
      if (injective) {
        std::vector<std::string> labels;
        for (Elem e : choice) labels.push_back(alg.carrier().name(e));
        return Frame{Rank(std::move(labels)), choice};
      }
      std::size_t i = k;
      while (i > 0 && choice[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++choice[i - 1];
      for (std::size_t j = i; j < k; ++j) choice[j] = choice[j - 1] + 1;
    }
  }
  return std::nullopt;
}

Algebra conjugate_algebra(const Algebra& alg, const Representation& rep) {
  if (!rep.bijective()) throw AlgebraError("conjugate functions need a basis");
  std::vector<Operation> ops;
  for (std::size_t a = 0; a < alg.size(); ++a) {
    ops.emplace_back("chi_" + alg.carrier().name(static_cast<Elem>(a)), rep.conjugates[a]);
  }
  return Algebra(alg.name() + "/conjugates", alg.carrier(), std::move(ops));
}

bool BasisTheoremReport::passed() const {
  if (!generator) return true;
  if (!biconditional) return false;
  if (!bijective) return true;
  return members_commute && same_endomorphisms && conjugates_match &&
         non_members_rejected.value_or(true);
}

bool commutes_with_conjugates(const UnaryMap& h, const Representation& rep) {
  const std::size_t matrices = rep.matrix_count();
  std::vector<Elem> m(rep.frame.X.size());
  std::vector<Elem> hm(m.size());
  for (const auto& chi : rep.conjugates) {
    for (std::size_t c = 0; c < matrices; ++c) {
      decode_point(c, rep.carrier_size, m);
      for (std::size_t x = 0; x < m.size(); ++x) hm[x] = h(m[x]);
      if (h(chi.values()[c]) != chi(hm)) return false;
    }
  }
  return true;
}

BasisTheoremReport verify_basis_theorem(const Algebra& alg, const Frame& frame,
                                        const EnumerationOptions& options,
                                        std::size_t table_guard, std::uint64_t rejection_cap) {
  BasisTheoremReport report;
  report.generator = generated_subuniverse(alg, frame.U).size() == alg.size();
  const auto elementary = elementary_generator(alg, frame, table_guard);
  report.elementary_route = elementary.status;
  const auto rep = build_representation(alg, frame, options);
  report.bijective = rep.bijective();
  const bool chi_exists = elementary.status == ElementaryGeneratorResult::Status::exists;
  report.biconditional = chi_exists == report.bijective;

  if (!report.generator) {
    report.note = std::string("frame is not a generator (premise fails); elementary route: ") +
                  to_string(elementary.status) +
                  (report.bijective ? ", sampling bijective" : ", sampling not bijective");
    return report;
  }
  if (!chi_exists || !report.bijective) {
    report.note = report.biconditional ? "neither route yields a basis"
                                       : "routes disagree on the basis property";
    return report;
  }

  report.conjugates_match = true;
  for (std::size_t a = 0; a < alg.size(); ++a) {
    if (elementary.generator->chi[a].table != rep.conjugates[a]) report.conjugates_match = false;
  }

  report.members_commute = true;
  for (const auto& h : rep.endos) {
    if (!commutes_with_conjugates(h, rep)) report.members_commute = false;
  }

  const auto conj = conjugate_algebra(alg, rep);
  report.same_endomorphisms =
      enumerate_endomorphisms(conj, {EndoMethod::backtrack, options.max_candidates}) == rep.endos;

  const std::size_t n = alg.size();
  if (checked_power(n, n, std::numeric_limits<std::uint64_t>::max() / 2) <= rejection_cap) {
    const std::set<UnaryMap> members(rep.endos.begin(), rep.endos.end());
    bool all_rejected = true;
    for_each_point(n, n, [&](std::span<const Elem> values) {
      UnaryMap h{{values.begin(), values.end()}};
      if (members.contains(h)) return;
      ++report.non_members_checked;
      if (commutes_with_conjugates(h, rep)) all_rejected = false;
    });
    report.non_members_rejected = all_rejected;
  }
  report.note = "basis: both routes agree";
  return report;
}

}  // namespace ualg
