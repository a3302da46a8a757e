// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "support.hpp"
#include "ualg/commands.hpp"
#include "ualg/commutativity.hpp"
#include "ualg/dilatation.hpp"
#include "ualg/gallery/boolean.hpp"
#include "ualg/gallery/gaussian.hpp"
#include "ualg/gallery/integers.hpp"
#include "ualg/gallery/pert.hpp"
#include "ualg/gallery/powerset.hpp"
#include "ualg/representation.hpp"

using namespace ualg;
using namespace ualg::gallery;

namespace {

// Collects failed expectations of one criterion.
class Outcome {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return failures_.empty(); }
  std::string summary() const {
    std::ostringstream out;
    const auto& parts = passed() ? notes_ : failures_;
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "; " : "") << parts[i];
    return out.str();
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << " s";
  return out.str();
}

// Both compositions of sampling and extension are identities.
void expect_mutually_inverse(Outcome& o, const Representation& rep) {
  o.expect(rep.bijective(), "sampling not bijective: " + rep.explanation);
  if (!rep.bijective()) return;
  for (std::size_t i = 0; i < rep.endos.size(); ++i) {
    const auto m = rep.matrix(rep.sampling[i]);
    o.expect(rep.extend(m) == rep.endos[i], "eta(r(h)) != h for endomorphism " + std::to_string(i));
  }
  for (std::size_t c = 0; c < rep.matrix_count(); ++c) {
    const auto m = rep.matrix(c);
    const auto& h = rep.extend(m);
    for (std::size_t x = 0; x < m.size(); ++x) {
      o.expect(h(rep.frame.U[x]) == m[x], "r(eta(M)) != M for matrix " + std::to_string(c));
    }
  }
}

void all_hold(Outcome& o, const std::vector<SampledReport>& reports, std::size_t min_samples = 0) {
  for (const auto& r : reports) {
    o.expect(r.holds, r.law + " fails: " + r.witness);
    o.expect(r.samples >= min_samples, r.law + " ran only " + std::to_string(r.samples) + " samples");
  }
}

Outcome semilattice_two() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto s = build_powerset_semilattice({"x", "y"});
  const auto endos = enumerate_endomorphisms(s.algebra, {EndoMethod::brute});
  const auto rep = build_representation(s.algebra, s.frame, {EndoMethod::brute});
  const double elapsed = seconds_since(start);
  o.expect(endos.size() == 16, "brute-force count " + std::to_string(endos.size()) + " != 16");
  o.expect(oracle::endomorphisms(s.algebra).size() == 16, "oracle count differs from 16");
  expect_mutually_inverse(o, rep);
  o.expect(elapsed < 1.0, "runtime " + fmt_seconds(elapsed) + " >= 1 s");
  o.note("16 endomorphisms = 4^2, r_U and eta mutually inverse, " + fmt_seconds(elapsed));
  return o;
}

Outcome semilattice_three() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto s = build_powerset_semilattice({"x", "y", "z"});
  const auto rep = build_representation(s.algebra, s.frame, {EndoMethod::backtrack});
  const double elapsed = seconds_since(start);
  o.expect(rep.endos.size() == 512, "backtracking count " + std::to_string(rep.endos.size()) + " != 512");
  expect_mutually_inverse(o, rep);
  o.expect(elapsed < 30.0, "runtime " + fmt_seconds(elapsed) + " >= 30 s");
  o.note("512 endomorphisms = 8^3, r_U bijective, " + fmt_seconds(elapsed));
  return o;
}

void expect_basis_theorem(Outcome& o, const std::string& name, const BasisTheoremReport& r) {
  o.expect(r.biconditional, name + ": elementary route and sampling disagree");
  o.expect(r.passed(), name + ": " + r.note);
  if (r.generator && r.bijective) {
    o.expect(r.members_commute && r.same_endomorphisms && r.conjugates_match,
             name + ": conjugate checks fail");
  }
}

Outcome basis_theorem() {
  Outcome o;
  for (const auto& events : {std::vector<std::string>{"x", "y"}, {"x", "y", "z"}}) {
    const auto s = build_powerset_semilattice(events);
    expect_basis_theorem(o, "semilattice |X|=" + std::to_string(events.size()),
                         verify_basis_theorem(s.algebra, s.frame));
  }
  const auto b = build_boolean_example();
  expect_basis_theorem(o, "boolean", verify_basis_theorem(b.algebra, b.frame));

  std::mt19937_64 rng(derive_seed(0, 3));
  std::size_t algebras = 0;
  std::size_t bases = 0;
  for (int trial = 0; trial < 400 && algebras < 30; ++trial) {
    const Algebra alg = support::random_small_algebra(rng, 4);
    const auto k = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    std::vector<Elem> choice(k);
    for (auto& c : choice) c = std::uniform_int_distribution<Elem>(0, alg.size() - 1)(rng);
    const auto frame = support::frame_of(choice);
    try {
      const auto r = verify_basis_theorem(alg, frame);
      if (!r.generator) continue;
      ++algebras;
      if (r.bijective) ++bases;
      expect_basis_theorem(o, "random algebra " + std::to_string(trial), r);
    } catch (const GuardExceeded&) {
    }
  }
  o.expect(algebras >= 20, "only " + std::to_string(algebras) + " random generator cases");
  o.note("semilattices, boolean and " + std::to_string(algebras) + " random algebras (" +
         std::to_string(bases) + " with a basis)");
  return o;
}

Outcome elementary_commutation() {
  Outcome o;
  const auto s = build_powerset_semilattice({"x", "y"});
  for (std::size_t y = 1; y <= 2; ++y) {
    const auto r = check_elementary_commutation(s.algebra, Rank::indexed(y));
    o.expect(!r.skipped && r.holds, "Y=" + std::to_string(y) + " pairs fail: " + r.note);
    o.expect(r.projections_commute, "Y=" + std::to_string(y) + " projections fail");
    o.note("Y=" + std::to_string(y) + ": " + std::to_string(r.pairs_checked) + " pairs");
  }

  // Every operation commutes with every projection, on the semilattice and random algebras.
  std::mt19937_64 rng(derive_seed(0, 4));
  std::vector<Algebra> algebras{s.algebra};
  for (int i = 0; i < 20; ++i) algebras.push_back(support::random_small_algebra(rng, 3));
  std::size_t projection_checks = 0;
  for (const auto& alg : algebras) {
    for (std::size_t y = 1; y <= 2; ++y) {
      for (const auto& op : alg.ops()) {
        for (std::size_t x = 0; x < y; ++x) {
          ++projection_checks;
          o.expect(ops_commute(op.table(), projection(alg.size(), Rank::indexed(y), x)).holds,
                   "operation " + op.symbol() + " does not commute with a projection");
        }
      }
    }
  }
  o.note(std::to_string(projection_checks) + " projection checks");

  // Composites of elementary functions under an operation commute with every operation.
  const Rank y = Rank::indexed(2);
  const auto closure = complete_closure(s.algebra, y);
  std::uniform_int_distribution<std::size_t> pick_fn(0, closure.functions.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_op(0, s.algebra.ops().size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& g = s.algebra.op(pick_op(rng));
    std::vector<FunctionTable> parts;
    for (std::size_t r = 0; r < g.rank().size(); ++r) parts.push_back(closure.functions[pick_fn(rng)].table);
    const auto l = set_ary_compose(g.table(), parts, y);
    for (const auto& f : s.algebra.ops()) {
      o.expect(ops_commute(l, f.table()).holds, "composite " + std::to_string(trial) + " fails");
      o.expect(oracle::medial(l.values(), 2, f.table().values(), f.rank().size(), s.algebra.size()),
               "oracle rejects composite " + std::to_string(trial));
    }
  }
  o.note("50 random composites");
  return o;
}

Outcome conjugate_commutation() {
  Outcome o;
  const auto s = build_powerset_semilattice({"x", "y"});
  const auto rep = build_representation(s.algebra, s.frame);
  const auto r = check_conjugate_commutation(s.algebra, rep);
  o.expect(!r.skipped && r.holds, "conjugates fail: " + r.note);
  o.expect(r.instances == 4 * 4 * 256, "instances " + std::to_string(r.instances) + " != 4096");
  o.note(std::to_string(r.instances) + " instances, zero failures");
  return o;
}

Outcome endowed_monoid() {
  Outcome o;
  const auto s = build_powerset_semilattice({"x", "y"});
  o.expect(is_commutative(s.algebra).commutative, "semilattice not commutative");
  const auto fullness = check_commutative_fullness(s.algebra, s.frame);
  o.expect(fullness.passed && fullness.full && fullness.monoid_built, "fullness pipeline: " + fullness.note);
  const auto rep = build_representation(s.algebra, s.frame);
  const auto analysis = analyze_dilatations(s.algebra, rep);
  const auto result = build_endowed_monoid(s.algebra, analysis);
  o.expect(result.monoid.has_value(), "no endowed monoid");
  if (!result.monoid) return o;
  const auto& m = *result.monoid;
  o.expect(check_monoid_laws(m).passed(), "monoid laws fail");
  // Image operations are listed as ∪ then 0.
  const auto iso = two_element_lattice_iso(m, 1, 0);
  o.expect(iso.has_value(), "not isomorphic to the two-element bounded lattice");
  const auto d = check_distributivities(s.algebra, m);
  o.expect(d.passed(), "distributivity fails: " + d.witness);
  o.note("|Delta| = " + std::to_string(m.delta.size()) + ", lattice iso found, " + std::to_string(d.cases) +
         " distributivity cases");
  return o;
}

Outcome boolean_negative() {
  Outcome o;
  const auto b = build_boolean_example();
  const auto c = is_commutative(b.algebra);
  o.expect(!c.commutative, "boolean reported commutative");
  const auto* f = c.first_failure();
  o.expect(f && f->f == "¬" && f->g == "∧" && f->witness, "no (¬,∧) witness");
  const auto rep = build_representation(b.algebra, b.frame);
  const auto a = analyze_dilatations(b.algebra, rep);
  o.expect(a.delta.size() == 1, "|Delta| = " + std::to_string(a.delta.size()));
  o.expect(a.indicator_set == std::vector<Elem>{b.algebra.carrier().at("x")}, "D != {x}");
  o.expect(!a.full, "reported full");
  o.expect(!build_endowed_monoid(b.algebra, a).monoid, "endowed monoid built");
  o.note("(¬,∧) witness, |Delta| = 1, D = {x}, not full, no endowed monoid");
  return o;
}

Outcome pert_forward() {
  Outcome o;
  const auto p = four_event_project();
  const Schedule seed{{"a", 0}};
  const auto t = pert_forward_pass(p, seed);
  const std::vector<Schedule> expected{{{"b", 1}, {"c", 3}}, {{"d", 8}}, {}};
  o.expect(t == expected, "trajectory differs");
  std::map<std::string, std::map<std::string, std::uint64_t>> arcs(p.successors.begin(), p.successors.end());
  const auto times = oracle::longest_paths(arcs, {seed.begin(), seed.end()});
  const auto acc = accumulate(seed, t);
  o.expect(acc.count("d") && acc.at("d") == 8 && times.at("d") == 8, "d-time differs from 8");

  std::mt19937_64 rng(derive_seed(0, 8));
  for (int trial = 0; trial < 200; ++trial) {
    const auto events = static_cast<std::size_t>(draw(rng, 1, 6));
    const auto q = random_acyclic_project(rng, events, 9);
    const auto s = random_schedule(rng, q.events, 9);
    std::map<std::string, std::map<std::string, std::uint64_t>> qa(q.successors.begin(), q.successors.end());
    const auto want = oracle::longest_paths(qa, {s.begin(), s.end()});
    o.expect(accumulate(s, pert_forward_pass(q, s)) == Schedule(want.begin(), want.end()),
             "random project " + std::to_string(trial) + " differs from the oracle");
  }
  o.note("trajectory [{(b,1),(c,3)}, {(d,8)}, {}], d = 8, 200 random projects match");
  return o;
}

Outcome pert_laws() {
  Outcome o;
  const auto reports = pert_checks({"a", "b", "c", "d"}, {0, 1000});
  all_hold(o, reports);
  std::size_t checked = 0;
  for (const auto& r : reports) {
    if (r.law.find("nu") != std::string::npos || r.law.find("⊕") != std::string::npos) {
      ++checked;
      o.expect(r.samples >= 1000, r.law + " ran " + std::to_string(r.samples) + " samples");
    }
  }
  o.expect(checked >= 2, "nu and ⊕ laws not found");
  o.note(std::to_string(reports.size()) + " laws on 1000 samples each, zero failures");
  return o;
}

Outcome integer_laws() {
  Outcome o;
  const auto reports = integers_checks({0, 1000});
  all_hold(o, reports);
  for (std::size_t k = 0; k <= 50; ++k) {
    std::set<std::int64_t> want;
    for (std::int64_t v = 1; v <= static_cast<std::int64_t>(k) + 1; ++v) want.insert(v);
    o.expect(bounded_closure(k) == want, "closure after " + std::to_string(k) + " steps");
  }
  o.note(std::to_string(reports.size()) + " laws hold, closure {1..k+1} for k <= 50");
  return o;
}

Outcome gaussian_laws() {
  Outcome o;
  const auto reports = gaussian_checks({0, 1000});
  all_hold(o, reports);
  std::size_t j_samples = 0;
  for (const auto& r : reports) {
    if (r.law.find("j ") != std::string::npos || r.law.rfind("j", 0) == 0) j_samples = r.samples;
  }
  o.expect(j_samples == 21 * 21, "j round trip covered " + std::to_string(j_samples) + " points");
  o.note(std::to_string(reports.size()) + " laws hold, j exhaustive on 441 points");
  return o;
}

std::vector<std::string> report_bodies() {
  const auto data = [](const char* name) { return support::data(name); };
  const GlobalOptions opts;
  std::vector<Report> reports;
  reports.push_back(cmd_endos(data("semilattice2.json"), EndoMethod::brute, true, opts));
  reports.push_back(cmd_endos(data("semilattice3.json"), EndoMethod::backtrack, false, opts));
  reports.push_back(cmd_basis(data("semilattice2.json"), data("semilattice2_frame.json"), opts));
  reports.push_back(cmd_basis(data("boolean.json"), data("boolean_frame.json"), opts));
  reports.push_back(cmd_dilatations(data("semilattice2.json"), data("semilattice2_frame.json"), std::nullopt, opts));
  reports.push_back(cmd_dilatations(data("boolean.json"), data("boolean_frame.json"), std::nullopt, opts));
  reports.push_back(cmd_commutative(data("semilattice2.json"), 2, std::nullopt, opts));
  reports.push_back(cmd_commutative(data("boolean.json"), 1, std::nullopt, opts));
  GalleryArgs forward;
  forward.forward = true;
  forward.seed_event = "a";
  reports.push_back(cmd_gallery("pert", forward, opts));
  for (const char* name : {"semilattice", "pert", "integers", "gaussian", "boolean"}) {
    reports.push_back(cmd_gallery(name, {}, opts));
  }
  std::vector<std::string> bodies;
  for (const auto& r : reports) bodies.push_back(r.to_json().dump(2) + r.to_text());
  return bodies;
}

Outcome determinism() {
  Outcome o;
  const auto first = report_bodies();
  const auto second = report_bodies();
  o.expect(first == second, "report bodies differ between runs");
  std::size_t bytes = 0;
  for (const auto& b : first) bytes += b.size();
  o.note(std::to_string(first.size()) + " reports, " + std::to_string(bytes) + " bytes identical");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"semilattice |X|=2 endomorphisms and representation", semilattice_two},
      {"semilattice |X|=3 endomorphisms and representation", semilattice_three},
      {"basis theorem biconditional", basis_theorem},
      {"elementary functions commute", elementary_commutation},
      {"conjugate functions commute", conjugate_commutation},
      {"endowed monoid of the semilattice", endowed_monoid},
      {"boolean negative example", boolean_negative},
      {"PERT forward pass", pert_forward},
      {"PERT nu homomorphism and ⊕ monoid", pert_laws},
      {"integers", integer_laws},
      {"gaussian integers", gaussian_laws},
      {"deterministic reports", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    if (!o.passed()) ++failed;
    std::cout << (o.passed() ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": " << o.summary()
              << " [" << fmt_seconds(seconds_since(start)) << "]\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
