#include "ualg/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>

#include <CLI11.hpp>

#include "ualg/commutativity.hpp"
#include "ualg/dilatation.hpp"
#include "ualg/gallery/boolean.hpp"
#include "ualg/gallery/gaussian.hpp"
#include "ualg/gallery/integers.hpp"
#include "ualg/gallery/pert.hpp"
#include "ualg/gallery/powerset.hpp"
#include "ualg/io.hpp"

namespace ualg {

using nlohmann::json;

namespace {

constexpr const char* kMedialLaw = "f(g . m) = g(f . c_m) for every m: R -> A^S";
constexpr const char* kBasisLaw = "U is a basis: h -> h . U bijects endomorphisms onto A^X";
constexpr const char* kBasisTheorem =
    "an elementary generator chi exists iff sampling is bijective; then the endomorphisms "
    "are exactly the maps commuting with every conjugate";
constexpr const char* kDilatationLaw =
    "Delta = E n L'; d indicates chi_d . k when that map is an endomorphism";

Finding guard_finding(std::string check, std::string law, const std::exception& e) {
  Finding f{std::move(check), std::move(law), Status::guard_exceeded, e.what()};
  f.witness = e.what();
  return f;
}

// Runs body; a guard trips into a guard-exceeded finding for `check`.
template <class Body>
void guarded(Report& report, const std::string& check, const std::string& law, Body&& body) {
  try {
    body();
  } catch (const GuardExceeded& e) {
    report.findings.push_back(guard_finding(check, law, e));
  }
}

std::string grid(const Carrier& carrier, const std::vector<std::vector<Elem>>& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    out += (r ? "; " : "") + render_point(carrier, m[r]);
  }
  return out + "]";
}

std::string medial_witness(const Carrier& carrier, const MedialReport& r) {
  return "f = " + r.f + ", g = " + r.g + ", m = " + (r.witness ? grid(carrier, *r.witness) : "?");
}

json names(const Carrier& carrier, const std::vector<Elem>& elems) {
  json out = json::array();
  for (Elem e : elems) out.push_back(carrier.name(e));
  return out;
}

json maps(const Carrier& carrier, const std::vector<UnaryMap>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(names(carrier, m.values));
  return out;
}

Finding representation_finding(const Algebra& alg, const Representation& rep) {
  Finding f{"representation", kBasisLaw, rep.bijective() ? Status::pass : Status::fail, {}};
  const auto matrices = rep.matrix_count();
  f.detail = {{"endomorphisms", rep.endos.size()}, {"matrices", matrices},
              {"explanation", rep.explanation}};
  if (rep.bijective()) {
    f.summary = "basis: yes, " + std::to_string(rep.endos.size()) +
                " endomorphisms biject onto " + std::to_string(matrices) + " matrices";
    return f;
  }
  f.summary = "basis: no, " + rep.explanation;
  if (rep.collision) {
    const auto& [i, j] = *rep.collision;
    f.witness = render_map(alg.carrier(), rep.endos[i]) + " and " +
                render_map(alg.carrier(), rep.endos[j]) + " both sample to " +
                render_point(alg.carrier(), rep.matrix(rep.sampling[i]));
  } else if (rep.unhit) {
    f.witness = "no endomorphism samples to " + render_point(alg.carrier(), *rep.unhit);
  }
  if (f.witness.empty()) f.witness = rep.explanation;
  return f;
}

Finding basis_theorem_finding(const BasisTheoremReport& b) {
  Finding f{"basis theorem", kBasisTheorem, b.passed() ? Status::pass : Status::fail, b.note};
  f.detail = {{"generator", b.generator},
              {"elementary_route", to_string(b.elementary_route)},
              {"bijective", b.bijective},
              {"biconditional", b.biconditional},
              {"members_commute", b.members_commute},
              {"same_endomorphisms", b.same_endomorphisms},
              {"conjugates_match", b.conjugates_match},
              {"non_members_checked", b.non_members_checked}};
  if (b.non_members_rejected) f.detail["non_members_rejected"] = *b.non_members_rejected;
  if (!b.passed()) f.witness = b.note;
  return f;
}

Finding medial_finding(const Algebra& alg, const CommutativityReport& c) {
  Finding f{"medial law", kMedialLaw, c.commutative ? Status::pass : Status::fail, {}};
  std::uint64_t cases = 0;
  for (const auto& p : c.pairs) cases += p.cases;
  f.detail = {{"pairs", c.pairs.size()}, {"cases", cases}, {"symmetry_violated", c.symmetry_violated}};
  if (c.commutative) {
    f.summary = "commutative: yes, " + std::to_string(c.pairs.size()) + " ordered pairs";
    if (c.symmetry_violated) f.status = Status::fail;
    return f;
  }
  const auto* bad = c.first_failure();
  f.summary = "commutative: no, pair (" + bad->f + "," + bad->g + ") fails";
  f.witness = medial_witness(alg.carrier(), *bad);
  f.detail["pair"] = {bad->f, bad->g};
  if (bad->witness) {
    json m = json::array();
    for (const auto& row : *bad->witness) m.push_back(names(alg.carrier(), row));
    f.detail["m"] = m;
  }
  return f;
}

Finding dilatation_finding(const Algebra& alg, const DilatationAnalysis& a) {
  Finding f{"dilatations", kDilatationLaw, Status::pass, {}};
  json indicators = json::array();
  for (const auto& ind : a.indicators) indicators.push_back(names(alg.carrier(), ind));
  f.detail = {{"delta", maps(alg.carrier(), a.delta)},
              {"indicators", indicators},
              {"indicator_set", names(alg.carrier(), a.indicator_set)},
              {"non_indicators", names(alg.carrier(), a.non_indicators())},
              {"full", a.full},
              {"routes_agree", a.routes_agree}};
  f.summary = std::string("full: ") + (a.full ? "yes" : "no") + ", |Delta| = " +
              std::to_string(a.delta.size());
  if (!a.routes_agree) {
    f.status = Status::fail;
    f.witness = "E n L' and the indicator route disagree";
  } else if (!a.full) {
    f.status = Status::fail;
    f.witness = "non-indicators: " + render_point(alg.carrier(), a.non_indicators());
    f.summary += ", non-indicators " + render_point(alg.carrier(), a.non_indicators());
  }
  return f;
}

std::optional<std::pair<std::vector<int>, std::string>> find_lattice_iso(const Algebra& alg,
                                                                         const EndowedMonoid& m) {
  for (std::size_t z = 0; z < alg.ops().size(); ++z) {
    if (!alg.op(z).rank().empty()) continue;
    for (std::size_t j = 0; j < alg.ops().size(); ++j) {
      if (alg.op(j).rank().size() != 2) continue;
      if (auto iso = two_element_lattice_iso(m, z, j)) {
        return std::make_pair(*iso, alg.op(z).symbol() + " -> 0, " + alg.op(j).symbol() + " -> join");
      }
    }
  }
  return std::nullopt;
}

void monoid_findings(Report& report, const Algebra& alg, const DilatationAnalysis& analysis,
                     const std::optional<std::string>& emit) {
  const auto result = build_endowed_monoid(alg, analysis);
  Finding f{"endowed monoid", "dilatations under composition with the image operations",
            Status::skipped, {}};
  json images = json::array();
  for (const auto& im : result.images) {
    images.push_back({{"symbol", im.symbol}, {"inherited", im.inherited}});
  }
  f.detail = {{"images", images}};
  if (!result.monoid) {
    f.summary = "absent: carrier is not dilatation full";
    f.detail["non_indicators"] = names(alg.carrier(), result.non_indicators);
    report.findings.push_back(std::move(f));
    if (emit) {
      report.findings.push_back({"emit monoid", "", Status::skipped, "no endowed monoid to write"});
    }
    return;
  }
  const auto& monoid = *result.monoid;
  const auto laws = check_monoid_laws(monoid);
  f.status = laws.passed() && result.gamma_homomorphic ? Status::pass : Status::fail;
  f.detail.update({{"associative", laws.associative},
                   {"unital", laws.unital},
                   {"commutative", laws.commutative},
                   {"constant_members", laws.constant_members},
                   {"gamma_homomorphic", result.gamma_homomorphic}});
  f.summary = "commutative monoid of " + std::to_string(monoid.delta.size()) + " dilatations";
  if (const auto iso = find_lattice_iso(alg, monoid)) {
    f.summary += ", isomorphic to the bounded 2-element lattice";
    f.detail["lattice"] = {{"sigma", iso->first}, {"ops", iso->second}};
  }
  if (f.status == Status::fail) f.witness = "monoid laws or gamma homomorphism fail; see detail";
  report.findings.push_back(std::move(f));

  guarded(report, "distributivities", "delta . phi(e) = phi(delta . e); delta(f(a)) = f(delta . a)",
          [&] {
    const auto d = check_distributivities(alg, monoid);
    Finding g{"distributivities", "delta . phi(e) = phi(delta . e); delta(f(a)) = f(delta . a)",
              d.passed() ? Status::pass : Status::fail,
              (d.passed() ? "hold on " : "fail among ") + std::to_string(d.cases) + " cases"};
    g.detail = {{"composition_over_images", d.composition_over_images},
                {"image_definition", d.image_definition},
                {"dilatations_over_operations", d.dilatations_over_operations},
                {"cases", d.cases}};
    g.witness = d.witness;
    report.findings.push_back(std::move(g));
  });

  if (emit) {
    io::write_json(*emit, io::monoid_to_json(monoid));
    report.findings.push_back({"emit monoid", "", Status::pass, "written to " + *emit});
  }
}

template <class Fn>
Report timed(Report report, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn(report);
  report.timings_ms["total"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

EnumerationOptions enumeration_options(const GlobalOptions& opts, EndoMethod method) {
  return {method, checked_power(opts.max_carrier, opts.max_carrier,
                                std::numeric_limits<std::uint64_t>::max() / 2)};
}

Report cmd_endos(const std::string& algebra_path, EndoMethod method, bool list,
                 const GlobalOptions& opts) {
  return timed({"endos", {algebra_path}, opts.seed}, [&](Report& report) {
    const Algebra alg = io::algebra_from_json(io::read_json(algebra_path));
    const char* name = method == EndoMethod::brute ? "brute" : "backtrack";
    guarded(report, "endomorphisms", "h(f(a)) = f(h . a) for every f and a", [&] {
      const auto endos = enumerate_endomorphisms(alg, enumeration_options(opts, method));
      Finding f{"endomorphisms", "h(f(a)) = f(h . a) for every f and a", Status::pass,
                std::to_string(endos.size()) + " endomorphisms (" + name + ")"};
      f.detail = {{"count", endos.size()}, {"method", name}};
      if (list) f.detail["endomorphisms"] = maps(alg.carrier(), endos);
      report.findings.push_back(std::move(f));
    });
  });
}

Report cmd_basis(const std::string& algebra_path, const std::string& frame_path,
                 const GlobalOptions& opts) {
  return timed({"basis", {algebra_path, frame_path}, opts.seed}, [&](Report& report) {
    const Algebra alg = io::algebra_from_json(io::read_json(algebra_path));
    const Frame frame = io::frame_from_json(io::read_json(frame_path), alg.carrier());
    const auto enumeration = enumeration_options(opts, EndoMethod::backtrack);
    guarded(report, "representation", kBasisLaw, [&] {
      report.findings.push_back(
          representation_finding(alg, build_representation(alg, frame, enumeration)));
    });
    guarded(report, "basis theorem", kBasisTheorem, [&] {
      report.findings.push_back(basis_theorem_finding(
          verify_basis_theorem(alg, frame, enumeration, opts.guard_tables)));
    });
  });
}

Report cmd_dilatations(const std::string& algebra_path, const std::string& frame_path,
                       const std::optional<std::string>& emit_monoid, const GlobalOptions& opts) {
  return timed({"dilatations", {algebra_path, frame_path}, opts.seed}, [&](Report& report) {
    const Algebra alg = io::algebra_from_json(io::read_json(algebra_path));
    const Frame frame = io::frame_from_json(io::read_json(frame_path), alg.carrier());
    const auto enumeration = enumeration_options(opts, EndoMethod::backtrack);
    guarded(report, "dilatations", kDilatationLaw, [&] {
      const auto rep = build_representation(alg, frame, enumeration);
      if (!rep.bijective()) {
        report.findings.push_back(representation_finding(alg, rep));
        return;
      }
      const auto analysis = analyze_dilatations(alg, rep, opts.guard_tables);
      report.findings.push_back(dilatation_finding(alg, analysis));
      monoid_findings(report, alg, analysis, emit_monoid);
      const auto full = check_commutative_fullness(alg, frame, enumeration);
      report.findings.push_back({"commutative implies full",
                                 "a commutative algebra with a basis is dilatation full",
                                 full.passed ? Status::pass : Status::fail, full.note});
      if (!full.passed) report.findings.back().witness = full.note;
    });
  });
}

Report cmd_commutative(const std::string& algebra_path, std::size_t y,
                       const std::optional<std::string>& frame_path, const GlobalOptions& opts) {
  std::vector<std::string> inputs{algebra_path};
  if (frame_path) inputs.push_back(*frame_path);
  return timed({"commutative", inputs, opts.seed}, [&](Report& report) {
    const Algebra alg = io::algebra_from_json(io::read_json(algebra_path));
    bool commutative = false;
    guarded(report, "medial law", kMedialLaw, [&] {
      const auto c = is_commutative(alg, true);
      commutative = c.commutative;
      report.findings.push_back(medial_finding(alg, c));
    });

    const std::string check = "elementary functions at Y=" + std::to_string(y);
    const char* law = "every pair of Y-ary elementary functions satisfies the medial law";
    guarded(report, check, law, [&] {
      const auto e = check_elementary_commutation(alg, Rank::indexed(y), opts.guard_tables);
      Finding f{check, law, Status::pass, {}};
      f.detail = {{"functions", e.functions}, {"pairs", e.pairs_checked},
                  {"projection_checks", e.projection_checks},
                  {"projections_commute", e.projections_commute}};
      if (e.skipped) {
        f.status = Status::skipped;
        f.summary = e.note;
      } else if (e.holds) {
        f.summary = "pass: " + std::to_string(e.pairs_checked) + " pairs of " +
                    std::to_string(e.functions) + " functions";
      } else {
        f.status = Status::fail;
        f.summary = "fail";
        f.witness = medial_witness(alg.carrier(), *e.failure);
      }
      report.findings.push_back(std::move(f));
    });

    const char* conj_law = "chi_a(chi_b . M) = chi_b(chi_a . c_M) for all a, b and M: X -> A^X";
    guarded(report, "conjugates commute", conj_law, [&] {
      Finding f{"conjugates commute", conj_law, Status::skipped, {}};
      if (!commutative) {
        f.summary = "algebra is not commutative; nothing to check";
        report.findings.push_back(std::move(f));
        return;
      }
      const auto enumeration = enumeration_options(opts, EndoMethod::backtrack);
      std::optional<Frame> frame;
      if (frame_path) {
        frame = io::frame_from_json(io::read_json(*frame_path), alg.carrier());
      } else {
        frame = find_basis(alg, enumeration);
      }
      if (!frame) {
        f.summary = "no basis found; nothing to check";
        report.findings.push_back(std::move(f));
        return;
      }
      const auto rep = build_representation(alg, *frame, enumeration);
      const auto c = check_conjugate_commutation(alg, rep);
      f.detail = {{"frame", io::frame_to_json(*frame, alg.carrier())}, {"instances", c.instances}};
      if (c.skipped) {
        f.summary = c.note;
      } else if (c.holds) {
        f.status = Status::pass;
        f.summary = "pass: " + std::to_string(c.instances) + " instances";
      } else {
        f.status = Status::fail;
        f.summary = "fail";
        f.witness = medial_witness(alg.carrier(), *c.failure);
      }
      report.findings.push_back(std::move(f));
    });
  });
}

namespace {

Finding expect(std::string check, std::string law, bool ok, std::string summary,
               std::string witness = {}) {
  Finding f{std::move(check), std::move(law), ok ? Status::pass : Status::fail, std::move(summary)};
  if (!ok) f.witness = witness.empty() ? f.summary : std::move(witness);
  return f;
}

void gallery_semilattice(Report& report, const GalleryArgs& args, const GlobalOptions& opts) {
  const auto s = gallery::build_powerset_semilattice(args.events);
  if (args.save_algebra) io::write_json(*args.save_algebra, io::algebra_to_json(s.algebra));
  if (args.save_frame) io::write_json(*args.save_frame, io::frame_to_json(s.frame, s.algebra.carrier()));
  const std::size_t n = s.algebra.size();
  const auto enumeration = enumeration_options(opts, EndoMethod::backtrack);

  const auto rep = build_representation(s.algebra, s.frame, enumeration);
  const auto expected = checked_power(n, args.events.size());
  auto rf = representation_finding(s.algebra, rep);
  if (rep.endos.size() != expected) {
    rf.status = Status::fail;
    rf.witness = "expected " + std::to_string(expected) + " endomorphisms";
  }
  report.findings.push_back(std::move(rf));
  if (!rep.bijective()) return;

  bool agree = true;
  std::string witness;
  std::vector<std::uint32_t> matrix(args.events.size());
  for (std::size_t c = 0; c < rep.matrix_count() && agree; ++c) {
    const auto m = rep.matrix(c);
    for (std::size_t x = 0; x < m.size(); ++x) matrix[x] = m[x];
    const auto& eta = rep.extend(m);
    for (std::uint32_t subset = 0; subset < n; ++subset) {
      if (eta(subset) != gallery::union_extension(matrix, subset)) {
        agree = false;
        witness = "M = " + render_point(s.algebra.carrier(), m) + " at " +
                  s.algebra.carrier().name(subset);
        break;
      }
    }
  }
  report.findings.push_back(expect("extension formula", "eta_M(Y) = union of M_y over y in Y", agree,
                                   "generic extension matches the union formula on " +
                                       std::to_string(rep.matrix_count()) + " matrices",
                                   witness));

  const auto t = gallery::incidence_transform(s);
  report.findings.push_back(expect("incidence transform", "j(a u b) = j(a) or j(b); j(0) = 0",
                                   t.isomorphism, "characteristic vectors form an isomorphic copy"));

  const auto comm = is_commutative(s.algebra);
  report.findings.push_back(medial_finding(s.algebra, comm));

  const auto analysis = analyze_dilatations(s.algebra, rep, opts.guard_tables);
  const std::vector<UnaryMap> two{UnaryMap::constant(n, 0), UnaryMap::identity(n)};
  auto df = dilatation_finding(s.algebra, analysis);
  if (analysis.delta != two) {
    df.status = Status::fail;
    df.witness = "expected Delta = {k_0, identity}";
  }
  report.findings.push_back(std::move(df));
  monoid_findings(report, s.algebra, analysis, std::nullopt);

  // The four-event graph a -> {b, c}, b -> {d}, c -> {d}.
  const Rank graph_events({"a", "b", "c", "d"});
  const std::vector<std::uint32_t> m1{0b0110, 0b1000, 0b1000, 0b0000};
  const bool single = gallery::union_extension(m1, 0b0001) == 0b0110;
  const bool pair = gallery::union_extension(m1, 0b0011) == 0b1110;
  const auto rows = gallery::incidence_matrix(graph_events, m1);
  const bool row_a = rows[0] == std::vector<int>{0, 1, 1, 0};
  Finding g = expect("graph example", "eta_M({a}) = M_a; eta_M({a,b}) = M_a u M_b",
                     single && pair && row_a,
                     "eta_M({a}) = " + gallery::subset_name(graph_events, gallery::union_extension(m1, 0b0001)) +
                         ", eta_M({a,b}) = " +
                         gallery::subset_name(graph_events, gallery::union_extension(m1, 0b0011)));
  g.detail = {{"incidence", rows}};
  report.findings.push_back(std::move(g));
}

json schedule_json(const gallery::Schedule& a) {
  json out = json::object();
  for (const auto& [x, t] : a) out[x] = t;
  return out;
}

void gallery_pert(Report& report, const GalleryArgs& args, const GlobalOptions& opts) {
  const auto project =
      args.project ? io::pert_from_json(io::read_json(*args.project)) : gallery::four_event_project();
  if (args.forward) {
    const std::string event = args.seed_event.value_or(project.events.at(0));
    const gallery::Schedule seed{{event, 0}};
    const char* law = "the join of the forward trajectory equals the longest-path times";
    try {
      const auto trajectory = gallery::pert_forward_pass(project, seed);
      const auto accumulated = gallery::accumulate(seed, trajectory);
      const auto oracle = gallery::longest_path_times(project, seed);
      std::string summary = "final times";
      for (const auto& [x, t] : accumulated) summary += " " + x + "=" + std::to_string(t);
      Finding f = expect("forward pass", law, accumulated == oracle, summary,
                         "accumulated " + gallery::show(accumulated) + " != oracle " +
                             gallery::show(oracle));
      json traj = json::array();
      for (const auto& a : trajectory) traj.push_back(schedule_json(a));
      f.detail = {{"seed", schedule_json(seed)}, {"trajectory", traj},
                  {"accumulated", schedule_json(accumulated)}, {"oracle", schedule_json(oracle)}};
      report.findings.push_back(std::move(f));
    } catch (const gallery::CycleError& e) {
      report.findings.push_back(expect("forward pass", law, false, e.what()));
    }
  }
  report.findings.push_back(from_sampled(
      gallery::pert_forward_pass_check({derive_seed(opts.seed, 9000), 200}), "random projects"));
  for (const auto& r : gallery::pert_checks(project.events, {opts.seed, opts.samples})) {
    report.findings.push_back(from_sampled(r));
  }
}

void gallery_boolean(Report& report, const GalleryArgs& args, const GlobalOptions& opts) {
  const auto b = gallery::build_boolean_example();
  const auto& alg = b.algebra;
  if (args.save_algebra) io::write_json(*args.save_algebra, io::algebra_to_json(alg));
  if (args.save_frame) io::write_json(*args.save_frame, io::frame_to_json(b.frame, alg.carrier()));
  const auto enumeration = enumeration_options(opts, EndoMethod::backtrack);

  const auto rep = build_representation(alg, b.frame, enumeration);
  auto rf = representation_finding(alg, rep);
  if (rep.endos.size() != 4) {
    rf.status = Status::fail;
    rf.witness = "expected 4 endomorphisms";
  }
  report.findings.push_back(std::move(rf));
  if (!rep.bijective()) return;

  const auto comm = is_commutative(alg);
  const auto* bad = comm.first_failure();
  Finding mf = medial_finding(alg, comm);
  const bool expected_failure = bad && bad->f == "¬" && bad->g == "∧" && bad->witness &&
                                !medial_holds_at(alg.op(0).table(), alg.op(1).table(), *bad->witness);
  mf.status = expected_failure ? Status::pass : Status::fail;
  mf.summary += expected_failure ? " (as expected)" : " (expected a (¬,∧) counterexample)";
  if (bad) mf.detail["replay"] = medial_witness(alg.carrier(), *bad);
  mf.witness.clear();
  if (!expected_failure) mf.witness = "no (¬,∧) counterexample";
  report.findings.push_back(std::move(mf));

  const auto analysis = analyze_dilatations(alg, rep, opts.guard_tables);
  auto df = dilatation_finding(alg, analysis);
  const bool as_expected = analysis.routes_agree &&
                           analysis.delta == std::vector<UnaryMap>{UnaryMap::identity(4)} &&
                           analysis.indicator_set == std::vector<Elem>{alg.carrier().at("x")} &&
                           !analysis.full;
  df.status = as_expected ? Status::pass : Status::fail;
  df.summary += as_expected ? " (as expected: Delta = {identity}, D = {x})" : "";
  df.witness = as_expected ? "" : "expected Delta = {identity}, D = {x}, not full";
  report.findings.push_back(std::move(df));

  const auto result = build_endowed_monoid(alg, analysis);
  report.findings.push_back(expect("endowed monoid", "only dilatation full carriers endow a monoid",
                                   !result.monoid, "absent, as expected"));
}

}  // namespace

Report cmd_gallery(const std::string& name, const GalleryArgs& args, const GlobalOptions& opts) {
  std::vector<std::string> inputs{name};
  if (name == "pert" && args.project) inputs.push_back(*args.project);
  return timed({"gallery", inputs, opts.seed}, [&](Report& report) {
    const SampleSpec spec{opts.seed, opts.samples};
    if (name == "semilattice") {
      gallery_semilattice(report, args, opts);
    } else if (name == "pert") {
      gallery_pert(report, args, opts);
    } else if (name == "integers") {
      for (const auto& r : gallery::integers_checks(spec)) report.findings.push_back(from_sampled(r));
    } else if (name == "gaussian") {
      for (const auto& r : gallery::gaussian_checks(spec)) report.findings.push_back(from_sampled(r));
    } else if (name == "boolean") {
      gallery_boolean(report, args, opts);
    } else {
      throw AlgebraError("unknown gallery algebra \"" + name + "\"");
    }
  });
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Finite universal algebra toolkit: endomorphisms, bases, commutativity, dilatations"};
  app.fallthrough();
  app.require_subcommand(1);
  GlobalOptions opts;
  bool as_json = false;
  bool timings = false;
  std::string out_path;
  app.add_option("--seed", opts.seed, "Master seed for sampled checks")->capture_default_str();
  app.add_option("--samples", opts.samples, "Samples per sampled law")->capture_default_str();
  app.add_option("--max-carrier", opts.max_carrier, "Largest carrier for brute-force enumeration")
      ->capture_default_str();
  app.add_option("--guard-tables", opts.guard_tables, "Table cap for elementary closures")
      ->capture_default_str();
  auto* json_flag = app.add_flag("--json", as_json, "Emit JSON");
  app.add_flag("--text{false}", as_json, "Emit text (default)")->excludes(json_flag);
  app.add_flag("--timings", timings, "Include wall-clock timings");
  app.add_option("--out", out_path, "Write the report here instead of stdout");

  std::string algebra, frame, method = "backtrack", gallery_name;
  bool list = false;
  std::optional<std::string> emit, frame_opt;
  std::size_t y = 1;
  GalleryArgs gargs;
  std::string events_csv;
  std::function<Report()> action;

  auto* endos = app.add_subcommand("endos", "Enumerate endomorphisms");
  endos->add_option("algebra", algebra, "Algebra file")->required();
  endos->add_option("--method", method)->check(CLI::IsMember({"brute", "backtrack"}))->capture_default_str();
  endos->add_flag("--list", list, "List every endomorphism");
  endos->callback([&] {
    action = [&] {
      return cmd_endos(algebra, method == "brute" ? EndoMethod::brute : EndoMethod::backtrack, list, opts);
    };
  });

  auto* basis = app.add_subcommand("basis", "Check whether a frame is a basis");
  basis->add_option("algebra", algebra)->required();
  basis->add_option("frame", frame)->required();
  basis->callback([&] { action = [&] { return cmd_basis(algebra, frame, opts); }; });

  auto* dil = app.add_subcommand("dilatations", "Dilatations and the endowed monoid");
  dil->add_option("algebra", algebra)->required();
  dil->add_option("frame", frame)->required();
  dil->add_option("--emit-monoid", emit, "Write the endowed monoid as JSON");
  dil->callback([&] { action = [&] { return cmd_dilatations(algebra, frame, emit, opts); }; });

  auto* comm = app.add_subcommand("commutative", "Medial-law checks");
  comm->add_option("algebra", algebra)->required();
  comm->add_option("--Y", y, "Arity of elementary functions to compare")->capture_default_str();
  comm->add_option("--frame", frame_opt, "Basis for the conjugate check (searched when absent)");
  comm->callback([&] { action = [&] { return cmd_commutative(algebra, y, frame_opt, opts); }; });

  auto* gal = app.add_subcommand("gallery", "Built-in example algebras");
  gal->add_option("name", gallery_name)
      ->required()
      ->check(CLI::IsMember({"semilattice", "pert", "integers", "gaussian", "boolean"}));
  gal->add_option("project", gargs.project, "PERT project file");
  gal->add_option("--events", events_csv, "Comma-separated semilattice events (default x,y)");
  gal->add_flag("--forward", gargs.forward, "Run the PERT forward pass");
  gal->add_option("--seed-event", gargs.seed_event, "Start event of the forward pass");
  gal->add_option("--save-algebra", gargs.save_algebra, "Write the algebra file");
  gal->add_option("--save-frame", gargs.save_frame, "Write the frame file");
  gal->callback([&] {
    if (!events_csv.empty()) {
      gargs.events.clear();
      std::stringstream in(events_csv);
      for (std::string e; std::getline(in, e, ',');) gargs.events.push_back(e);
    }
    action = [&] { return cmd_gallery(gallery_name, gargs, opts); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  Report report;
  try {
    report = action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const std::string body = as_json ? report.to_json(timings).dump(2) + "\n" : report.to_text(timings);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    out << body;
  }
  return report.exit_code();
}

}  // namespace ualg
