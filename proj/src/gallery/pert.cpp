#include "ualg/gallery/pert.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "ualg/checked.hpp"
#include "ualg/commutativity.hpp"
#include "ualg/core.hpp"

namespace ualg::gallery {

PertProject make_project(std::vector<std::string> events,
                         std::map<std::string, Schedule> successors) {
  const std::set<std::string> known(events.begin(), events.end());
  if (known.size() != events.size()) throw AlgebraError("duplicate event name");
  for (const auto& [x, row] : successors) {
    if (!known.contains(x)) throw AlgebraError("unknown event \"" + x + "\"");
    for (const auto& [y, t] : row) {
      if (!known.contains(y)) throw AlgebraError("unknown event \"" + y + "\"");
    }
  }
  for (const auto& x : events) successors.try_emplace(x);
  return {std::move(events), std::move(successors)};
}

PertProject four_event_project() {
  return make_project({"a", "b", "c", "d"},
                      {{"a", {{"b", 1}, {"c", 3}}}, {"b", {{"d", 7}}}, {"c", {{"d", 2}}}, {"d", {}}});
}

std::string show(const Schedule& a) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [x, t] : a) {
    out << (first ? "" : ", ") << "(" << x << "," << t << ")";
    first = false;
  }
  out << "}";
  return out.str();
}

Schedule join(const Schedule& a, const Schedule& b) {
  Schedule out = a;
  for (const auto& [x, t] : b) {
    auto [it, inserted] = out.try_emplace(x, t);
    if (!inserted) it->second = std::max(it->second, t);
  }
  return out;
}

Schedule delay(const Schedule& a, Time n) {
  Schedule out;
  for (const auto& [x, t] : a) out.emplace(x, checked_add(t, n));
  return out;
}

Schedule successor(const Schedule& a) { return delay(a, 1); }

Schedule pert_eta(const PertProject& project, const Schedule& a) {
  Schedule out;
  for (const auto& [x, ax] : a) {
    const auto row = project.successors.find(x);
    if (row == project.successors.end()) throw AlgebraError("unknown event \"" + x + "\"");
    out = join(out, delay(row->second, ax));
  }
  return out;
}

std::vector<Schedule> pert_forward_pass(const PertProject& project, const Schedule& seed) {
  std::vector<Schedule> trajectory;
  Schedule current = seed;
  for (std::size_t step = 0; step <= project.events.size(); ++step) {
    current = pert_eta(project, current);
    trajectory.push_back(current);
    if (current.empty()) return trajectory;
  }
  throw CycleError("cycle: forward pass did not drain after " +
                   std::to_string(project.events.size() + 1) + " steps");
}

Schedule accumulate(const Schedule& seed, const std::vector<Schedule>& trajectory) {
  Schedule out = seed;
  for (const auto& a : trajectory) out = join(out, a);
  return out;
}

Schedule longest_path_times(const PertProject& project, const Schedule& seed) {
  std::map<std::string, std::size_t> indegree;
  for (const auto& x : project.events) indegree[x];
  for (const auto& [x, row] : project.successors) {
    for (const auto& [y, t] : row) ++indegree[y];
  }
  std::deque<std::string> ready;
  for (const auto& x : project.events) {
    if (indegree[x] == 0) ready.push_back(x);
  }
  Schedule dist = seed;
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::string x = ready.front();
    ready.pop_front();
    ++visited;
    const auto at = dist.find(x);
    for (const auto& [y, t] : project.successors.at(x)) {
      if (at != dist.end()) {
        const Time candidate = checked_add(at->second, t);
        auto [it, inserted] = dist.try_emplace(y, candidate);
        if (!inserted) it->second = std::max(it->second, candidate);
      }
      if (--indegree[y] == 0) ready.push_back(y);
    }
  }
  if (visited != project.events.size()) throw CycleError("cycle in the arc relation");
  return dist;
}

PertProject constant_project(const std::vector<std::string>& events, const Schedule& b) {
  std::map<std::string, Schedule> rows;
  for (const auto& x : events) rows.emplace(x, b);
  return make_project(events, std::move(rows));
}

std::string show(const PertDilatation& d) {
  return d.delay ? "s^(" + std::to_string(*d.delay) + ")" : "k_empty";
}

Schedule apply_dilatation(const PertDilatation& d, const Schedule& b) {
  return d.delay ? delay(b, *d.delay) : Schedule{};
}

Time mu(const Schedule& a) {
  if (a.empty()) throw AlgebraError("mu of the empty schedule");
  Time out = 0;
  for (const auto& [x, t] : a) out = std::max(out, t);
  return out;
}

PertDilatation pert_gamma(const Schedule& a) {
  if (a.empty()) return {};
  return {mu(a)};
}

Time pert_nu(const Schedule& a) { return a.empty() ? 0 : checked_add(mu(a), Time{1}); }

Time nat_successor(Time n) { return n == 0 ? 0 : checked_add(n, Time{1}); }

Time nat_oplus(Time n, Time m) {
  if (n == 0 || m == 0) return 0;
  return checked_add(n, m) - 1;
}

std::map<std::string, PertDilatation> pert_j(const Schedule& a,
                                             const std::vector<std::string>& events) {
  std::map<std::string, PertDilatation> out;
  for (const auto& x : events) {
    const auto it = a.find(x);
    out.emplace(x, it == a.end() ? PertDilatation{} : PertDilatation{it->second});
  }
  for (const auto& [x, t] : a) {
    if (!out.contains(x)) throw AlgebraError("schedule event \"" + x + "\" outside the event set");
  }
  return out;
}

Schedule pert_j_inverse(const std::map<std::string, PertDilatation>& j) {
  Schedule out;
  for (const auto& [x, d] : j) {
    if (d.delay) out.emplace(x, *d.delay);
  }
  return out;
}

Schedule random_schedule(std::mt19937_64& rng, const std::vector<std::string>& events,
                         Time max_time) {
  Schedule out;
  for (const auto& x : events) {
    if (draw(rng, 0, 1)) out.emplace(x, static_cast<Time>(draw(rng, 0, static_cast<std::int64_t>(max_time))));
  }
  return out;
}

PertProject random_acyclic_project(std::mt19937_64& rng, std::size_t events, Time max_time) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < events; ++i) names.push_back("e" + std::to_string(i));
  std::map<std::string, Schedule> rows;
  for (std::size_t i = 0; i < events; ++i) {
    Schedule row;
    for (std::size_t j = i + 1; j < events; ++j) {
      if (draw(rng, 0, 1)) row.emplace(names[j], static_cast<Time>(draw(rng, 0, static_cast<std::int64_t>(max_time))));
    }
    rows.emplace(names[i], std::move(row));
  }
  return make_project(std::move(names), std::move(rows));
}

namespace {

PertProject random_project(std::mt19937_64& rng, const std::vector<std::string>& events,
                           Time max_time) {
  std::map<std::string, Schedule> rows;
  for (const auto& x : events) rows.emplace(x, random_schedule(rng, events, max_time));
  return make_project(events, std::move(rows));
}

PertDilatation compose(const PertDilatation& outer, const PertDilatation& inner) {
  if (!outer.delay || !inner.delay) return {};
  return {checked_add(*outer.delay, *inner.delay)};
}

Time nu_of(const PertDilatation& d) { return d.delay ? checked_add(*d.delay, Time{1}) : 0; }

std::string show_j(const std::map<std::string, PertDilatation>& j) {
  std::string out = "(";
  for (const auto& [x, d] : j) out += (out.size() > 1 ? ", " : "") + x + " -> " + show(d);
  return out + ")";
}

std::optional<std::string> mismatch(const std::string& what, const Schedule& lhs,
                                    const Schedule& rhs) {
  if (lhs == rhs) return std::nullopt;
  return what + ": " + show(lhs) + " != " + show(rhs);
}

}  // namespace

SymbolicAlgebra<Schedule> pert_algebra(std::vector<std::string> events, Time max_time) {
  SymbolicAlgebra<Schedule> alg;
  alg.name = "pert-schedules";
  alg.ops.push_back({"0", 0, [](std::span<const Schedule>) { return Schedule{}; }});
  alg.ops.push_back({"⊔", 2, [](std::span<const Schedule> p) { return join(p[0], p[1]); }});
  alg.ops.push_back({"s", 1, [](std::span<const Schedule> p) { return successor(p[0]); }});
  alg.sample = [events = std::move(events), max_time](std::mt19937_64& rng) {
    return random_schedule(rng, events, max_time);
  };
  alg.show = [](const Schedule& a) { return show(a); };
  return alg;
}

std::vector<SampledReport> pert_checks(const std::vector<std::string>& events, SampleSpec spec) {
  constexpr Time kMaxTime = 1000;
  std::vector<SampledReport> out = is_commutative_sampled(pert_algebra(events, kMaxTime), spec);
  std::uint64_t index = 100;
  auto next = [&] { return SampleSpec{derive_seed(spec.seed, index++), spec.count}; };

  out.push_back(check_sampled("nu is a homomorphism", next(), [&](std::mt19937_64& rng)
                                  -> std::optional<std::string> {
    const Schedule a = random_schedule(rng, events, kMaxTime);
    const Schedule b = random_schedule(rng, events, kMaxTime);
    if (pert_nu(Schedule{}) != 0) return "nu(0) != 0";
    if (pert_nu(join(a, b)) != std::max(pert_nu(a), pert_nu(b))) {
      return "nu(a ⊔ b) != max(nu a, nu b) at a = " + show(a) + ", b = " + show(b);
    }
    if (pert_nu(successor(a)) != nat_successor(pert_nu(a))) return "nu(s a) != s(nu a) at a = " + show(a);
    return std::nullopt;
  }));

  out.push_back(check_sampled("⊕ is a commutative monoid with unit 1", next(),
                              [](std::mt19937_64& rng) -> std::optional<std::string> {
    const Time n = static_cast<Time>(draw(rng, 0, 1'000'000));
    const Time m = static_cast<Time>(draw(rng, 0, 1'000'000));
    const Time p = static_cast<Time>(draw(rng, 0, 1'000'000));
    const std::string at = " at " + std::to_string(n) + ", " + std::to_string(m) + ", " + std::to_string(p);
    if (nat_oplus(nat_oplus(n, m), p) != nat_oplus(n, nat_oplus(m, p))) return "associativity" + at;
    if (nat_oplus(n, m) != nat_oplus(m, n)) return "commutativity" + at;
    if (nat_oplus(n, 1) != n || nat_oplus(1, n) != n) return "unit" + at;
    return std::nullopt;
  }));

  out.push_back(check_sampled("⊕ represents composition of dilatations", next(),
                              [&](std::mt19937_64& rng) -> std::optional<std::string> {
    const PertDilatation d = pert_gamma(random_schedule(rng, events, kMaxTime));
    const PertDilatation e = pert_gamma(random_schedule(rng, events, kMaxTime));
    const Schedule b = random_schedule(rng, events, kMaxTime);
    if (apply_dilatation(d, apply_dilatation(e, b)) != apply_dilatation(compose(d, e), b)) {
      return "composition of " + show(d) + " and " + show(e) + " at " + show(b);
    }
    if (nu_of(compose(d, e)) != nat_oplus(nu_of(d), nu_of(e))) {
      return "nu of " + show(d) + " . " + show(e) + " differs from the ⊕ of their nu values";
    }
    return std::nullopt;
  }));

  out.push_back(check_sampled("gamma_a(b) = chi_a(k_b)", next(),
                              [&](std::mt19937_64& rng) -> std::optional<std::string> {
    const Schedule a = random_schedule(rng, events, kMaxTime);
    const Schedule b = random_schedule(rng, events, kMaxTime);
    return mismatch("gamma at a = " + show(a) + ", b = " + show(b), apply_dilatation(pert_gamma(a), b),
                    pert_eta(constant_project(events, b), a));
  }));

  out.push_back(check_sampled("eta_M is an endomorphism", next(),
                              [&](std::mt19937_64& rng) -> std::optional<std::string> {
    const PertProject m = random_project(rng, events, kMaxTime);
    const Schedule a = random_schedule(rng, events, kMaxTime);
    const Schedule b = random_schedule(rng, events, kMaxTime);
    if (!pert_eta(m, {}).empty()) return "eta_M(0) is not empty";
    if (auto bad = mismatch("eta_M(a ⊔ b)", pert_eta(m, join(a, b)),
                            join(pert_eta(m, a), pert_eta(m, b)))) {
      return bad;
    }
    return mismatch("eta_M(s a)", pert_eta(m, successor(a)), successor(pert_eta(m, a)));
  }));

  out.push_back(check_sampled("sampling and extension are mutually inverse", next(),
                              [&](std::mt19937_64& rng) -> std::optional<std::string> {
    const PertProject m = random_project(rng, events, kMaxTime);
    std::map<std::string, Schedule> sampled;
    for (const auto& z : events) {
      const Schedule unit{{z, 0}};
      const Schedule image = pert_eta(m, unit);
      if (image != m.successors.at(z)) return mismatch("eta_M(U_" + z + ")", image, m.successors.at(z));
      sampled.emplace(z, image);
    }
    const PertProject rebuilt = make_project(events, std::move(sampled));
    const Schedule a = random_schedule(rng, events, kMaxTime);
    return mismatch("eta of the sample at " + show(a), pert_eta(rebuilt, a), pert_eta(m, a));
  }));

  out.push_back(check_sampled("j round trips", next(),
                              [&](std::mt19937_64& rng) -> std::optional<std::string> {
    const Schedule a = random_schedule(rng, events, kMaxTime);
    if (auto bad = mismatch("l(j(a))", pert_j_inverse(pert_j(a, events)), a)) return bad;
    std::map<std::string, PertDilatation> d;
    for (const auto& x : events) {
      d.emplace(x, draw(rng, 0, 1) ? PertDilatation{static_cast<Time>(draw(rng, 0, kMaxTime))}
                                   : PertDilatation{});
    }
    if (pert_j(pert_j_inverse(d), events) != d) return "j(l(delta)) differs at " + show_j(d);
    return std::nullopt;
  }));
  return out;
}

SampledReport pert_forward_pass_check(SampleSpec spec, std::size_t max_events, Time max_time) {
  return check_sampled("forward pass matches longest paths", spec,
                       [&](std::mt19937_64& rng) -> std::optional<std::string> {
    const auto events = static_cast<std::size_t>(draw(rng, 1, static_cast<std::int64_t>(max_events)));
    const PertProject project = random_acyclic_project(rng, events, max_time);
    const Schedule seed = random_schedule(rng, project.events, max_time);
    const auto trajectory = pert_forward_pass(project, seed);
    if (trajectory.empty() || !trajectory.back().empty()) return "trajectory does not end empty";
    return mismatch("accumulated times from " + show(seed), accumulate(seed, trajectory),
                    longest_path_times(project, seed));
  });
}

}  // namespace ualg::gallery
