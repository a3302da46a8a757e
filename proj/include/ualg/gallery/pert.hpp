#pragma once

// CPM-PERT: partial schedules under zero, join and unit delay, with projects
// as matrices and the forward pass as iterated extension.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ualg/sampling.hpp"

namespace ualg::gallery {

using Time = std::uint64_t;
/// A partial schedule; the empty map is the zero.
using Schedule = std::map<std::string, Time>;

class CycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PertProject {
  std::vector<std::string> events;
  /// successors[x] = M_x; total over events.
  std::map<std::string, Schedule> successors;
};

/// Throws AlgebraError on unknown events or duplicates; fills missing rows with
/// empty schedules.
PertProject make_project(std::vector<std::string> events,
                         std::map<std::string, Schedule> successors);

/// The four-event example project a -> {b:1, c:3}, b -> {d:7}, c -> {d:2}.
PertProject four_event_project();

std::string show(const Schedule& a);

Schedule join(const Schedule& a, const Schedule& b);
/// Delays every defined time by one.
Schedule successor(const Schedule& a);
Schedule delay(const Schedule& a, Time n);

/// [eta_M(a)]_y = max over x in Dom a of M_x(y) + a(x).
Schedule pert_eta(const PertProject& project, const Schedule& a);

/// eta applied until the empty schedule; throws CycleError after |X|+1 steps.
std::vector<Schedule> pert_forward_pass(const PertProject& project, const Schedule& seed);

/// seed joined with every schedule along the trajectory.
Schedule accumulate(const Schedule& seed, const std::vector<Schedule>& trajectory);

/// Longest-path times from a seed by dynamic programming in topological
/// order; throws CycleError on a cyclic arc relation.
Schedule longest_path_times(const PertProject& project, const Schedule& seed);

/// The constant project whose every row is b.
PertProject constant_project(const std::vector<std::string>& events, const Schedule& b);

/// A dilatation: the constant empty map when delay is absent, else s^(n).
struct PertDilatation {
  std::optional<Time> delay;
  bool operator==(const PertDilatation&) const = default;
};

std::string show(const PertDilatation& d);
Schedule apply_dilatation(const PertDilatation& d, const Schedule& b);
/// Largest defined time; requires a nonempty schedule.
Time mu(const Schedule& a);
PertDilatation pert_gamma(const Schedule& a);

/// 0 for the empty schedule, mu(a) + 1 otherwise.
Time pert_nu(const Schedule& a);
/// Target operations on N: s(n) = n + 1 unless n = 0; n (+) m = n + m - 1 unless either is 0.
Time nat_successor(Time n);
Time nat_oplus(Time n, Time m);

/// j_a(x) = k_empty when x is not in Dom a, else s^(a(x)).
std::map<std::string, PertDilatation> pert_j(const Schedule& a,
                                             const std::vector<std::string>& events);
Schedule pert_j_inverse(const std::map<std::string, PertDilatation>& j);

/// Each event included with probability 1/2, times uniform in [0, max_time].
Schedule random_schedule(std::mt19937_64& rng, const std::vector<std::string>& events,
                         Time max_time);

/// A random acyclic project: arcs only from earlier to later events.
PertProject random_acyclic_project(std::mt19937_64& rng, std::size_t events, Time max_time);

/// The symbolic algebra of schedules with 0, join and s.
SymbolicAlgebra<Schedule> pert_algebra(std::vector<std::string> events, Time max_time);

/// Sampled laws: medial pairs, nu homomorphism, (+) monoid, gamma against
/// the conjugate route, extension round trips and j round trips.
std::vector<SampledReport> pert_checks(const std::vector<std::string>& events, SampleSpec spec);

/// The forward pass on `trials` random acyclic projects against the
/// longest-path oracle.
SampledReport pert_forward_pass_check(SampleSpec spec, std::size_t max_events = 6,
                                      Time max_time = 9);

}  // namespace ualg::gallery
