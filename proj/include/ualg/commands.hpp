#pragma once

// The subcommands of the ualg tool, each producing a Report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ualg/report.hpp"
#include "ualg/representation.hpp"

namespace ualg {

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  /// Brute-force enumeration accepts carriers up to this size.
  std::size_t max_carrier = 8;
  std::size_t guard_tables = kDefaultTableGuard;
};

EnumerationOptions enumeration_options(const GlobalOptions& opts, EndoMethod method);

Report cmd_endos(const std::string& algebra_path, EndoMethod method, bool list,
                 const GlobalOptions& opts);

Report cmd_basis(const std::string& algebra_path, const std::string& frame_path,
                 const GlobalOptions& opts);

/// Writes the endowed monoid to `emit_monoid` when it exists.
Report cmd_dilatations(const std::string& algebra_path, const std::string& frame_path,
                       const std::optional<std::string>& emit_monoid, const GlobalOptions& opts);

/// Without a frame file the conjugate check searches for a basis.
Report cmd_commutative(const std::string& algebra_path, std::size_t y,
                       const std::optional<std::string>& frame_path, const GlobalOptions& opts);

struct GalleryArgs {
  /// Event names of the semilattice.
  std::vector<std::string> events{"x", "y"};
  /// PERT project file; the four-event example when absent.
  std::optional<std::string> project;
  bool forward = false;
  std::optional<std::string> seed_event;
  std::optional<std::string> save_algebra;
  std::optional<std::string> save_frame;
};

/// name: semilattice | pert | integers | gaussian | boolean.
Report cmd_gallery(const std::string& name, const GalleryArgs& args, const GlobalOptions& opts);

int run_cli(int argc, char** argv);

}  // namespace ualg
