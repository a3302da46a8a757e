#pragma once

// Machine-readable findings for the command-line tool.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ualg/sampling.hpp"

namespace ualg {

enum class Status { pass, fail, skipped, guard_exceeded };

const char* to_string(Status s);

struct Finding {
  std::string check;
  /// The law or property the check instantiates.
  std::string law;
  Status status = Status::pass;
  std::string summary;
  nlohmann::json detail = nlohmann::json::object();
  /// Replayable counterexample; set on every failure.
  std::string witness;
};

/// The check is named after the law unless `check` is given.
Finding from_sampled(const SampledReport& sampled, std::string check = {});

struct Report {
  std::string command;
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  std::vector<Finding> findings;
  std::map<std::string, double> timings_ms;

  /// fail beats guard-exceeded beats pass; all-skipped is skipped.
  Status status() const;
  /// 0 when no finding failed or hit a guard.
  int exit_code() const;
  nlohmann::json to_json(bool with_timings = false) const;
  std::string to_text(bool with_timings = false) const;
};

}  // namespace ualg
