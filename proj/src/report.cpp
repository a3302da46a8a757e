#include "ualg/report.hpp"

#include <algorithm>
#include <sstream>

namespace ualg {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::guard_exceeded: return "guard-exceeded";
  }
  return "?";
}

Finding from_sampled(const SampledReport& sampled, std::string check) {
  Finding f;
  f.check = check.empty() ? sampled.law : std::move(check);
  f.law = sampled.law;
  f.status = sampled.holds ? Status::pass : Status::fail;
  f.summary = (sampled.holds ? "holds on " : "fails at sample " +
                                                 std::to_string(*sampled.failing_sample) + " of ") +
              std::to_string(sampled.samples) + " samples (seed " + std::to_string(sampled.seed) + ")";
  f.detail = {{"seed", sampled.seed}, {"samples", sampled.samples}};
  if (sampled.failing_sample) f.detail["failing_sample"] = *sampled.failing_sample;
  f.witness = sampled.witness;
  return f;
}

Status Report::status() const {
  const auto any = [&](Status s) {
    return std::any_of(findings.begin(), findings.end(), [s](const Finding& f) { return f.status == s; });
  };
  if (any(Status::fail)) return Status::fail;
  if (any(Status::guard_exceeded)) return Status::guard_exceeded;
  if (any(Status::pass) || findings.empty()) return Status::pass;
  return Status::skipped;
}

int Report::exit_code() const {
  const Status s = status();
  return s == Status::pass || s == Status::skipped ? 0 : 1;
}

nlohmann::json Report::to_json(bool with_timings) const {
  nlohmann::json out = {{"command", command}, {"inputs", inputs}, {"seed", seed},
                        {"status", to_string(status())}};
  nlohmann::json list = nlohmann::json::array();
  for (const auto& f : findings) {
    nlohmann::json item = {{"check", f.check}, {"law", f.law}, {"status", to_string(f.status)},
                           {"summary", f.summary}, {"detail", f.detail}};
    if (!f.witness.empty()) item["witness"] = f.witness;
    list.push_back(std::move(item));
  }
  out["findings"] = std::move(list);
  if (with_timings) out["timings_ms"] = timings_ms;
  return out;
}

std::string Report::to_text(bool with_timings) const {
  std::ostringstream out;
  out << command;
  for (const auto& in : inputs) out << " " << in;
  out << "  [seed " << seed << "]\n";
  for (const auto& f : findings) {
    std::string tag = to_string(f.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), [](unsigned char c) { return std::toupper(c); });
    out << "  " << tag << "  " << f.check << ": " << f.summary << "\n";
    if (!f.law.empty()) out << "        law: " << f.law << "\n";
    if (!f.witness.empty()) out << "        witness: " << f.witness << "\n";
  }
  out << "status: " << to_string(status()) << "\n";
  if (with_timings) {
    for (const auto& [k, v] : timings_ms) out << "time " << k << ": " << v << " ms\n";
  }
  return out.str();
}

}  // namespace ualg
