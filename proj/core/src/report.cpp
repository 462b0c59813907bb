#include "modcartan/verify/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "modcartan/error.hpp"

namespace modcartan::verify {

using nlohmann::ordered_json;

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Error: return "error";
  }
  return "error";
}

CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped") return CheckStatus::Skipped;
  if (s == "error") return CheckStatus::Error;
  throw ConfigError("unknown check status '" + s + "'");
}

bool SuiteReport::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

bool SuiteReport::errored() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Error; });
}

bool SuiteReport::skipped() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Skipped; });
}

std::string SuiteReport::status() const {
  if (failed()) return "fail";
  if (errored()) return "error";
  if (skipped()) return "skipped";
  return "pass";
}

namespace {

ordered_json report_json(const SuiteReport& r, bool stable) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json ev = c.evidence.empty() ? ordered_json() : ordered_json::parse(c.evidence);
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"evidence", std::move(ev)}});
  }
  ordered_json j;
  j["suite"] = r.suite;
  j["inputs"] = {{"group", r.group}, {"coeff", r.coeff}, {"seed", r.seed}};
  j["status"] = r.status();
  j["checks"] = std::move(checks);
  j["anomalies"] = r.anomalies;
  if (!stable) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string to_json(const SuiteReport& r, bool stable, int indent) { return report_json(r, stable).dump(indent); }

std::string to_json(const std::vector<SuiteReport>& rs, bool stable, int indent) {
  ordered_json a = ordered_json::array();
  for (const auto& r : rs) a.push_back(report_json(r, stable));
  return a.dump(indent);
}

SuiteReport report_from_json(const std::string& text) {
  try {
    const auto j = ordered_json::parse(text);
    SuiteReport r;
    r.suite = j.at("suite").get<std::string>();
    r.group = j.at("inputs").at("group").get<std::string>();
    r.coeff = j.at("inputs").at("coeff").get<std::string>();
    r.seed = j.at("inputs").at("seed").get<std::uint64_t>();
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), parse_status(c.at("status").get<std::string>()),
                          c.at("evidence").dump()});
    if (j.contains("anomalies")) r.anomalies = j.at("anomalies").get<std::vector<std::string>>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

std::string to_table(const SuiteReport& r) {
  std::ostringstream out;
  out << r.suite << "  " << r.group << "  " << r.coeff << "  seed " << r.seed << "  -> " << r.status() << "\n";
  std::size_t w = 0;
  for (const auto& c : r.checks) w = std::max(w, c.name.size());
  for (const auto& c : r.checks) {
    out << "  " << c.name << std::string(w - c.name.size() + 2, ' ') << to_string(c.status);
    if (c.status != CheckStatus::Pass && !c.evidence.empty()) {
      std::string ev = c.evidence;
      if (ev.size() > 160) ev = ev.substr(0, 157) + "...";
      out << "  " << ev;
    }
    out << "\n";
  }
  for (const auto& a : r.anomalies) out << "  anomaly: " << a << "\n";
  return out.str();
}

}  // namespace modcartan::verify
