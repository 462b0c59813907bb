#include "modcartan/verify/corpus.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "modcartan/error.hpp"
#include "modcartan/verify/suites.hpp"

namespace modcartan::verify {

std::vector<CorpusPoint> expand_points(const std::vector<std::string>& groups, const std::vector<std::uint32_t>& primes,
                                       const std::vector<std::string>& coeff_templates) {
  std::vector<CorpusPoint> out;
  for (const auto& g : groups)
    for (auto p : primes)
      for (auto c : coeff_templates) {
        for (std::size_t at; (at = c.find("{p}")) != std::string::npos;) c.replace(at, 3, std::to_string(p));
        out.push_back({g, c});
      }
  return out;
}

CorpusConfig default_corpus() {
  CorpusConfig c;
  c.points = expand_points({"C2", "C3", "C4", "C6", "C8", "C12", "C2xC2", "C2xC4", "C2xC2xC2", "D8", "Q8", "S3", "S4",
                            "A4", "D12"},
                           {2, 3, 5}, {"F{p}", "Z/{p}^2", "Z/{p}^3", "F{p}[t]/t^2"});
  return c;
}

CorpusConfig parse_corpus_config(const std::string& text) {
  CorpusConfig c;
  try {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object()) throw ConfigError("corpus config must be a JSON object");
    for (const auto& [key, _] : j.items())
      if (key != "groups" && key != "primes" && key != "coeffs" && key != "points" && key != "suites")
        throw ConfigError("unknown corpus config key '" + key + "'");
    const auto groups = j.value("groups", std::vector<std::string>{});
    const auto primes = j.value("primes", std::vector<std::uint32_t>{});
    const auto coeffs = j.value("coeffs", std::vector<std::string>{});
    if (!groups.empty() && (primes.empty() || coeffs.empty()))
      throw ConfigError("\"groups\" needs \"primes\" and \"coeffs\"");
    c.points = expand_points(groups, primes, coeffs);
    if (j.contains("points"))
      for (const auto& pt : j.at("points"))
        c.points.push_back({pt.at("group").get<std::string>(), pt.at("coeff").get<std::string>()});
    c.suites = j.value("suites", std::vector<std::string>{});
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed corpus config: ") + e.what());
  }
  for (const auto& s : c.suites)
    if (!is_suite(s)) throw ConfigError("unknown suite '" + s + "' in corpus config");
  return c;
}

CorpusConfig load_corpus_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open corpus config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus_config(ss.str());
}

std::vector<SuiteReport> run_corpus(const CorpusConfig& config, std::uint64_t seed, unsigned threads) {
  const auto& suites = config.suites.empty() ? suite_names() : config.suites;
  struct Job {
    const CorpusPoint* point;
    const std::string* suite;
  };
  std::vector<Job> jobs;
  for (const auto& pt : config.points)
    for (const auto& s : suites) jobs.push_back({&pt, &s});
  std::vector<SuiteReport> out(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < jobs.size();) {
      const auto& [pt, s] = jobs[k];
      try {
        try {
          out[k] = run_suite(*s, pt->group, pt->coeff, seed);
        } catch (const IncompatibleInput& e) {
          const std::string msg = e.what();
          out[k] = skipped_report(*s, pt->group, pt->coeff, seed, msg.substr(msg.rfind(": ") + 2));
        }
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace modcartan::verify
