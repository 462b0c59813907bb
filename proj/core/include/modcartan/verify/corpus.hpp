#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modcartan/verify/report.hpp"

namespace modcartan::verify {

struct CorpusPoint {
  std::string group;
  std::string coeff;
};

struct CorpusConfig {
  std::vector<CorpusPoint> points;
  std::vector<std::string> suites;  // empty means every suite
};

/// Coefficient templates with {p} replaced by each prime.
std::vector<CorpusPoint> expand_points(const std::vector<std::string>& groups, const std::vector<std::uint32_t>& primes,
                                       const std::vector<std::string>& coeff_templates);

/// C2 C3 C4 C6 C8 C12 C2xC2 C2xC4 C2xC2xC2 D8 Q8 S3 S4 A4 D12 over
/// F_p, Z/p^2, Z/p^3, F_p[t]/t^2 for p = 2, 3, 5.
CorpusConfig default_corpus();

/// JSON config: {"groups": [...], "primes": [...], "coeffs": ["F{p}", ...],
/// "points": [{"group": .., "coeff": ..}], "suites": [...]}; every key is
/// optional, groups x primes x coeffs and the explicit points are joined.
/// Throws ConfigError.
CorpusConfig parse_corpus_config(const std::string& text);
CorpusConfig load_corpus_config(const std::string& path);

/// Every suite on every point, in corpus order (point-major); incompatible
/// combinations become skipped reports. Runs on up to `threads` threads.
std::vector<SuiteReport> run_corpus(const CorpusConfig& config, std::uint64_t seed = 1, unsigned threads = 1);

}  // namespace modcartan::verify
