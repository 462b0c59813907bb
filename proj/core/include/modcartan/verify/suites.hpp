#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modcartan/exactla/chain_ring.hpp"
#include "modcartan/modrep/rep_module.hpp"
#include "modcartan/verify/report.hpp"

namespace modcartan::verify {

/// brauer_nesbitt, cyclic_diagonal, semisimple, scaling, chouinard,
/// krull_schmidt, globaldim_witness, lemma46, artin, frobenius.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Why a suite does not apply to (group, ring), or nullopt if it does.
/// Throws UnknownSuite.
std::optional<std::string> incompatibility(const std::string& suite, const grp::GroupPtr& g,
                                           const la::ChainRing& ring);

/// Runs one suite. Throws UnknownSuite, IncompatibleInput, and the usage
/// errors of the spec parsers; computational failures become checks with
/// status error.
SuiteReport run_suite(const std::string& suite, const std::string& group_spec, const std::string& coeff_spec,
                      std::uint64_t seed = 1);
/// A report whose single check is skipped with the given reason.
SuiteReport skipped_report(const std::string& suite, const std::string& group_spec, const std::string& coeff_spec,
                           std::uint64_t seed, const std::string& reason);

struct NamedModule {
  std::string name;
  rep::RepModule module;
};
/// Test modules over F_p: the regular module, PIMs and sums of them, simples,
/// k pi/(u), modules induced from the Sylow subgroup, random cyclic
/// submodules and quotients, and tensor products with PIMs. Modules above
/// `max_dim` are left out.
std::vector<NamedModule> module_corpus(const grp::GroupPtr& g, std::uint32_t p, std::uint64_t seed = 1,
                                       std::size_t max_dim = 48);

/// Projectivity verdicts for M, its restriction to a Sylow p-subgroup and to
/// every maximal elementary abelian p-subgroup.
struct ProjectivityVerdicts {
  bool full;
  bool sylow;
  bool elementary;
  bool agree() const noexcept { return full == sylow && sylow == elementary; }
};
ProjectivityVerdicts projectivity_verdicts(const rep::RepModule& m, std::uint64_t seed = 1);

}  // namespace modcartan::verify
