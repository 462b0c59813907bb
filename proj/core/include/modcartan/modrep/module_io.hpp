#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modcartan/modrep/rep_module.hpp"

namespace modcartan::rep {

/// Contents of a module file before interpretation: group and coefficient
/// specs as written, and one row-major matrix of encoded entries per
/// generator, ordered by generator index.
struct ModuleFile {
  std::string group;
  std::string coeff;
  std::size_t dim = 0;
  std::vector<std::vector<std::vector<std::uint64_t>>> actions;
};

/// Parses the JSON module format:
///   {"group": .., "coeff": .., "dim": d,
///    "actions": [{"generator": i, "matrix": [[...], ...]}, ...]}
/// Throws InvalidModule on malformed input.
ModuleFile parse_module_json(const std::string& text);
ModuleFile read_module_file(const std::string& path);

std::string module_json(const ModuleFile& f);

/// Builds a field module from a parsed file, checking every Cayley table
/// entry. Throws InvalidModule, or SpecSyntaxError for a bad group spec.
RepModule module_from_file(const ModuleFile& f);
RepModule load_module(const std::string& path);

/// File record for a field module; `group_spec` is written verbatim.
ModuleFile to_module_file(const RepModule& m, const std::string& group_spec);
void save_module(const RepModule& m, const std::string& group_spec, const std::string& path);

}  // namespace modcartan::rep
