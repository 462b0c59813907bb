#include "modcartan/modrep/module_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "modcartan/error.hpp"
#include "modcartan/exactla/chain_ring.hpp"

namespace modcartan::rep {

using nlohmann::json;

ModuleFile parse_module_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidModule(std::string("module file is not valid JSON: ") + e.what());
  }
  ModuleFile f;
  try {
    f.group = j.at("group").get<std::string>();
    f.coeff = j.at("coeff").get<std::string>();
    f.dim = j.at("dim").get<std::size_t>();
    const auto& acts = j.at("actions");
    if (!acts.is_array()) throw InvalidModule("\"actions\" must be an array");
    f.actions.resize(acts.size());
    std::vector<bool> seen(acts.size(), false);
    for (const auto& a : acts) {
      const auto gi = a.at("generator").get<std::size_t>();
      if (gi >= acts.size() || seen[gi])
        throw InvalidModule("generator index " + std::to_string(gi) + " missing, repeated or out of range");
      seen[gi] = true;
      auto rows = a.at("matrix").get<std::vector<std::vector<std::uint64_t>>>();
      if (rows.size() != f.dim) throw InvalidModule("matrix for generator " + std::to_string(gi) + " has wrong size");
      for (const auto& r : rows)
        if (r.size() != f.dim) throw InvalidModule("matrix for generator " + std::to_string(gi) + " is not square");
      f.actions[gi] = std::move(rows);
    }
  } catch (const json::exception& e) {
    throw InvalidModule(std::string("malformed module file: ") + e.what());
  }
  return f;
}

ModuleFile read_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidModule("cannot open module file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_module_json(ss.str());
}

std::string module_json(const ModuleFile& f) {
  json acts = json::array();
  for (std::size_t i = 0; i < f.actions.size(); ++i) acts.push_back({{"generator", i}, {"matrix", f.actions[i]}});
  json j{{"group", f.group}, {"coeff", f.coeff}, {"dim", f.dim}, {"actions", acts}};
  return j.dump() + "\n";
}

RepModule module_from_file(const ModuleFile& f) {
  const auto g = grp::parse_group_spec(f.group);
  const la::ChainRing ring = la::parse_coeff_spec(f.coeff);
  if (!ring.is_field())
    throw InvalidModule("coefficients " + f.coeff + " are not a field; load it as a chain module");
  const PrimeField field(ring.p());
  if (f.actions.size() != g->generators().size())
    throw InvalidModule("group " + f.group + " has " + std::to_string(g->generators().size()) +
                        " generators but the file gives " + std::to_string(f.actions.size()));
  std::vector<FpMatrix> gens;
  for (const auto& rows : f.actions) {
    FpMatrix m(field, f.dim, f.dim);
    for (std::size_t r = 0; r < f.dim; ++r)
      for (std::size_t c = 0; c < f.dim; ++c) {
        if (rows[r][c] >= field.p())
          throw InvalidModule("entry " + std::to_string(rows[r][c]) + " is not a residue mod " + std::to_string(field.p()));
        m.at(r, c) = static_cast<la::Residue>(rows[r][c]);
      }
    if (!la::inverse(m)) throw InvalidModule("action matrix is not invertible");
    gens.push_back(std::move(m));
  }
  RepModule out(g, field, f.dim, std::move(gens), Provenance::File, true);
  if (!out.satisfies_all_relations()) throw InvalidModule("action violates the Cayley table");
  return out;
}

RepModule load_module(const std::string& path) { return module_from_file(read_module_file(path)); }

ModuleFile to_module_file(const RepModule& m, const std::string& group_spec) {
  ModuleFile f;
  f.group = group_spec;
  f.coeff = m.field().to_string();
  f.dim = m.dim();
  for (const auto& a : m.generator_actions()) {
    std::vector<std::vector<std::uint64_t>> rows(m.dim(), std::vector<std::uint64_t>(m.dim()));
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c) rows[r][c] = a(r, c);
    f.actions.push_back(std::move(rows));
  }
  return f;
}

void save_module(const RepModule& m, const std::string& group_spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write module file " + path);
  out << module_json(to_module_file(m, group_spec));
}

}  // namespace modcartan::rep
