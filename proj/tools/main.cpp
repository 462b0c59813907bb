// modcartan: Cartan matrices, projectivity tests and verification suites for
// group algebras over prime fields and finite chain rings.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modcartan/artinring/chain_cartan.hpp"
#include "modcartan/error.hpp"
#include "modcartan/grothendieck/grothendieck.hpp"
#include "modcartan/modrep/module_io.hpp"
#include "modcartan/verify/corpus.hpp"
#include "modcartan/verify/suites.hpp"

namespace {

using namespace modcartan;
using nlohmann::ordered_json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

struct Options {
  std::string group;
  std::string coeff;
  std::uint64_t seed = 1;
  bool json = false;
  bool stable = false;
  std::string module;
  std::string corpus;
  std::string suite;
  bool all = false;
  unsigned threads = 1;
};

ordered_json big(const la::BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

ordered_json matrix_json(const la::IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(big(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix(const la::IntMatrix& m, const std::string& indent) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::cout << indent;
    for (std::size_t c = 0; c < m.cols(); ++c) std::cout << (c ? " " : "") << m(r, c);
    std::cout << "\n";
  }
}

ordered_json simples_json(const rep::ModularAlgebra& a) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < a.simples().size(); ++i)
    out.push_back({{"dim", a.simples().dim(i)}, {"endo", a.simples().endo_dim(i)}});
  return out;
}

void require_point(const Options& o) {
  if (o.group.empty() || o.coeff.empty()) throw InvalidArgument("--group and --coeff are required");
}

int cmd_describe(const Options& o) {
  require_point(o);
  const auto g = grp::parse_group_spec(o.group);
  const auto ring = la::parse_coeff_spec(o.coeff);
  const auto a = rep::ModularAlgebra::get(g, ring.p(), o.seed);
  std::vector<std::size_t> ranks = a->pim_dims();
  if (!ring.is_field()) {
    ranks.clear();
    for (const auto& p : ar::chain_pims(g, ring, o.seed)) ranks.push_back(p.module.rank());
  }
  const alg::GroupAlgebra ga(g, ring);
  const auto rad = ring.is_field() ? alg::radical(ga, o.seed) : alg::radical_chain(ga, o.seed);
  if (o.json) {
    ordered_json j{{"group", o.group},
                   {"coeff", ring.to_string()},
                   {"order", g->order()},
                   {"generators", g->generators().size()},
                   {"simples", simples_json(*a)},
                   {"pims", ranks},
                   {"radical_length", rad.length()}};
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << o.group << " (order " << g->order() << ") over " << ring.to_string() << "\n";
  std::cout << "simple modules over F" << ring.p() << ":\n";
  for (std::size_t i = 0; i < a->simples().size(); ++i)
    std::cout << "  S" << i + 1 << "  dim " << a->simples().dim(i) << "  endo " << a->simples().endo_dim(i) << "\n";
  std::cout << (ring.is_field() ? "PIM dimensions:" : "PIM ranks:");
  for (auto d : ranks) std::cout << " " << d;
  std::cout << "\nradical length: " << rad.length() << "\n";
  return 0;
}

int cmd_cartan(const Options& o) {
  require_point(o);
  const auto g = grp::parse_group_spec(o.group);
  const auto ring = la::parse_coeff_spec(o.coeff);
  const auto a = rep::ModularAlgebra::get(g, ring.p(), o.seed);
  la::IntMatrix m;
  la::BigInt det;
  std::optional<bool> scaling;
  if (ring.is_field()) {
    m = gk::cartan_matrix(g, ring.p(), o.seed).matrix;
    det = la::determinant(m);
  } else {
    auto cc = ar::cartan_chain(g, ring, o.seed);
    m = cc.chain.matrix;
    det = cc.det_chain;
    scaling = cc.scaling_ok;
  }
  if (o.json) {
    ordered_json j{{"group", o.group}, {"coeff", ring.to_string()}, {"simples", simples_json(*a)},
                   {"cartan", matrix_json(m)}, {"det", big(det)}, {"injective", det != 0}};
    if (scaling) j["scaling_ok"] = *scaling;
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << "Cartan matrix of " << ring.to_string() << "[" << o.group << "]:\n";
  print_matrix(m, "  ");
  std::cout << "det " << det << ", " << (det != 0 ? "injective" : "not injective") << "\n";
  if (scaling) std::cout << "scaling law " << (*scaling ? "holds" : "FAILS") << "\n";
  return 0;
}

int cmd_chop(const Options& o) {
  if (o.module.empty()) throw InvalidArgument("--module is required");
  const auto file = rep::read_module_file(o.module);
  const auto ring = la::parse_coeff_spec(file.coeff);
  rep::CompositionMultiset c;
  std::shared_ptr<const rep::ModularAlgebra> a;
  if (ring.is_field()) {
    const auto m = rep::module_from_file(file);
    a = rep::ModularAlgebra::get(m.group(), ring.p(), o.seed);
    c = a->chop(m);
  } else {
    const auto m = ar::chain_module_from_file(file);
    a = rep::ModularAlgebra::get(m.group(), ring.p(), o.seed);
    c = ar::chain_composition(m, o.seed);
  }
  if (o.json) {
    std::cout << ordered_json{{"group", file.group}, {"coeff", ring.to_string()}, {"dim", file.dim},
                              {"simples", simples_json(*a)}, {"multiplicities", c}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "composition factors of a " << file.dim << "-dimensional module over " << ring.to_string() << "[" << file.group
            << "]:\n";
  for (std::size_t i = 0; i < c.size(); ++i)
    std::cout << "  S" << i + 1 << " (dim " << a->simples().dim(i) << ") x " << c[i] << "\n";
  return 0;
}

int cmd_projtest(const Options& o) {
  if (o.module.empty()) throw InvalidArgument("--module is required");
  const auto m = rep::load_module(o.module);
  const auto p = m.field().p();
  const bool full = rep::is_projective(m, o.seed);
  const auto s = grp::sylow_subgroup(m.group(), p);
  const bool sylow = rep::is_projective(rep::restrict(m, s), o.seed);
  std::vector<std::pair<std::string, bool>> elem;
  for (const auto& e : grp::elementary_abelian_subgroups(m.group(), p)) {
    if (!e.maximal) continue;
    std::string name = "{";
    for (std::size_t i = 0; i < e.subgroup.elements().size(); ++i)
      name += (i ? "," : "") + m.group()->name(e.subgroup.elements()[i]);
    elem.emplace_back(name + "}", rep::is_projective(rep::restrict(m, e.subgroup), o.seed));
  }
  bool all_elem = true;
  for (const auto& [_, v] : elem) all_elem = all_elem && v;
  const bool agree = full == sylow && sylow == all_elem;
  if (o.json) {
    ordered_json ej = ordered_json::array();
    for (const auto& [n, v] : elem) ej.push_back({{"subgroup", n}, {"projective", v}});
    std::cout << ordered_json{{"dim", m.dim()}, {"projective", full}, {"sylow", sylow}, {"elementary_abelian", ej},
                              {"agree", agree}}
                     .dump()
              << "\n";
  } else {
    std::cout << "restriction                 projective\n";
    std::cout << "  whole group               " << (full ? "yes" : "no") << "\n";
    std::cout << "  Sylow " << p << "-subgroup" << std::string(p < 10 ? 12 : 11, ' ') << (sylow ? "yes" : "no") << "\n";
    for (const auto& [n, v] : elem) std::cout << "  " << n << std::string(n.size() < 24 ? 26 - n.size() : 2, ' ') << (v ? "yes" : "no") << "\n";
    std::cout << (agree ? "verdicts agree\n" : "verdicts DISAGREE\n");
  }
  return agree ? 0 : kExitFail;
}

int cmd_artin(const Options& o) {
  require_point(o);
  const auto g = grp::parse_group_spec(o.group);
  const auto ring = la::parse_coeff_spec(o.coeff);
  if (!ring.is_field()) throw InvalidArgument("artin needs field coefficients");
  const auto r = gk::artin_exponent_check(g, ring.p(), o.seed);
  const bool ok = r.finite && r.bound_ok && r.invariant;
  if (o.json) {
    ordered_json inv = ordered_json::array();
    for (const auto& d : r.invariants) inv.push_back(big(d));
    std::cout << ordered_json{{"group", o.group}, {"coeff", ring.to_string()}, {"invariants", inv},
                              {"free_rank", r.free_rank}, {"exponent", big(r.exponent)}, {"finite", r.finite},
                              {"bound_ok", r.bound_ok}, {"invariant", r.invariant}}
                     .dump()
              << "\n";
  } else {
    std::cout << "cyclic subgroup classes: " << r.classes << " (of " << r.subgroups << " cyclic subgroups)\n";
    std::cout << "cokernel " << (r.finite ? "finite" : "INFINITE") << ", exponent " << r.exponent << ", divides |G|^2: "
              << (r.bound_ok ? "yes" : "no") << "\n";
    std::cout << "image unchanged by conjugates: " << (r.invariant ? "yes" : "no") << "\n";
  }
  return ok ? 0 : kExitFail;
}

int cmd_verify(const Options& o) {
  if (o.all == !o.suite.empty()) throw InvalidArgument("give exactly one of --suite and --all");
  if (!o.suite.empty() && !verify::is_suite(o.suite)) throw UnknownSuite("unknown suite '" + o.suite + "'");
  if (o.group.empty() != o.coeff.empty()) throw InvalidArgument("--group and --coeff go together");
  verify::CorpusConfig config;
  if (!o.group.empty()) {
    config.points.push_back({o.group, o.coeff});
  } else if (!o.corpus.empty()) {
    config = verify::load_corpus_config(o.corpus);
  } else {
    config = verify::default_corpus();
  }
  if (!o.suite.empty()) config.suites = {o.suite};
  // Parse every point up front so bad specs are usage errors.
  for (const auto& pt : config.points) {
    grp::parse_group_spec(pt.group);
    la::parse_coeff_spec(pt.coeff);
  }
  const auto reports = verify::run_corpus(config, o.seed, o.threads);
  bool failed = false, errored = false;
  for (const auto& r : reports) {
    failed = failed || r.failed();
    errored = errored || r.errored();
  }
  if (o.json) {
    std::cout << (reports.size() == 1 ? verify::to_json(reports.front(), o.stable) : verify::to_json(reports, o.stable))
              << "\n";
  } else {
    std::size_t pass = 0, fail = 0, err = 0, skip = 0;
    for (const auto& r : reports) {
      const auto s = r.status();
      if (s == "pass") ++pass;
      else if (s == "fail") ++fail;
      else if (s == "error") ++err;
      else ++skip;
      if (s != "skipped" || reports.size() == 1) std::cout << verify::to_table(r);
    }
    std::cout << reports.size() << " suite runs: " << pass << " pass, " << fail << " fail, " << err << " error, " << skip
              << " skipped\n";
  }
  if (failed) return kExitFail;
  return errored ? kExitComputation : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cartan matrices and projectivity checks for modular group algebras"};
  app.require_subcommand(1);
  Options o;
  auto point = [&](CLI::App* c) {
    c->add_option("--group", o.group, "group spec: C<n>, D<n>, Q8, S<n>, A4, products AxB, table:<file>");
    c->add_option("--coeff", o.coeff, "coefficients: F<p>, Z/<p>^<n>, F<p>[t]/t^<m>");
  };
  auto common = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "random seed")->default_val(1);
    c->add_flag("--json", o.json, "machine-readable output");
  };
  auto* describe = app.add_subcommand("describe", "simple modules, PIMs and radical");
  point(describe);
  common(describe);
  auto* cartan = app.add_subcommand("cartan", "Cartan matrix, determinant and injectivity");
  point(cartan);
  common(cartan);
  auto* chop = app.add_subcommand("chop", "composition factors of a module file");
  chop->add_option("--module", o.module, "module JSON file")->required();
  common(chop);
  auto* projtest = app.add_subcommand("projtest", "projectivity on the whole group, Sylow and elementary abelians");
  projtest->add_option("--module", o.module, "module JSON file")->required();
  common(projtest);
  auto* artin = app.add_subcommand("artin", "cokernel of induction from cyclic subgroups");
  point(artin);
  common(artin);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  point(verify);
  common(verify);
  verify->add_option("--suite", o.suite, "suite name");
  verify->add_flag("--all", o.all, "every suite");
  verify->add_option("--corpus", o.corpus, "corpus config JSON");
  verify->add_flag("--stable", o.stable, "omit timing fields");
  verify->add_option("--threads", o.threads, "worker threads")->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*describe) return cmd_describe(o);
    if (*cartan) return cmd_cartan(o);
    if (*chop) return cmd_chop(o);
    if (*projtest) return cmd_projtest(o);
    if (*artin) return cmd_artin(o);
    return cmd_verify(o);
  } catch (const Error& e) {
    std::cerr << "modcartan: " << e.code() << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::Usage ? kExitUsage : kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "modcartan: internal error: " << e.what() << "\n";
    return kExitComputation;
  }
}
