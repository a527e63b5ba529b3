// Command-line front end for the generalized shift derivation toolkit.
//
// Exit codes: 0 pass, 1 property fails, 2 parse error, 3 semantic error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "genshift/derivcheck.hpp"
#include "genshift/json_io.hpp"
#include "genshift/structure.hpp"
#include "genshift/verify.hpp"

using namespace genshift;
using io::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;

/// Flavor/arity mismatches and other semantic misuse of a command.
struct UsageError : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct Globals {
  std::string output = "text";
  std::optional<double> tolerance;

  bool json_out() const { return output == "json"; }
  double tol() const { return tolerance.value_or(kDefaultTolerance); }
  CheckOptions check_options() const {
    CheckOptions o;
    o.tolerance = tol();
    return o;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string p_label(const PExponent& p) { return p.is_infinite() ? "inf" : num(p.value()); }

IndexMap load_map(const std::string& path) { return io::parse_index_map(io::read_json_file(path)); }
LinOp load_op(const std::string& path) { return io::parse_linop(io::read_json_file(path)); }

void print_check(const std::string& flavor, const CheckResult& c, const Globals& g) {
  if (g.json_out()) {
    json j = io::to_json(c);
    j["flavor"] = flavor;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "flavor: " << flavor << "\n";
  std::cout << "holds: " << (c.holds ? "yes" : "no") << "\n";
  if (c.witness) {
    const Witness& w = *c.witness;
    std::cout << "witness (" << (w.from_basis ? "basis" : "random") << " inputs";
    if (w.level) std::cout << ", level " << *w.level;
    std::cout << "):\n";
    for (std::size_t i = 0; i < w.inputs.size(); ++i)
      std::cout << "  input " << i << ": " << io::to_json(w.inputs[i]).dump() << "\n";
    std::cout << "  lhs: " << io::to_json(w.lhs).dump() << "\n";
    std::cout << "  rhs: " << io::to_json(w.rhs).dump() << "\n";
    std::cout << "  deviation: " << num(w.deviation) << "\n";
  }
}

int cmd_analyze(const std::string& phi_path, const std::vector<std::string>& p_texts,
                const Globals& g) {
  const IndexMap phi = load_map(phi_path);
  std::vector<PExponent> ps;
  for (const auto& t : p_texts) ps.push_back(io::parse_p(t));
  const FiberReport f = fibers(phi);

  if (g.json_out()) {
    json norms = json::array();
    for (const auto& p : ps)
      norms.push_back({{"p", io::to_json(p)}, {"norm", shift_operator_norm(phi, p)}});
    std::cout << json{{"map", io::to_json(phi)}, {"fibers", io::to_json(f)}, {"norms", norms}}.dump(2)
              << "\n";
    return kExitPass;
  }
  std::cout << "n: " << phi.size() << "\n";
  std::cout << "map: " << json(phi.image()).dump() << "\n";
  std::cout << "fiber sizes: " << json(f.sizes).dump() << "\n";
  std::cout << "bound N: " << f.bound << "\n";
  std::cout << "empty fibers: " << json(f.empty_fibers).dump() << "\n";
  std::cout << "surjective: " << (f.surjective() ? "yes" : "no") << "\n";
  std::cout << "injective: " << (f.injective() ? "yes" : "no") << "\n";
  for (const auto& p : ps)
    std::cout << "norm p=" << p_label(p) << ": " << num(shift_operator_norm(phi, p)) << "\n";
  return kExitPass;
}

struct CheckArgs {
  std::string flavor;
  std::string d, psi, lambda, D, ds;
};

int cmd_check(const CheckArgs& a, const Globals& g) {
  const std::map<std::string, std::vector<std::string>> arity = {
      {"derivation", {"d"}},
      {"jordan", {"d"}},
      {"jordan-triple", {"d"}},
      {"psi", {"d", "psi"}},
      {"psi-lambda", {"d", "psi", "lambda"}},
      {"generalized", {"D", "d"}},
      {"generalized-jordan", {"D", "d"}},
      {"generalized-jordan-triple", {"D", "d"}},
      {"higher", {"ds"}},
      {"higher-jordan", {"ds"}},
      {"higher-jordan-triple", {"ds"}},
  };
  const auto it = arity.find(a.flavor);
  if (it == arity.end()) throw UsageError("unknown flavor \"" + a.flavor + "\"");

  const std::map<std::string, const std::string*> given = {
      {"d", &a.d}, {"psi", &a.psi}, {"lambda", &a.lambda}, {"D", &a.D}, {"ds", &a.ds}};
  for (const auto& [name, value] : given) {
    const bool needed = std::find(it->second.begin(), it->second.end(), name) != it->second.end();
    if (needed && value->empty())
      throw UsageError("flavor " + a.flavor + " needs --" + name);
    if (!needed && !value->empty())
      throw UsageError("flavor " + a.flavor + " does not take --" + name);
  }

  const CheckOptions opts = g.check_options();
  CheckResult r;
  const std::string& f = a.flavor;
  if (f == "derivation") {
    r = is_derivation(load_op(a.d), opts);
  } else if (f == "jordan") {
    r = is_jordan_derivation(load_op(a.d), opts);
  } else if (f == "jordan-triple") {
    r = is_jordan_triple_derivation(load_op(a.d), opts);
  } else if (f == "psi") {
    r = is_psi_derivation(load_op(a.d), load_op(a.psi), opts);
  } else if (f == "psi-lambda") {
    r = is_psi_lambda_derivation(load_op(a.d), load_op(a.psi), load_op(a.lambda), opts);
  } else if (f == "generalized") {
    r = is_generalized_derivation(load_op(a.D), load_op(a.d), opts);
  } else if (f == "generalized-jordan") {
    r = is_generalized_jordan_derivation(load_op(a.D), load_op(a.d), opts);
  } else if (f == "generalized-jordan-triple") {
    r = is_generalized_jordan_triple_derivation(load_op(a.D), load_op(a.d), opts);
  } else {
    const auto ops = io::parse_linop_list(io::read_json_file(a.ds));
    const DerivationFlavor hf = f == "higher"          ? DerivationFlavor::plain
                                : f == "higher-jordan" ? DerivationFlavor::jordan
                                                       : DerivationFlavor::jordan_triple;
    r = is_higher_derivation(ops, hf, opts);
  }
  print_check(f, r, g);
  return r.holds ? kExitPass : kExitFail;
}

int cmd_synth(const std::string& phi_path, const std::string& r_path, const Globals& g) {
  const IndexMap phi = load_map(phi_path);
  const Vec r = io::parse_vector(io::read_json_file(r_path));
  const auto [psi, lambda] = synthesize_pair(phi, r);
  const CheckResult c = is_psi_lambda_derivation(LinOp::shift(phi), psi, lambda, g.check_options());
  if (g.json_out()) {
    std::cout << json{{"psi", io::to_json(psi)}, {"lambda", io::to_json(lambda)}, {"check", io::to_json(c)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "psi: " << io::to_json(psi).dump() << "\n";
    std::cout << "lambda: " << io::to_json(lambda).dump() << "\n";
    std::cout << "shift is a (psi,lambda)-derivation: " << (c.holds ? "yes" : "no") << "\n";
  }
  return c.holds ? kExitPass : kExitFail;
}

int cmd_classify(const std::string& phi_path, const std::string& psi_path,
                 const std::string& lambda_path, const Globals& g) {
  const IndexMap phi = load_map(phi_path);
  const Classification c = classify_psi_lambda(phi, load_op(psi_path), load_op(lambda_path), g.tol());
  if (g.json_out()) {
    std::cout << io::to_json(c).dump(2) << "\n";
  } else if (c.accepted) {
    std::cout << "accept: r = " << io::to_json(c.r).dump() << "\n";
  } else {
    const auto& w = *c.witness;
    std::cout << "reject: " << w.op << " entry (" << w.row << "," << w.col << ") is "
              << io::to_json(w.actual).dump() << ", multiplier shape requires "
              << io::to_json(w.expected).dump() << "\n";
  }
  return c.accepted ? kExitPass : kExitFail;
}

DerivationFlavor parse_flavor(const std::string& s) {
  if (s == "plain") return DerivationFlavor::plain;
  if (s == "jordan") return DerivationFlavor::jordan;
  if (s == "jordan-triple") return DerivationFlavor::jordan_triple;
  throw UsageError("unknown flavor \"" + s + "\"");
}

void print_solve(const SolveReport& s, const std::string& label) {
  std::cout << label;
  if (s.dimension) std::cout << " dimension " << *s.dimension;
  if (s.feasible) std::cout << (*s.feasible ? " feasible" : " infeasible");
  std::cout << ", residual " << num(s.residual) << "\n";
  for (const auto& b : s.basis) std::cout << "  basis: " << io::to_json(b).dump() << "\n";
  if (s.solution) std::cout << "  solution: " << io::to_json(*s.solution).dump() << "\n";
}

struct SolveArgs {
  std::string mode, phi, psi, lambda, flavor = "plain";
  Index depth = 3;
};

int cmd_solve(const SolveArgs& a, const Globals& g) {
  if (a.mode == "twisted") {
    LinOp psi = LinOp::zero(1), lambda = LinOp::zero(1);
    if (!a.psi.empty() || !a.lambda.empty()) {
      if (a.psi.empty() || a.lambda.empty()) throw UsageError("twisted mode needs both --psi and --lambda");
      psi = load_op(a.psi);
      lambda = load_op(a.lambda);
    } else if (!a.phi.empty()) {
      psi = lambda = LinOp::shift(load_map(a.phi));
    } else {
      throw UsageError("twisted mode needs --phi or --psi/--lambda");
    }
    const SolveReport s = twisted_derivation_space(psi, lambda);
    if (g.json_out())
      std::cout << io::to_json(s).dump(2) << "\n";
    else
      print_solve(s, "twisted derivation space:");
    return kExitPass;
  }
  if (a.phi.empty()) throw UsageError(a.mode + " mode needs --phi");
  const IndexMap phi = load_map(a.phi);
  const DerivationFlavor flavor = parse_flavor(a.flavor);
  if (a.mode == "generalized") {
    const SolveReport s = generalized_derivation_feasible(phi, flavor);
    if (g.json_out())
      std::cout << io::to_json(s).dump(2) << "\n";
    else
      print_solve(s, "generalized " + a.flavor + " derivation:");
    return kExitPass;
  }
  if (a.mode == "higher") {
    const auto levels = higher_derivation_tail_space(phi, a.depth, flavor);
    if (g.json_out()) {
      json arr = json::array();
      for (const auto& s : levels) arr.push_back(io::to_json(s));
      std::cout << json{{"levels", arr}}.dump(2) << "\n";
    } else {
      for (std::size_t k = 0; k < levels.size(); ++k)
        print_solve(levels[k], "level " + std::to_string(k + 1) + ":");
    }
    return kExitPass;
  }
  throw UsageError("unknown mode \"" + a.mode + "\"");
}

int cmd_verify(Index n_max, std::uint64_t seed, const Globals& g) {
  if (const char* env = std::getenv("GENSHIFT_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      seed = std::stoull(env, &used);
      if (used != std::strlen(env)) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("GENSHIFT_SEED is not an unsigned integer: ") + env);
    }
  }
  VerifyConfig cfg;
  cfg.n_max = n_max;
  cfg.seed = seed;
  const VerifyReport rep = run_verification(cfg);
  if (g.json_out())
    std::cout << to_json(rep).dump(2) << "\n";
  else
    std::cout << format_text(rep);
  return rep.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized shift operators on pointwise sequence algebras: derivation checks, "
               "multiplier synthesis and constraint solvers"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--output", g.output, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tolerance", g.tolerance, "Equality tolerance (default 1e-9)")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;

  auto* analyze = app.add_subcommand("analyze", "Fiber structure and operator norms of sigma_phi");
  std::string a_phi;
  std::vector<std::string> a_p{"1", "2", "inf"};
  analyze->add_option("--phi", a_phi, "Index map JSON file")->required();
  analyze->add_option("--p", a_p, "Exponents, e.g. 1,2,inf")->delimiter(',');
  analyze->callback([&] { action = [&] { return cmd_analyze(a_phi, a_p, g); }; });

  auto* check = app.add_subcommand("check", "Decide a derivation identity for given operators");
  CheckArgs c;
  check->add_option("--flavor", c.flavor,
                    "derivation | jordan | jordan-triple | psi | psi-lambda | generalized | "
                    "generalized-jordan | generalized-jordan-triple | higher | higher-jordan | "
                    "higher-jordan-triple")
      ->required();
  check->add_option("--d", c.d, "Operator d (JSON)");
  check->add_option("--psi", c.psi, "Operator psi (JSON)");
  check->add_option("--lambda", c.lambda, "Operator lambda (JSON)");
  check->add_option("--D", c.D, "Operator D of a generalized derivation (JSON)");
  check->add_option("--ds", c.ds, "JSON array of operators d_0, d_1, ... for higher flavors");
  check->callback([&] { action = [&] { return cmd_check(c, g); }; });

  auto* synth = app.add_subcommand("synth", "Build psi = r.sigma_phi and lambda = (1-r).sigma_phi");
  std::string s_phi, s_r;
  synth->add_option("--phi", s_phi, "Index map JSON file")->required();
  synth->add_option("--r", s_r, "Multiplier vector JSON file")->required();
  synth->callback([&] { action = [&] { return cmd_synth(s_phi, s_r, g); }; });

  auto* classify = app.add_subcommand("classify", "Test (psi, lambda) against the multiplier shape");
  std::string k_phi, k_psi, k_lambda;
  classify->add_option("--phi", k_phi, "Index map JSON file")->required();
  classify->add_option("--psi", k_psi, "Operator psi (JSON)")->required();
  classify->add_option("--lambda", k_lambda, "Operator lambda (JSON)")->required();
  classify->callback([&] { action = [&] { return cmd_classify(k_phi, k_psi, k_lambda, g); }; });

  auto* solve = app.add_subcommand("solve", "Solution spaces of derivation constraint systems");
  SolveArgs sa;
  solve->add_option("--mode", sa.mode, "twisted | generalized | higher")
      ->required()
      ->check(CLI::IsMember({"twisted", "generalized", "higher"}));
  solve->add_option("--phi", sa.phi, "Index map JSON file");
  solve->add_option("--psi", sa.psi, "Operator psi for twisted mode (JSON)");
  solve->add_option("--lambda", sa.lambda, "Operator lambda for twisted mode (JSON)");
  solve->add_option("--flavor", sa.flavor, "plain | jordan | jordan-triple");
  solve->add_option("--depth", sa.depth, "Number of higher levels")->check(CLI::PositiveNumber);
  solve->callback([&] { action = [&] { return cmd_solve(sa, g); }; });

  auto* verify = app.add_subcommand("verify", "Run the property suite over enumerated maps");
  Index n_max = 4;
  std::uint64_t seed = 0;
  verify->add_option("--n-max", n_max, "Largest index set size")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Random seed (GENSHIFT_SEED overrides)");
  verify->callback([&] { action = [&] { return cmd_verify(n_max, seed, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
}
