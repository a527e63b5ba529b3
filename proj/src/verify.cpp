#include "genshift/verify.hpp"

#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "genshift/derivcheck.hpp"
#include "genshift/structure.hpp"

namespace genshift {

bool PropertyOutcome::passed() const {
  for (const auto& c : cells)
    if (c.failures != 0) return false;
  return true;
}

bool VerifyReport::passed() const {
  for (const auto& p : properties)
    if (!p.passed()) return false;
  return true;
}

namespace {

constexpr double kTol = kDefaultTolerance;

std::mt19937_64 stream(std::uint64_t seed, std::uint32_t tag, Index n, std::size_t ordinal) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), tag,
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(ordinal)};
  return std::mt19937_64(seq);
}

Vec random_vector(Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = Complex(u(rng), u(rng));
  return v;
}

Mat random_matrix(Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) m(i, k) = Complex(u(rng), u(rng));
  return m;
}

std::string describe(const IndexMap& phi) {
  std::string s = "phi=[";
  for (std::size_t i = 0; i < phi.image().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(phi.image()[i]);
  }
  return s + "]";
}

// Outcome of one property on one map: number of cases and failures.
struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string note;

  void record(bool ok, const std::string& what = {}) {
    ++cases;
    if (!ok) {
      if (failures == 0) note = what;
      ++failures;
    }
  }
};

using MapProperty = std::function<Tally(const IndexMap&, std::mt19937_64&)>;

struct PropertyDef {
  std::string key;
  std::string statement;
  std::uint32_t tag;
  MapProperty run;
};

Tally multiplier_round_trip(const IndexMap& phi, std::mt19937_64& rng) {
  Tally t;
  const LinOp sigma = LinOp::shift(phi);
  for (int i = 0; i < 16; ++i) {
    const Vec r = random_vector(phi.size(), rng);
    const auto [psi, lambda] = synthesize_pair(phi, r);
    const CheckResult c = is_psi_lambda_derivation(sigma, psi, lambda);
    const Classification cls = classify_psi_lambda(phi, psi, lambda);
    const bool ok = c.holds && c.max_deviation <= kTol && cls.accepted &&
                    (cls.r - r).cwiseAbs().maxCoeff() <= kTol;
    t.record(ok, "random multiplier #" + std::to_string(i));
  }
  return t;
}

Tally half_shift_uniqueness(const IndexMap& phi, std::mt19937_64& rng) {
  Tally t;
  const Index n = phi.size();
  const LinOp sigma = LinOp::shift(phi);
  const Mat half = 0.5 * sigma.matrix();
  t.record(is_psi_derivation(sigma, LinOp::dense(half)).holds, "half shift rejected");
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) {
      Mat p = half;
      p(i, k) += 1e-3;
      t.record(!is_psi_derivation(sigma, LinOp::dense(p)).holds,
               "perturbation at (" + std::to_string(i) + "," + std::to_string(k) + ") accepted");
    }
  for (int j = 0; j < 8; ++j) {
    const Mat p = random_matrix(n, rng);
    const bool coincides = p.isApprox(half, kTol);
    t.record(is_psi_derivation(sigma, LinOp::dense(p)).holds == coincides,
             "random psi #" + std::to_string(j));
  }
  return t;
}

// Mixed sample of (psi, lambda): random, synthesized, perturbed, mismatched.
std::pair<LinOp, LinOp> sample_pair(const IndexMap& phi, int kind, std::mt19937_64& rng) {
  const Index n = phi.size();
  switch (kind % 4) {
    case 0:
      return {LinOp::dense(random_matrix(n, rng)), LinOp::dense(random_matrix(n, rng))};
    case 1: {
      auto [psi, lambda] = synthesize_pair(phi, random_vector(n, rng));
      return {psi, lambda};
    }
    case 2: {
      auto [psi, lambda] = synthesize_pair(phi, random_vector(n, rng));
      Mat m = lambda.matrix();
      std::uniform_int_distribution<Index> pick(0, n - 1);
      const Index i = pick(rng);
      const Index k = pick(rng);
      m(i, k) += 1e-3;
      return {psi, LinOp::dense(m)};
    }
    default: {
      auto a = synthesize_pair(phi, random_vector(n, rng));
      auto b = synthesize_pair(phi, random_vector(n, rng));
      return {a.psi, b.lambda};
    }
  }
}

Tally characterization_agreement(const IndexMap& phi, std::mt19937_64& rng) {
  Tally t;
  const LinOp sigma = LinOp::shift(phi);
  for (int i = 0; i < 32; ++i) {
    const auto [psi, lambda] = sample_pair(phi, i, rng);
    const bool by_identity = is_psi_lambda_derivation(sigma, psi, lambda).holds;
    const bool by_shape = classify_psi_lambda(phi, psi, lambda).accepted;
    t.record(by_identity == by_shape, "pair #" + std::to_string(i) + " verdicts disagree");
  }
  return t;
}

Tally no_jordan_derivation(const IndexMap& phi, std::mt19937_64&) {
  Tally t;
  const LinOp sigma = LinOp::shift(phi);
  const CheckResult plain = is_derivation(sigma);
  const CheckResult jordan = is_jordan_derivation(sigma);
  const CheckResult triple = is_jordan_triple_derivation(sigma);
  t.record(!plain.holds && plain.witness.has_value(), "shift passed the derivation check");
  t.record(!jordan.holds && jordan.witness.has_value(), "shift passed the Jordan check");
  t.record(!triple.holds && triple.witness.has_value(), "shift passed the Jordan triple check");
  return t;
}

Tally twisted_forced_zero(const IndexMap& phi, std::mt19937_64&) {
  Tally t;
  const LinOp sigma = LinOp::shift(phi);
  const SolveReport rep = twisted_derivation_space(sigma, sigma);
  t.record(rep.dimension == 0 && rep.basis.empty(),
           "solution space has dimension " + std::to_string(rep.dimension.value_or(-1)));
  return t;
}

Tally generalized_iff_identity(const IndexMap& phi, std::mt19937_64&) {
  Tally t;
  const DerivationFlavor flavors[] = {DerivationFlavor::plain, DerivationFlavor::jordan,
                                      DerivationFlavor::jordan_triple};
  const char* names[] = {"plain", "jordan", "jordan_triple"};
  for (int f = 0; f < 3; ++f) {
    const SolveReport rep = generalized_derivation_feasible(phi, flavors[f]);
    bool ok = rep.feasible == phi.is_identity();
    if (ok && phi.is_identity())
      ok = rep.solution && rep.solution->matrix().cwiseAbs().maxCoeff() <= kTol;
    t.record(ok, std::string(names[f]) + " flavor");
  }
  return t;
}

Tally higher_tails_vanish(const IndexMap& phi, std::mt19937_64&) {
  Tally t;
  const DerivationFlavor flavors[] = {DerivationFlavor::plain, DerivationFlavor::jordan,
                                      DerivationFlavor::jordan_triple};
  const char* names[] = {"plain", "jordan", "jordan_triple"};
  for (int f = 0; f < 3; ++f) {
    const auto levels = higher_derivation_tail_space(phi, 3, flavors[f]);
    bool ok = levels.size() == 3;
    for (const auto& lvl : levels)
      ok = ok && lvl.dimension == 0 && lvl.solution &&
           lvl.solution->matrix().cwiseAbs().maxCoeff() <= kTol;
    t.record(ok, std::string(names[f]) + " flavor");
  }
  return t;
}

Tally shift_norm_formula(const IndexMap& phi, std::mt19937_64& rng) {
  Tally t;
  const Index n = phi.size();
  const Index bound = fibers(phi).bound;
  const PExponent ps[] = {PExponent::finite(1), PExponent::finite(2), PExponent::finite(3),
                          PExponent::infinity()};
  std::vector<Vec> probes;
  for (Index b = 0; b < n; ++b) probes.push_back(basis_vector(b, n));
  for (int i = 0; i < 64; ++i) probes.push_back(random_vector(n, rng));
  for (const auto& p : ps) {
    const double norm = shift_operator_norm(phi, p);
    const double formula = p.is_infinite() ? 1.0 : std::pow(double(bound), 1.0 / p.value());
    double best = 0.0;
    for (const auto& x : probes) best = std::max(best, pnorm(apply_shift(phi, x), p) / pnorm(x, p));
    t.record(std::abs(norm - formula) <= kTol && best >= norm - 1e-6 && best <= norm + kTol,
             "operator norm mismatch");
  }
  return t;
}

std::vector<PropertyDef> map_properties() {
  return {
      {"multiplier-round-trip",
       "sigma_phi is a (psi,lambda)-derivation for psi=r.sigma_phi, lambda=(1-r).sigma_phi, and r is "
       "recovered",
       1, multiplier_round_trip},
      {"half-shift-uniqueness", "sigma_phi is a psi-derivation only for psi = sigma_phi/2", 2,
       half_shift_uniqueness},
      {"characterization-agreement",
       "multiplier-shape classification agrees with the (psi,lambda) identity check", 3,
       characterization_agreement},
      {"no-jordan-derivation", "sigma_phi is not a derivation, Jordan or Jordan triple derivation", 4,
       no_jordan_derivation},
      {"twisted-forced-zero", "every sigma_phi-derivation is zero", 5, twisted_forced_zero},
      {"generalized-iff-identity",
       "sigma_phi is a generalized (Jordan, Jordan triple) derivation iff phi = id", 6,
       generalized_iff_identity},
      {"higher-tails-vanish", "a higher derivation starting at sigma_phi has d_1 = d_2 = d_3 = 0", 7,
       higher_tails_vanish},
      {"shift-norm-formula", "||sigma_phi||_p = N^(1/p) with N the largest fiber", 8,
       shift_norm_formula},
  };
}

std::vector<IndexMap> maps_for_size(Index n, const VerifyConfig& cfg, bool& exhaustive) {
  exhaustive = n <= kExhaustiveVerifySize;
  if (exhaustive) return all_maps(n);
  std::set<IndexMap> picked{IndexMap::identity(n)};
  auto rng = stream(cfg.seed, 100, n, 0);
  for (Index i = 0; i < cfg.samples_per_size; ++i) picked.insert(random_map(n, rng));
  return {picked.begin(), picked.end()};
}

Tally submultiplicativity(Index n, const VerifyConfig& cfg) {
  Tally t;
  auto rng = stream(cfg.seed, 9, n, 0);
  const PExponent ps[] = {PExponent::finite(1), PExponent::finite(1.5), PExponent::finite(2),
                          PExponent::finite(3), PExponent::infinity()};
  for (int i = 0; i < 1000; ++i) {
    const Vec x = random_vector(n, rng);
    const Vec y = random_vector(n, rng);
    for (const auto& p : ps)
      t.record(pnorm(pointwise_mul(x, y), p) <= pnorm(x, p) * pnorm(y, p) + 1e-12,
               "pair #" + std::to_string(i));
  }
  return t;
}

}  // namespace

VerifyReport run_verification(const VerifyConfig& config) {
  if (config.n_max < 1) throw InvalidInput("n_max must be at least 1");
  if (config.n_max > kMaxVerifySize)
    throw InvalidInput("n_max is limited to " + std::to_string(kMaxVerifySize));

  VerifyReport rep;
  rep.config = config;
  const auto defs = map_properties();
  for (const auto& d : defs) rep.properties.push_back({d.key, d.statement, {}, {}});
  PropertyOutcome submult{"submultiplicativity", "||xy||_p <= ||x||_p ||y||_p for p in {1,1.5,2,3,inf}",
                          {}, {}};

  for (Index n = 1; n <= config.n_max; ++n) {
    bool exhaustive = false;
    const auto maps = maps_for_size(n, config, exhaustive);
    rep.sizes.push_back(n);
    rep.maps_per_size.push_back(maps.size());
    rep.exhaustive.push_back(exhaustive);

    for (std::size_t k = 0; k < defs.size(); ++k) {
      VerifyCell cell{n, 0, 0};
      auto& outcome = rep.properties[k];
      for (std::size_t m = 0; m < maps.size(); ++m) {
        auto rng = stream(config.seed, defs[k].tag, n, m);
        const Tally t = defs[k].run(maps[m], rng);
        cell.cases += t.cases;
        cell.failures += t.failures;
        if (t.failures && outcome.first_failure.empty())
          outcome.first_failure = describe(maps[m]) + ": " + t.note;
      }
      outcome.cells.push_back(cell);
    }

    const Tally s = submultiplicativity(n, config);
    submult.cells.push_back({n, s.cases, s.failures});
    if (s.failures && submult.first_failure.empty())
      submult.first_failure = "n=" + std::to_string(n) + ": " + s.note;
  }
  rep.properties.push_back(std::move(submult));
  return rep;
}

std::string format_text(const VerifyReport& report) {
  std::ostringstream out;
  out << "generalized shift verification: n_max=" << report.config.n_max
      << " seed=" << report.config.seed << "\n";
  out << "maps:";
  for (std::size_t i = 0; i < report.sizes.size(); ++i)
    out << " n=" << report.sizes[i] << ":" << report.maps_per_size[i]
        << (report.exhaustive[i] ? "(all)" : "(sampled)");
  out << "\n\n";

  char buf[64];
  std::snprintf(buf, sizeof buf, "%-28s", "property");
  out << buf;
  for (Index n : report.sizes) {
    std::snprintf(buf, sizeof buf, " %12s", ("n=" + std::to_string(n)).c_str());
    out << buf;
  }
  out << "  result\n";
  for (const auto& p : report.properties) {
    std::snprintf(buf, sizeof buf, "%-28s", p.key.c_str());
    out << buf;
    for (const auto& c : p.cells) {
      const std::string cell = std::to_string(c.cases - c.failures) + "/" + std::to_string(c.cases);
      std::snprintf(buf, sizeof buf, " %12s", cell.c_str());
      out << buf;
    }
    out << "  " << (p.passed() ? "PASS" : "FAIL") << "\n";
  }
  out << "\n";
  for (const auto& p : report.properties) {
    out << p.key << ": " << p.statement << "\n";
    if (!p.passed()) out << "  first failure: " << p.first_failure << "\n";
  }
  out << "\noverall: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

io::json to_json(const VerifyReport& report) {
  io::json props = io::json::array();
  for (const auto& p : report.properties) {
    io::json cells = io::json::array();
    for (const auto& c : p.cells)
      cells.push_back({{"n", c.n}, {"cases", c.cases}, {"failures", c.failures}});
    io::json e = {{"key", p.key}, {"statement", p.statement}, {"passed", p.passed()},
                  {"cells", cells}};
    if (!p.passed()) e["first_failure"] = p.first_failure;
    props.push_back(e);
  }
  io::json sizes = io::json::array();
  for (std::size_t i = 0; i < report.sizes.size(); ++i)
    sizes.push_back({{"n", report.sizes[i]},
                     {"maps", report.maps_per_size[i]},
                     {"exhaustive", static_cast<bool>(report.exhaustive[i])}});
  return {{"n_max", report.config.n_max},
          {"seed", report.config.seed},
          {"sizes", sizes},
          {"properties", props},
          {"passed", report.passed()}};
}

}  // namespace genshift
