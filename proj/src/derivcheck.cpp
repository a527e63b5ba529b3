#include "genshift/derivcheck.hpp"

#include <random>

namespace genshift {

namespace {

double max_abs(const Vec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

// Deviation of one evaluation, and whether it is within tolerance.
struct Eval {
  double deviation;
  bool ok;
};

Eval compare(const Sides& s, double tol) {
  const double dev = max_abs(s.lhs - s.rhs);
  const double scale = std::max(max_abs(s.lhs), max_abs(s.rhs));
  return {dev, dev <= tol * (1.0 + scale)};
}

Vec random_vector(Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = Complex(u(rng), u(rng));
  return v;
}

void require_sizes(std::initializer_list<const LinOp*> ops) {
  const Index n = (*ops.begin())->size();
  for (const LinOp* op : ops)
    if (op->size() != n) throw DimensionError("operators act on spaces of different dimension");
}

}  // namespace

CheckResult check_identity(const IdentityForms& forms, Index n, const CheckOptions& opts) {
  CheckResult result;
  for_each_basis_tuple(n, forms.polarized.arity, [&](std::span<const Vec> in, std::span<const Index>) {
    Sides s = forms.polarized.eval(in);
    const Eval e = compare(s, opts.tolerance);
    result.max_deviation = std::max(result.max_deviation, e.deviation);
    if (!e.ok && result.holds) {
      result.holds = false;
      result.witness = Witness{{in.begin(), in.end()}, std::move(s.lhs), std::move(s.rhs), e.deviation,
                               true, std::nullopt};
    }
  });
  if (!result.holds) return result;

  std::mt19937_64 rng(opts.seed);
  std::vector<Vec> in(static_cast<std::size_t>(forms.literal.arity));
  for (int t = 0; t < opts.random_trials; ++t) {
    for (auto& v : in) v = random_vector(n, rng);
    Sides s = forms.literal.eval(in);
    const Eval e = compare(s, opts.tolerance);
    result.max_deviation = std::max(result.max_deviation, e.deviation);
    if (!e.ok) {
      result.holds = false;
      result.witness = Witness{in, std::move(s.lhs), std::move(s.rhs), e.deviation, false, std::nullopt};
      return result;
    }
  }
  return result;
}

CheckResult is_psi_lambda_derivation(const LinOp& d, const LinOp& psi, const LinOp& lambda,
                                     const CheckOptions& opts) {
  require_sizes({&d, &psi, &lambda});
  return check_identity(identities::psi_lambda(d.matrix(), psi.matrix(), lambda.matrix()), d.size(),
                        opts);
}

CheckResult is_psi_derivation(const LinOp& d, const LinOp& psi, const CheckOptions& opts) {
  return is_psi_lambda_derivation(d, psi, psi, opts);
}

CheckResult is_derivation(const LinOp& d, const CheckOptions& opts) {
  const LinOp id = LinOp::identity(d.size());
  return is_psi_lambda_derivation(d, id, id, opts);
}

CheckResult is_jordan_derivation(const LinOp& d, const CheckOptions& opts) {
  const Mat m = d.matrix();
  return check_identity(identities::generalized_jordan(m, m), d.size(), opts);
}

CheckResult is_jordan_triple_derivation(const LinOp& d, const CheckOptions& opts) {
  const Mat m = d.matrix();
  return check_identity(identities::generalized_jordan_triple(m, m), d.size(), opts);
}

CheckResult is_generalized_derivation(const LinOp& D, const LinOp& d, const CheckOptions& opts) {
  require_sizes({&D, &d});
  if (!is_derivation(d, opts).holds) throw NotADerivation("auxiliary map d is not a derivation");
  return check_identity(identities::generalized(D.matrix(), d.matrix()), D.size(), opts);
}

CheckResult is_generalized_jordan_derivation(const LinOp& D, const LinOp& d,
                                             const CheckOptions& opts) {
  require_sizes({&D, &d});
  if (!is_derivation(d, opts).holds) throw NotADerivation("auxiliary map d is not a derivation");
  return check_identity(identities::generalized_jordan(D.matrix(), d.matrix()), D.size(), opts);
}

CheckResult is_generalized_jordan_triple_derivation(const LinOp& D, const LinOp& d,
                                                    const CheckOptions& opts) {
  require_sizes({&D, &d});
  if (!is_jordan_triple_derivation(d, opts).holds)
    throw NotADerivation("auxiliary map d is not a Jordan triple derivation");
  return check_identity(identities::generalized_jordan_triple(D.matrix(), d.matrix()), D.size(),
                        opts);
}

CheckResult is_higher_derivation(std::span<const LinOp> ds, DerivationFlavor flavor,
                                 const CheckOptions& opts) {
  if (ds.empty()) throw InvalidInput("higher derivation needs at least d_0");
  const Index n = ds.front().size();
  std::vector<Mat> mats;
  for (const auto& op : ds) {
    if (op.size() != n) throw DimensionError("operators act on spaces of different dimension");
    mats.push_back(op.matrix());
  }

  CheckResult total;
  for (Index k = 0; k < static_cast<Index>(mats.size()); ++k) {
    CheckResult r = check_identity(identities::higher(mats, flavor, k), n, opts);
    total.max_deviation = std::max(total.max_deviation, r.max_deviation);
    if (!r.holds) {
      r.witness->level = k;
      r.max_deviation = total.max_deviation;
      return r;
    }
  }
  return total;
}

}  // namespace genshift
