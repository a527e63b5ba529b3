#include "genshift/structure.hpp"

namespace genshift {

namespace {

void require_size(const LinOp& op, Index n) {
  if (op.size() != n) throw DimensionError("operator size does not match the index map");
}

std::vector<LinOp> basis_operators(const Mat& nullspace, Index n) {
  std::vector<LinOp> out;
  for (Index j = 0; j < nullspace.cols(); ++j)
    out.push_back(LinOp::dense(unknowns_to_matrix(nullspace.col(j), n)));
  return out;
}

}  // namespace

MultiplierPair synthesize_pair(const IndexMap& phi, const Vec& r) {
  if (r.size() != phi.size()) throw DimensionError("multiplier length differs from map size");
  return {LinOp::multiplier_shift(r, phi), LinOp::multiplier_shift(Vec::Ones(r.size()) - r, phi)};
}

Vec recover_r(const IndexMap& phi, const LinOp& psi) {
  const Index n = phi.size();
  require_size(psi, n);
  Vec r(n);
  for (Index alpha = 0; alpha < n; ++alpha)
    r(alpha) = coord(psi.apply(basis_vector(phi(alpha), n)), alpha);
  return r;
}

Classification classify_psi_lambda(const IndexMap& phi, const LinOp& psi, const LinOp& lambda,
                                   double tolerance) {
  const Index n = phi.size();
  require_size(psi, n);
  require_size(lambda, n);

  Classification out;
  out.r = recover_r(phi, psi);
  const MultiplierPair expected = synthesize_pair(phi, out.r);

  const std::pair<const char*, std::pair<Mat, Mat>> checks[] = {
      {"psi", {expected.psi.matrix(), psi.matrix()}},
      {"lambda", {expected.lambda.matrix(), lambda.matrix()}},
  };
  for (const auto& [name, mats] : checks) {
    const auto& [want, got] = mats;
    for (Index row = 0; row < n; ++row)
      for (Index col = 0; col < n; ++col)
        if (!approx_equal(want(row, col), got(row, col), tolerance)) {
          out.witness = EntryDeviation{name, row, col, want(row, col), got(row, col)};
          return out;
        }
  }
  out.accepted = true;
  return out;
}

ConstraintSystem twisted_constraints(const LinOp& psi, const LinOp& lambda) {
  const Index n = psi.size();
  require_size(lambda, n);
  const Mat p = psi.matrix();
  const Mat l = lambda.matrix();
  return linearize(n, [&](const Mat& d) {
    return stacked_basis_residual(identities::psi_lambda(d, p, l).polarized, n);
  });
}

SolveReport twisted_derivation_space(const LinOp& psi, const LinOp& lambda) {
  const ConstraintSystem sys = twisted_constraints(psi, lambda);
  const Elimination e = eliminate(sys);
  SolveReport rep;
  rep.dimension = e.nullspace.cols();
  rep.basis = basis_operators(e.nullspace, psi.size());
  rep.residual = e.residual;
  return rep;
}

SolveReport generalized_derivation_feasible(const IndexMap& phi, DerivationFlavor flavor) {
  const Index n = phi.size();
  const Mat shift = LinOp::shift(phi).matrix();
  const Mat id = Mat::Identity(n, n);

  std::function<Vec(const Mat&)> main_identity;
  std::function<Vec(const Mat&)> side_condition;
  switch (flavor) {
    case DerivationFlavor::plain:
      main_identity = [&](const Mat& d) {
        return stacked_basis_residual(identities::generalized(shift, d).polarized, n);
      };
      side_condition = [&](const Mat& d) {
        return stacked_basis_residual(identities::psi_lambda(d, id, id).polarized, n);
      };
      break;
    case DerivationFlavor::jordan:
      main_identity = [&](const Mat& d) {
        return stacked_basis_residual(identities::generalized_jordan(shift, d).polarized, n);
      };
      side_condition = [&](const Mat& d) {
        return stacked_basis_residual(identities::psi_lambda(d, id, id).polarized, n);
      };
      break;
    case DerivationFlavor::jordan_triple:
      main_identity = [&](const Mat& d) {
        return stacked_basis_residual(identities::generalized_jordan_triple(shift, d).polarized, n);
      };
      side_condition = [&](const Mat& d) {
        return stacked_basis_residual(identities::generalized_jordan_triple(d, d).polarized, n);
      };
      break;
  }

  const ConstraintSystem sys = stack({linearize(n, main_identity), linearize(n, side_condition)});
  const Elimination e = eliminate(sys);

  SolveReport rep;
  rep.feasible = e.consistent;
  rep.dimension = e.nullspace.cols();
  rep.basis = basis_operators(e.nullspace, n);
  if (e.consistent) rep.solution = LinOp::dense(unknowns_to_matrix(e.particular, n));
  rep.residual = e.residual;
  return rep;
}

std::vector<SolveReport> higher_derivation_tail_space(const IndexMap& phi, Index depth,
                                                      DerivationFlavor flavor) {
  if (depth < 1) throw InvalidInput("higher derivation depth must be at least 1");
  const Index n = phi.size();
  std::vector<Mat> ds{LinOp::shift(phi).matrix()};
  std::vector<SolveReport> levels;

  for (Index k = 1; k <= depth; ++k) {
    ds.push_back(Mat::Zero(n, n));
    const ConstraintSystem sys = linearize(n, [&](const Mat& d) {
      ds.back() = d;
      return stacked_basis_residual(identities::higher(ds, flavor, k).polarized, n);
    });
    const Elimination e = eliminate(sys);

    SolveReport rep;
    rep.feasible = e.consistent;
    rep.dimension = e.nullspace.cols();
    rep.basis = basis_operators(e.nullspace, n);
    rep.residual = e.residual;
    if (!e.consistent) {
      levels.push_back(std::move(rep));
      break;
    }
    ds.back() = unknowns_to_matrix(e.particular, n);
    rep.solution = LinOp::dense(ds.back());
    levels.push_back(std::move(rep));
  }
  return levels;
}

}  // namespace genshift
