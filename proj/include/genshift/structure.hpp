#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genshift/identities.hpp"
#include "genshift/linop.hpp"
#include "genshift/linsolve.hpp"

namespace genshift {

/// psi = r . sigma_phi and lambda = (1 - r) . sigma_phi.
struct MultiplierPair {
  LinOp psi;
  LinOp lambda;
};

MultiplierPair synthesize_pair(const IndexMap& phi, const Vec& r);

/// r_alpha = (psi(w^{phi(alpha)}))_alpha.
Vec recover_r(const IndexMap& phi, const LinOp& psi);

/// An operator entry that differs from the multiplier-shift shape.
struct EntryDeviation {
  std::string op;  // "psi" or "lambda"
  Index row = 0;
  Index col = 0;
  Complex expected;
  Complex actual;
};

struct Classification {
  bool accepted = false;
  Vec r;  // the recovered multiplier (also reported on rejection)
  std::optional<EntryDeviation> witness;
};

/// Accepts iff psi and lambda are, entry by entry, the multiplier shifts
/// r . sigma_phi and (1 - r) . sigma_phi with r = recover_r(phi, psi).
Classification classify_psi_lambda(const IndexMap& phi, const LinOp& psi, const LinOp& lambda,
                                   double tolerance = kDefaultTolerance);

struct SolveReport {
  std::optional<Index> dimension;  // nullity of the solution space
  std::optional<bool> feasible;    // inhomogeneous problems only
  std::vector<LinOp> basis;        // orthonormal as n^2-vectors
  std::optional<LinOp> solution;   // one solution, when one is requested and exists
  double residual = 0.0;
};

/// Constraints d(ab) - d(a) psi(b) - lambda(a) d(b) = 0 on basis pairs
/// (beta, gamma), rows grouped by pair in lexicographic order then by alpha.
ConstraintSystem twisted_constraints(const LinOp& psi, const LinOp& lambda);

/// The space of d with d(ab) = d(a) psi(b) + lambda(a) d(b).
SolveReport twisted_derivation_space(const LinOp& psi, const LinOp& lambda);

/// Whether sigma_phi is a generalized derivation of the given flavor for some
/// admissible auxiliary d; the solution is one such d.
SolveReport generalized_derivation_feasible(const IndexMap& phi, DerivationFlavor flavor);

/// Level-by-level solve for d_1, ..., d_depth with d_0 = sigma_phi. Entry k-1
/// of the result describes level k.
std::vector<SolveReport> higher_derivation_tail_space(
    const IndexMap& phi, Index depth, DerivationFlavor flavor = DerivationFlavor::plain);

}  // namespace genshift
