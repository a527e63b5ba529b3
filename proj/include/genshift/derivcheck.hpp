#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "genshift/identities.hpp"
#include "genshift/linop.hpp"

namespace genshift {

struct CheckOptions {
  double tolerance = kDefaultTolerance;
  int random_trials = 32;  // literal-form spot checks after the basis pass
  std::uint64_t seed = 0;
};

/// A concrete input tuple on which an identity fails.
struct Witness {
  std::vector<Vec> inputs;
  Vec lhs;
  Vec rhs;
  double deviation = 0.0;  // max_alpha |lhs_alpha - rhs_alpha|
  bool from_basis = true;  // false when found by a random spot check
  std::optional<Index> level;  // higher derivations only
};

struct CheckResult {
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
  double max_deviation = 0.0;

  explicit operator bool() const { return holds; }
};

/// Decides an identity: the polarized form on every basis tuple (first
/// failure in lexicographic order is the witness), then the literal form on
/// seeded random inputs.
CheckResult check_identity(const IdentityForms& forms, Index n, const CheckOptions& opts = {});

CheckResult is_psi_lambda_derivation(const LinOp& d, const LinOp& psi, const LinOp& lambda,
                                     const CheckOptions& opts = {});
CheckResult is_psi_derivation(const LinOp& d, const LinOp& psi, const CheckOptions& opts = {});
CheckResult is_derivation(const LinOp& d, const CheckOptions& opts = {});
CheckResult is_jordan_derivation(const LinOp& d, const CheckOptions& opts = {});
CheckResult is_jordan_triple_derivation(const LinOp& d, const CheckOptions& opts = {});

// These throw NotADerivation when `d` fails its side condition (a derivation
// for the first two, a Jordan triple derivation for the third).
CheckResult is_generalized_derivation(const LinOp& D, const LinOp& d, const CheckOptions& opts = {});
CheckResult is_generalized_jordan_derivation(const LinOp& D, const LinOp& d,
                                             const CheckOptions& opts = {});
CheckResult is_generalized_jordan_triple_derivation(const LinOp& D, const LinOp& d,
                                                    const CheckOptions& opts = {});

/// Checks d_k against its level identity for every k; the witness records the
/// first failing level.
CheckResult is_higher_derivation(std::span<const LinOp> ds, DerivationFlavor flavor,
                                 const CheckOptions& opts = {});

}  // namespace genshift
