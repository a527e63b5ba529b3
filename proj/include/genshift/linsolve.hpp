#pragma once

#include <functional>
#include <vector>

#include "genshift/seqalg.hpp"

namespace genshift {

/// Complex linear equations rows * x = rhs over `unknown_count` unknowns.
/// Homogeneous systems carry a zero rhs.
struct ConstraintSystem {
  Index unknown_count = 0;
  Mat rows;
  Vec rhs;

  bool homogeneous() const { return rhs.size() == 0 || rhs.isZero(0.0); }
};

/// Unknown u addresses operator entry (u / n, u % n), i.e. d(w^mu)_alpha for
/// u = alpha * n + mu.
inline Index entry_unknown(Index alpha, Index mu, Index n) { return alpha * n + mu; }

/// Builds the system residual(d) = 0 for a residual that is affine in the
/// entries of an n x n operator d.
ConstraintSystem linearize(Index n, const std::function<Vec(const Mat&)>& residual);

/// Stacks the rows of several systems over the same unknowns.
ConstraintSystem stack(const std::vector<ConstraintSystem>& parts);

struct Elimination {
  Index rank = 0;
  bool consistent = true;
  std::vector<Index> pivot_columns;
  Vec particular;  // free variables set to zero; meaningful when consistent
  Mat nullspace;   // orthonormal columns
  double residual = 0.0;  // max violation over particular and nullspace columns
};

/// Gauss-Jordan elimination with partial pivoting. A pivot candidate counts
/// as nonzero when it exceeds rel_threshold times the largest magnitude seen
/// so far (matrix entries and accepted pivots).
Elimination eliminate(const ConstraintSystem& sys, double rel_threshold = 1e-8);

/// Reshapes an n^2 unknown vector into the operator matrix it encodes.
Mat unknowns_to_matrix(const Vec& x, Index n);

}  // namespace genshift
