#pragma once

#include <functional>
#include <span>
#include <vector>

#include "genshift/seqalg.hpp"

namespace genshift {

enum class DerivationFlavor { plain, jordan, jordan_triple };

/// The two sides of an operator identity evaluated at concrete inputs.
struct Sides {
  Vec lhs;
  Vec rhs;
};

/// A (multi)linear identity between vector-valued expressions in `arity`
/// vector arguments.
struct Identity {
  int arity = 0;
  std::function<Sides(std::span<const Vec>)> eval;
};

/// `polarized` is multilinear, so checking it on basis tuples is complete;
/// `literal` is the defining form with the repeated argument left in place.
struct IdentityForms {
  Identity polarized;
  Identity literal;
};

namespace identities {

// d(ab) = d(a) psi(b) + lambda(a) d(b)
IdentityForms psi_lambda(const Mat& d, const Mat& psi, const Mat& lambda);

// D(ab) = D(a) b + a d(b)
IdentityForms generalized(const Mat& D, const Mat& d);

// D(a^2) = D(a) a + a d(a), polarized to
// D(ab + ba) = D(a) b + a d(b) + D(b) a + b d(a)
IdentityForms generalized_jordan(const Mat& D, const Mat& d);

// D(aba) = D(a) ba + a d(b) a + ab d(a), polarized in a to
// D(abc + cba) = D(a) bc + a d(b) c + ab d(c) + D(c) ba + c d(b) a + cb d(a)
IdentityForms generalized_jordan_triple(const Mat& D, const Mat& d);

/// Level `level` of a higher derivation (d_0, d_1, ...); only d_0..d_level are read.
IdentityForms higher(std::span<const Mat> ds, DerivationFlavor flavor, Index level);

}  // namespace identities

/// Calls f(inputs) for every tuple of standard basis vectors of length n, in
/// lexicographic order of the index tuple.
void for_each_basis_tuple(Index n, int arity,
                          const std::function<void(std::span<const Vec>, std::span<const Index>)>& f);

/// lhs - rhs over all basis tuples, stacked in the order of for_each_basis_tuple.
Vec stacked_basis_residual(const Identity& id, Index n);

}  // namespace genshift
