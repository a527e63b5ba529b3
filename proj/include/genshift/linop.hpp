#pragma once

#include <variant>

#include "genshift/seqalg.hpp"
#include "genshift/shiftop.hpp"

namespace genshift {

/// x -> (r_alpha * x_{phi(alpha)})_alpha.
template <typename Scalar>
struct MultiplierShift {
  SeqVector<Scalar> r;
  IndexMap phi;
};

/// A linear operator on Scalar^n held either as a dense matrix or in the
/// structured multiplier-shift form.
template <typename Scalar>
class BasicLinOp {
 public:
  using Dense = DenseMatrix<Scalar>;
  using Structured = MultiplierShift<Scalar>;

  static BasicLinOp dense(Dense m) {
    if (m.rows() != m.cols() || m.rows() < 1)
      throw DimensionError("operator matrix must be square and nonempty");
    require_finite(m);
    return BasicLinOp(std::move(m));
  }

  static BasicLinOp multiplier_shift(SeqVector<Scalar> r, IndexMap phi) {
    if (r.size() != phi.size()) throw DimensionError("multiplier length differs from map size");
    require_finite(r);
    return BasicLinOp(Structured{std::move(r), std::move(phi)});
  }

  /// The generalized shift itself (r = 1).
  static BasicLinOp shift(const IndexMap& phi) {
    return multiplier_shift(SeqVector<Scalar>::Ones(phi.size()), phi);
  }

  static BasicLinOp identity(Index n) { return dense(Dense::Identity(n, n)); }
  static BasicLinOp zero(Index n) { return dense(Dense::Zero(n, n)); }

  Index size() const {
    if (auto m = std::get_if<Dense>(&form_)) return m->rows();
    return std::get<Structured>(form_).phi.size();
  }

  bool is_dense() const { return std::holds_alternative<Dense>(form_); }
  const Dense* as_dense() const { return std::get_if<Dense>(&form_); }
  const Structured* as_multiplier_shift() const { return std::get_if<Structured>(&form_); }

  /// Dense expansion; a multiplier shift has entry (alpha, phi(alpha)) = r_alpha.
  Dense matrix() const {
    if (auto m = as_dense()) return *m;
    const auto& s = std::get<Structured>(form_);
    Dense out = Dense::Zero(s.phi.size(), s.phi.size());
    for (Index a = 0; a < s.phi.size(); ++a) out(a, s.phi(a)) = s.r(a);
    return out;
  }

  template <typename Derived>
  SeqVector<Scalar> apply(const Eigen::MatrixBase<Derived>& x) const {
    if (x.size() != size())
      throw DimensionError("operator of size " + std::to_string(size()) +
                           " applied to length " + std::to_string(x.size()));
    if (auto m = as_dense()) return (*m) * x;
    const auto& s = std::get<Structured>(form_);
    return s.r.cwiseProduct(apply_shift(s.phi, x));
  }

  BasicLinOp scaled(const Scalar& c) const {
    if (auto m = as_dense()) return dense(c * (*m));
    const auto& s = std::get<Structured>(form_);
    return multiplier_shift(c * s.r, s.phi);
  }

 private:
  explicit BasicLinOp(Dense m) : form_(std::move(m)) {}
  explicit BasicLinOp(Structured s) : form_(std::move(s)) {}

  std::variant<Dense, Structured> form_;
};

using LinOp = BasicLinOp<Complex>;

template <typename Scalar>
BasicLinOp<Scalar> to_matrix(const BasicLinOp<Scalar>& op) {
  return BasicLinOp<Scalar>::dense(op.matrix());
}

template <typename Scalar, typename Derived>
SeqVector<Scalar> apply_op(const BasicLinOp<Scalar>& op, const Eigen::MatrixBase<Derived>& x) {
  return op.apply(x);
}

}  // namespace genshift
