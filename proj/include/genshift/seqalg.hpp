#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <ranges>
#include <string>

#include <Eigen/Core>

#include "genshift/error.hpp"

namespace genshift {

using Index = Eigen::Index;
using Complex = std::complex<double>;

template <typename Scalar>
using SeqVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = SeqVector<Complex>;
using Mat = DenseMatrix<Complex>;

inline constexpr double kDefaultTolerance = 1e-9;

/// The exponent p of an l^p norm: a real number >= 1 or infinity.
class PExponent {
 public:
  static PExponent finite(double value) {
    if (!(value >= 1.0) || !std::isfinite(value))
      throw InvalidInput("p must be a finite real >= 1, got " + std::to_string(value));
    return PExponent(value);
  }
  static PExponent infinity() { return PExponent(std::nullopt); }

  bool is_infinite() const { return !value_.has_value(); }

  double value() const {
    if (!value_) throw InvalidInput("p is infinite");
    return *value_;
  }

  friend bool operator==(const PExponent&, const PExponent&) = default;

 private:
  explicit PExponent(std::optional<double> v) : value_(v) {}
  std::optional<double> value_;
};

/// |a - b| <= tol * (1 + max(|a|, |b|)).
template <typename Scalar>
bool approx_equal(const Scalar& a, const Scalar& b, double tol = kDefaultTolerance) {
  using std::abs;
  const double scale = std::max<double>(abs(a), abs(b));
  return abs(a - b) <= tol * (1.0 + scale);
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& x) {
  if (!x.allFinite()) throw InvalidInput("sequence entries must be finite");
}

template <typename A, typename B>
void require_same_length(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  if (x.size() != y.size())
    throw DimensionError("length mismatch: " + std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()));
}

/// l^p norm. For finite p the p-th powers are taken as exp(p * ln|x|) with
/// zero entries skipped.
template <typename Derived>
double pnorm(const Eigen::MatrixBase<Derived>& x, const PExponent& p) {
  if (x.size() == 0) throw InvalidInput("pnorm of an empty vector");
  using std::abs;
  if (p.is_infinite()) {
    double m = 0.0;
    for (Index i = 0; i < x.size(); ++i) m = std::max<double>(m, abs(x(i)));
    return m;
  }
  const double q = p.value();
  double sum = 0.0;
  for (Index i = 0; i < x.size(); ++i) {
    const double m = abs(x(i));
    if (m > 0.0) sum += std::exp(q * std::log(m));
  }
  if (sum == 0.0) return 0.0;
  return std::exp(std::log(sum) / q);
}

template <typename A, typename B>
SeqVector<typename A::Scalar> pointwise_mul(const Eigen::MatrixBase<A>& x,
                                            const Eigen::MatrixBase<B>& y) {
  require_same_length(x, y);
  return x.cwiseProduct(y);
}

template <typename A, typename B>
SeqVector<typename A::Scalar> add(const Eigen::MatrixBase<A>& x, const Eigen::MatrixBase<B>& y) {
  require_same_length(x, y);
  return x + y;
}

template <typename Derived>
SeqVector<typename Derived::Scalar> scale(const typename Derived::Scalar& c,
                                          const Eigen::MatrixBase<Derived>& x) {
  return c * x;
}

/// The 0/1 vector supported on the index set `support`.
template <typename Scalar = Complex, std::ranges::input_range R>
SeqVector<Scalar> indicator(const R& support, Index n) {
  if (n < 1) throw InvalidInput("indicator length must be positive");
  SeqVector<Scalar> w = SeqVector<Scalar>::Zero(n);
  for (auto alpha : support) {
    const auto a = static_cast<Index>(alpha);
    if (a < 0 || a >= n)
      throw InvalidInput("indicator index " + std::to_string(a) + " out of range for n = " +
                         std::to_string(n));
    w(a) = Scalar(1);
  }
  return w;
}

template <typename Scalar = Complex>
SeqVector<Scalar> indicator(std::initializer_list<Index> support, Index n) {
  return indicator<Scalar, std::initializer_list<Index>>(support, n);
}

/// Standard basis vector w^beta.
template <typename Scalar = Complex>
SeqVector<Scalar> basis_vector(Index beta, Index n) {
  return indicator<Scalar>({beta}, n);
}

/// The unit (1, ..., 1) of the finite pointwise algebra.
template <typename Scalar = Complex>
SeqVector<Scalar> ones(Index n) {
  return SeqVector<Scalar>::Ones(n);
}

/// Coordinate projection x -> x_alpha.
template <typename Derived>
typename Derived::Scalar coord(const Eigen::MatrixBase<Derived>& x, Index alpha) {
  if (alpha < 0 || alpha >= x.size())
    throw InvalidInput("coordinate " + std::to_string(alpha) + " out of range");
  return x(alpha);
}

}  // namespace genshift
