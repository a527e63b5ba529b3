#include "genshift/linsolve.hpp"

#include <Eigen/QR>

namespace genshift {

ConstraintSystem linearize(Index n, const std::function<Vec(const Mat&)>& residual) {
  const Index m = n * n;
  const Vec base = residual(Mat::Zero(n, n));
  ConstraintSystem sys;
  sys.unknown_count = m;
  sys.rows.resize(base.size(), m);
  for (Index alpha = 0; alpha < n; ++alpha)
    for (Index mu = 0; mu < n; ++mu) {
      Mat e = Mat::Zero(n, n);
      e(alpha, mu) = 1.0;
      sys.rows.col(entry_unknown(alpha, mu, n)) = residual(e) - base;
    }
  sys.rhs = -base;
  return sys;
}

ConstraintSystem stack(const std::vector<ConstraintSystem>& parts) {
  if (parts.empty()) throw InvalidInput("nothing to stack");
  ConstraintSystem out;
  out.unknown_count = parts.front().unknown_count;
  Index total = 0;
  for (const auto& p : parts) {
    if (p.unknown_count != out.unknown_count) throw DimensionError("systems over different unknowns");
    total += p.rows.rows();
  }
  out.rows.resize(total, out.unknown_count);
  out.rhs = Vec::Zero(total);
  Index at = 0;
  for (const auto& p : parts) {
    out.rows.middleRows(at, p.rows.rows()) = p.rows;
    if (p.rhs.size() != 0) out.rhs.segment(at, p.rows.rows()) = p.rhs;
    at += p.rows.rows();
  }
  return out;
}

Elimination eliminate(const ConstraintSystem& sys, double rel_threshold) {
  const Index rows = sys.rows.rows();
  const Index cols = sys.unknown_count;
  if (sys.rows.cols() != cols) throw DimensionError("constraint rows have the wrong width");

  Mat a(rows, cols + 1);
  a.leftCols(cols) = sys.rows;
  a.col(cols) = sys.rhs.size() == 0 ? Vec::Zero(rows) : sys.rhs;

  double largest = rows > 0 && cols > 0 ? sys.rows.cwiseAbs().maxCoeff() : 0.0;
  Elimination out;

  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index best;
    const double mag = a.col(c).segment(r, rows - r).cwiseAbs().maxCoeff(&best);
    best += r;
    if (mag == 0.0 || mag <= rel_threshold * largest) {
      a.col(c).segment(r, rows - r).setZero();
      continue;
    }
    largest = std::max(largest, mag);
    a.row(r).swap(a.row(best));
    const Complex pivot = a(r, c);
    a.row(r) /= pivot;
    for (Index i = 0; i < rows; ++i) {
      const Complex factor = a(i, c);
      if (i != r && factor != Complex(0.0)) a.row(i) -= factor * a.row(r);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;

  const double rhs_scale = std::max(largest, rows > 0 ? a.col(cols).cwiseAbs().maxCoeff() : 0.0);
  for (Index i = r; i < rows; ++i)
    if (std::abs(a(i, cols)) > rel_threshold * std::max(rhs_scale, 1.0)) out.consistent = false;

  out.particular = Vec::Zero(cols);
  for (Index i = 0; i < r; ++i) out.particular(out.pivot_columns[static_cast<std::size_t>(i)]) = a(i, cols);

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : out.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;
  Mat raw(cols, cols - r);
  Index f = 0;
  for (Index c = 0; c < cols; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    Vec v = Vec::Zero(cols);
    v(c) = 1.0;
    for (Index i = 0; i < r; ++i) v(out.pivot_columns[static_cast<std::size_t>(i)]) = -a(i, c);
    raw.col(f++) = v;
  }
  if (raw.cols() > 0) {
    Eigen::HouseholderQR<Mat> qr(raw);
    out.nullspace = qr.householderQ() * Mat::Identity(cols, raw.cols());
  } else {
    out.nullspace = Mat(cols, 0);
  }

  const Vec b = sys.rhs.size() == 0 ? Vec::Zero(rows) : sys.rhs;
  if (rows > 0) {
    if (out.consistent) out.residual = (sys.rows * out.particular - b).cwiseAbs().maxCoeff();
    if (out.nullspace.cols() > 0)
      out.residual = std::max(out.residual, (sys.rows * out.nullspace).cwiseAbs().maxCoeff());
  }
  return out;
}

Mat unknowns_to_matrix(const Vec& x, Index n) {
  if (x.size() != n * n) throw DimensionError("unknown vector does not have n^2 entries");
  Mat m(n, n);
  for (Index alpha = 0; alpha < n; ++alpha)
    for (Index mu = 0; mu < n; ++mu) m(alpha, mu) = x(entry_unknown(alpha, mu, n));
  return m;
}

}  // namespace genshift
