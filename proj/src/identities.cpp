#include "genshift/identities.hpp"

#include <array>

namespace genshift {
namespace identities {

namespace {

IdentityForms bilinear(std::function<Sides(std::span<const Vec>)> f) {
  Identity id{2, std::move(f)};
  return {id, id};
}

}  // namespace

IdentityForms psi_lambda(const Mat& d, const Mat& psi, const Mat& lambda) {
  return bilinear([d, psi, lambda](std::span<const Vec> in) {
    const Vec& a = in[0];
    const Vec& b = in[1];
    Vec lhs = d * a.cwiseProduct(b);
    Vec rhs = (d * a).cwiseProduct(psi * b) + (lambda * a).cwiseProduct(d * b);
    return Sides{std::move(lhs), std::move(rhs)};
  });
}

IdentityForms generalized(const Mat& D, const Mat& d) {
  return bilinear([D, d](std::span<const Vec> in) {
    const Vec& a = in[0];
    const Vec& b = in[1];
    Vec lhs = D * a.cwiseProduct(b);
    Vec rhs = (D * a).cwiseProduct(b) + a.cwiseProduct(d * b);
    return Sides{std::move(lhs), std::move(rhs)};
  });
}

IdentityForms generalized_jordan(const Mat& D, const Mat& d) {
  Identity polarized{2, [D, d](std::span<const Vec> in) {
                       const Vec& a = in[0];
                       const Vec& b = in[1];
                       Vec lhs = D * (a.cwiseProduct(b) + b.cwiseProduct(a));
                       Vec rhs = (D * a).cwiseProduct(b) + a.cwiseProduct(d * b) +
                                 (D * b).cwiseProduct(a) + b.cwiseProduct(d * a);
                       return Sides{std::move(lhs), std::move(rhs)};
                     }};
  Identity literal{1, [D, d](std::span<const Vec> in) {
                     const Vec& a = in[0];
                     Vec lhs = D * a.cwiseProduct(a);
                     Vec rhs = (D * a).cwiseProduct(a) + a.cwiseProduct(d * a);
                     return Sides{std::move(lhs), std::move(rhs)};
                   }};
  return {polarized, literal};
}

IdentityForms generalized_jordan_triple(const Mat& D, const Mat& d) {
  Identity polarized{3, [D, d](std::span<const Vec> in) {
                       const Vec& a = in[0];
                       const Vec& b = in[1];
                       const Vec& c = in[2];
                       const Vec abc = a.cwiseProduct(b).cwiseProduct(c);
                       const Vec cba = c.cwiseProduct(b).cwiseProduct(a);
                       const Vec db = d * b;
                       Vec lhs = D * (abc + cba);
                       Vec rhs = (D * a).cwiseProduct(b).cwiseProduct(c) +
                                 a.cwiseProduct(db).cwiseProduct(c) +
                                 a.cwiseProduct(b).cwiseProduct(d * c) +
                                 (D * c).cwiseProduct(b).cwiseProduct(a) +
                                 c.cwiseProduct(db).cwiseProduct(a) +
                                 c.cwiseProduct(b).cwiseProduct(d * a);
                       return Sides{std::move(lhs), std::move(rhs)};
                     }};
  Identity literal{2, [D, d](std::span<const Vec> in) {
                     const Vec& a = in[0];
                     const Vec& b = in[1];
                     Vec lhs = D * a.cwiseProduct(b).cwiseProduct(a);
                     Vec rhs = (D * a).cwiseProduct(b).cwiseProduct(a) +
                               a.cwiseProduct(d * b).cwiseProduct(a) +
                               a.cwiseProduct(b).cwiseProduct(d * a);
                     return Sides{std::move(lhs), std::move(rhs)};
                   }};
  return {polarized, literal};
}

IdentityForms higher(std::span<const Mat> ds_in, DerivationFlavor flavor, Index level) {
  std::vector<Mat> ds(ds_in.begin(), ds_in.begin() + level + 1);
  const auto k = static_cast<std::size_t>(level);

  switch (flavor) {
    case DerivationFlavor::plain:
      return bilinear([ds, k](std::span<const Vec> in) {
        const Vec& x = in[0];
        const Vec& y = in[1];
        Vec lhs = ds[k] * x.cwiseProduct(y);
        Vec rhs = Vec::Zero(x.size());
        for (std::size_t i = 0; i <= k; ++i) rhs += (ds[i] * x).cwiseProduct(ds[k - i] * y);
        return Sides{std::move(lhs), std::move(rhs)};
      });

    case DerivationFlavor::jordan: {
      Identity polarized{2, [ds, k](std::span<const Vec> in) {
                           const Vec& x = in[0];
                           const Vec& y = in[1];
                           Vec lhs = ds[k] * (x.cwiseProduct(y) + y.cwiseProduct(x));
                           Vec rhs = Vec::Zero(x.size());
                           for (std::size_t i = 0; i <= k; ++i)
                             rhs += (ds[i] * x).cwiseProduct(ds[k - i] * y) +
                                    (ds[i] * y).cwiseProduct(ds[k - i] * x);
                           return Sides{std::move(lhs), std::move(rhs)};
                         }};
      Identity literal{1, [ds, k](std::span<const Vec> in) {
                         const Vec& x = in[0];
                         Vec lhs = ds[k] * x.cwiseProduct(x);
                         Vec rhs = Vec::Zero(x.size());
                         for (std::size_t i = 0; i <= k; ++i)
                           rhs += (ds[i] * x).cwiseProduct(ds[k - i] * x);
                         return Sides{std::move(lhs), std::move(rhs)};
                       }};
      return {polarized, literal};
    }

    case DerivationFlavor::jordan_triple: {
      Identity polarized{3, [ds, k](std::span<const Vec> in) {
                           const Vec& x = in[0];
                           const Vec& y = in[1];
                           const Vec& z = in[2];
                           Vec lhs = ds[k] * (x.cwiseProduct(y).cwiseProduct(z) +
                                              z.cwiseProduct(y).cwiseProduct(x));
                           Vec rhs = Vec::Zero(x.size());
                           for (std::size_t i = 0; i <= k; ++i)
                             for (std::size_t j = 0; i + j <= k; ++j) {
                               const std::size_t l = k - i - j;
                               const Vec dy = ds[j] * y;
                               rhs += (ds[i] * x).cwiseProduct(dy).cwiseProduct(ds[l] * z) +
                                      (ds[i] * z).cwiseProduct(dy).cwiseProduct(ds[l] * x);
                             }
                           return Sides{std::move(lhs), std::move(rhs)};
                         }};
      Identity literal{2, [ds, k](std::span<const Vec> in) {
                         const Vec& x = in[0];
                         const Vec& y = in[1];
                         Vec lhs = ds[k] * x.cwiseProduct(y).cwiseProduct(x);
                         Vec rhs = Vec::Zero(x.size());
                         for (std::size_t i = 0; i <= k; ++i)
                           for (std::size_t j = 0; i + j <= k; ++j)
                             rhs += (ds[i] * x).cwiseProduct(ds[j] * y).cwiseProduct(
                                 ds[k - i - j] * x);
                         return Sides{std::move(lhs), std::move(rhs)};
                       }};
      return {polarized, literal};
    }
  }
  throw InvalidInput("unknown derivation flavor");
}

}  // namespace identities

void for_each_basis_tuple(
    Index n, int arity,
    const std::function<void(std::span<const Vec>, std::span<const Index>)>& f) {
  std::vector<Vec> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (Index b = 0; b < n; ++b) basis.push_back(basis_vector(b, n));

  std::vector<Index> idx(static_cast<std::size_t>(arity), 0);
  std::vector<Vec> inputs(static_cast<std::size_t>(arity));
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) inputs[i] = basis[static_cast<std::size_t>(idx[i])];
    f(inputs, idx);
    std::size_t pos = idx.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < n) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
    if (idx.empty()) return;
  }
}

Vec stacked_basis_residual(const Identity& id, Index n) {
  Index tuples = 1;
  for (int i = 0; i < id.arity; ++i) tuples *= n;
  Vec out(tuples * n);
  Index row = 0;
  for_each_basis_tuple(n, id.arity, [&](std::span<const Vec> in, std::span<const Index>) {
    Sides s = id.eval(in);
    out.segment(row, n) = s.lhs - s.rhs;
    row += n;
  });
  return out;
}

}  // namespace genshift
