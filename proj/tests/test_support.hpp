#pragma once

#include <random>

#include "genshift/linop.hpp"

namespace genshift::testing {

inline Vec random_vec(Index n, std::mt19937_64& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> u(-radius, radius);
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = Complex(u(rng), u(rng));
  return v;
}

inline Mat random_mat(Index n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k) m(i, k) = Complex(u(rng), u(rng));
  return m;
}

inline Vec cvec(std::initializer_list<Complex> xs) {
  Vec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

inline double max_abs(const Vec& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace genshift::testing
