#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "genshift/seqalg.hpp"

namespace genshift {

/// A total self-map of {0, ..., n-1}; entry alpha of `image()` is phi(alpha).
class IndexMap {
 public:
  explicit IndexMap(std::vector<Index> image) : image_(std::move(image)) {
    const auto n = size();
    if (n < 1) throw InvalidInput("index map must act on at least one point");
    for (Index alpha = 0; alpha < n; ++alpha) {
      const Index b = image_[static_cast<std::size_t>(alpha)];
      if (b < 0 || b >= n)
        throw InvalidInput("phi(" + std::to_string(alpha) + ") = " + std::to_string(b) +
                           " is outside {0, ..., " + std::to_string(n - 1) + "}");
    }
  }

  static IndexMap identity(Index n) {
    std::vector<Index> img(static_cast<std::size_t>(std::max<Index>(n, 0)));
    for (Index a = 0; a < n; ++a) img[static_cast<std::size_t>(a)] = a;
    return IndexMap(std::move(img));
  }

  static IndexMap constant(Index n, Index value) {
    return IndexMap(std::vector<Index>(static_cast<std::size_t>(std::max<Index>(n, 0)), value));
  }

  Index size() const { return static_cast<Index>(image_.size()); }
  Index operator()(Index alpha) const { return image_[static_cast<std::size_t>(alpha)]; }
  const std::vector<Index>& image() const { return image_; }

  bool is_identity() const {
    for (Index a = 0; a < size(); ++a)
      if ((*this)(a) != a) return false;
    return true;
  }

  /// phi^{-1}(beta) in increasing order.
  std::vector<Index> preimage(Index beta) const {
    std::vector<Index> out;
    for (Index a = 0; a < size(); ++a)
      if ((*this)(a) == beta) out.push_back(a);
    return out;
  }

  friend auto operator<=>(const IndexMap&, const IndexMap&) = default;

 private:
  std::vector<Index> image_;
};

/// outer o inner, i.e. alpha -> outer(inner(alpha)).
inline IndexMap compose(const IndexMap& outer, const IndexMap& inner) {
  if (outer.size() != inner.size()) throw DimensionError("composing maps of different sizes");
  std::vector<Index> img(inner.image().size());
  for (Index a = 0; a < inner.size(); ++a) img[static_cast<std::size_t>(a)] = outer(inner(a));
  return IndexMap(std::move(img));
}

struct FiberReport {
  std::vector<Index> sizes;  // sizes[beta] = |phi^{-1}(beta)|
  Index bound = 0;           // max fiber size
  std::vector<Index> empty_fibers;

  bool surjective() const { return empty_fibers.empty(); }
  bool injective() const { return bound <= 1; }
};

inline FiberReport fibers(const IndexMap& phi) {
  FiberReport rep;
  rep.sizes.assign(static_cast<std::size_t>(phi.size()), 0);
  for (Index a = 0; a < phi.size(); ++a) ++rep.sizes[static_cast<std::size_t>(phi(a))];
  for (Index b = 0; b < phi.size(); ++b) {
    const Index s = rep.sizes[static_cast<std::size_t>(b)];
    rep.bound = std::max(rep.bound, s);
    if (s == 0) rep.empty_fibers.push_back(b);
  }
  return rep;
}

/// Generalized shift: (x_alpha) -> (x_{phi(alpha)}).
template <typename Derived>
SeqVector<typename Derived::Scalar> apply_shift(const IndexMap& phi,
                                                const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != phi.size())
    throw DimensionError("shift on " + std::to_string(phi.size()) + " points applied to length " +
                         std::to_string(x.size()));
  SeqVector<typename Derived::Scalar> y(phi.size());
  for (Index a = 0; a < phi.size(); ++a) y(a) = x(phi(a));
  return y;
}

/// Operator norm of the shift on (C^n, ||.||_p): N^{1/p} with N the largest
/// fiber, and 1 for p = infinity.
inline double shift_operator_norm(const IndexMap& phi, const PExponent& p) {
  if (p.is_infinite()) return 1.0;
  return std::pow(static_cast<double>(fibers(phi).bound), 1.0 / p.value());
}

/// Largest n for which enumerating all n^n maps is permitted.
inline constexpr Index kMaxExhaustiveSize = 6;

/// Walks every self-map of {0, ..., n-1} in lexicographic order of the image
/// list (last entry varies fastest).
class MapEnumerator {
 public:
  explicit MapEnumerator(Index n) : current_(static_cast<std::size_t>(n), 0) {
    if (n < 1) throw InvalidInput("cannot enumerate maps on an empty set");
    if (n > kMaxExhaustiveSize)
      throw InvalidInput("exhaustive enumeration is limited to n <= " +
                         std::to_string(kMaxExhaustiveSize));
  }

  std::optional<IndexMap> next() {
    if (done_) return std::nullopt;
    IndexMap out(current_);
    advance();
    return out;
  }

  static std::uint64_t count(Index n) {
    std::uint64_t c = 1;
    for (Index i = 0; i < n; ++i) c *= static_cast<std::uint64_t>(n);
    return c;
  }

 private:
  void advance() {
    const auto n = static_cast<Index>(current_.size());
    for (auto i = current_.size(); i-- > 0;) {
      if (++current_[i] < n) return;
      current_[i] = 0;
    }
    done_ = true;
  }

  std::vector<Index> current_;
  bool done_ = false;
};

inline std::vector<IndexMap> all_maps(Index n) {
  std::vector<IndexMap> out;
  MapEnumerator e(n);
  while (auto m = e.next()) out.push_back(std::move(*m));
  return out;
}

template <typename URBG>
IndexMap random_map(Index n, URBG& rng) {
  std::uniform_int_distribution<Index> pick(0, n - 1);
  std::vector<Index> img(static_cast<std::size_t>(n));
  for (auto& v : img) v = pick(rng);
  return IndexMap(std::move(img));
}

}  // namespace genshift
