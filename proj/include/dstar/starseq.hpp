#pragma once

// Double-star sequence S_{a,b}(G), the double-star frequency sequence f_{a,b},
// the binomial inverse pair linking them, and the two edge-sum identities that
// follow from f.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dstar/exactnum.hpp"
#include "dstar/graph.hpp"

namespace dstar {

/// Upper-triangular table of exact integers indexed by 0 <= a <= b <= n-2,
/// where n is the order of the originating graph. Empty for n <= 1.
class StarTriangle {
 public:
  StarTriangle() = default;
  explicit StarTriangle(std::size_t n) : n_(n), side_(n >= 2 ? n - 1 : 0) {
    entries_.assign(side_ * (side_ + 1) / 2, ExactInt{0});
  }

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  /// Number of admissible indices per axis, i.e. n - 1 (or 0).
  [[nodiscard]] std::size_t side() const noexcept { return side_; }
  [[nodiscard]] std::size_t entry_count() const noexcept { return entries_.size(); }

  /// Symmetric lookup: (a, b) and (b, a) agree, out-of-range indices read 0.
  [[nodiscard]] ExactInt at(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    if (b >= side_) return 0;
    return entries_[index(a, b)];
  }

  /// Writable entry; requires a <= b <= n-2.
  ExactInt& entry(std::size_t a, std::size_t b) {
    if (a > b || b >= side_)
      throw std::out_of_range("triangle index (" + std::to_string(a) + "," + std::to_string(b) +
                              ") outside 0 <= a <= b <= " + std::to_string(side_) + "-1");
    return entries_[index(a, b)];
  }

  /// Calls fn(a, b, value) in row-major order over a <= b.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t a = 0; a < side_; ++a)
      for (std::size_t b = a; b < side_; ++b) fn(a, b, entries_[index(a, b)]);
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& e : entries_)
      if (e != 0) return false;
    return true;
  }

  friend bool operator==(const StarTriangle&, const StarTriangle&) = default;

  friend StarTriangle operator+(const StarTriangle& x, const StarTriangle& y) {
    return combine(x, y, +1);
  }
  friend StarTriangle operator-(const StarTriangle& x, const StarTriangle& y) {
    return combine(x, y, -1);
  }

 private:
  [[nodiscard]] std::size_t index(std::size_t a, std::size_t b) const noexcept {
    // rows of length side, side-1, ... preceding row a
    return a * side_ - a * (a - 1) / 2 + (b - a);
  }

  static StarTriangle combine(const StarTriangle& x, const StarTriangle& y, int sign) {
    if (x.n_ != y.n_)
      throw std::invalid_argument("triangles of different order: " + std::to_string(x.n_) +
                                  " vs " + std::to_string(y.n_));
    StarTriangle out = x;
    for (std::size_t i = 0; i < out.entries_.size(); ++i)
      out.entries_[i] += sign > 0 ? y.entries_[i] : -y.entries_[i];
    return out;
  }

  std::size_t n_ = 0;
  std::size_t side_ = 0;
  std::vector<ExactInt> entries_;
};

/// S_{a,b}(G) from the binomial edge sum:
///   a < b:  sum_{uv} C(d_u-1, a) C(d_v-1, b) + C(d_u-1, b) C(d_v-1, a)
///   a = b:  sum_{uv} C(d_u-1, a) C(d_v-1, a)
/// This counts center-edge configurations, which exceeds the number of
/// subgraphs isomorphic to S_{a,b} when leaves can coincide (e.g. in K4,
/// S_{0,1} = 24 while K4 has 12 paths P3).
inline StarTriangle star_sequence(const Graph& g) {
  StarTriangle s(g.order());
  const auto binom = pascal_rows(s.side());
  auto c = [&](std::size_t top, std::size_t k) -> const ExactInt& {
    static const ExactInt zero = 0;
    return k <= top ? binom[top][k] : zero;
  };
  for (auto [u, v] : g.edges()) {
    const std::size_t du = g.degree(u) - 1, dv = g.degree(v) - 1;
    const std::size_t top = std::max(du, dv);
    for (std::size_t a = 0; a <= top; ++a) {
      for (std::size_t b = a; b <= top; ++b) {
        if (a == b) {
          s.entry(a, b) += c(du, a) * c(dv, a);
        } else {
          s.entry(a, b) += c(du, a) * c(dv, b) + c(du, b) * c(dv, a);
        }
      }
    }
  }
  return s;
}

/// f_{i,j}: number of edges whose endpoint degrees are {i+1, j+1}.
inline StarTriangle frequency_sequence(const Graph& g) {
  StarTriangle f(g.order());
  for (auto [u, v] : g.edges()) {
    const std::size_t du = g.degree(u) - 1, dv = g.degree(v) - 1;
    f.entry(std::min(du, dv), std::max(du, dv)) += 1;
  }
  return f;
}

namespace detail {

// sum_{i <= j} sign^{a+b+i+j} K_{a,b}(i,j) x_{i,j} with
// K = C(i,a)C(j,b) + C(i,b)C(j,a) for a < b and C(i,a)C(j,a) for a = b.
inline StarTriangle binomial_pair_transform(const StarTriangle& x, bool alternating) {
  StarTriangle out(x.order());
  const std::size_t side = x.side();
  const auto binom = pascal_rows(side);
  auto c = [&](std::size_t top, std::size_t k) -> const ExactInt& {
    static const ExactInt zero = 0;
    return k <= top ? binom[top][k] : zero;
  };
  for (std::size_t a = 0; a < side; ++a) {
    for (std::size_t b = a; b < side; ++b) {
      ExactInt acc = 0;
      // C(i,a) and C(j,b) vanish below a
      for (std::size_t i = a; i < side; ++i) {
        for (std::size_t j = i; j < side; ++j) {
          const ExactInt& xij = x.at(i, j);
          if (xij == 0) continue;
          ExactInt weight = a == b ? ExactInt(c(i, a) * c(j, a))
                                   : ExactInt(c(i, a) * c(j, b) + c(i, b) * c(j, a));
          if (weight == 0) continue;
          if (alternating && (a + b + i + j) % 2 == 1) weight = -weight;
          acc += weight * xij;
        }
      }
      out.entry(a, b) = std::move(acc);
    }
  }
  return out;
}

}  // namespace detail

/// S from f (forward binomial transform).
inline StarTriangle star_from_frequency(const StarTriangle& f) {
  return detail::binomial_pair_transform(f, false);
}

/// f from S (alternating inverse transform).
inline StarTriangle frequency_from_star(const StarTriangle& s) {
  return detail::binomial_pair_transform(s, true);
}

/// Sum of all entries; equals m for a frequency triangle.
inline ExactInt handshake_sum(const StarTriangle& f) {
  ExactInt total = 0;
  f.for_each([&](std::size_t, std::size_t, const ExactInt& v) { total += v; });
  return total;
}

/// sum (1/(i+1) + 1/(j+1)) f_{i,j}; equals n - n0 for a genuine graph.
inline ExactRational inverse_degree_sum(const StarTriangle& f) {
  ExactRational total = 0;
  f.for_each([&](std::size_t i, std::size_t j, const ExactInt& v) {
    if (v == 0) return;
    total += ExactRational(v) * (ExactRational(1, i + 1) + ExactRational(1, j + 1));
  });
  return total;
}

}  // namespace dstar
