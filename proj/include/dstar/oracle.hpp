#pragma once

// Brute-force reference implementations. Nothing in the production headers
// includes this file; it backs the test suites and the CLI `verify` command.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "dstar/exactnum.hpp"
#include "dstar/graph.hpp"

namespace dstar::oracle {

namespace detail {

// Bitmasks over `pool` positions with exactly `size` bits set, by scanning
// every subset.
inline std::vector<std::uint64_t> subsets_of_size(std::size_t pool, std::size_t size) {
  if (pool > 20) throw std::invalid_argument("oracle subset enumeration limited to 20 elements");
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool); ++mask) {
    std::size_t bits = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) ++bits;
    if (bits == size) out.push_back(mask);
  }
  return out;
}

// Configurations on edge (center_a, center_b): pairs of leaf sets A, B with
// A a subset of N(center_a) \ {center_b}, |A| = a, and B likewise. A and B may
// share vertices.
inline std::uint64_t configurations(const Graph& g, Vertex center_a, Vertex center_b,
                                    std::size_t a, std::size_t b) {
  std::vector<Vertex> pool_a, pool_b;
  for (Vertex w : g.neighbors(center_a))
    if (w != center_b) pool_a.push_back(w);
  for (Vertex w : g.neighbors(center_b))
    if (w != center_a) pool_b.push_back(w);
  std::uint64_t count = 0;
  for ([[maybe_unused]] auto leaves_a : subsets_of_size(pool_a.size(), a))
    for ([[maybe_unused]] auto leaves_b : subsets_of_size(pool_b.size(), b)) ++count;
  return count;
}

}  // namespace detail

/// Enumerated count of double-star configurations S_{a,b} centered on each
/// edge, trying both center assignments when a != b.
inline ExactInt star_count_enumerate(const Graph& g, std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  ExactInt total = 0;
  for (auto [u, v] : g.edges()) {
    total += detail::configurations(g, u, v, a, b);
    if (a != b) total += detail::configurations(g, v, u, a, b);
  }
  return total;
}

/// First `terms` coefficients of numerator / denominator as formal power
/// series, by long division.
inline std::vector<ExactInt> series_divide(std::span<const ExactInt> numerator,
                                           std::span<const ExactInt> denominator,
                                           std::size_t terms) {
  if (denominator.empty() || denominator[0] == 0)
    throw std::domain_error("series division needs a nonzero constant term");
  std::vector<ExactInt> quotient;
  quotient.reserve(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    ExactInt rest = k < numerator.size() ? numerator[k] : ExactInt{0};
    for (std::size_t j = 1; j <= k && j < denominator.size(); ++j)
      rest -= denominator[j] * quotient[k - j];
    if (rest % denominator[0] != 0)
      throw std::domain_error("series quotient is not integral");
    quotient.push_back(rest / denominator[0]);
  }
  return quotient;
}

/// prod_{s in S} (z - s) multiplied out with a plain double loop, taking the
/// elements from largest to smallest.
inline std::vector<ExactInt> comtet_expand_naive(const NatSet& set) {
  std::vector<ExactInt> poly{ExactInt{1}};
  for (auto it = set.values().rbegin(); it != set.values().rend(); ++it) {
    const ExactInt factor[2] = {-ExactInt(*it), ExactInt{1}};
    std::vector<ExactInt> next(poly.size() + 1, ExactInt{0});
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (std::size_t j = 0; j < 2; ++j) next[i + j] += poly[i] * factor[j];
    poly = std::move(next);
  }
  return poly;
}

/// {n, k} = (1/k!) sum_{i=0}^{k} (-1)^{k-i} C(k,i) i^n, with 0^0 = 1.
inline ExactInt stirling2_explicit(std::size_t n, std::size_t k) {
  ExactInt sum = 0;
  ExactInt choose = 1;  // C(k, i)
  for (std::size_t i = 0; i <= k; ++i) {
    if (i > 0) choose = choose * (k - i + 1) / i;
    ExactInt term = choose * boost::multiprecision::pow(ExactInt(i), static_cast<unsigned>(n));
    if ((k - i) % 2 == 1) term = -term;
    sum += term;
  }
  ExactInt k_factorial = 1;
  for (std::size_t i = 2; i <= k; ++i) k_factorial *= i;
  return sum / k_factorial;
}

}  // namespace dstar::oracle
