#pragma once

// General second Zagreb index M2^(p)(G) = sum_{uv in E} (d_u d_v)^p, computed
// three ways (edge sum, frequency triangle, double-star triangle), plus its
// rational ordinary generating function and the constant-coefficient
// recurrence with Comtet-number coefficients.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "dstar/exactnum.hpp"
#include "dstar/graph.hpp"
#include "dstar/starseq.hpp"

namespace dstar {

/// Edge sum with exact square-and-multiply powers; p = 0 gives m.
inline ExactInt m2_direct(const Graph& g, std::size_t p) {
  ExactInt total = 0;
  for (auto [u, v] : g.edges()) {
    const ExactInt product = ExactInt(g.degree(u)) * g.degree(v);
    total += boost::multiprecision::pow(product, static_cast<unsigned>(p));
  }
  return total;
}

/// sum_{i <= j} ((i+1)(j+1))^p f_{i,j}.
inline ExactInt m2_from_frequency(const StarTriangle& f, std::size_t p) {
  ExactInt total = 0;
  f.for_each([&](std::size_t i, std::size_t j, const ExactInt& count) {
    if (count == 0) return;
    const ExactInt weight = ExactInt((i + 1) * (j + 1));
    total += boost::multiprecision::pow(weight, static_cast<unsigned>(p)) * count;
  });
  return total;
}

/// sum_{i <= k} i! k! {p+1, i+1} {p+1, k+1} S_{i,k}.
inline ExactInt m2_from_star(const StarTriangle& s, std::size_t p) {
  ExactInt total = 0;
  s.for_each([&](std::size_t i, std::size_t k, const ExactInt& count) {
    if (count == 0 || k > p) return;
    total += star_coefficient(p, i, k) * count;
  });
  return total;
}

/// M2^(0..count-1)(G).
inline std::vector<ExactInt> m2_sequence(const Graph& g, std::size_t count) {
  std::vector<ExactInt> values;
  values.reserve(count);
  for (std::size_t p = 0; p < count; ++p) values.push_back(m2_direct(g, p));
  return values;
}

// ---------------------------------------------------------------------------
// Generating function

/// The set C_{n-1} = { i*j : 0 <= i, j <= n-1 } that indexes the
/// denominator factors (1 - c t). Requires n >= 1.
inline NatSet degree_product_set(std::size_t n) {
  if (n < 1) throw std::invalid_argument("generating function needs a graph with n >= 1");
  return product_set(n - 1);
}

/// [C_{n-1}, i] for i = 0..|C_{n-1}|.
inline Coefficients recurrence_coefficients(std::size_t n) {
  return comtet_first_kind(degree_product_set(n)).coefficients;
}

/// sum_p M2^(p) t^p = numerator(t) / prod_{c in roots} (1 - c t).
/// The factor for c = 0 is the constant 1 but still counts toward |roots|.
struct RationalGF {
  Coefficients numerator;
  NatSet denominator_roots;

  /// Denominator in ascending powers of t, |roots| + 1 entries.
  [[nodiscard]] Coefficients denominator() const {
    return reciprocal_factor_product(denominator_roots);
  }

  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// Coefficients 0..series.size()-1 of denominator(t) * series(t). For a
/// correct denominator every coefficient at index >= deg(denominator) is 0.
inline Coefficients convolution_coefficients(std::span<const ExactInt> denominator,
                                             std::span<const ExactInt> series) {
  Coefficients out(series.size(), ExactInt{0});
  for (std::size_t k = 0; k < series.size(); ++k)
    for (std::size_t i = 0; i <= k && i < denominator.size(); ++i)
      out[k] += denominator[i] * series[k - i];
  return out;
}

/// Numerator a_k = sum_i [C, |C|-i] M2^(k-i) for k < |C|, i.e. the product of
/// the denominator with the series truncated below degree |C|.
inline RationalGF generating_function(const Graph& g) {
  RationalGF gf;
  gf.denominator_roots = degree_product_set(g.order());
  const auto series = m2_sequence(g, gf.denominator_roots.size());
  gf.numerator = convolution_coefficients(gf.denominator(), series);
  return gf;
}

// ---------------------------------------------------------------------------
// Recurrence

struct RecurrenceViolation {
  std::size_t p;
  ExactInt residual;
};

struct RecurrenceReport {
  /// |C_{n-1}|
  std::size_t order = 0;
  /// The instance at p = |C|: M2^(|C|) against -sum_{i=1}^{|C|-1} [C,i] M2^(i).
  ExactInt instance_lhs;
  ExactInt instance_rhs;
  /// sum_{i=0}^{|C|} [C,i] M2^(p-|C|+i) for each |C| <= p <= p_max, in order.
  std::vector<ExactInt> shifted_residuals;
  std::vector<RecurrenceViolation> violations;

  [[nodiscard]] bool instance_holds() const { return instance_lhs == instance_rhs; }
  [[nodiscard]] bool ok() const { return instance_holds() && violations.empty(); }
};

/// Checks the recurrence against the supplied values M2^(0..p_max).
inline RecurrenceReport recurrence_check(std::size_t n, std::span<const ExactInt> values) {
  const auto coeffs = recurrence_coefficients(n);
  const std::size_t order = coeffs.size() - 1;
  if (values.size() <= order)
    throw std::invalid_argument("recurrence check needs p_max >= |C_{n-1}| = " +
                                std::to_string(order));
  RecurrenceReport report;
  report.order = order;
  report.instance_lhs = values[order];
  for (std::size_t i = 1; i < order; ++i) report.instance_rhs -= coeffs[i] * values[i];
  // the printed instance omits i = 0, which is only sound when [C,0] = 0
  if (coeffs[0] != 0) report.instance_rhs -= coeffs[0] * values[0];

  for (std::size_t p = order; p < values.size(); ++p) {
    ExactInt residual = 0;
    for (std::size_t i = 0; i <= order; ++i) residual += coeffs[i] * values[p - order + i];
    if (residual != 0) report.violations.push_back({p, residual});
    report.shifted_residuals.push_back(std::move(residual));
  }
  return report;
}

inline RecurrenceReport recurrence_check(const Graph& g, std::size_t p_max) {
  const auto values = m2_sequence(g, p_max + 1);
  return recurrence_check(g.order(), values);
}

}  // namespace dstar
