#pragma once

// Exact scalars and the combinatorial number families used throughout the
// library: binomials, Stirling numbers of the second kind, Comtet numbers of
// the first kind, product sets and dense integer polynomials.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dstar {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// Dense coefficient list, index i holds the coefficient of x^i.
using Coefficients = std::vector<ExactInt>;

// ---------------------------------------------------------------------------
// Binomials and factorials

/// C(n, k); zero when k > n.
inline ExactInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  ExactInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline ExactInt factorial(std::uint64_t n) {
  ExactInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

/// Rows 0..max_n of Pascal's triangle; row r has r + 1 entries.
inline std::vector<std::vector<ExactInt>> pascal_rows(std::size_t max_n) {
  std::vector<std::vector<ExactInt>> rows(max_n + 1);
  for (std::size_t r = 0; r <= max_n; ++r) {
    rows[r].assign(r + 1, ExactInt{1});
    for (std::size_t c = 1; c < r; ++c) rows[r][c] = rows[r - 1][c - 1] + rows[r - 1][c];
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Stirling numbers of the second kind

namespace detail {

// Lazily grown triangle {n, k}, 0 <= k <= n, filled by
// {n, k} = k {n-1, k} + {n-1, k-1}. Readers share the lock; growth is exclusive.
class Stirling2Table {
 public:
  ExactInt get(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) append_row();
    return rows_[n][k];
  }

 private:
  void append_row() {
    const std::size_t n = rows_.size();
    std::vector<ExactInt> row(n + 1, ExactInt{0});
    if (n == 0) {
      row[0] = 1;
    } else {
      const auto& prev = rows_[n - 1];
      for (std::size_t k = 1; k <= n; ++k) {
        ExactInt value = prev[k - 1];
        if (k < n) value += ExactInt(k) * prev[k];
        row[k] = std::move(value);
      }
    }
    rows_.push_back(std::move(row));
  }

  std::shared_mutex mutex_;
  std::vector<std::vector<ExactInt>> rows_;
};

inline Stirling2Table& stirling2_table() {
  static Stirling2Table table;
  return table;
}

}  // namespace detail

/// Number of partitions of an n-set into k nonempty blocks.
inline ExactInt stirling2(std::size_t n, std::size_t k) {
  return detail::stirling2_table().get(n, k);
}

/// i! k! {p+1, i+1} {p+1, k+1}: the weight of S_{i,k}(G) in the expansion of
/// the general second Zagreb index of order p. Zero whenever i > p or k > p.
inline ExactInt star_coefficient(std::size_t p, std::size_t i, std::size_t k) {
  if (i > p || k > p) return 0;
  return factorial(i) * factorial(k) * stirling2(p + 1, i + 1) * stirling2(p + 1, k + 1);
}

// ---------------------------------------------------------------------------
// Sets of naturals and their generalized falling factorials

/// Strictly increasing list of naturals.
class NatSet {
 public:
  using value_type = std::uint64_t;
  using const_iterator = std::vector<value_type>::const_iterator;

  NatSet() = default;
  NatSet(std::initializer_list<value_type> values) : NatSet(std::vector<value_type>(values)) {}
  explicit NatSet(std::vector<value_type> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  }

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
  [[nodiscard]] bool contains(value_type v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
  }
  [[nodiscard]] const std::vector<value_type>& values() const noexcept { return values_; }
  [[nodiscard]] const_iterator begin() const noexcept { return values_.begin(); }
  [[nodiscard]] const_iterator end() const noexcept { return values_.end(); }
  [[nodiscard]] value_type operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const NatSet&, const NatSet&) = default;

 private:
  std::vector<value_type> values_;
};

/// C_n = { i*j : 0 <= i, j <= n }.
inline NatSet product_set(std::uint64_t n) {
  std::vector<NatSet::value_type> products;
  products.reserve((n + 1) * (n + 2) / 2);
  for (std::uint64_t i = 0; i <= n; ++i)
    for (std::uint64_t j = i; j <= n; ++j) products.push_back(i * j);
  return NatSet(std::move(products));
}

/// Coefficients of (z)_S = prod_{s in S} (z - s); coefficient i is the Comtet
/// number of the first kind [S, i].
struct SetPolynomial {
  Coefficients coefficients;

  [[nodiscard]] std::size_t degree() const noexcept {
    return coefficients.empty() ? 0 : coefficients.size() - 1;
  }
  [[nodiscard]] const ExactInt& operator[](std::size_t i) const { return coefficients.at(i); }

  [[nodiscard]] ExactInt evaluate(const ExactInt& z) const {
    ExactInt acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  friend bool operator==(const SetPolynomial&, const SetPolynomial&) = default;
};

/// Multiplies by (z - s) one element at a time:
/// new[i] = old[i-1] - s * old[i].
inline SetPolynomial comtet_first_kind(const NatSet& set) {
  Coefficients c{ExactInt{1}};
  c.reserve(set.size() + 1);
  for (auto s : set) {
    c.push_back(0);
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - ExactInt(s) * c[i];
    c[0] = -ExactInt(s) * c[0];
  }
  return SetPolynomial{std::move(c)};
}

// ---------------------------------------------------------------------------
// Dense polynomial helpers

/// Schoolbook product; an empty list is the zero polynomial.
inline Coefficients poly_mul(std::span<const ExactInt> a, std::span<const ExactInt> b) {
  if (a.empty() || b.empty()) return {};
  Coefficients out(a.size() + b.size() - 1, ExactInt{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// prod_{c in roots} (1 - c t) in ascending powers of t. A root of 0 still
/// contributes one degree (with a zero leading coefficient), so the result
/// always has |roots| + 1 entries and equals the reversed (z)_roots list.
inline Coefficients reciprocal_factor_product(const NatSet& roots) {
  Coefficients product{ExactInt{1}};
  for (auto c : roots) {
    const Coefficients factor{ExactInt{1}, -ExactInt(c)};
    product = poly_mul(product, factor);
  }
  return product;
}

}  // namespace dstar
