#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qpchar {

/// Exact integer type for all series coefficients. Character coefficients
/// grow super-polynomially, so fixed-width integers are not an option.
using Integer = boost::multiprecision::cpp_int;

namespace detail {

// In-place multiplication by 1/(1-q^a): c[n] += c[n-a], ascending n.
inline void apply_inv_one_minus(std::vector<Integer>& c, int a) {
  if (a < 1) throw std::invalid_argument("apply_inv_one_minus: a must be >= 1");
  for (std::size_t n = static_cast<std::size_t>(a); n < c.size(); ++n)
    c[n] += c[n - a];
}

// In-place multiplication by (1-q^a): c[n] -= c[n-a], descending n.
inline void apply_one_minus(std::vector<Integer>& c, int a) {
  if (a < 1) throw std::invalid_argument("apply_one_minus: a must be >= 1");
  for (std::size_t n = c.size(); n-- > static_cast<std::size_t>(a);)
    c[n] -= c[n - static_cast<std::size_t>(a)];
}

} // namespace detail

/// Power series in q truncated at a fixed order N, i.e. the coefficients of
/// q^0 .. q^N. Values are immutable once built; every operation returns a
/// fresh series. Binary operations demand equal orders -- silently mixing
/// truncation orders is the classic source of off-by-one identity failures.
class TruncatedSeries {
public:
  /// Zero series of the given order.
  explicit TruncatedSeries(int order) : coeffs_(checked_size(order)) {}

  /// Takes ownership of a coefficient vector; order = coeffs.size()-1.
  explicit TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
      throw std::invalid_argument("TruncatedSeries: need at least the q^0 coefficient");
  }

  /// Multiplicative identity 1 + 0q + ... + 0q^N.
  static TruncatedSeries one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
  }

  /// The monomial q^e (zero series when e > order).
  static TruncatedSeries monomial(int exponent, int order) {
    if (exponent < 0) throw std::invalid_argument("monomial: exponent must be >= 0");
    TruncatedSeries s(order);
    if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = 1;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of q^n; out-of-range n is rejected rather than padded.
  const Integer& coefficient(int n) const {
    if (n < 0 || n > order())
      throw std::out_of_range("coefficient index " + std::to_string(n) +
                              " outside [0, " + std::to_string(order()) + "]");
    return coeffs_[static_cast<std::size_t>(n)];
  }

  const std::vector<Integer>& coefficients() const { return coeffs_; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_equal_orders(a, b, "add");
    std::vector<Integer> c(a.coeffs_);
    for (std::size_t n = 0; n < c.size(); ++n) c[n] += b.coeffs_[n];
    return TruncatedSeries(std::move(c));
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_equal_orders(a, b, "subtract");
    std::vector<Integer> c(a.coeffs_);
    for (std::size_t n = 0; n < c.size(); ++n) c[n] -= b.coeffs_[n];
    return TruncatedSeries(std::move(c));
  }

  /// Cauchy product truncated at the common order; exact.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_equal_orders(a, b, "multiply");
    std::vector<Integer> c(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < c.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return TruncatedSeries(std::move(c));
  }

private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    return static_cast<std::size_t>(order) + 1;
  }

  static void require_equal_orders(const TruncatedSeries& a, const TruncatedSeries& b,
                                   const char* op) {
    if (a.order() != b.order())
      throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                  std::to_string(a.order()) + " vs " +
                                  std::to_string(b.order()) + ")");
  }

  std::vector<Integer> coeffs_;
};

/// s * (1-q^a)^{-1}, via the recurrence c'_n = c_n + c'_{n-a}.
inline TruncatedSeries mul_inv_one_minus(const TruncatedSeries& s, int a) {
  std::vector<Integer> c(s.coefficients());
  detail::apply_inv_one_minus(c, a);
  return TruncatedSeries(std::move(c));
}

/// s * (1-q^a); exact inverse of mul_inv_one_minus with the same a.
inline TruncatedSeries mul_one_minus(const TruncatedSeries& s, int a) {
  std::vector<Integer> c(s.coefficients());
  detail::apply_one_minus(c, a);
  return TruncatedSeries(std::move(c));
}

/// 1 / prod_{i=1..n} (1-q^{step*i}), the reciprocal finite q-Pochhammer
/// (q^step)_n with step ladder step, 2step, ..., n*step. n = 0 gives 1.
inline TruncatedSeries poch_inv(int step, int n, int order) {
  if (step < 1) throw std::invalid_argument("poch_inv: step must be >= 1");
  if (n < 0) throw std::invalid_argument("poch_inv: n must be >= 0");
  TruncatedSeries s = TruncatedSeries::one(order);
  std::vector<Integer> c(s.coefficients());
  for (int i = 1; i <= n; ++i) {
    long long a = static_cast<long long>(step) * i;
    if (a > order) break; // factors beyond the truncation order act as 1
    detail::apply_inv_one_minus(c, static_cast<int>(a));
  }
  return TruncatedSeries(std::move(c));
}

/// Fock-space character of the principal Heisenberg subalgebra:
/// F = prod_{n>=1} (1-q^{2n-1})^{-1}, the odd-part partition series.
inline TruncatedSeries fock_character(int order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  std::vector<Integer> c(s.coefficients());
  for (int a = 1; a <= order; a += 2) detail::apply_inv_one_minus(c, a);
  return TruncatedSeries(std::move(c));
}

} // namespace qpchar
