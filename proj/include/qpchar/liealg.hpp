#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpchar/series.hpp"

namespace qpchar {

/// Basis of affine sl2 in the principal picture:
/// B(m) for odd m, X(n) for all integers n, the central element c and the
/// degree operator d. deg B(n) = deg X(n) = n, deg c = deg d = 0.
enum class BasisKind : int { B = 0, X = 1, Central = 2, Degree = 3 };

class BasisElement {
public:
  static BasisElement B(int n) {
    if (n % 2 == 0) throw std::invalid_argument("B(n) requires odd n, got " + std::to_string(n));
    return BasisElement(BasisKind::B, n);
  }
  static BasisElement X(int n) { return BasisElement(BasisKind::X, n); }
  static BasisElement central() { return BasisElement(BasisKind::Central, 0); }
  static BasisElement degree_op() { return BasisElement(BasisKind::Degree, 0); }

  BasisKind kind() const { return kind_; }
  int index() const { return index_; }

  int degree() const {
    return (kind_ == BasisKind::B || kind_ == BasisKind::X) ? index_ : 0;
  }

  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;

  std::string to_string() const {
    switch (kind_) {
      case BasisKind::B: return "B(" + std::to_string(index_) + ")";
      case BasisKind::X: return "X(" + std::to_string(index_) + ")";
      case BasisKind::Central: return "c";
      default: return "d";
    }
  }

private:
  BasisElement(BasisKind kind, int index) : kind_(kind), index_(index) {}
  BasisKind kind_;
  int index_;
};

/// Finite integer combination of basis elements; zero coefficients are
/// never stored, so equality of maps is equality of combinations.
class LieCombination {
public:
  void add(const BasisElement& e, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const LieCombination& other, long long scale) {
    for (const auto& [e, c] : other.terms_) add(e, c * scale);
  }

  long long coefficient(const BasisElement& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  bool empty() const { return terms_.empty(); }
  const std::map<BasisElement, long long>& terms() const { return terms_; }

  friend bool operator==(const LieCombination& a, const LieCombination& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += std::to_string(c) + "*" + e.to_string();
    }
    return out;
  }

private:
  std::map<BasisElement, long long> terms_;
};

/// Structure constants:
///   [B(m),B(n)] = m delta_{m+n,0} c
///   [B(m),X(n)] = 2 X(m+n)
///   [X(m),X(n)] = (-1)^{m+1} 2 B(m+n) + (-1)^m m delta_{m+n,0} c
///   [d,B(n)] = n B(n),  [d,X(n)] = n X(n),  c central.
/// B(m+n) with m+n even is zero by convention and is dropped silently here;
/// only the public B() constructor rejects even indices.
inline LieCombination bracket(const BasisElement& x, const BasisElement& y) {
  LieCombination out;
  const BasisKind kx = x.kind(), ky = y.kind();

  if (kx == BasisKind::Central || ky == BasisKind::Central) return out;

  if (kx == BasisKind::Degree && ky == BasisKind::Degree) return out;
  if (kx == BasisKind::Degree) {
    out.add(y, y.index());
    return out;
  }
  if (ky == BasisKind::Degree) {
    out.add(x, -static_cast<long long>(x.index()));
    return out;
  }

  const int m = x.index(), n = y.index();
  if (kx == BasisKind::B && ky == BasisKind::B) {
    if (m + n == 0) out.add(BasisElement::central(), m);
    return out;
  }
  if (kx == BasisKind::B && ky == BasisKind::X) {
    out.add(BasisElement::X(m + n), 2);
    return out;
  }
  if (kx == BasisKind::X && ky == BasisKind::B) {
    out.add(BasisElement::X(m + n), -2);
    return out;
  }

  // [X(m), X(n)]
  const long long sign = (m % 2 == 0) ? 1 : -1; // (-1)^m
  if ((m + n) % 2 != 0) out.add(BasisElement::B(m + n), -2 * sign);
  if (m + n == 0) out.add(BasisElement::central(), sign * m);
  return out;
}

inline LieCombination bracket(const BasisElement& x, const LieCombination& y) {
  LieCombination out;
  for (const auto& [e, c] : y.terms()) out.add_scaled(bracket(x, e), c);
  return out;
}

/// All basis elements with |index| <= window, in a fixed deterministic order.
inline std::vector<BasisElement> basis_window(int window) {
  if (window < 1) throw std::invalid_argument("basis_window: window must be >= 1");
  std::vector<BasisElement> v;
  for (int i = -window; i <= window; ++i)
    if (i % 2 != 0) v.push_back(BasisElement::B(i));
  for (int i = -window; i <= window; ++i) v.push_back(BasisElement::X(i));
  v.push_back(BasisElement::central());
  v.push_back(BasisElement::degree_op());
  return v;
}

/// Exhaustive antisymmetry sweep: [x,y] = -[y,x] on the window.
inline bool antisymmetry_check(int window) {
  const auto basis = basis_window(window);
  for (const auto& x : basis)
    for (const auto& y : basis) {
      LieCombination lhs = bracket(x, y);
      LieCombination rhs;
      rhs.add_scaled(bracket(y, x), -1);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

/// Exhaustive Jacobi sweep: [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 for every
/// triple of basis elements with |index| <= window.
inline bool jacobi_check(int window) {
  const auto basis = basis_window(window);
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        LieCombination acc = bracket(x, bracket(y, z));
        acc.add_scaled(bracket(y, bracket(z, x)), 1);
        acc.add_scaled(bracket(z, bracket(x, y)), 1);
        if (!acc.empty()) return false;
      }
  return true;
}

/// PBW monomial count of the Verma module: monomials
/// B(i_1)...B(i_r) X(j_1)...X(j_s) v with odd i_1<=...<=i_r<=-1 and
/// j_1<=...<=j_s<=-1, counted by total degree -n. Generating-function route:
/// F * prod_{n>=1} (1-q^n)^{-1}.
inline TruncatedSeries pbw_count(int order) {
  if (order < 0) throw std::invalid_argument("pbw_count: order must be >= 0");
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int a = 1; a <= order; a += 2) detail::apply_inv_one_minus(c, a); // B parts
  for (int a = 1; a <= order; ++a) detail::apply_inv_one_minus(c, a);   // X parts
  return TruncatedSeries(std::move(c));
}

namespace detail {

// Walk multisets of parts from `parts` (descending choice) with weight
// budget `remaining`; every node is one monomial tail.
template <typename Visit>
void walk_part_multisets(const std::vector<int>& parts, std::size_t from, int remaining,
                         int used, Visit&& visit) {
  visit(used);
  for (std::size_t i = from; i < parts.size(); ++i) {
    if (parts[i] > remaining) break;
    walk_part_multisets(parts, i, remaining - parts[i], used + parts[i], visit);
  }
}

} // namespace detail

/// Direct backtracking enumeration of the PBW monomials, for cross-checking
/// pbw_count at small orders. Every monomial of degree >= -order is visited
/// exactly once.
inline TruncatedSeries pbw_count_direct(int order) {
  if (order < 0) throw std::invalid_argument("pbw_count_direct: order must be >= 0");
  std::vector<int> odd_parts, all_parts;
  for (int a = 1; a <= order; a += 2) odd_parts.push_back(a);
  for (int a = 1; a <= order; ++a) all_parts.push_back(a);

  std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
  detail::walk_part_multisets(odd_parts, 0, order, 0, [&](int heis_weight) {
    detail::walk_part_multisets(all_parts, 0, order - heis_weight, heis_weight,
                                [&](int total) { c[static_cast<std::size_t>(total)] += 1; });
  });
  return TruncatedSeries(std::move(c));
}

} // namespace qpchar
