#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qpchar/combinat.hpp"
#include "qpchar/series.hpp"

namespace qpchar {

/// Parameters of the Gordon-Andrews-Bressoud identity family: modulus
/// 2l+s with s in {0,1}, l >= 2, excluded residues 0 and +-r. For odd
/// moduli (s=1) the family includes the boundary case r = l, where the
/// linear term N_r+...+N_{l-1} is empty (the Rogers-Ramanujan identity
/// itself is l=2, s=1, r=2); for even moduli the plain-product form only
/// holds for r <= l-1.
struct GRRParams {
  int l;
  int s;
  int r;

  GRRParams(int l_, int s_, int r_) : l(l_), s(s_), r(r_) {
    if (l < 2) throw std::invalid_argument("GRRParams: l must be >= 2");
    if (s != 0 && s != 1) throw std::invalid_argument("GRRParams: s must be 0 or 1");
    if (r < 1 || r > l - 1 + s)
      throw std::invalid_argument("GRRParams: r must satisfy 1 <= r <= " +
                                  std::to_string(l - 1 + s) + " for l=" + std::to_string(l_) +
                                  ", s=" + std::to_string(s_));
  }

  int modulus() const { return 2 * l + s; }
};

namespace detail {

// sum over (n_1,...,n_m) >= 0 of
//   q^{N_1^2+...+N_m^2 + N_{linear_from}+...+N_m}
//     / ((q)_{n_1} ... (q)_{n_{m-1}} (q^{last_step})_{n_m}),
// N_j = n_j + ... + n_m. A tuple only contributes when sum N_j^2 <= order,
// which is a valid cutoff since every exponent is >= sum N_j^2.
inline std::vector<Integer> fermionic_sum(int num_vars, int linear_from, int last_step,
                                          int order) {
  if (order < 0) throw std::invalid_argument("fermionic_sum: order must be >= 0");
  if (num_vars < 0) throw std::invalid_argument("fermionic_sum: num_vars must be >= 0");
  std::vector<Integer> acc(static_cast<std::size_t>(order) + 1);
  if (num_vars == 0) {
    acc[0] = 1;
    return acc;
  }
  std::vector<Integer> unit(static_cast<std::size_t>(order) + 1);
  unit[0] = 1;

  auto rec = [&](auto&& self, int j, int suffix_count, long long expo,
                 const std::vector<Integer>& incoming) -> void {
    if (j == 0) {
      if (expo > order) return; // lowest exponent already beyond truncation
      for (std::size_t n = 0; n + static_cast<std::size_t>(expo) < acc.size(); ++n)
        acc[n + static_cast<std::size_t>(expo)] += incoming[n];
      return;
    }
    const int step = (j == num_vars) ? last_step : 1;
    std::vector<Integer> work = incoming;
    for (int nj = 0;; ++nj) {
      const long long Nj = nj + suffix_count;
      // Variables below j all have N >= N_j, each paying at least N_j^2.
      if (expo + static_cast<long long>(j) * Nj * Nj > order) break;
      if (nj > 0) apply_inv_one_minus(work, step * nj);
      const long long contrib = Nj * Nj + (j >= linear_from ? Nj : 0);
      self(self, j - 1, static_cast<int>(Nj), expo + contrib, work);
    }
  };
  rec(rec, num_vars, 0, 0, unit);
  return acc;
}

// Multiply by F = prod_{n odd} (1-q^n)^{-1} in place.
inline void apply_fock_factor(std::vector<Integer>& c, int order) {
  for (int a = 1; a <= order; a += 2) apply_inv_one_minus(c, a);
}

} // namespace detail

/// Product side of the identity family: prod over n >= 1 with
/// n != 0, +-r (mod 2l+s) of (1-q^n)^{-1}.
inline TruncatedSeries grr_product(const GRRParams& gp, int order) {
  if (order < 0) throw std::invalid_argument("grr_product: order must be >= 0");
  const int m = gp.modulus();
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int a = 1; a <= order; ++a) {
    const int res = a % m;
    if (res == 0 || res == gp.r || res == m - gp.r) continue;
    detail::apply_inv_one_minus(c, a);
  }
  return TruncatedSeries(std::move(c));
}

/// Sum side of the identity family: l-1 summation variables, linear term
/// N_r + ... + N_{l-1}, last Pochhammer factor in steps of 2-s. With
/// cross_check set the result is compared against grr_product and a
/// discrepancy throws.
inline TruncatedSeries grr_sum(const GRRParams& gp, int order, bool cross_check = false) {
  TruncatedSeries out(detail::fermionic_sum(gp.l - 1, gp.r, 2 - gp.s, order));
  if (cross_check && !(out == grr_product(gp, order)))
    throw std::logic_error("grr_sum: sum side disagrees with product side (l=" +
                           std::to_string(gp.l) + ", s=" + std::to_string(gp.s) +
                           ", r=" + std::to_string(gp.r) + ")");
  return out;
}

/// Principally specialized Verma character F * prod_{n>=1} (1-q^n)^{-1}.
inline TruncatedSeries verma_char(int order) {
  if (order < 0) throw std::invalid_argument("verma_char: order must be >= 0");
  std::vector<Integer> c(fock_character(order).coefficients());
  for (int a = 1; a <= order; ++a) detail::apply_inv_one_minus(c, a);
  return TruncatedSeries(std::move(c));
}

/// Verma character by the fermionic route:
/// F * sum q^{N_1^2+N_2^2+...} / ((q)_{n_1} (q)_{n_2} ...) over all
/// finitely supported sequences. Charges j with n_j > 0 force
/// sum N^2 >= j, so `order` variables are enough at truncation `order`.
inline TruncatedSeries verma_char_sum(int order) {
  if (order < 0) throw std::invalid_argument("verma_char_sum: order must be >= 0");
  std::vector<Integer> c = detail::fermionic_sum(order, order + 1, 1, order);
  detail::apply_fock_factor(c, order);
  return TruncatedSeries(std::move(c));
}

/// Weyl-Kac principal specialization of the standard module character,
/// congruences modulo k+2:
///   k0 != k1:  F * prod_{n != 0, +-(k0+1)} (1-q^n)^{-1}
///   k0 == k1:  F * prod_{n != 0, k0+1} (1-q^n)^{-1} * prod_{n = k0+1} (1-q^n)
inline TruncatedSeries standard_char_product(const HighestWeight& w, int order) {
  if (w.level() < 1) throw std::invalid_argument("standard_char_product: level k must be >= 1");
  if (order < 0) throw std::invalid_argument("standard_char_product: order must be >= 0");
  const int m = w.level() + 2;
  std::vector<Integer> c(fock_character(order).coefficients());
  if (w.k0 != w.k1) {
    const int r1 = (w.k0 + 1) % m;
    const int r2 = (m - r1) % m;
    for (int a = 1; a <= order; ++a) {
      const int res = a % m;
      if (res == 0 || res == r1 || res == r2) continue;
      detail::apply_inv_one_minus(c, a);
    }
  } else {
    const int r1 = w.k0 + 1; // = (k+2)/2, self-paired residue
    for (int a = 1; a <= order; ++a) {
      const int res = a % m;
      if (res == 0 || res == r1) continue;
      detail::apply_inv_one_minus(c, a);
    }
    for (int a = 1; a <= order; ++a)
      if (a % m == r1) detail::apply_one_minus(c, a);
  }
  return TruncatedSeries(std::move(c));
}

/// Fermionic sum side of the standard module character: [k/2] variables,
/// linear term from i = min{k0,k1}+1, last Pochhammer factor in steps of 2
/// for even k (Bressoud) and 1 for odd k (Andrews); multiplied by F.
inline TruncatedSeries standard_char_sum(const HighestWeight& w, int order,
                                         bool cross_check = false) {
  if (w.level() < 1) throw std::invalid_argument("standard_char_sum: level k must be >= 1");
  if (order < 0) throw std::invalid_argument("standard_char_sum: order must be >= 0");
  const int vars = w.max_charge();
  const int linear_from = w.threshold() + 1;
  const int last_step = (w.level() % 2 == 0) ? 2 : 1;
  std::vector<Integer> c = detail::fermionic_sum(vars, linear_from, last_step, order);
  detail::apply_fock_factor(c, order);
  TruncatedSeries out(std::move(c));
  if (cross_check && !(out == standard_char_product(w, order)))
    throw std::logic_error("standard_char_sum: sum side disagrees with product side (k0=" +
                           std::to_string(w.k0) + ", k1=" + std::to_string(w.k1) + ")");
  return out;
}

/// Character read off the quasi-particle basis: the counting series of
/// admissible quasi-particle parts, convolved with F for the Heisenberg
/// factor.
inline TruncatedSeries standard_char_enumerated(const HighestWeight& w, int order) {
  if (w.level() < 1)
    throw std::invalid_argument("standard_char_enumerated: level k must be >= 1");
  std::vector<Integer> c(qp_count_series(ModuleSpec::standard(w), order).coefficients());
  detail::apply_fock_factor(c, order);
  return TruncatedSeries(std::move(c));
}

/// Verma character read off the quasi-particle basis conditions.
inline TruncatedSeries verma_char_enumerated(int order) {
  std::vector<Integer> c(qp_count_series(ModuleSpec::verma(), order).coefficients());
  detail::apply_fock_factor(c, order);
  return TruncatedSeries(std::move(c));
}

} // namespace qpchar
