#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpchar/series.hpp"

namespace qpchar {

/// Dominant highest weight k0*Lambda_0 + k1*Lambda_1 of affine sl2.
struct HighestWeight {
  int k0 = 0;
  int k1 = 0;

  HighestWeight(int k0_, int k1_) : k0(k0_), k1(k1_) {
    if (k0 < 0 || k1 < 0)
      throw std::invalid_argument("HighestWeight: k0, k1 must be nonnegative");
  }

  int level() const { return k0 + k1; }              // k
  int threshold() const { return std::min(k0, k1); } // t
  int max_charge() const { return level() / 2; }     // [k/2]

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

/// Initial-condition bound n_Lambda(p) = p for p <= t, 2p - t for p >= t+1,
/// defined for charges 1 <= p <= [k/2].
inline int n_lambda(const HighestWeight& w, int p) {
  if (p < 1 || p > w.max_charge())
    throw std::invalid_argument("n_lambda: charge " + std::to_string(p) +
                                " outside [1, " + std::to_string(w.max_charge()) + "]");
  const int t = w.threshold();
  return p <= t ? p : 2 * p - t;
}

/// Which module the difference/initial conditions refer to: the Verma module
/// (charges unbounded, bound n(p) = p) or a standard module L(k0,k1)
/// (charges capped at [k/2], bound n_Lambda, parity rule at charge k/2).
class ModuleSpec {
public:
  static ModuleSpec verma() { return ModuleSpec(std::nullopt); }

  static ModuleSpec standard(const HighestWeight& w) {
    if (w.level() < 1)
      throw std::invalid_argument("ModuleSpec: standard module requires level k >= 1");
    return ModuleSpec(w);
  }

  bool is_standard() const { return weight_.has_value(); }

  const HighestWeight& weight() const {
    if (!weight_) throw std::logic_error("ModuleSpec: the Verma module carries no highest weight");
    return *weight_;
  }

  /// [k/2] for a standard module; no cap for the Verma module.
  std::optional<int> charge_cap() const {
    return weight_ ? std::optional<int>(weight_->max_charge()) : std::nullopt;
  }

  /// The bound n(p) in the last-factor and charge-boundary initial conditions.
  int initial_bound(int p) const {
    if (!weight_) {
      if (p < 1) throw std::invalid_argument("initial_bound: charge must be >= 1");
      return p;
    }
    return n_lambda(*weight_, p);
  }

  /// True when degrees at charge p are parity-constrained:
  /// standard module, k even, p = k/2.
  bool parity_constrained(int p) const {
    return weight_ && weight_->level() % 2 == 0 && p == weight_->max_charge();
  }

  /// Residue class forced at the top charge: j = k0 (mod 2).
  int parity_residue() const { return weight_ ? weight_->k0 % 2 : 0; }

  std::string label() const {
    if (!weight_) return "verma";
    return "standard(k0=" + std::to_string(weight_->k0) +
           ",k1=" + std::to_string(weight_->k1) + ")";
  }

  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;

private:
  explicit ModuleSpec(std::optional<HighestWeight> w) : weight_(w) {}
  std::optional<HighestWeight> weight_;
};

/// Charge-type of a quasi-particle monomial, stored as multiplicities
/// n_p = #{quasi-particles of charge p}; equivalently the nondecreasing
/// tuple (p_1,...,p_s). N_j = sum_{p>=j} n_p are the tail counts.
class ChargeType {
public:
  ChargeType() = default; // empty charge type

  static ChargeType from_multiplicities(std::vector<int> mult) {
    for (int m : mult)
      if (m < 0) throw std::invalid_argument("ChargeType: multiplicities must be >= 0");
    while (!mult.empty() && mult.back() == 0) mult.pop_back();
    ChargeType ct;
    ct.mult_ = std::move(mult);
    return ct;
  }

  static ChargeType from_tuple(const std::vector<int>& charges) {
    std::vector<int> mult;
    int prev = 1;
    for (int p : charges) {
      if (p < prev)
        throw std::invalid_argument("ChargeType: tuple must be nondecreasing and >= 1");
      prev = p;
      if (static_cast<int>(mult.size()) < p) mult.resize(static_cast<std::size_t>(p), 0);
      ++mult[static_cast<std::size_t>(p) - 1];
    }
    return from_multiplicities(std::move(mult));
  }

  int max_charge() const { return static_cast<int>(mult_.size()); }

  int multiplicity(int p) const {
    if (p < 1 || p > max_charge()) return 0;
    return mult_[static_cast<std::size_t>(p) - 1];
  }

  /// s = number of quasi-particles.
  int particle_count() const {
    int s = 0;
    for (int m : mult_) s += m;
    return s;
  }

  /// p_1 + ... + p_s.
  int total_charge() const {
    int c = 0;
    for (int p = 1; p <= max_charge(); ++p) c += p * multiplicity(p);
    return c;
  }

  /// The nondecreasing tuple (p_1,...,p_s).
  std::vector<int> tuple() const {
    std::vector<int> t;
    for (int p = 1; p <= max_charge(); ++p)
      t.insert(t.end(), static_cast<std::size_t>(multiplicity(p)), p);
    return t;
  }

  /// Tail counts N_j = n_j + n_{j+1} + ... for j = 1..max_charge.
  std::vector<int> tail_counts() const {
    std::vector<int> N(mult_.size());
    int acc = 0;
    for (int j = max_charge(); j >= 1; --j) {
      acc += multiplicity(j);
      N[static_cast<std::size_t>(j) - 1] = acc;
    }
    return N;
  }

  friend bool operator==(const ChargeType&, const ChargeType&) = default;

private:
  std::vector<int> mult_;
};

/// One basis monomial B(i_1)...B(i_r) X^{(p_1)}(j_1)...X^{(p_s)}(j_s):
/// a Heisenberg part (odd i_1<=...<=i_r<=-1) and a quasi-particle part
/// (nondecreasing charges with matching degrees).
struct QPMonomial {
  std::vector<int> heisenberg;
  std::vector<int> charges;
  std::vector<int> degrees;

  /// Negated total degree; nonnegative for admissible monomials.
  int exponent() const {
    int e = 0;
    for (int i : heisenberg) e -= i;
    for (int j : degrees) e -= j;
    return e;
  }

  int total_charge() const {
    int c = 0;
    for (int p : charges) c += p;
    return c;
  }

  /// Canonical text form, e.g. "B(-3)B(-1) X1(-1)X2(-4)"; "1" when empty.
  std::string to_string() const {
    if (heisenberg.empty() && charges.empty()) return "1";
    std::string out;
    for (int i : heisenberg) out += "B(" + std::to_string(i) + ")";
    if (!heisenberg.empty() && !charges.empty()) out += " ";
    for (std::size_t l = 0; l < charges.size(); ++l)
      out += "X" + std::to_string(charges[l]) + "(" + std::to_string(degrees[l]) + ")";
    return out;
  }

  friend bool operator==(const QPMonomial&, const QPMonomial&) = default;
};

namespace detail {

// Reverse-lexicographic comparison: compare right-aligned, rightmost entry
// first; on a tie with unequal lengths the shorter tuple is smaller.
inline bool rev_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t na = a.size(), nb = b.size();
  for (std::size_t k = 1; k <= std::min(na, nb); ++k) {
    if (a[na - k] != b[nb - k]) return a[na - k] < b[nb - k];
  }
  return na < nb;
}

} // namespace detail

/// The linear order "<" on quasi-particle monomials (with a Heisenberg
/// tiebreak): a precedes b iff a has greater total charge, or equal total
/// charge and reverse-lexicographically smaller charge-type, then smaller
/// degree-type, then smaller Heisenberg part.
inline bool monomial_prec(const QPMonomial& a, const QPMonomial& b) {
  if (a.total_charge() != b.total_charge()) return a.total_charge() > b.total_charge();
  if (a.charges != b.charges) return detail::rev_lex_less(a.charges, b.charges);
  if (a.degrees != b.degrees) return detail::rev_lex_less(a.degrees, b.degrees);
  if (a.heisenberg != b.heisenberg) return detail::rev_lex_less(a.heisenberg, b.heisenberg);
  return false;
}

/// Listing order used by enumeration output: exponent ascending, then the
/// reverse of monomial_prec (empty monomial first, B-only parts before
/// charged parts, lowest charges first).
inline bool listing_less(const QPMonomial& a, const QPMonomial& b) {
  if (a.exponent() != b.exponent()) return a.exponent() < b.exponent();
  return monomial_prec(b, a);
}

/// Admissibility of a basis monomial (difference and initial conditions):
///   - Heisenberg indices odd, <= -1, nondecreasing;
///   - charges nondecreasing, >= 1 (and <= [k/2] for standard modules);
///   - j_s <= -n(p_s);
///   - p_l < p_{l+1}  implies  j_l <= -n(p_l) - 2 p_l (s-l);
///   - p_l = p_{l+1}  implies  j_l <= -2 p_l + j_{l+1};
///   - k even and p_l = k/2  implies  j_l = k0 (mod 2).
inline bool check_conditions(const QPMonomial& m, const ModuleSpec& spec) {
  if (m.charges.size() != m.degrees.size())
    throw std::invalid_argument("check_conditions: charges/degrees length mismatch");

  int prev = std::numeric_limits<int>::min();
  for (int i : m.heisenberg) {
    if (i > -1 || i % 2 == 0 || i < prev) return false;
    prev = i;
  }

  const int s = static_cast<int>(m.charges.size());
  const auto cap = spec.charge_cap();
  for (int l = 0; l < s; ++l) {
    const int p = m.charges[static_cast<std::size_t>(l)];
    if (p < 1) return false;
    if (l > 0 && p < m.charges[static_cast<std::size_t>(l) - 1]) return false;
    if (cap && p > *cap) return false;
  }
  if (s == 0) return true;

  if (m.degrees.back() > -spec.initial_bound(m.charges.back())) return false;
  for (int l = 1; l < s; ++l) {
    const int pl = m.charges[static_cast<std::size_t>(l) - 1];
    const int jl = m.degrees[static_cast<std::size_t>(l) - 1];
    if (pl == m.charges[static_cast<std::size_t>(l)]) {
      if (jl > -2 * pl + m.degrees[static_cast<std::size_t>(l)]) return false;
    } else {
      if (jl > -spec.initial_bound(pl) - 2 * pl * (s - l)) return false;
    }
  }

  for (int l = 0; l < s; ++l) {
    const int p = m.charges[static_cast<std::size_t>(l)];
    if (spec.parity_constrained(p)) {
      const int j = m.degrees[static_cast<std::size_t>(l)];
      if (((j % 2) + 2) % 2 != spec.parity_residue()) return false;
    }
  }
  return true;
}

/// The unique maximal admissible degree-type for a charge type, built
/// greedily right to left: j_s = -n(p_s), steps of -2p within equal
/// charges, and -n(p_l) - 2 p_l (s-l) at charge boundaries.
inline std::vector<int> min_degree_type(const ChargeType& ct, const ModuleSpec& spec) {
  if (const auto cap = spec.charge_cap(); cap && ct.max_charge() > *cap)
    throw std::invalid_argument("min_degree_type: charge " + std::to_string(ct.max_charge()) +
                                " exceeds cap [k/2] = " + std::to_string(*cap));
  const std::vector<int> p = ct.tuple();
  const int s = static_cast<int>(p.size());
  std::vector<int> j(static_cast<std::size_t>(s));
  for (int l = s; l >= 1; --l) {
    const int pl = p[static_cast<std::size_t>(l) - 1];
    if (l == s)
      j[static_cast<std::size_t>(l) - 1] = -spec.initial_bound(pl);
    else if (pl == p[static_cast<std::size_t>(l)])
      j[static_cast<std::size_t>(l) - 1] = j[static_cast<std::size_t>(l)] - 2 * pl;
    else
      j[static_cast<std::size_t>(l) - 1] = -spec.initial_bound(pl) - 2 * pl * (s - l);
  }
  return j;
}

/// Exponent of the maximal admissible degree-type. Equals sum_j N_j^2 for
/// the Verma module and sum_j N_j^2 + N_{t+1} + ... + N_{[k/2]} for a
/// standard module.
inline int min_exponent(const ChargeType& ct, const ModuleSpec& spec) {
  int e = 0;
  for (int j : min_degree_type(ct, spec)) e -= j;
  return e;
}

/// All charge types with min_exponent <= budget, ordered by total charge
/// descending, then reverse-lexicographically ascending charge-type.
inline std::vector<ChargeType> enumerate_charge_types(const ModuleSpec& spec, int budget) {
  if (budget < 0) throw std::invalid_argument("enumerate_charge_types: budget must be >= 0");

  // A type containing charge p has N_j >= 1 for all j <= p, so
  // sum N_j^2 >= p; together with the cap this bounds the top charge.
  int top = budget;
  if (const auto cap = spec.charge_cap()) top = std::min(top, *cap);

  // Walk the tail counts N_1 >= N_2 >= ... >= N_m >= 1 directly; every
  // prefix is a charge type (n_p = N_p - N_{p+1}) and sum N_j^2 <= budget
  // bounds the walk since min_exponent dominates it.
  std::vector<ChargeType> out;
  out.push_back(ChargeType());
  std::vector<int> tails;
  auto rec = [&](auto&& self, long long quad) -> void {
    const int m = static_cast<int>(tails.size());
    if (m >= top) return;
    const int upper = tails.empty() ? budget : tails.back();
    for (int N = 1; N <= upper; ++N) {
      const long long quad_here = quad + static_cast<long long>(N) * N;
      if (quad_here > budget) break;
      tails.push_back(N);
      std::vector<int> mult(tails.size());
      for (std::size_t p = 0; p < tails.size(); ++p)
        mult[p] = tails[p] - (p + 1 < tails.size() ? tails[p + 1] : 0);
      ChargeType ct = ChargeType::from_multiplicities(std::move(mult));
      if (min_exponent(ct, spec) <= budget) out.push_back(std::move(ct));
      self(self, quad_here);
      tails.pop_back();
    }
  };
  rec(rec, 0);

  // decorate-sort: the comparator keys are O(size) to build
  struct Key {
    int total;
    std::vector<int> tuple;
    ChargeType ct;
  };
  std::vector<Key> keyed;
  keyed.reserve(out.size());
  for (auto& ct : out) keyed.push_back(Key{ct.total_charge(), ct.tuple(), std::move(ct)});
  std::sort(keyed.begin(), keyed.end(), [](const Key& a, const Key& b) {
    if (a.total != b.total) return a.total > b.total;
    return detail::rev_lex_less(a.tuple, b.tuple);
  });
  out.clear();
  for (auto& k : keyed) out.push_back(std::move(k.ct));
  return out;
}

/// Counting series of quasi-particle parts (no Heisenberg factor):
/// coefficient of q^n = number of admissible parts of exponent n. Computed
/// as sum over charge types of q^{min_exponent} times one reciprocal
/// Pochhammer gap factor per charge; the gap at charge k/2 (k even,
/// standard) runs in steps of 2 because of the top-charge parity rule.
inline TruncatedSeries qp_count_series(const ModuleSpec& spec, int order) {
  if (order < 0) throw std::invalid_argument("qp_count_series: order must be >= 0");
  // TODO: share gap-factor prefixes between charge types; beyond order ~150
  // the per-type recurrence passes dominate the runtime.
  std::vector<Integer> acc(static_cast<std::size_t>(order) + 1);
  for (const ChargeType& ct : enumerate_charge_types(spec, order)) {
    const int e = min_exponent(ct, spec);
    std::vector<Integer> term(static_cast<std::size_t>(order) + 1);
    term[static_cast<std::size_t>(e)] = 1;
    for (int p = 1; p <= ct.max_charge(); ++p) {
      const int np = ct.multiplicity(p);
      if (np == 0) continue;
      const int step = spec.parity_constrained(p) ? 2 : 1;
      for (int i = 1; i <= np && step * i <= order; ++i)
        detail::apply_inv_one_minus(term, step * i);
    }
    for (std::size_t n = 0; n < acc.size(); ++n) acc[n] += term[n];
  }
  return TruncatedSeries(std::move(acc));
}

namespace detail {

// Exponent of the greedy completion for tuple positions 1..l (1-based),
// given the degree already assigned at position l+1.
inline long long greedy_completion_cost(const std::vector<int>& p, int l, int s, int j_next,
                                        const ModuleSpec& spec) {
  long long cost = 0;
  int jn = j_next;
  for (int m = l; m >= 1; --m) {
    const int pm = p[static_cast<std::size_t>(m) - 1];
    int bound;
    if (m == s)
      bound = -spec.initial_bound(pm);
    else if (pm == p[static_cast<std::size_t>(m)])
      bound = jn - 2 * pm;
    else
      bound = -spec.initial_bound(pm) - 2 * pm * (s - m);
    cost += -static_cast<long long>(bound);
    jn = bound;
  }
  return cost;
}

} // namespace detail

/// Exhaustive backtracking enumeration of quasi-particle parts with exponent
/// <= max_exponent, in listing order. The Heisenberg factor is handled
/// separately (by convolution with F, or by the CLI listing).
inline std::vector<QPMonomial> qp_enumerate(const ModuleSpec& spec, int max_exponent) {
  if (max_exponent < 0) throw std::invalid_argument("qp_enumerate: max_exponent must be >= 0");

  std::vector<QPMonomial> out;
  for (const ChargeType& ct : enumerate_charge_types(spec, max_exponent)) {
    const std::vector<int> p = ct.tuple();
    const int s = static_cast<int>(p.size());
    if (s == 0) {
      out.push_back(QPMonomial{});
      continue;
    }
    std::vector<int> degrees(static_cast<std::size_t>(s));
    // Assign degrees right to left; at each position walk down from the
    // bound while the greedy completion of the prefix still fits the budget.
    auto rec = [&](auto&& self, int l, long long exp_so_far) -> void {
      if (l == 0) {
        QPMonomial m;
        m.charges = p;
        m.degrees = degrees;
        out.push_back(std::move(m));
        return;
      }
      const int pl = p[static_cast<std::size_t>(l) - 1];
      int bound;
      if (l == s)
        bound = -spec.initial_bound(pl);
      else if (pl == p[static_cast<std::size_t>(l)])
        bound = degrees[static_cast<std::size_t>(l)] - 2 * pl;
      else
        bound = -spec.initial_bound(pl) - 2 * pl * (s - l);
      int step = 1;
      if (spec.parity_constrained(pl)) {
        step = 2;
        if (((bound % 2) + 2) % 2 != spec.parity_residue()) --bound; // unreachable for valid bounds
      }
      for (int j = bound;; j -= step) {
        const long long here = exp_so_far - j;
        if (here + detail::greedy_completion_cost(p, l - 1, s, j, spec) > max_exponent) break;
        degrees[static_cast<std::size_t>(l) - 1] = j;
        self(self, l - 1, here);
      }
    };
    rec(rec, s, 0);
  }
  std::sort(out.begin(), out.end(), listing_less);
  return out;
}

/// Full basis listing (Heisenberg factor times quasi-particle part) with
/// exponent <= max_exponent, in listing order. Per-exponent counts equal the
/// module character coefficients.
inline std::vector<QPMonomial> basis_enumerate(const ModuleSpec& spec, int max_exponent) {
  if (max_exponent < 0)
    throw std::invalid_argument("basis_enumerate: max_exponent must be >= 0");

  // Partitions into odd parts, grouped by weight, parts as ascending
  // negatives (most negative first).
  std::vector<std::vector<std::vector<int>>> heis_by_weight(
      static_cast<std::size_t>(max_exponent) + 1);
  std::vector<int> cur;
  auto rec = [&](auto&& self, int weight, int max_part) -> void {
    heis_by_weight[static_cast<std::size_t>(weight)].push_back(cur);
    int part = std::min(max_part, max_exponent - weight);
    if (part % 2 == 0) --part;
    for (; part >= 1; part -= 2) {
      cur.push_back(-part);
      self(self, weight + part, part);
      cur.pop_back();
    }
  };
  rec(rec, 0, max_exponent);

  std::vector<QPMonomial> out;
  for (const QPMonomial& part : qp_enumerate(spec, max_exponent)) {
    const int budget = max_exponent - part.exponent();
    for (int w = 0; w <= budget; ++w)
      for (const auto& heis : heis_by_weight[static_cast<std::size_t>(w)]) {
        QPMonomial m = part;
        m.heisenberg = heis;
        out.push_back(std::move(m));
      }
  }
  std::sort(out.begin(), out.end(), listing_less);
  return out;
}

/// Partition-counting oracle: coefficient of q^n = number of partitions of n
/// whose parts are congruent to an allowed residue mod m. Plain dynamic
/// programming, independent of the series product builders.
inline TruncatedSeries partitions_with_parts_in(const std::set<int>& residues, int modulus,
                                                int order) {
  if (modulus < 1) throw std::invalid_argument("partitions_with_parts_in: modulus must be >= 1");
  for (int r : residues)
    if (r < 0 || r >= modulus)
      throw std::invalid_argument("partitions_with_parts_in: residue " + std::to_string(r) +
                                  " outside [0, " + std::to_string(modulus) + ")");
  if (order < 0) throw std::invalid_argument("partitions_with_parts_in: order must be >= 0");
  std::vector<Integer> ways(static_cast<std::size_t>(order) + 1);
  ways[0] = 1;
  for (int part = 1; part <= order; ++part) {
    if (residues.count(part % modulus) == 0) continue;
    for (int n = part; n <= order; ++n)
      ways[static_cast<std::size_t>(n)] += ways[static_cast<std::size_t>(n - part)];
  }
  return TruncatedSeries(std::move(ways));
}

} // namespace qpchar
