#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpchar/characters.hpp"
#include "qpchar/combinat.hpp"
#include "qpchar/liealg.hpp"
#include "qpchar/series.hpp"

namespace qpchar {

enum class VerifyStatus { Match, Mismatch };

/// Outcome of one identity check. A match at order N is evidence up to that
/// order, not a proof. On mismatch, first_mismatch is the smallest
/// disagreeing index and lhs/rhs are the two disagreeing quantities there.
struct VerificationReport {
  std::string label;
  int order = 0;
  VerifyStatus status = VerifyStatus::Match;
  std::optional<int> first_mismatch;
  std::optional<Integer> lhs;
  std::optional<Integer> rhs;
  double elapsed_ms = 0.0;

  bool ok() const { return status == VerifyStatus::Match; }
};

namespace detail {

class Stopwatch {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace detail

/// Exact coefficient-wise comparison; reports the smallest mismatch index.
inline VerificationReport compare(const TruncatedSeries& a, const TruncatedSeries& b,
                                  const std::string& label) {
  if (a.order() != b.order())
    throw std::invalid_argument("compare: order mismatch (" + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()) + ")");
  detail::Stopwatch timer;
  VerificationReport rep;
  rep.label = label;
  rep.order = a.order();
  for (int n = 0; n <= a.order(); ++n) {
    if (a.coefficient(n) != b.coefficient(n)) {
      rep.status = VerifyStatus::Mismatch;
      rep.first_mismatch = n;
      rep.lhs = a.coefficient(n);
      rep.rhs = b.coefficient(n);
      break;
    }
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

/// Graded dimensions of the maximal submodule W = ker(M(Lambda) ->>
/// L(Lambda)), computed as the difference of the two character routes:
/// dim W_n = [q^n] verma_char - [q^n] standard_char_enumerated. All
/// differences must be >= 0, and for weights (l+1, l) additionally
/// dim W_{l+1} = 1 and dim W_{l+2} = 3.
inline VerificationReport complement_check(const HighestWeight& w, int order) {
  detail::Stopwatch timer;
  VerificationReport rep;
  rep.label = "complement(k0=" + std::to_string(w.k0) + ",k1=" + std::to_string(w.k1) + ")";
  rep.order = order;

  const TruncatedSeries verma = verma_char(order);
  const TruncatedSeries standard = standard_char_enumerated(w, order);
  for (int n = 0; n <= order && rep.ok(); ++n) {
    if (verma.coefficient(n) < standard.coefficient(n)) {
      rep.status = VerifyStatus::Mismatch;
      rep.first_mismatch = n;
      rep.lhs = verma.coefficient(n);
      rep.rhs = standard.coefficient(n);
    }
  }

  if (rep.ok() && w.k0 == w.k1 + 1 && w.k1 >= 1) {
    const int l = w.k1;
    const Integer expected[] = {1, 3};
    for (int d = 0; d < 2 && rep.ok(); ++d) {
      const int n = l + 1 + d;
      if (n > order) break;
      const Integer dim = verma.coefficient(n) - standard.coefficient(n);
      if (dim != expected[d]) {
        rep.status = VerifyStatus::Mismatch;
        rep.first_mismatch = n;
        rep.lhs = dim;
        rep.rhs = expected[d];
      }
    }
  }
  rep.elapsed_ms = timer.ms();
  return rep;
}

/// Andrews' identity with no linear term: product over
/// n != 0, +-(l+2) (mod 2l+3) of (1-q^n)^{-1} against the l-variable sum
/// q^{sum N_j^2} / prod (q)_{n_j}. Both sides are built independently.
inline VerificationReport andrews_closing_check(int l, int order) {
  if (l < 1) throw std::invalid_argument("andrews_closing_check: l must be >= 1");
  if (order < 0) throw std::invalid_argument("andrews_closing_check: order must be >= 0");
  detail::Stopwatch timer;

  const int m = 2 * l + 3;
  std::vector<Integer> prod(static_cast<std::size_t>(order) + 1);
  prod[0] = 1;
  for (int a = 1; a <= order; ++a) {
    const int res = a % m;
    if (res == 0 || res == l + 1 || res == l + 2) continue;
    detail::apply_inv_one_minus(prod, a);
  }
  const TruncatedSeries product_side{std::vector<Integer>(prod)};
  const TruncatedSeries sum_side{detail::fermionic_sum(l, l + 1, 1, order)};

  VerificationReport rep =
      compare(product_side, sum_side, "andrews closing(l=" + std::to_string(l) + ")");
  rep.elapsed_ms = timer.ms();
  return rep;
}

/// Which checks run_suite executes and at which sizes.
struct SuiteConfig {
  std::set<std::string> select; ///< subset of known_selectors(); empty = nothing
  int order = 60;               ///< module/complement/verma checks
  int grr_order = 100;
  int section8_order = 100;
  int max_level = 7;      ///< standard modules with 1 <= k0+k1 <= max_level
  int enum_exponent = 25; ///< depth of the backtracking-enumeration oracle
  int min_exp_budget = 30;
  int jacobi_window = 8;
  int pbw_order = 20; ///< direct PBW enumeration gets expensive beyond ~25
  std::optional<GRRParams> grr_point;        ///< restrict grr to one parameter point
  std::optional<HighestWeight> weight_point; ///< restrict module/complement to one weight

  static const std::set<std::string>& known_selectors() {
    static const std::set<std::string> known = {
        "grr", "module", "verma", "complement", "section8", "liealg", "oracle"};
    return known;
  }
};

namespace detail {

inline void validate(const SuiteConfig& cfg) {
  for (const auto& sel : cfg.select)
    if (!SuiteConfig::known_selectors().count(sel))
      throw std::invalid_argument("run_suite: unknown selector '" + sel + "'");
  if (cfg.order < 0 || cfg.grr_order < 0 || cfg.section8_order < 0 || cfg.pbw_order < 0)
    throw std::invalid_argument("run_suite: orders must be >= 0");
  if (cfg.max_level < 1) throw std::invalid_argument("run_suite: max_level must be >= 1");
  if (cfg.enum_exponent < 0 || cfg.min_exp_budget < 0)
    throw std::invalid_argument("run_suite: exponent budgets must be >= 0");
  if (cfg.jacobi_window < 1) throw std::invalid_argument("run_suite: jacobi window must be >= 1");
}

inline std::vector<HighestWeight> weights_under(const SuiteConfig& cfg) {
  if (cfg.weight_point) return {*cfg.weight_point};
  std::vector<HighestWeight> out;
  for (int k = 1; k <= cfg.max_level; ++k)
    for (int k0 = k; k0 >= 0; --k0) out.push_back(HighestWeight(k0, k - k0));
  return out;
}

inline VerificationReport bool_report(const std::string& label, int order, bool ok) {
  VerificationReport rep;
  rep.label = label;
  rep.order = order;
  rep.status = ok ? VerifyStatus::Match : VerifyStatus::Mismatch;
  if (!ok) {
    rep.lhs = 0;
    rep.rhs = 1;
  }
  return rep;
}

inline std::string weight_tag(const HighestWeight& w) {
  return "k0=" + std::to_string(w.k0) + ",k1=" + std::to_string(w.k1);
}

} // namespace detail

/// Runs every selected check and returns the reports in a fixed order.
/// Individual failures are collected, never fatal.
inline std::vector<VerificationReport> run_suite(const SuiteConfig& cfg) {
  detail::validate(cfg);
  std::vector<VerificationReport> reports;
  auto selected = [&](const char* s) { return cfg.select.count(s) > 0; };

  if (selected("grr")) {
    std::vector<GRRParams> family;
    if (cfg.grr_point) {
      family.push_back(*cfg.grr_point);
    } else {
      // odd moduli include the boundary case r = l (empty linear term)
      for (int l = 2; l <= 5; ++l)
        for (int s = 0; s <= 1; ++s)
          for (int r = 1; r <= l - 1 + s; ++r) family.push_back(GRRParams(l, s, r));
    }
    for (const auto& gp : family) {
      detail::Stopwatch timer;
      auto rep = compare(grr_product(gp, cfg.grr_order), grr_sum(gp, cfg.grr_order),
                         "grr(l=" + std::to_string(gp.l) + ",s=" + std::to_string(gp.s) +
                             ",r=" + std::to_string(gp.r) + ") product == sum");
      rep.elapsed_ms = timer.ms();
      reports.push_back(std::move(rep));
    }
  }

  if (selected("module")) {
    for (const auto& w : detail::weights_under(cfg)) {
      detail::Stopwatch timer;
      const auto product = standard_char_product(w, cfg.order);
      const auto sum = standard_char_sum(w, cfg.order);
      const auto enumerated = standard_char_enumerated(w, cfg.order);
      auto rep1 = compare(product, sum,
                          "standard(" + detail::weight_tag(w) + ") product == sum");
      rep1.elapsed_ms = timer.ms();
      reports.push_back(std::move(rep1));
      detail::Stopwatch timer2;
      auto rep2 = compare(sum, enumerated,
                          "standard(" + detail::weight_tag(w) + ") sum == enumerated");
      rep2.elapsed_ms = timer2.ms();
      reports.push_back(std::move(rep2));
    }
  }

  if (selected("verma")) {
    {
      detail::Stopwatch timer;
      auto rep = compare(verma_char(cfg.order), verma_char_enumerated(cfg.order),
                         "verma character == enumerated basis count");
      rep.elapsed_ms = timer.ms();
      reports.push_back(std::move(rep));
    }
    {
      detail::Stopwatch timer;
      auto rep = compare(verma_char(cfg.order), verma_char_sum(cfg.order),
                         "verma character == fermionic sum");
      rep.elapsed_ms = timer.ms();
      reports.push_back(std::move(rep));
    }
    {
      detail::Stopwatch timer;
      auto rep = compare(pbw_count(cfg.pbw_order), pbw_count_direct(cfg.pbw_order),
                         "pbw product == direct enumeration");
      rep.elapsed_ms = timer.ms();
      reports.push_back(std::move(rep));
    }
  }

  if (selected("complement")) {
    for (const auto& w : detail::weights_under(cfg)) {
      reports.push_back(complement_check(w, cfg.order));
      if (w.k0 == w.k1 + 1 && w.k1 >= 1 && w.k1 + 2 <= cfg.order) {
        // Surface the two dimension facts as their own reports.
        const auto verma = verma_char(cfg.order);
        const auto standard = standard_char_enumerated(w, cfg.order);
        const Integer expected[] = {1, 3};
        for (int d = 0; d < 2; ++d) {
          const int n = w.k1 + 1 + d;
          const Integer dim = verma.coefficient(n) - standard.coefficient(n);
          VerificationReport rep;
          rep.label = "dim W_" + std::to_string(n) + "(" + detail::weight_tag(w) +
                      ") == " + expected[d].str();
          rep.order = cfg.order;
          if (dim != expected[d]) {
            rep.status = VerifyStatus::Mismatch;
            rep.first_mismatch = n;
            rep.lhs = dim;
            rep.rhs = expected[d];
          }
          reports.push_back(std::move(rep));
        }
      }
    }
  }

  if (selected("section8")) {
    for (int l = 1; l <= 4; ++l)
      reports.push_back(andrews_closing_check(l, cfg.section8_order));
  }

  if (selected("liealg")) {
    {
      detail::Stopwatch timer;
      auto rep = detail::bool_report(
          "liealg antisymmetry(window=" + std::to_string(cfg.jacobi_window) + ")",
          cfg.jacobi_window, antisymmetry_check(cfg.jacobi_window));
      rep.elapsed_ms = timer.ms();
      reports.push_back(std::move(rep));
    }
    {
      detail::Stopwatch timer;
      auto rep = detail::bool_report(
          "liealg jacobi(window=" + std::to_string(cfg.jacobi_window) + ")",
          cfg.jacobi_window, jacobi_check(cfg.jacobi_window));
      rep.elapsed_ms = timer.ms();
      reports.push_back(std::move(rep));
    }
    {
      detail::Stopwatch timer;
      LieCombination c1, c2, x1;
      c1.add(BasisElement::central(), -1);
      c2.add(BasisElement::central(), 1);
      x1.add(BasisElement::X(1), 2);
      const bool ok = bracket(BasisElement::X(1), BasisElement::X(-1)) == c1 &&
                      bracket(BasisElement::B(1), BasisElement::B(-1)) == c2 &&
                      bracket(BasisElement::B(1), BasisElement::X(0)) == x1;
      auto rep = detail::bool_report("liealg spot brackets", cfg.jacobi_window, ok);
      rep.elapsed_ms = timer.ms();
      reports.push_back(std::move(rep));
    }
  }

  if (selected("oracle")) {
    std::vector<ModuleSpec> specs = {ModuleSpec::verma()};
    for (const auto& w : detail::weights_under(cfg)) specs.push_back(ModuleSpec::standard(w));
    for (const auto& spec : specs) {
      detail::Stopwatch timer;
      std::vector<Integer> counts(static_cast<std::size_t>(cfg.enum_exponent) + 1);
      for (const auto& m : qp_enumerate(spec, cfg.enum_exponent))
        counts[static_cast<std::size_t>(m.exponent())] += 1;
      auto rep = compare(TruncatedSeries(std::move(counts)),
                         qp_count_series(spec, cfg.enum_exponent),
                         "qp enumeration == counting series " + spec.label() + " D=" +
                             std::to_string(cfg.enum_exponent));
      rep.elapsed_ms = timer.ms();
      reports.push_back(std::move(rep));
    }
    for (const auto& spec : specs) {
      // Greedy minimal degree-type vs the closed form
      // sum N_j^2 (+ N_{t+1} + ... + N_{[k/2]} for standard modules).
      detail::Stopwatch timer;
      bool ok = true;
      for (const auto& ct : enumerate_charge_types(spec, cfg.min_exp_budget)) {
        long long closed = 0;
        const auto tails = ct.tail_counts();
        for (int Nj : tails) closed += static_cast<long long>(Nj) * Nj;
        if (spec.is_standard()) {
          for (int j = spec.weight().threshold() + 1;
               j <= static_cast<int>(tails.size()); ++j)
            closed += tails[static_cast<std::size_t>(j) - 1];
        }
        if (closed != min_exponent(ct, spec)) {
          ok = false;
          break;
        }
      }
      auto rep = detail::bool_report("min_exponent greedy == closed form " + spec.label() +
                                         " budget=" + std::to_string(cfg.min_exp_budget),
                                     cfg.min_exp_budget, ok);
      rep.elapsed_ms = timer.ms();
      reports.push_back(std::move(rep));
    }
    {
      detail::Stopwatch timer;
      auto rep = compare(partitions_with_parts_in({1, 4}, 5, cfg.order),
                         grr_product(GRRParams(2, 1, 2), cfg.order),
                         "partition oracle {1,4} mod 5 == grr product(2,1,2)");
      rep.elapsed_ms = timer.ms();
      reports.push_back(std::move(rep));
    }
    {
      detail::Stopwatch timer;
      auto rep = compare(partitions_with_parts_in({1}, 2, cfg.order), fock_character(cfg.order),
                         "partition oracle odd parts == F");
      rep.elapsed_ms = timer.ms();
      reports.push_back(std::move(rep));
    }
    {
      detail::Stopwatch timer;
      auto rep = compare(partitions_with_parts_in({0}, 1, cfg.order),
                         poch_inv(1, cfg.order, cfg.order),
                         "partition oracle unrestricted == 1/(q)_inf");
      rep.elapsed_ms = timer.ms();
      reports.push_back(std::move(rep));
    }
  }

  return reports;
}

} // namespace qpchar
