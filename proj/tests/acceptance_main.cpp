// Acceptance suite: runs every acceptance criterion at its stated size and
// tolerance (all equalities are coefficient-exact) and prints one pass/fail
// line per criterion. Exits nonzero if any criterion fails.
//
// Usage: qpchar_acceptance <path-to-qpchar-cli>
// The CLI path is needed for the byte-determinism criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qpchar/qpchar.hpp"

using namespace qpchar;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
  if (ok) {
    std::cout << "[PASS] criterion " << criterion << ": " << name << "\n";
  } else {
    ++failures;
    std::cout << "[FAIL] criterion " << criterion << ": " << name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Rogers-Ramanujan base case at order 200, spot coefficients, < 1 s.
void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (int r = 1; r <= 2 && ok; ++r) {
    const GRRParams gp(2, 1, r);
    if (!(grr_product(gp, 200) == grr_sum(gp, 200))) {
      ok = false;
      detail = "product != sum for r=" + std::to_string(r);
    }
  }
  if (ok) {
    const auto rr = grr_product(GRRParams(2, 1, 2), 200);
    const std::vector<Integer> expected = {1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6};
    for (int n = 0; n <= 10; ++n)
      if (rr.coefficient(n) != expected[static_cast<std::size_t>(n)]) {
        ok = false;
        detail = "coefficient mismatch at n=" + std::to_string(n);
      }
  }
  const double elapsed = seconds_since(start);
  if (ok && elapsed >= 1.0) {
    ok = false;
    detail = "runtime " + std::to_string(elapsed) + " s >= 1 s";
  }
  report(1, "Rogers-Ramanujan base case (l=2, s=1, r in {1,2}, order 200)", ok, detail);
}

// 2. Full (grr) family, order 100, < 30 s total.
void criterion2() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (int l = 2; l <= 5 && ok; ++l)
    for (int s = 0; s <= 1 && ok; ++s)
      for (int r = 1; r <= l - 1 && ok; ++r) {
        const GRRParams gp(l, s, r);
        if (!(grr_product(gp, 100) == grr_sum(gp, 100))) {
          ok = false;
          detail = "mismatch at l=" + std::to_string(l) + " s=" + std::to_string(s) +
                   " r=" + std::to_string(r);
        }
      }
  const double elapsed = seconds_since(start);
  if (ok && elapsed >= 30.0) {
    ok = false;
    detail = "runtime " + std::to_string(elapsed) + " s >= 30 s";
  }
  report(2, "full GRR family (2<=l<=5, s in {0,1}, 1<=r<=l-1, order 100)", ok, detail);
}

// 3. Verma basis count: both routes at order 60, enumeration to exponent 25,
// spot values 1,2,4,8.
void criterion3() {
  bool ok = true;
  std::string detail;

  const auto lhs = verma_char_enumerated(60);
  const auto rhs = verma_char(60);
  if (!(lhs == rhs)) {
    ok = false;
    detail = "qp count * F != F * 1/(q)_inf";
  }

  const std::vector<Integer> spots = {1, 2, 4, 8};
  for (int n = 0; n <= 3 && ok; ++n)
    if (rhs.coefficient(n) != spots[static_cast<std::size_t>(n)]) {
      ok = false;
      detail = "spot value mismatch at n=" + std::to_string(n);
    }

  if (ok) {
    const auto spec = ModuleSpec::verma();
    std::vector<Integer> counts(26);
    for (const auto& m : qp_enumerate(spec, 25)) counts[static_cast<std::size_t>(m.exponent())] += 1;
    const auto series = qp_count_series(spec, 25);
    for (int n = 0; n <= 25 && ok; ++n)
      if (counts[static_cast<std::size_t>(n)] != series.coefficient(n)) {
        ok = false;
        detail = "enumeration disagrees with counting series at n=" + std::to_string(n);
      }
  }
  report(3, "Verma basis count (order 60, enumeration to exponent 25, spots 1,2,4,8)", ok,
         detail);
}

// 4. Standard module three-way agreement for all 1 <= k <= 7 at order 60, < 2 min.
void criterion4() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (int k = 1; k <= 7 && ok; ++k)
    for (int k0 = 0; k0 <= k && ok; ++k0) {
      const HighestWeight w(k0, k - k0);
      const auto product = standard_char_product(w, 60);
      if (!(product == standard_char_sum(w, 60)) ||
          !(product == standard_char_enumerated(w, 60))) {
        ok = false;
        detail = "route mismatch at k0=" + std::to_string(k0) +
                 " k1=" + std::to_string(k - k0);
      }
    }
  const double elapsed = seconds_since(start);
  if (ok && elapsed >= 120.0) {
    ok = false;
    detail = "runtime " + std::to_string(elapsed) + " s >= 120 s";
  }
  report(4, "standard module three-way agreement (1<=k<=7, order 60)", ok, detail);
}

// 5. Complement dimensions: (l+1, l) for l in {1,2,3}, dims 1 and 3, all
// differences nonnegative up to order 60.
void criterion5() {
  bool ok = true;
  std::string detail;
  const auto verma = verma_char(60);
  for (int l = 1; l <= 3 && ok; ++l) {
    const HighestWeight w(l + 1, l);
    const auto standard = standard_char_enumerated(w, 60);
    for (int n = 0; n <= 60 && ok; ++n)
      if (verma.coefficient(n) < standard.coefficient(n)) {
        ok = false;
        detail = "negative dim W at n=" + std::to_string(n) + " for l=" + std::to_string(l);
      }
    if (ok && verma.coefficient(l + 1) - standard.coefficient(l + 1) != 1) {
      ok = false;
      detail = "dim W_" + std::to_string(l + 1) + " != 1 for l=" + std::to_string(l);
    }
    if (ok && verma.coefficient(l + 2) - standard.coefficient(l + 2) != 3) {
      ok = false;
      detail = "dim W_" + std::to_string(l + 2) + " != 3 for l=" + std::to_string(l);
    }
    if (ok && !complement_check(w, 60).ok()) {
      ok = false;
      detail = "complement_check reported a mismatch for l=" + std::to_string(l);
    }
  }
  report(5, "maximal submodule dimensions (w=(l+1,l), dim W_{l+1}=1, dim W_{l+2}=3)", ok,
         detail);
}

// 6. Closing Andrews identity for l in {1,2,3,4} at order 100.
void criterion6() {
  bool ok = true;
  std::string detail;
  for (int l = 1; l <= 4 && ok; ++l) {
    const auto rep = andrews_closing_check(l, 100);
    if (!rep.ok()) {
      ok = false;
      detail = "mismatch at l=" + std::to_string(l) + ", n=" +
               (rep.first_mismatch ? std::to_string(*rep.first_mismatch) : "?");
    }
  }
  report(6, "closing Andrews identity (l in {1,2,3,4}, order 100)", ok, detail);
}

// 7. Lie structure sanity: exhaustive antisymmetry + Jacobi, spot brackets.
void criterion7() {
  bool ok = antisymmetry_check(8) && jacobi_check(8);
  std::string detail = ok ? "" : "window sweep failed";

  if (ok) {
    LieCombination minus_c, plus_c, two_x1;
    minus_c.add(BasisElement::central(), -1);
    plus_c.add(BasisElement::central(), 1);
    two_x1.add(BasisElement::X(1), 2);
    ok = bracket(BasisElement::X(1), BasisElement::X(-1)) == minus_c &&
         bracket(BasisElement::B(1), BasisElement::B(-1)) == plus_c &&
         bracket(BasisElement::B(1), BasisElement::X(0)) == two_x1;
    if (!ok) detail = "spot bracket mismatch";
  }
  report(7, "Lie structure sanity (antisymmetry + Jacobi, |index| <= 8, spot brackets)", ok,
         detail);
}

// 8. min_exponent greedy construction vs closed form, budget 30, all k <= 7.
void criterion8() {
  bool ok = true;
  std::string detail;
  std::vector<ModuleSpec> specs = {ModuleSpec::verma()};
  for (int k = 1; k <= 7; ++k)
    for (int k0 = 0; k0 <= k; ++k0) specs.push_back(ModuleSpec::standard(HighestWeight(k0, k - k0)));

  for (const auto& spec : specs) {
    for (const auto& ct : enumerate_charge_types(spec, 30)) {
      long long closed = 0;
      const auto tails = ct.tail_counts();
      for (int Nj : tails) closed += static_cast<long long>(Nj) * Nj;
      if (spec.is_standard())
        for (int j = spec.weight().threshold() + 1; j <= static_cast<int>(tails.size()); ++j)
          closed += tails[static_cast<std::size_t>(j) - 1];
      if (min_exponent(ct, spec) != closed) {
        ok = false;
        detail = "greedy != closed form in " + spec.label();
        break;
      }
    }
    if (!ok) break;
  }
  report(8, "min_exponent greedy == closed form (value <= 30, all k <= 7)", ok, detail);
}

// 9. Byte-identical consecutive `verify all --format json` runs.
void criterion9(const std::string& cli) {
  bool ok = true;
  std::string detail;
  const std::string out1 = "acceptance_verify_run1.json";
  const std::string out2 = "acceptance_verify_run2.json";
  for (const auto& out : {out1, out2}) {
    const std::string cmd = cli + " verify all --format json > " + out + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    if (rc != 0) {
      ok = false;
      detail = "CLI exited with status " + std::to_string(rc);
      break;
    }
  }
  if (ok) {
    auto slurp = [](const std::string& path) {
      std::ifstream in(path, std::ios::binary);
      std::ostringstream os;
      os << in.rdbuf();
      return os.str();
    };
    const std::string a = slurp(out1);
    const std::string b = slurp(out2);
    if (a.empty() || a != b) {
      ok = false;
      detail = a.empty() ? "empty output" : "outputs differ between runs";
    }
  }
  std::remove(out1.c_str());
  std::remove(out2.c_str());
  report(9, "determinism: two consecutive `verify all --format json` runs byte-identical", ok,
         detail);
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: qpchar_acceptance <path-to-qpchar-cli>\n";
    return 2;
  }

  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(argv[1]);

  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
