// Minimal tour of the library: build the two sides of the first
// Rogers-Ramanujan identity, compare them exactly, and print the level-3
// vacuum-module character by all three routes.

#include <iostream>

#include "qpchar/qpchar.hpp"

using namespace qpchar;

int main() {
  const int order = 40;

  // product side: parts not congruent to 0, +-2 (mod 5); sum side:
  // q^{n^2}/(q)_n. Both exact, compared coefficient by coefficient.
  const GRRParams rr(2, 1, 2);
  const auto report = compare(grr_product(rr, order), grr_sum(rr, order),
                              "Rogers-Ramanujan identity");
  std::cout << report.label << ": " << (report.ok() ? "match" : "MISMATCH") << " up to q^"
            << report.order << "\n\n";

  const HighestWeight w(3, 0);
  const auto product = standard_char_product(w, 12);
  const auto sum = standard_char_sum(w, 12);
  const auto enumerated = standard_char_enumerated(w, 12);
  std::cout << "ch L(3*Lambda_0), three routes:\n  n  product  sum  enumerated\n";
  for (int n = 0; n <= 12; ++n)
    std::cout << "  " << n << "  " << product.coefficient(n) << "  " << sum.coefficient(n)
              << "  " << enumerated.coefficient(n) << "\n";

  std::cout << "\nbasis monomials of exponent <= 3:\n";
  for (const auto& m : basis_enumerate(ModuleSpec::standard(w), 3))
    std::cout << "  " << m.exponent() << "  " << m.to_string() << "\n";
  return 0;
}
