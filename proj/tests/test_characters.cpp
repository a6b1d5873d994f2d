#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qpchar/characters.hpp"

using namespace qpchar;

namespace {

// sum over m >= 0 of q^{m^2 + c m} / (q)_m, built from series primitives
TruncatedSeries single_variable_sum(int linear, int order) {
  TruncatedSeries acc(order);
  for (int m = 0; m * m + linear * m <= order; ++m) {
    auto term = TruncatedSeries::monomial(m * m + linear * m, order) * poch_inv(1, m, order);
    acc = acc + term;
  }
  return acc;
}

} // namespace

TEST_CASE("GRR parameter validation") {
  CHECK_NOTHROW(GRRParams(2, 1, 1));
  CHECK_NOTHROW(GRRParams(2, 1, 2)); // r = l allowed for odd moduli
  CHECK_THROWS_AS(GRRParams(2, 0, 2), std::invalid_argument); // but not even ones
  CHECK_THROWS_AS(GRRParams(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(GRRParams(3, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(GRRParams(3, 0, 3), std::invalid_argument);
  CHECK(GRRParams(2, 1, 2).modulus() == 5);
}

TEST_CASE("grr product sides against the partition oracle") {
  const auto rr1 = grr_product(GRRParams(2, 1, 2), 10);
  const std::vector<Integer> expected = {1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6};
  CHECK(rr1.coefficients() == expected);

  // parts = +-2 mod 5: only 2+2 partitions 4
  CHECK(grr_product(GRRParams(2, 1, 1), 10).coefficient(4) == 1);
  CHECK(grr_product(GRRParams(4, 0, 3), 10).coefficient(0) == 1);

  const auto parts = oracles::parts_with_residues({1, 4}, 5, 10);
  for (int n = 0; n <= 10; ++n)
    CHECK(rr1.coefficient(n) == oracles::count_partitions_from(n, parts));
}

TEST_CASE("grr sum sides") {
  // sum q^{m^2+m}/(q)_m: coefficient of q^2 comes from the m=1 term alone
  CHECK(grr_sum(GRRParams(2, 1, 1), 10).coefficient(2) == 1);
  CHECK(grr_sum(GRRParams(5, 0, 4), 10).coefficient(0) == 1);

  CHECK(grr_sum(GRRParams(2, 1, 2), 100) == grr_product(GRRParams(2, 1, 2), 100));
  for (int l = 2; l <= 3; ++l)
    for (int s = 0; s <= 1; ++s)
      for (int r = 1; r <= l - 1 + s; ++r) {
        GRRParams gp(l, s, r);
        CHECK(grr_sum(gp, 60) == grr_product(gp, 60));
        CHECK_NOTHROW(grr_sum(gp, 40, /*cross_check=*/true));
      }
  // the odd-modulus boundary cases r = l have no linear term
  CHECK(grr_sum(GRRParams(4, 1, 4), 80) == grr_product(GRRParams(4, 1, 4), 80));
}

TEST_CASE("Verma character") {
  const auto ch = verma_char(3);
  CHECK(ch.coefficients() == std::vector<Integer>{1, 2, 4, 8});
  CHECK(verma_char(0).coefficient(0) == 1);

  CHECK(verma_char(40) == verma_char_sum(40));
  CHECK(verma_char(40) == verma_char_enumerated(40));
}

TEST_CASE("standard module products") {
  // k=1: every residue mod 3 is excluded, so the character is F itself
  CHECK(standard_char_product(HighestWeight(1, 0), 30) == fock_character(30));
  CHECK(standard_char_product(HighestWeight(1, 0), 30).coefficient(3) == 2);
  CHECK(standard_char_product(HighestWeight(0, 1), 30) == fock_character(30));

  // k=3, k0=3: excluded 0,+-4 mod 5, i.e. parts = +-2 mod 5
  auto expected = fock_character(50) * grr_product(GRRParams(2, 1, 1), 50);
  CHECK(standard_char_product(HighestWeight(3, 0), 50) == expected);

  CHECK_THROWS_AS(standard_char_product(HighestWeight(0, 0), 10), std::invalid_argument);
}

TEST_CASE("standard module sums") {
  CHECK(standard_char_sum(HighestWeight(1, 0), 25) == fock_character(25));
  CHECK(standard_char_sum(HighestWeight(0, 1), 25) == fock_character(25));

  // (3,0): i=1, one variable, linear term N_1
  auto expected30 = fock_character(40) * single_variable_sum(1, 40);
  CHECK(standard_char_sum(HighestWeight(3, 0), 40) == expected30);

  // (2,1): i=2 > [k/2]=1, no linear term
  auto expected21 = fock_character(40) * single_variable_sum(0, 40);
  CHECK(standard_char_sum(HighestWeight(2, 1), 40) == expected21);

  CHECK_NOTHROW(standard_char_sum(HighestWeight(2, 2), 40, /*cross_check=*/true));
  CHECK_THROWS_AS(standard_char_sum(HighestWeight(0, 0), 10), std::invalid_argument);
}

TEST_CASE("enumerated characters") {
  CHECK(standard_char_enumerated(HighestWeight(1, 0), 30) == fock_character(30));
  CHECK(standard_char_enumerated(HighestWeight(2, 1), 10).coefficient(2) == 3);
  CHECK_THROWS_AS(standard_char_enumerated(HighestWeight(0, 0), 10), std::invalid_argument);
}

TEST_CASE("three-way agreement at unit-test scale") {
  for (int k = 1; k <= 5; ++k)
    for (int k0 = 0; k0 <= k; ++k0) {
      const HighestWeight w(k0, k - k0);
      const auto product = standard_char_product(w, 50);
      CHECK(product == standard_char_sum(w, 50));
      CHECK(product == standard_char_enumerated(w, 50));
    }
}

TEST_CASE("k0 = k1 characters carry the numerator product") {
  // (1,1): modulus 4, denominator over odd parts (= F), numerator over 2 mod 4
  auto expected = fock_character(60) * fock_character(60);
  for (int a = 2; a <= 60; a += 4) expected = mul_one_minus(expected, a);
  CHECK(standard_char_product(HighestWeight(1, 1), 60) == expected);
  CHECK(standard_char_product(HighestWeight(1, 1), 60) ==
        standard_char_enumerated(HighestWeight(1, 1), 60));
}

TEST_CASE("product coefficients are nonnegative (sanity heuristic)") {
  for (int k = 1; k <= 5; ++k)
    for (int k0 = 0; k0 <= k; ++k0) {
      const auto s = standard_char_product(HighestWeight(k0, k - k0), 40);
      for (int n = 0; n <= 40; ++n) CHECK(s.coefficient(n) >= 0);
    }
}
