#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qpchar/serialize.hpp"

using namespace qpchar;

TEST_CASE("series JSON round trip") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  for (int trial = 0; trial < 20; ++trial) {
    const int order = static_cast<int>(rng() % 30);
    std::vector<Integer> coeffs(static_cast<std::size_t>(order) + 1);
    for (auto& c : coeffs) c = dist(rng);
    // sprinkle values far beyond 64 bits
    coeffs[0] = Integer("123456789012345678901234567890");
    if (order > 0) coeffs[1] = -coeffs[0];
    const TruncatedSeries s(std::move(coeffs));

    const Json j = series_to_json(s);
    CHECK(j["order"] == order);
    CHECK(series_from_json(j) == s);
    // dump/parse round trip stays exact
    CHECK(series_from_json(Json::parse(j.dump())) == s);
  }
}

TEST_CASE("series JSON schema is validated on load") {
  CHECK_THROWS_AS(series_from_json(Json::parse("{}")), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"order":1,"coeffs":["1"]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"order":0,"coeffs":[1]})")),
                  std::invalid_argument);
  CHECK(series_from_json(Json::parse(R"({"order":1,"coeffs":["3","-4"]})")).coefficient(1) ==
        -4);
}

TEST_CASE("CSV coefficient tables") {
  TruncatedSeries s(std::vector<Integer>{1, -2, 30});
  CHECK(series_to_csv(s) == "n,coefficient\n0,1\n1,-2\n2,30\n");
}

TEST_CASE("monomial JSON") {
  QPMonomial m;
  m.heisenberg = {-3, -1};
  m.charges = {1, 2};
  m.degrees = {-1, -4};
  CHECK(monomial_to_json(m).dump() ==
        R"({"heis":[-3,-1],"charges":[1,2],"degrees":[-1,-4]})");
}

TEST_CASE("report JSON carries no timing field") {
  const auto rep = compare(TruncatedSeries::one(2), TruncatedSeries::one(2), "id");
  const Json j = report_to_json(rep);
  CHECK(j.dump() == R"({"label":"id","status":"match","order":2})");

  TruncatedSeries a(std::vector<Integer>{1, 5});
  TruncatedSeries b(std::vector<Integer>{1, 7});
  const Json bad = report_to_json(compare(a, b, "pair"));
  CHECK(bad["status"] == "mismatch");
  CHECK(bad["first_mismatch"] == 1);
  CHECK(bad["lhs"] == "5");
  CHECK(bad["rhs"] == "7");
  CHECK_FALSE(bad.contains("ms"));
}
