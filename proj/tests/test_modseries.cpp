#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <vector>

#include "sawtm/modseries.hpp"
#include "sawtm/series_file.hpp"

using namespace sawtm;

TEST_CASE("add_shifted") {
  const auto moduli = default_moduli();
  TruncatedPolynomial target(10, 2);
  add_shifted(target, TruncatedPolynomial::monomial(3, 10, 2), 2, moduli);
  CHECK(target.coeff(5, 0) == 1);
  CHECK(target.coeff(5, 1) == 1);
  CHECK(target.min_degree() == 5u);

  TruncatedPolynomial before = target;
  add_shifted(target, TruncatedPolynomial::monomial(4, 10, 2), 7, moduli);
  CHECK(target == before);

  const std::vector<Modulus> m7{Modulus(7)};
  TruncatedPolynomial w(2, 1);
  w.set(0, 0, 6);
  TruncatedPolynomial one = TruncatedPolynomial::monomial(0, 2, 1);
  add_shifted(w, one, 0, m7);
  CHECK(w.coeff(0, 0) == 0);
  CHECK(w.is_zero());
}

TEST_CASE("masked and prime wrap") {
  const Modulus two(kTwoPow62);
  CHECK(two.kind() == Modulus::Kind::PowerOfTwo);
  CHECK(two.add(kTwoPow62 - 1, 1) == 0);
  const Modulus odd(kTwoPow62 - 1);
  CHECK(odd.add(kTwoPow62 - 2, 1) == 0);
  CHECK(odd.add(kTwoPow62 - 2, 5) == 4);
}

TEST_CASE("moduli checks") {
  CHECK_THROWS_AS(require_coprime(std::vector<Modulus>{Modulus(6), Modulus(9)}), ConfigError);
  CHECK_NOTHROW(require_coprime(default_moduli()));
  CHECK_THROWS_AS(require_product_safe(default_moduli()), ConfigError);
  CHECK_NOTHROW(require_product_safe(std::vector<Modulus>{Modulus(1073741789)}));
  CHECK(parse_moduli("3,5").size() == 2);
  CHECK_THROWS(parse_moduli("3,x"));
}

TEST_CASE("crt") {
  const std::vector<Modulus> small{Modulus(3), Modulus(5)};
  const std::vector<std::uint64_t> r{2, 3};
  CHECK(crt_reconstruct(r, small) == 8);
  const std::vector<Modulus> swapped{Modulus(5), Modulus(3)};
  const std::vector<std::uint64_t> rs{3, 2};
  CHECK(crt_reconstruct(rs, swapped) == 8);

  const std::vector<Modulus> single{Modulus(1000003)};
  const std::vector<std::uint64_t> one{123456};
  CHECK(crt_reconstruct(one, single) == 123456);

  const auto m = default_moduli();
  const BigInt c79("10194710293557466193787900071923676");
  const std::vector<std::uint64_t> res{m[0].reduce(c79), m[1].reduce(c79)};
  CHECK(crt_reconstruct(res, m) == c79);
}

namespace {

SeriesTable sample() {
  SeriesTable t;
  t.header["lattice"] = "square";
  t.header["quantity"] = "count";
  t.header["moduli"] = "exact";
  for (int v : {1, 4, 12, 36, 100}) t.values.emplace_back(v);
  return t;
}

}  // namespace

TEST_CASE("series file round trip") {
  const SeriesTable t = sample();
  std::istringstream in(series_to_string(t));
  CHECK(read_series(in) == t);

  SeriesTable r;
  r.moduli = default_moduli();
  r.header["moduli"] = "4611686018427387904,4611686018427387903";
  r.residues = {{1, 1}, {4, 4}};
  std::istringstream rin(series_to_string(r));
  const SeriesTable back = read_series(rin);
  CHECK(back == r);
  CHECK(back.to_exact().values == std::vector<BigInt>{1, 4});
}

TEST_CASE("series file errors carry line numbers") {
  std::istringstream dec("# quantity: count\n0\t1\n1\t4\n0\t12\n");
  CHECK_THROWS_AS(read_series(dec), SeriesParseError);
  std::istringstream dup("0\t1\n0\t1\n");
  CHECK_THROWS_AS(read_series(dup), SeriesParseError);
  std::istringstream junk("0\t1\n1\tfour\n");
  try {
    read_series(junk);
    FAIL("accepted a malformed line");
  } catch (const SeriesParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("first mismatch") {
  SeriesTable a = sample();
  SeriesTable b = sample();
  CHECK_FALSE(first_mismatch(a, b).has_value());
  b.values[3] = 37;
  const auto mm = first_mismatch(a, b);
  REQUIRE(mm.has_value());
  CHECK(mm->n == 3);
}

TEST_CASE("fixture with large coefficients parses") {
  const SeriesTable t = read_series(std::filesystem::path(SAWTM_TEST_DATA) / "c72_c79.series");
  CHECK(t.first_n == 72);
  CHECK(t.last_n() == 79);
  CHECK(t.at(72) == BigInt("11107224538074654820152678182884"));
  CHECK(t.at(79) == BigInt("10194710293557466193787900071923676"));
}
