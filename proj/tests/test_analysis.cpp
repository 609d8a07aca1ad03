#include <doctest.h>

#include <cmath>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "sawtm/analysis.hpp"

using namespace sawtm;
using Real100 = boost::multiprecision::mpfr_float_100;

namespace {

// Taylor coefficients of (1 - mu x)^(-gamma), exact for rational mu, gamma.
std::vector<BigRational> power_law(const BigRational& mu, const BigRational& gamma, std::size_t terms) {
  std::vector<BigRational> c(terms);
  c[0] = 1;
  for (std::size_t n = 1; n < terms; ++n) c[n] = c[n - 1] * mu * (gamma + static_cast<int>(n) - 1) / static_cast<int>(n);
  return c;
}

}  // namespace

TEST_CASE("first-order approximant of a pure power law") {
  const auto s = power_law(BigRational(3), BigRational(3, 2), 30);
  const Approximant a = differential_approximant(s, DASpec{1, -1, {1, 1}});
  REQUIRE_FALSE(a.defective);
  REQUIRE(a.physical.has_value());
  CHECK(a.physical->root.real() == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(std::abs(a.physical->exponent - 1.5) < 1e-10);
}

TEST_CASE("second-order approximant of a pure power law") {
  const auto s = power_law(BigRational(13, 5), BigRational(43, 32), 20);
  const Approximant a = differential_approximant(s, DASpec{2, -1, {0, 1, 1}});
  REQUIRE_FALSE(a.defective);
  REQUIRE(a.physical.has_value());
  CHECK(std::abs(a.physical->root.real() - 5.0 / 13) < 1e-10);
  CHECK(std::abs(a.physical->exponent - 43.0 / 32) < 1e-10);
}

TEST_CASE("underdetermined approximants are flagged") {
  const auto s = power_law(BigRational(3), BigRational(3, 2), 30);
  CHECK(differential_approximant(s, DASpec{1, -1, {3, 3}}).defective);
  CHECK_THROWS_AS(differential_approximant(s, DASpec{1, -1, {20, 20}}), AnalysisError);
}

TEST_CASE("scan over a pure power law has no spread") {
  const auto s = power_law(BigRational(3), BigRational(3, 2), 30);
  const DAScan scan = da_scan(s, {1}, {-1}, 1);
  REQUIRE(scan.summaries.size() == 1);
  const DASummary& sum = scan.summaries[0];
  REQUIRE(sum.count > 0);
  CHECK(sum.x_sd < 1e-12);
  CHECK(std::abs(sum.x_mean - 1.0 / 3) < 1e-12);
  CHECK(std::abs(sum.exponent_mean - 1.5) < 1e-10);
}

TEST_CASE("amplitude fit is exact on its own ansatz") {
  // c_n = 1.25 mu^n n^(11/32) with mu = 2, scaled so integers keep 30 digits.
  const Real100 scale = boost::multiprecision::pow(Real100(10), 30);
  std::vector<BigRational> s(40);
  for (std::size_t n = 1; n < s.size(); ++n) {
    const Real100 v = Real100("1.25") * boost::multiprecision::pow(Real100(2), static_cast<int>(n)) *
                      boost::multiprecision::pow(Real100(static_cast<unsigned>(n)), Real100(11) / 32) * scale;
    s[n] = BigRational(boost::multiprecision::round(v).convert_to<BigInt>());
  }
  FitOptions opt;
  opt.k = 1;
  opt.m = 0;
  opt.x_c = "0.5";
  const AmplitudeFit fit = amplitude_fit(s, opt);
  CHECK_FALSE(fit.flagged);
  CHECK(std::abs(fit.last / 1e30 - 1.25) < 1e-12);
  CHECK(std::abs(fit.extrapolated / 1e30 - 1.25) < 1e-12);
}

TEST_CASE("fit models") {
  CHECK(parse_fit_model("r2m") == FitModel::R2m);
  CHECK(to_string(FitModel::R2g) == "r2g");
  CHECK_THROWS(parse_fit_model("r3"));
  CHECK(model_exponents(FitModel::R2e).lead == BigRational(59, 32));
  CHECK(model_exponents(FitModel::R2g).alternating == 2);
}

TEST_CASE("universal ratios") {
  const UniversalRatios r = universal_ratios(1.17704242, 0.771182, 0.1081975, 0.339043);
  CHECK(std::abs(r.f + 0.000006) < 1e-6);
  CHECK(std::abs(universal_ratios(1, 1, 0, 0.25).f) < 1e-15);
  const double c = 0.8, e = 0.3;
  const double d = c * 91.0 / 246.0 * (2 * e / c - 0.5);
  CHECK(std::abs(universal_ratios(1, c, d, e).f) < 1e-15);
  CHECK_THROWS_AS(universal_ratios(1, 0, 1, 1), AnalysisError);
}
