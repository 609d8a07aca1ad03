#pragma once

// Series analysis: differential approximants, amplitude fits to the
// asymptotic form of the coefficients, and universal amplitude ratios.

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "sawtm/series_file.hpp"

namespace sawtm {

using BigRational = boost::multiprecision::mpq_rational;

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// sum_{i=0..K} Q_i(x) (x d/dx)^i F(x) = P(x), deg Q_i = degrees[i], deg P =
// inhomog (none when inhomog < 0). The constant term of Q_K is fixed to 1.
struct DASpec {
  std::size_t order = 2;
  int inhomog = 0;
  std::vector<std::size_t> degrees;  // size order+1

  std::size_t unknowns() const;
  // Index of the last series coefficient the fit consumes.
  std::size_t last_n() const { return unknowns() - 1; }
  std::string label() const;
};

struct SingularityEstimate {
  std::complex<double> root;
  double exponent = 0.0;  // only meaningful for real roots
  bool real = false;
};

struct Approximant {
  DASpec spec;
  bool defective = false;  // singular system or degenerate Q_K
  std::vector<SingularityEstimate> roots;
  std::optional<SingularityEstimate> physical;
  std::optional<SingularityEstimate> antiferro;  // negative real root near -x_c
};

struct DAOptions {
  // When set, the physical root is the positive real root closest to this
  // value; otherwise the smallest positive real root.
  std::optional<double> guess;
};

Approximant differential_approximant(const std::vector<BigRational>& series, const DASpec& spec,
                                     const DAOptions& options = {});
Approximant differential_approximant(const SeriesTable& series, const DASpec& spec,
                                     const DAOptions& options = {});

struct DAScanRow {
  int inhomog;
  std::size_t order;
  std::size_t last_n;
  std::string degrees;
  double x_c;
  double exponent;
};

struct DASummary {
  int inhomog = 0;
  std::size_t order = 0;
  std::size_t count = 0;
  double x_mean = 0.0, x_sd = 0.0;
  double exponent_mean = 0.0, exponent_sd = 0.0;
  bool empty() const { return count == 0; }
};

struct DAScan {
  std::vector<DAScanRow> rows;
  std::vector<DASummary> summaries;  // one per (order, inhomog)
};

// Near-diagonal approximants: deg Q_K = N and the other Q_i share degree
// N-1, N or N+1. Keeps every approximant using at least `min_terms`
// coefficients (and no more than the series has) with a physical root.
DAScan da_scan(const SeriesTable& series, const std::vector<std::size_t>& orders,
               const std::vector<int>& inhomogs, std::size_t min_terms,
               const DAOptions& options = {});
DAScan da_scan(const std::vector<BigRational>& series, const std::vector<std::size_t>& orders,
               const std::vector<int>& inhomogs, std::size_t min_terms,
               const DAOptions& options = {});

enum class FitModel { Count, R2e, R2g, R2m };

FitModel parse_fit_model(const std::string& name);
std::string to_string(FitModel model);

// Leading exponents at x_c and at -x_c for each series.
struct ModelExponents {
  BigRational lead;
  BigRational alternating;
};
ModelExponents model_exponents(FitModel model);

inline constexpr const char* kDefaultCriticalPoint = "0.379052277752";

struct FitOptions {
  FitModel model = FitModel::Count;
  std::size_t k = 2;  // terms at x_c
  std::size_t m = 1;  // terms at -x_c
  std::string x_c = kDefaultCriticalPoint;  // mu = 1/x_c
  std::size_t min_n = 1;                    // smallest coefficient index used
};

struct FitPoint {
  std::size_t last_n;
  double inv_n;
  double a0;
  bool ill_conditioned;
};

struct AmplitudeFit {
  FitOptions options;
  ModelExponents exponents;
  std::vector<FitPoint> trajectory;
  double last = 0.0;          // a0 from the window ending at the last coefficient
  double extrapolated = 0.0;  // linear fit of the last points against 1/n, at 1/n = 0
  bool flagged = false;       // some window was ill-conditioned
};

// For each n solves the square system matching c_{n-p+1..n}, p = k+m, to
//   c_j = mu^j j^g [a_0 + a_1/j + a_2/j^{3/2} + a_3/j^2 + ...]
//       + (-1)^j mu^j j^h [b_0 + b_1/j + b_2/j^2 + ...].
AmplitudeFit amplitude_fit(const SeriesTable& series, const FitOptions& options);
AmplitudeFit amplitude_fit(const std::vector<BigRational>& series, const FitOptions& options);

struct UniversalRatios {
  double d_over_c;
  double e_over_c;
  double f;
};

// F = (246/91) D/C - 2 E/C + 1/2.
UniversalRatios universal_ratios(double a, double c, double d, double e);

}  // namespace sawtm
