#include "sawtm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <unsupported/Eigen/Polynomials>

namespace sawtm {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>>;
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

Real to_real(const BigRational& q) {
  return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

std::vector<BigRational> exact_series(const SeriesTable& table) {
  const SeriesTable exact = table.to_exact();
  if (exact.first_n != 0) throw AnalysisError("series must start at n = 0");
  return std::vector<BigRational>(exact.values.begin(), exact.values.end());
}

// Fraction-free elimination on an augmented n x (n+1) integer matrix.
bool bareiss_solve(std::vector<std::vector<BigInt>>& a, std::vector<BigRational>& x) {
  const std::size_t n = a.size();
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return false;
    if (p != k) std::swap(a[p], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  x.assign(n, BigRational(0));
  for (std::size_t i = n; i-- > 0;) {
    BigRational acc(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= BigRational(a[i][j]) * x[j];
    x[i] = acc / BigRational(a[i][i]);
  }
  return true;
}

Real horner(const std::vector<Real>& c, const Real& x) {
  Real v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

Real horner_derivative(const std::vector<Real>& c, const Real& x) {
  Real v = 0;
  for (std::size_t i = c.size(); i-- > 1;) v = v * x + c[i] * static_cast<int>(i);
  return v;
}

std::complex<double> horner_c(const std::vector<double>& c, std::complex<double> z,
                              std::complex<double>* deriv) {
  std::complex<double> v = 0;
  std::complex<double> d = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    d = d * z + v;
    v = v * z + c[i];
  }
  if (deriv) *deriv = d;
  return v;
}

// Roots of the polynomial with coefficients c (increasing degree), polished;
// nearly real roots are refined in extended precision.
std::vector<std::pair<std::complex<double>, std::optional<Real>>> polynomial_roots(
    const std::vector<Real>& c) {
  std::size_t deg = c.size() - 1;
  while (deg > 0 && c[deg] == 0) --deg;
  std::vector<std::pair<std::complex<double>, std::optional<Real>>> out;
  if (deg == 0) return out;

  std::vector<double> cd(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) cd[i] = c[i].convert_to<double>();
  Eigen::VectorXd coeffs(static_cast<Eigen::Index>(deg + 1));
  for (std::size_t i = 0; i <= deg; ++i) coeffs[static_cast<Eigen::Index>(i)] = cd[i];
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
  const std::vector<Real> trimmed(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(deg + 1));

  for (Eigen::Index i = 0; i < solver.roots().size(); ++i) {
    std::complex<double> z = solver.roots()[i];
    for (int it = 0; it < 20; ++it) {
      std::complex<double> d;
      const std::complex<double> v = horner_c(cd, z, &d);
      if (d == std::complex<double>(0)) break;
      const std::complex<double> dz = v / d;
      z -= dz;
      if (std::abs(dz) <= 1e-16 * std::abs(z)) break;
    }
    std::optional<Real> real;
    if (std::abs(z.imag()) <= 1e-7 * std::max(1.0, std::abs(z))) {
      Real x = z.real();
      bool ok = false;
      for (int it = 0; it < 200; ++it) {
        const Real d = horner_derivative(trimmed, x);
        if (d == 0) break;
        const Real dx = horner(trimmed, x) / d;
        x -= dx;
        if (abs(dx) <= abs(x) * Real("1e-70")) {
          ok = true;
          break;
        }
      }
      if (ok && abs(x - Real(z.real())) <= Real(1e-6) * std::max(1.0, std::abs(z))) {
        real = x;
        z = std::complex<double>(x.convert_to<double>(), 0.0);
      }
    }
    out.emplace_back(z, real);
  }
  return out;
}

double mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stddev(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

}  // namespace

std::size_t DASpec::unknowns() const {
  if (degrees.size() != order + 1) throw AnalysisError("DA spec needs order+1 polynomial degrees");
  std::size_t u = 0;
  for (std::size_t d : degrees) u += d + 1;
  u -= 1;  // fixed constant term of Q_K
  if (inhomog >= 0) u += static_cast<std::size_t>(inhomog) + 1;
  return u;
}

std::string DASpec::label() const {
  std::string s;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) s += '/';
    s += std::to_string(degrees[i]);
  }
  return s;
}

Approximant differential_approximant(const std::vector<BigRational>& series, const DASpec& spec,
                                     const DAOptions& options) {
  if (spec.order == 0) throw AnalysisError("approximant order must be at least 1");
  const std::size_t m = spec.unknowns();
  if (m > series.size()) {
    throw AnalysisError("approximant " + spec.label() + " needs " + std::to_string(m) +
                        " terms, series has " + std::to_string(series.size()));
  }
  // Scaling F by a constant only rescales P, so clear denominators.
  BigInt lcm = 1;
  for (std::size_t n = 0; n < m; ++n) {
    const BigInt den = boost::multiprecision::denominator(series[n]);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<BigInt> s(m);
  for (std::size_t n = 0; n < m; ++n) {
    s[n] = boost::multiprecision::numerator(series[n]) * (lcm / boost::multiprecision::denominator(series[n]));
  }
  auto theta = [&](std::size_t power, std::size_t n) {
    BigInt v = s[n];
    for (std::size_t i = 0; i < power; ++i) v *= n;
    return v;
  };

  const std::size_t k = spec.order;
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m + 1, 0));
  for (std::size_t row = 0; row < m; ++row) {
    std::size_t col = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t l = 0; l <= spec.degrees[i]; ++l) {
        const BigInt v = l <= row ? theta(i, row - l) : BigInt(0);
        if (i == k && l == 0) {
          a[row][m] = -v;
          continue;
        }
        a[row][col++] = v;
      }
    }
    for (int l = 0; l <= spec.inhomog; ++l) a[row][col++] = static_cast<std::size_t>(l) == row ? -1 : 0;
  }

  Approximant out;
  out.spec = spec;
  std::vector<BigRational> sol;
  if (!bareiss_solve(a, sol)) {
    out.defective = true;
    return out;
  }

  std::vector<std::vector<Real>> q(k + 1);
  std::size_t col = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    for (std::size_t l = 0; l <= spec.degrees[i]; ++l) {
      if (i == k && l == 0) {
        q[i].push_back(Real(1));
        continue;
      }
      q[i].push_back(to_real(sol[col++]));
    }
  }

  const auto roots = polynomial_roots(q[k]);
  if (roots.empty()) {
    out.defective = true;
    return out;
  }
  for (const auto& [z, real] : roots) {
    SingularityEstimate est;
    est.root = z;
    if (real) {
      est.real = true;
      const Real x = *real;
      const Real lambda = horner(q[k - 1], x) / (x * horner_derivative(q[k], x)) - static_cast<int>(k) + 1;
      est.exponent = lambda.convert_to<double>();
    }
    out.roots.push_back(est);
  }
  for (const SingularityEstimate& est : out.roots) {
    if (!est.real || est.root.real() <= 0) continue;
    if (!out.physical) {
      out.physical = est;
      continue;
    }
    const double x = est.root.real();
    const double cur = out.physical->root.real();
    const bool better = options.guess ? std::abs(x - *options.guess) < std::abs(cur - *options.guess) : x < cur;
    if (better) out.physical = est;
  }
  if (out.physical) {
    const double xc = out.physical->root.real();
    for (const SingularityEstimate& est : out.roots) {
      if (!est.real || est.root.real() >= 0) continue;
      if (std::abs(est.root.real() + xc) <= 0.05 * xc) {
        if (!out.antiferro || std::abs(est.root.real() + xc) < std::abs(out.antiferro->root.real() + xc)) {
          out.antiferro = est;
        }
      }
    }
  }
  return out;
}

Approximant differential_approximant(const SeriesTable& series, const DASpec& spec,
                                     const DAOptions& options) {
  return differential_approximant(exact_series(series), spec, options);
}

DAScan da_scan(const std::vector<BigRational>& series, const std::vector<std::size_t>& orders,
               const std::vector<int>& inhomogs, std::size_t min_terms, const DAOptions& options) {
  DAScan scan;
  for (std::size_t order : orders) {
    for (int inhomog : inhomogs) {
      DASummary summary;
      summary.order = order;
      summary.inhomog = inhomog;
      std::vector<double> xs;
      std::vector<double> es;
      for (std::size_t n = 1;; ++n) {
        bool any_fit = false;
        for (int delta = -1; delta <= 1; ++delta) {
          if (static_cast<int>(n) + delta < 0) continue;
          DASpec spec;
          spec.order = order;
          spec.inhomog = inhomog;
          spec.degrees.assign(order + 1, static_cast<std::size_t>(static_cast<int>(n) + delta));
          spec.degrees[order] = n;
          const std::size_t used = spec.unknowns();
          if (used > series.size()) continue;
          any_fit = true;
          if (used < min_terms) continue;
          const Approximant a = differential_approximant(series, spec, options);
          if (a.defective || !a.physical) continue;
          scan.rows.push_back(DAScanRow{inhomog, order, spec.last_n(), spec.label(),
                                        a.physical->root.real(), a.physical->exponent});
          xs.push_back(a.physical->root.real());
          es.push_back(a.physical->exponent);
        }
        if (!any_fit) break;
      }
      summary.count = xs.size();
      summary.x_mean = mean(xs);
      summary.x_sd = stddev(xs);
      summary.exponent_mean = mean(es);
      summary.exponent_sd = stddev(es);
      scan.summaries.push_back(summary);
    }
  }
  return scan;
}

DAScan da_scan(const SeriesTable& series, const std::vector<std::size_t>& orders,
               const std::vector<int>& inhomogs, std::size_t min_terms, const DAOptions& options) {
  return da_scan(exact_series(series), orders, inhomogs, min_terms, options);
}

FitModel parse_fit_model(const std::string& name) {
  if (name == "count") return FitModel::Count;
  if (name == "r2e") return FitModel::R2e;
  if (name == "r2g") return FitModel::R2g;
  if (name == "r2m") return FitModel::R2m;
  throw AnalysisError("unknown model '" + name + "' (expected count, r2e, r2g or r2m)");
}

std::string to_string(FitModel model) {
  switch (model) {
    case FitModel::Count: return "count";
    case FitModel::R2e: return "r2e";
    case FitModel::R2g: return "r2g";
    case FitModel::R2m: return "r2m";
  }
  return "count";
}

ModelExponents model_exponents(FitModel model) {
  switch (model) {
    case FitModel::Count: return {BigRational(11, 32), BigRational(-3, 2)};
    case FitModel::R2e: return {BigRational(59, 32), BigRational(-3, 2)};
    case FitModel::R2g: return {BigRational(123, 32), BigRational(2)};
    case FitModel::R2m: return {BigRational(91, 32), BigRational(1)};
  }
  return {BigRational(11, 32), BigRational(-3, 2)};
}

AmplitudeFit amplitude_fit(const std::vector<BigRational>& series, const FitOptions& options) {
  const std::size_t p = options.k + options.m;
  if (options.k == 0) throw AnalysisError("fit needs at least one term at x_c");
  AmplitudeFit fit;
  fit.options = options;
  fit.exponents = model_exponents(options.model);
  const Real x_c(options.x_c);
  if (x_c <= 0) throw AnalysisError("critical point must be positive");
  const Real g = to_real(fit.exponents.lead);
  const Real h = to_real(fit.exponents.alternating);
  const std::size_t first = std::max<std::size_t>(options.min_n, 1);

  // Correction exponents at x_c: 0, 1, 3/2, 2, 5/2, ...
  auto correction = [](std::size_t i) { return i == 0 ? Real(0) : Real(static_cast<int>(i) + 1) / 2; };

  for (std::size_t last = first + p - 1; last < series.size(); ++last) {
    RealMatrix a(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    RealVector b(static_cast<Eigen::Index>(p));
    for (std::size_t r = 0; r < p; ++r) {
      const std::size_t j = last - p + 1 + r;
      const Real jr(static_cast<unsigned long>(j));
      const auto row = static_cast<Eigen::Index>(r);
      for (std::size_t i = 0; i < options.k; ++i) {
        a(row, static_cast<Eigen::Index>(i)) = pow(jr, g - correction(i));
      }
      const Real sign = j % 2 == 0 ? 1 : -1;
      for (std::size_t i = 0; i < options.m; ++i) {
        a(row, static_cast<Eigen::Index>(options.k + i)) = sign * pow(jr, h - static_cast<int>(i));
      }
      b(row) = to_real(series[j]) * pow(x_c, static_cast<int>(j));
    }
    const Eigen::FullPivLU<RealMatrix> lu(a);
    // Pivot spread of the full-pivot LU as a cheap conditioning measure.
    const auto diag = lu.matrixLU().diagonal();
    Real lo = abs(diag(0));
    Real hi = lo;
    for (Eigen::Index i = 1; i < diag.size(); ++i) {
      lo = std::min<Real>(lo, abs(diag(i)));
      hi = std::max<Real>(hi, abs(diag(i)));
    }
    const bool ill = !lu.isInvertible() || lo <= hi * Real("1e-50");
    FitPoint pt;
    pt.last_n = last;
    pt.inv_n = 1.0 / static_cast<double>(last);
    pt.ill_conditioned = ill;
    pt.a0 = ill && !lu.isInvertible() ? std::nan("") : Real(lu.solve(b)(0)).convert_to<double>();
    fit.flagged = fit.flagged || ill;
    fit.trajectory.push_back(pt);
  }
  if (fit.trajectory.empty()) throw AnalysisError("series too short for the requested fit");
  fit.last = fit.trajectory.back().a0;
  const std::size_t tail = std::min<std::size_t>(5, fit.trajectory.size());
  if (tail < 2) {
    fit.extrapolated = fit.last;
  } else {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = fit.trajectory.size() - tail; i < fit.trajectory.size(); ++i) {
      const double x = fit.trajectory[i].inv_n;
      const double y = fit.trajectory[i].a0;
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double t = static_cast<double>(tail);
    const double den = t * sxx - sx * sx;
    fit.extrapolated = den == 0 ? fit.last : (sy * sxx - sx * sxy) / den;
  }
  return fit;
}

AmplitudeFit amplitude_fit(const SeriesTable& series, const FitOptions& options) {
  return amplitude_fit(exact_series(series), options);
}

UniversalRatios universal_ratios(double a, double c, double d, double e) {
  if (c == 0) throw AnalysisError("C must be nonzero");
  if (a <= 0 || c < 0 || d < 0 || e < 0) throw AnalysisError("amplitudes must be positive");
  UniversalRatios r;
  r.d_over_c = d / c;
  r.e_over_c = e / c;
  r.f = 246.0 / 91.0 * r.d_over_c - 2.0 * r.e_over_c + 0.5;
  return r;
}

}  // namespace sawtm
