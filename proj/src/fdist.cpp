#include "fitts3d/fdist.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fitts3d {

namespace {

constexpr int kMaxIterations = 10000;
constexpr double kEpsilon = 1e-16;
constexpr double kTiny = 1e-300;

// Modified Lentz evaluation of the incomplete beta continued fraction.
double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) {
    d = kTiny;
  }
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) {
      d = kTiny;
    }
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) {
      c = kTiny;
    }
    d = 1.0 / d;
    h *= d * c;

    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) {
      d = kTiny;
    }
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) {
      c = kTiny;
    }
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) {
      return h;
    }
  }
  throw std::runtime_error("incomplete beta continued fraction did not converge");
}

// x^a (1-x)^b / (a B(a, b))
double beta_prefactor(double a, double b, double x) {
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  return std::exp(log_front) / a;
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("incomplete beta: shape parameters must be positive");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("incomplete beta: x must lie in [0, 1]");
  }
  if (x == 0.0) {
    return 0.0;
  }
  if (x == 1.0) {
    return 1.0;
  }
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return beta_prefactor(a, b, x) * beta_continued_fraction(a, b, x);
  }
  return 1.0 - beta_prefactor(b, a, 1.0 - x) * beta_continued_fraction(b, a, 1.0 - x);
}

double f_cdf(double f, double df1, double df2) {
  if (!(df1 > 0.0) || !(df2 > 0.0)) {
    throw std::domain_error("F distribution: degrees of freedom must be positive");
  }
  if (std::isnan(f)) {
    throw std::domain_error("F distribution: statistic is NaN");
  }
  if (f <= 0.0) {
    return 0.0;
  }
  if (std::isinf(f)) {
    return 1.0;
  }
  const double x = df1 * f / (df1 * f + df2);
  return regularized_incomplete_beta(df1 / 2.0, df2 / 2.0, x);
}

double f_survival(double f, double df1, double df2) {
  if (!(df1 > 0.0) || !(df2 > 0.0)) {
    throw std::domain_error("F distribution: degrees of freedom must be positive");
  }
  if (std::isnan(f)) {
    throw std::domain_error("F distribution: statistic is NaN");
  }
  if (f <= 0.0) {
    return 1.0;
  }
  if (std::isinf(f)) {
    return 0.0;
  }
  // 1 - I_x(d1/2, d2/2) == I_{1-x}(d2/2, d1/2)
  const double y = df2 / (df1 * f + df2);
  return regularized_incomplete_beta(df2 / 2.0, df1 / 2.0, y);
}

} // namespace fitts3d
