#include "spacing/distributions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spacing/errors.hpp"

namespace spacing {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kLogSqrt2Pi = 0.9189385332046727418;  // log(sqrt(2*pi))
constexpr double kTiny = 1e-300;
constexpr double kCfEps = 3e-16;

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw UsageError(std::string(name) + " must be finite");
  }
}

// Mills-ratio continued fraction: survival(x)/pdf(x) for x > 0,
//   1/(x + 1/(x + 2/(x + 3/(x + ...)))),
// evaluated with the modified Lentz scheme. Used only for x >= 4 where it
// converges quickly and keeps full relative accuracy arbitrarily far out.
double mills_ratio_cf(double x) {
  double f = kTiny;
  double c = f;
  double d = 0.0;
  for (int i = 1; i <= 10000; ++i) {
    const double a = (i == 1) ? 1.0 : static_cast<double>(i - 1);
    d = x + a * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = x + a / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < kCfEps) break;
  }
  return f;
}

}  // namespace

double norm_pdf(double x) {
  require_finite(x, "x");
  return std::exp(-0.5 * x * x - kLogSqrt2Pi);
}

double norm_log_pdf(double x) {
  require_finite(x, "x");
  return -0.5 * x * x - kLogSqrt2Pi;
}

double norm_sf(double x) {
  require_finite(x, "x");
  if (x > 37.0) {
    return std::exp(norm_logsf(x).value);  // erfc underflows past ~37.5
  }
  return 0.5 * std::erfc(x * kInvSqrt2);
}

LogProb norm_logsf(double x) {
  require_finite(x, "x");
  if (x < 0.0) {
    // survival(x) = 1 - survival(-x), with survival(-x) < 0.5 fully accurate
    return {std::log1p(-norm_sf(-x))};
  }
  if (x <= 4.0) {
    return {std::log(0.5 * std::erfc(x * kInvSqrt2))};
  }
  return {-0.5 * x * x - kLogSqrt2Pi + std::log(mills_ratio_cf(x))};
}

namespace {

// Solve norm_sf(x) = q for q in (0, 0.5], i.e. x >= 0. Bracketed Newton on
// the probability scale; seeds never overshoot enough to escape [0, hi].
double isf_upper_half(double q) {
  if (q == 0.5) return 0.0;
  double x;
  if (q >= 0.02) {
    x = 2.5066282746310002 * (0.5 - q);  // linearization at the median
  } else {
    const double u = -std::log(q);
    const double t = std::sqrt(2.0 * u);
    double s = 2.0 * u - std::log(2.0 * 3.141592653589793 * 2.0 * u);
    x = (s > 1.0) ? std::sqrt(s) : t;  // one pass of the tail expansion
  }
  double lo = 0.0;
  double hi = std::numeric_limits<double>::max();
  for (int it = 0; it < 200; ++it) {
    const double f = norm_sf(x) - q;
    if (f > 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (std::fabs(f) <= 1e-14 * q) break;
    const double step = f / norm_pdf(x);
    double next = x + step;
    if (!(next > lo && next < hi)) {
      next = (hi == std::numeric_limits<double>::max()) ? x + 1.0
                                                        : 0.5 * (lo + hi);
    }
    if (next == x) break;
    x = next;
  }
  return x;
}

// Solve norm_logsf(x) = logq for logq <= log(0.02); Newton in the log
// domain, stable down past logq = -1e6.
double isf_log_tail(double logq) {
  const double u = -logq;
  double x = std::sqrt(2.0 * u);
  double s = 2.0 * u - std::log(2.0 * 3.141592653589793 * 2.0 * u);
  if (s > 1.0) x = std::sqrt(s);
  for (int it = 0; it < 100; ++it) {
    const double g = norm_logsf(x).value - logq;
    if (std::fabs(g) <= 1e-13) break;
    // d logsf / dx = -pdf/survival
    const double step = g * std::exp(norm_logsf(x).value - norm_log_pdf(x));
    double next = x + step;
    if (next <= 0.0) next = 0.5 * x;
    if (next == x) break;
    x = next;
  }
  return x;
}

}  // namespace

double norm_isf(double p) {
  require_finite(p, "p");
  if (!(p > 0.0 && p < 1.0)) {
    throw UsageError("probability must lie in (0,1)");
  }
  if (p > 0.5) return -isf_upper_half(1.0 - p);
  if (p < 1e-280) return isf_log_tail(std::log(p));
  return isf_upper_half(p);
}

double norm_isf_log(LogProb logp) {
  require_finite(logp.value, "logp");
  if (!(logp.value < 0.0)) {
    throw UsageError("log-probability must be negative");
  }
  const double log_half = -0.6931471805599453094;
  if (logp.value >= log_half) {
    return -isf_upper_half(-std::expm1(logp.value));
  }
  if (logp.value > std::log(0.02)) {
    return isf_upper_half(std::exp(logp.value));
  }
  return isf_log_tail(logp.value);
}

namespace {

// Continued fraction for the regularized incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 200000; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kCfEps) break;
  }
  return h;
}

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// log of the Student upper tail for t >= 0. x and 1-x are formed from t^2
// directly so neither side loses digits.
double student_logsf_pos(double t, int dof) {
  const double nu = static_cast<double>(dof);
  const double tt = t * t;
  const double x = nu / (nu + tt);        // in (0, 1]
  const double omx = tt / (nu + tt);      // 1 - x, exact to rounding
  const double a = 0.5 * nu;
  const double b = 0.5;
  const double log_half = -0.6931471805599453094;
  if (omx == 0.0) return log_half;  // t == 0
  const double lbt = a * std::log(x) + b * std::log(omx) - log_beta(a, b);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    // sf = 0.5 * exp(lbt) * cf / a, reported in logs to dodge underflow
    return log_half + lbt + std::log(beta_cf(a, b, x) / a);
  }
  const double comp = std::exp(lbt) * beta_cf(b, a, omx) / b;  // I_{1-x}(b,a)
  return log_half + std::log1p(-comp);
}

}  // namespace

double student_sf(double t, int dof) {
  require_finite(t, "t");
  if (dof < 1) throw UsageError("degrees of freedom must be >= 1");
  if (t < 0.0) return 1.0 - student_sf(-t, dof);
  return std::exp(student_logsf_pos(t, dof));
}

LogProb student_logsf(double t, int dof) {
  require_finite(t, "t");
  if (dof < 1) throw UsageError("degrees of freedom must be >= 1");
  if (t < 0.0) return {std::log1p(-student_sf(-t, dof))};
  return {student_logsf_pos(t, dof)};
}

namespace {

// Regularized lower incomplete gamma P(a,x) by series (x < a+1).
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n <= 200000; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kCfEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a,x) by continued fraction (x >= a+1).
double gamma_q_cf(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 200000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kCfEps) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double chisq_central_sf(double x, double k) {
  if (x <= 0.0) return 1.0;
  const double a = 0.5 * k;
  const double xh = 0.5 * x;
  if (xh < a + 1.0) return 1.0 - gamma_p_series(a, xh);
  return gamma_q_cf(a, xh);
}

double chisq_pdf(double x, double k) {
  if (x <= 0.0) return 0.0;
  const double a = 0.5 * k;
  return std::exp((a - 1.0) * std::log(x) - 0.5 * x - a * 0.6931471805599453094 -
                  std::lgamma(a));
}

}  // namespace

double chisq_sf(double x, int k, double ncp) {
  require_finite(x, "x");
  require_finite(ncp, "ncp");
  if (k < 1) throw UsageError("degrees of freedom must be >= 1");
  if (x < 0.0) throw UsageError("chi-squared argument must be >= 0");
  if (ncp < 0.0) throw UsageError("noncentrality must be >= 0");
  if (ncp == 0.0) return chisq_central_sf(x, k);

  // Poisson mixture of central tails, truncated once past the Poisson mode
  // when a term drops below 1e-16 of the running sum.
  const double lambda = 0.5 * ncp;
  double sum = 0.0;
  for (int j = 0; j <= 1000000; ++j) {
    const double lw = j * std::log(lambda) - lambda - std::lgamma(j + 1.0);
    const double term = std::exp(lw) * chisq_central_sf(x, k + 2.0 * j);
    sum += term;
    if (j > lambda && term < 1e-16 * sum) break;
  }
  return std::min(sum, 1.0);
}

double chisq_quantile(double q, int k) {
  require_finite(q, "q");
  if (k < 1) throw UsageError("degrees of freedom must be >= 1");
  if (!(q > 0.0 && q < 1.0)) {
    throw UsageError("probability must lie in (0,1)");
  }
  // Wilson-Hilferty seed, then bracketed Newton on the CDF.
  const double kk = static_cast<double>(k);
  const double z = -norm_isf(q);  // lower quantile of the standard normal
  const double wh = 1.0 - 2.0 / (9.0 * kk) + z * std::sqrt(2.0 / (9.0 * kk));
  double x = kk * wh * wh * wh;
  if (!(x > 0.0)) x = 0.5 * kk * 1e-3;

  double lo = 0.0;
  double hi = std::numeric_limits<double>::max();
  for (int it = 0; it < 200; ++it) {
    const double f = (1.0 - chisq_central_sf(x, kk)) - q;
    if (f < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (std::fabs(f) <= 1e-14) break;
    const double dens = chisq_pdf(x, kk);
    double next = (dens > 0.0) ? x - f / dens : x;
    if (!(next > lo && next < hi)) {
      next = (hi == std::numeric_limits<double>::max()) ? 2.0 * x + 1.0
                                                        : 0.5 * (lo + hi);
    }
    if (next == x) break;
    x = next;
  }
  return x;
}

}  // namespace spacing
