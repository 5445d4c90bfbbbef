#pragma once

#include <cmath>

namespace spacing {

// Natural log of a probability in (0,1]. Keeping survival values in the log
// domain is what lets the pivot ratios survive arguments far beyond the
// underflow point of the plain survival function (x ~ 38).
struct LogProb {
  double value = 0.0;  // log p, always <= 0

  double prob() const { return std::exp(value); }
};

// Standard normal density phi(x).
double norm_pdf(double x);
double norm_log_pdf(double x);

// Upper tail of the standard normal, 1 - Phi(x).
double norm_sf(double x);

// log(1 - Phi(x)), accurate in the far right tail (x up to ~1e7 before the
// quadratic term itself loses resolution; certainly beyond x = 40).
LogProb norm_logsf(double x);

// Inverse of norm_sf on (0,1). Bracketed Newton refinement on the
// probability scale, seeded with a tail/central approximation.
double norm_isf(double p);

// Inverse of norm_logsf; stable for logp down to -700 and beyond.
double norm_isf_log(LogProb logp);

// Upper tail of Student's t with dof degrees of freedom.
double student_sf(double t, int dof);
LogProb student_logsf(double t, int dof);

// Upper tail of the (non)central chi-squared with k degrees of freedom and
// noncentrality ncp = ||mu||^2. ncp = 0 gives the central law.
double chisq_sf(double x, int k, double ncp = 0.0);

// Central chi-squared quantile: x with P(chi2_k <= x) = q.
double chisq_quantile(double q, int k);

}  // namespace spacing
