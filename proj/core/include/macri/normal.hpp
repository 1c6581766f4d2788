// Scalar kernels for the normal family: density, CDF, quantile, and
// log-space variants.  Self-contained rational approximations so results
// are deterministic across platforms and libm versions.
#pragma once

namespace macri {

// Density of N(mean, variance).  variance must be > 0.
double normal_pdf(double x, double mean = 0.0, double variance = 1.0);
double normal_logpdf(double x, double mean = 0.0, double variance = 1.0);

// Pr(X <= x) for X ~ N(mean, variance).  Computed by standardizing and
// evaluating the standard CDF, so normal_cdf(x, m, s2) and
// normal_cdf((x-m)/s, 0, 1) are bit-identical.  Accepts +/-inf.
double normal_cdf(double x, double mean = 0.0, double variance = 1.0);

// Upper tail Pr(X > x); accurate in the far right tail where 1 - cdf loses
// all precision.
double normal_sf(double x, double mean = 0.0, double variance = 1.0);

// log Pr(X <= x) and log Pr(X > x); finite for arguments far into either
// tail (|standardized x| up to ~1e7), as needed by large-n asymptotics.
double normal_logcdf(double x, double mean = 0.0, double variance = 1.0);
double normal_logsf(double x, double mean = 0.0, double variance = 1.0);

// Inverse of normal_cdf.  p must lie strictly in (0,1).
// normal_quantile(0.5, m, s2) == m exactly.
double normal_quantile(double p, double mean = 0.0, double variance = 1.0);

namespace detail {
// Cody-style rational approximations (SPECFUN CALERF); relative error in
// the 1e-16 range over the full double domain.
double erf_cody(double x);
double erfc_cody(double x);
double erfcx_cody(double x);  // exp(x^2) * erfc(x)
}  // namespace detail

}  // namespace macri
