#include "macri/normal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace macri {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;
constexpr double kSqrt2Pi = 2.50662827463100050242;

void check_variance(double variance) {
    if (!(variance > 0.0) || !std::isfinite(variance)) {
        throw std::domain_error("normal kernel: variance must be positive and finite, got " +
                                std::to_string(variance));
    }
}

void check_not_nan(double x, const char* what) {
    if (std::isnan(x)) {
        throw std::domain_error(std::string("normal kernel: ") + what + " is NaN");
    }
}

}  // namespace

namespace detail {

// W. J. Cody's rational Chebyshev approximations for erf/erfc/erfcx
// (netlib SPECFUN, CALERF).  mode: 0 -> erf, 1 -> erfc, 2 -> erfcx.
static double calerf(double x, int mode) {
    static const double a[5] = {3.16112374387056560e0, 1.13864154151050156e2,
                                3.77485237685302021e2, 3.20937758913846947e3,
                                1.85777706184603153e-1};
    static const double b[4] = {2.36012909523441209e1, 2.44024637934444173e2,
                                1.28261652607737228e3, 2.84423683343917062e3};
    static const double c[9] = {5.64188496988670089e-1, 8.88314979438837594e0,
                                6.61191906371416295e1,  2.98635138197400131e2,
                                8.81952221241769090e2,  1.71204761263407058e3,
                                2.05107837782607147e3,  1.23033935479799725e3,
                                2.15311535474403846e-8};
    static const double d[8] = {1.57449261107098347e1, 1.17693950891312499e2,
                                5.37181101862009858e2, 1.62138957456669019e3,
                                3.29079923573345963e3, 4.36261909014324716e3,
                                3.43936767414372164e3, 1.23033935480374942e3};
    static const double p[6] = {3.05326634961232344e-1, 3.60344899949804439e-1,
                                1.25781726111229246e-1, 1.60837851487422766e-2,
                                6.58749161529837803e-4, 1.63153871373020978e-2};
    static const double q[5] = {2.56852019228982242e0, 1.87295284992346047e0,
                                5.27905102951428412e-1, 6.05183413124413191e-2,
                                2.33520497626869185e-3};

    const double sqrpi = 5.6418958354775628695e-1;  // 1/sqrt(pi)
    const double thresh = 0.46875;
    const double xbig = 26.543;    // erfc underflows beyond this
    const double xhuge = 6.71e7;   // erfcx ~ 1/(x sqrt(pi)) beyond this
    const double xmax = 2.53e307;  // erfcx overflow bound for x -> -inf side

    double y = std::fabs(x);
    double result;

    if (y <= thresh) {
        double ysq = (y > 1.11e-16) ? y * y : 0.0;
        double xnum = a[4] * ysq;
        double xden = ysq;
        for (int i = 0; i < 3; ++i) {
            xnum = (xnum + a[i]) * ysq;
            xden = (xden + b[i]) * ysq;
        }
        result = x * (xnum + a[3]) / (xden + b[3]);  // erf(x)
        if (mode != 0) result = 1.0 - result;
        if (mode == 2) result *= std::exp(ysq);
        return result;
    }

    if (y <= 4.0) {
        double xnum = c[8] * y;
        double xden = y;
        for (int i = 0; i < 7; ++i) {
            xnum = (xnum + c[i]) * y;
            xden = (xden + d[i]) * y;
        }
        result = (xnum + c[7]) / (xden + d[7]);
        if (mode != 2) {
            double ysq = std::trunc(y * 16.0) / 16.0;
            double del = (y - ysq) * (y + ysq);
            result *= std::exp(-ysq * ysq) * std::exp(-del);
        }
    } else {
        result = 0.0;
        if (y >= xbig && (mode != 2 || y >= xmax)) {
            // erfc underflow; erfcx overflow handled in the sign fixup
        } else if (y >= xbig && mode == 2 && y >= xhuge) {
            result = sqrpi / y;
        } else {
            double ysq = 1.0 / (y * y);
            double xnum = p[5] * ysq;
            double xden = ysq;
            for (int i = 0; i < 4; ++i) {
                xnum = (xnum + p[i]) * ysq;
                xden = (xden + q[i]) * ysq;
            }
            result = ysq * (xnum + p[4]) / (xden + q[4]);
            result = (sqrpi - result) / y;
            if (mode != 2) {
                double ysq16 = std::trunc(y * 16.0) / 16.0;
                double del = (y - ysq16) * (y + ysq16);
                result *= std::exp(-ysq16 * ysq16) * std::exp(-del);
            }
        }
    }

    if (mode == 0) {  // erf
        result = (0.5 - result) + 0.5;
        if (x < 0.0) result = -result;
    } else if (mode == 1) {  // erfc
        if (x < 0.0) result = 2.0 - result;
    } else {  // erfcx
        if (x < 0.0) {
            if (x < -26.628) {
                result = std::numeric_limits<double>::infinity();
            } else {
                double ysq = std::trunc(x * 16.0) / 16.0;
                double del = (x - ysq) * (x + ysq);
                double e = std::exp(ysq * ysq) * std::exp(del);
                result = (e + e) - result;
            }
        }
    }
    return result;
}

double erf_cody(double x) {
    if (std::isinf(x)) return x > 0 ? 1.0 : -1.0;
    return calerf(x, 0);
}

double erfc_cody(double x) {
    if (std::isinf(x)) return x > 0 ? 0.0 : 2.0;
    return calerf(x, 1);
}

double erfcx_cody(double x) {
    if (std::isinf(x)) return x > 0 ? 0.0 : std::numeric_limits<double>::infinity();
    return calerf(x, 2);
}

}  // namespace detail

namespace {

double std_cdf(double s) {
    if (std::isinf(s)) return s > 0 ? 1.0 : 0.0;
    return 0.5 * detail::erfc_cody(-s * kInvSqrt2);
}

double std_logcdf(double s) {
    if (std::isinf(s)) {
        return s > 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    }
    if (s > -1.0) return std::log(std_cdf(s));
    // Far left tail: cdf(s) = 0.5 erfcx(-s/sqrt(2)) exp(-s^2/2)
    return std::log(0.5 * detail::erfcx_cody(-s * kInvSqrt2)) - 0.5 * s * s;
}

double std_pdf(double s) {
    if (std::isinf(s)) return 0.0;
    return std::exp(-0.5 * s * s - kLogSqrt2Pi);
}

// Acklam's rational approximation to the standard normal quantile
// (relative error ~1.15e-9), polished with two Halley iterations against
// std_cdf, which brings the result to full double precision.
double std_quantile(double p) {
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;

    double x;
    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        double q = p - 0.5;
        double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    for (int it = 0; it < 2; ++it) {
        double dens = std_pdf(x);
        if (dens <= 0.0) break;  // beyond ~|x|=38.9 the initializer is all we have
        double e = std_cdf(x) - p;
        double u = e / dens;
        x -= u / (1.0 + 0.5 * x * u);  // Halley step
    }
    return x;
}

}  // namespace

double normal_pdf(double x, double mean, double variance) {
    check_variance(variance);
    check_not_nan(x, "x");
    check_not_nan(mean, "mean");
    if (std::isinf(x)) return 0.0;
    double sd = std::sqrt(variance);
    return std_pdf((x - mean) / sd) / sd;
}

double normal_logpdf(double x, double mean, double variance) {
    check_variance(variance);
    check_not_nan(x, "x");
    check_not_nan(mean, "mean");
    if (std::isinf(x)) return -std::numeric_limits<double>::infinity();
    double s = (x - mean) / std::sqrt(variance);
    return -0.5 * s * s - kLogSqrt2Pi - 0.5 * std::log(variance);
}

double normal_cdf(double x, double mean, double variance) {
    check_variance(variance);
    check_not_nan(x, "x");
    check_not_nan(mean, "mean");
    if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
    return std_cdf((x - mean) / std::sqrt(variance));
}

double normal_sf(double x, double mean, double variance) {
    check_variance(variance);
    check_not_nan(x, "x");
    check_not_nan(mean, "mean");
    if (std::isinf(x)) return x > 0 ? 0.0 : 1.0;
    return std_cdf(-(x - mean) / std::sqrt(variance));
}

double normal_logcdf(double x, double mean, double variance) {
    check_variance(variance);
    check_not_nan(x, "x");
    check_not_nan(mean, "mean");
    if (std::isinf(x)) return x > 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    return std_logcdf((x - mean) / std::sqrt(variance));
}

double normal_logsf(double x, double mean, double variance) {
    check_variance(variance);
    check_not_nan(x, "x");
    check_not_nan(mean, "mean");
    if (std::isinf(x)) return x > 0 ? -std::numeric_limits<double>::infinity() : 0.0;
    return std_logcdf(-(x - mean) / std::sqrt(variance));
}

double normal_quantile(double p, double mean, double variance) {
    check_variance(variance);
    check_not_nan(mean, "mean");
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("normal_quantile: p must be in (0,1), got " + std::to_string(p));
    }
    if (p == 0.5) return mean;
    return mean + std::sqrt(variance) * std_quantile(p);
}

}  // namespace macri
