#include "lowcap/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "lowcap/errors.hpp"

namespace lowcap {

namespace {

constexpr double kLog2E = 1.4426950408889634074;       // log2(e)
constexpr double kHalfLog2Pi = 0.8257480693927602303;  // log2(pi)/2

// log2 of 0!..10! (exact integers, representable in double without rounding).
constexpr std::array<double, 11> exact_log2_factorial = {
    0.0,
    0.0,
    1.0,
    2.5849625007211561815,  // log2 6
    4.5849625007211561815,  // log2 24
    6.9068905956085185294,  // log2 120
    9.4918530963296747992,  // log2 720
    12.299208018862169487,  // log2 5040
    15.299208018862169487,  // log2 40320
    18.469133496352410423,  // log2 362880
    21.791061114716953688,  // log2 3628800
};

double theta_poly(uint64_t s, RamanujanTheta theta) {
    double sd = static_cast<double>(s);
    double t = 1.0 - 11.0 / (8.0 * sd) + 79.0 / (112.0 * sd * sd);
    if (theta == RamanujanTheta::upper) t += 20.0 / (33.0 * sd * sd * sd);
    return t;
}

double ramanujan_log2_factorial(uint64_t s, RamanujanTheta theta) {
    double sd = static_cast<double>(s);
    double poly = 8.0 * sd * sd * sd + 4.0 * sd * sd + sd + theta_poly(s, theta) / 30.0;
    return kHalfLog2Pi + sd * (std::log2(sd) - kLog2E) + std::log2(poly) / 6.0;
}

} // namespace

FactorialBounds factorial_bounds(uint64_t s) {
    FactorialBounds out;
    out.s = s;
    if (s <= 10) {
        double v = exact_log2_factorial[s];
        out.lower = LogDomainValue::from_log2(v);
        out.upper = LogDomainValue::from_log2(v);
    } else {
        out.lower = LogDomainValue::from_log2(ramanujan_log2_factorial(s, RamanujanTheta::lower));
        out.upper = LogDomainValue::from_log2(ramanujan_log2_factorial(s, RamanujanTheta::upper));
    }
    return out;
}

double log2_factorial(uint64_t s, RamanujanTheta theta) {
    if (s <= 10) return exact_log2_factorial[s];
    return ramanujan_log2_factorial(s, theta);
}

double log2_poisson_pmf(double lambda, uint64_t s, RamanujanTheta theta) {
    if (!(lambda > 0.0)) throw domain_error("poisson: lambda must be positive");
    double sd = static_cast<double>(s);
    return (-lambda + sd * std::log(lambda)) * kLog2E - log2_factorial(s, theta);
}

double poisson_pmf(double lambda, uint64_t s, RamanujanTheta theta) {
    return std::exp2(log2_poisson_pmf(lambda, s, theta));
}

double poisson_cdf_strict(double lambda, double x, RamanujanTheta theta) {
    if (!(lambda > 0.0)) throw domain_error("poisson: lambda must be positive");
    if (x <= 0.0) return 0.0;
    uint64_t last = static_cast<uint64_t>(std::ceil(x)) - 1;
    uint64_t cutoff = static_cast<uint64_t>(lambda + 40.0 * std::sqrt(lambda)) + 2;
    last = std::min(last, cutoff);
    LogDomainValue acc = LogDomainValue::zero();
    for (uint64_t i = 0; i <= last; ++i) {
        acc += LogDomainValue::from_log2(log2_poisson_pmf(lambda, i, theta));
    }
    return std::min(acc.to_linear(), 1.0);
}

double q_func(double a) { return 0.5 * std::erfc(a * 0.7071067811865475244); }

namespace {

// Rational approximation for the inverse standard normal CDF (Acklam),
// polished below with Newton steps against q_func.
double norm_inv_cdf_approx(double p) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;
    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - p_low) {
        double q = p - 0.5;
        double r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    double q = std::sqrt(-2.0 * std::log1p(-p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

} // namespace

double q_inv(double p) {
    if (!(p > 0.0 && p < 1.0)) throw domain_error("q_inv: p must lie in (0,1)");
    // Q^{-1}(p) = -Phi^{-1}(p); the lower Acklam branch is the accurate one
    // for small p, which is the regime the bounds operate in.
    double x = -norm_inv_cdf_approx(p);
    for (int it = 0; it < 3; ++it) {
        double phi = 0.39894228040143267794 * std::exp(-0.5 * x * x);
        if (phi <= 0.0) break;
        x += (q_func(x) - p) / phi;
    }
    return x;
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw domain_error("binary_entropy: x must lie in [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

LogDomainValue log2_binomial(uint64_t n, int64_t r) {
    if (r < 0 || static_cast<uint64_t>(r) > n)
        throw domain_error("log2_binomial: r outside [0,n]");
    uint64_t k = std::min<uint64_t>(static_cast<uint64_t>(r), n - static_cast<uint64_t>(r));
    if (k == 0) return LogDomainValue::from_log2(0.0);
    if (k <= 100) {
        double acc = 0.0;
        for (uint64_t j = 1; j <= k; ++j) {
            acc += std::log2(static_cast<double>(n - j + 1)) - std::log2(static_cast<double>(j));
        }
        return LogDomainValue::from_log2(acc);
    }
    double v = std::lgamma(static_cast<double>(n) + 1.0) -
               std::lgamma(static_cast<double>(k) + 1.0) -
               std::lgamma(static_cast<double>(n - k) + 1.0);
    return LogDomainValue::from_log2(v * kLog2E);
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol) {
    if (!(lo < hi)) throw domain_error("bisect_root: empty bracket");
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw numerical_error("bisect_root: no sign change on bracket");
    for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace lowcap
