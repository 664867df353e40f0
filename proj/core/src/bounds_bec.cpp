#include "lowcap/bounds_bec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lowcap/errors.hpp"
#include "lowcap/log_domain.hpp"
#include "lowcap/numerics.hpp"

namespace lowcap {

namespace {

constexpr double kLog2E = 1.4426950408889634074;
constexpr double kInvLn2 = kLog2E;
constexpr double kSolveTol = 1e-6;

const char* kTheoremMetadata = "solver=bisection tol=1e-6 tail_cutoff=lambda+40*sqrt(lambda)";

} // namespace

BecQuery make_bec_query(double epsilon, uint32_t n, double pe) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw domain_error("bec: epsilon must lie in (0,1)");
    if (n == 0) throw domain_error("bec: n must be positive");
    if (!(pe > 0.0 && pe < 1.0)) throw domain_error("bec: pe must lie in (0,1)");
    return BecQuery{epsilon, n, pe};
}

double frak_p1(double log2_m, double kappa) {
    if (log2_m < 0.0) throw domain_error("frak_p1: log2_m must be nonnegative");
    if (!(kappa > 0.0)) throw domain_error("frak_p1: kappa must be positive");
    double head = poisson_cdf_strict(kappa, log2_m);
    // M e^{-kappa/2} (1 - P_{kappa/2}(log2_m)) summed term by term:
    // term_i = exp2(log2_m - kappa*log2e + i*log2(kappa/2) - log2(i!)).
    double lam2 = 0.5 * kappa;
    uint64_t start = static_cast<uint64_t>(std::ceil(log2_m));
    uint64_t soft_end = static_cast<uint64_t>(lam2 + 40.0 * std::sqrt(lam2)) + 2;
    double log2_lam2 = std::log2(lam2);
    double base = log2_m - kappa * kLog2E;
    double acc = -std::numeric_limits<double>::infinity();
    for (uint64_t i = start;; ++i) {
        double t = base + static_cast<double>(i) * log2_lam2 - log2_factorial(i);
        acc = log2_add(acc, t);
        if (i >= soft_end && i > start + 8 && t < acc - 64.0) break;
        if (i > start + 4'000'000) break;
    }
    return head + std::exp2(acc);
}

double frak_p2(double log2_m, double kappa) {
    if (log2_m < 0.0) throw domain_error("frak_p2: log2_m must be nonnegative");
    if (!(kappa > 0.0)) throw domain_error("frak_p2: kappa must be positive");
    if (log2_m == 0.0) return 0.0;
    // P_kappa(x) - (e^kappa / M) P_{2kappa}(x) collapses term by term to
    // sum_{i<x} pmf_kappa(i) (1 - 2^{i-x}); every term is nonnegative, so the
    // log-domain accumulation never cancels and e^kappa never materializes.
    uint64_t last = static_cast<uint64_t>(std::ceil(log2_m)) - 1;
    uint64_t cutoff = static_cast<uint64_t>(kappa + 40.0 * std::sqrt(kappa)) + 2;
    last = std::min(last, cutoff);
    double acc = -std::numeric_limits<double>::infinity();
    for (uint64_t i = 0; i <= last; ++i) {
        double deficit = std::log1p(-std::exp2(static_cast<double>(i) - log2_m)) * kInvLn2;
        acc = log2_add(acc, log2_poisson_pmf(kappa, i) + deficit);
    }
    return std::exp2(acc);
}

double alpha_coeff(double epsilon, double kappa) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw domain_error("alpha_coeff: epsilon in (0,1)");
    if (!(kappa > 0.0)) throw domain_error("alpha_coeff: kappa must be positive");
    constexpr double sqrt_e_minus_1 = 0.6487212707001281468; // sqrt(e) - 1
    return std::sqrt(2.0) / std::pow(epsilon, 1.5) *
           (1.0 + 2.0 * std::sqrt(3.0 / (epsilon * kappa))) * sqrt_e_minus_1 *
           (1.0 - epsilon);
}

namespace {

double achievable_residual(double log2_m, double kappa, double alpha, double pe) {
    double p1 = frak_p1(log2_m, kappa);
    return p1 + alpha * std::sqrt(p1) - pe;
}

double converse_residual(double log2_m, double kappa, double alpha, double pe) {
    double p2 = std::max(frak_p2(log2_m, kappa), 0.0);
    double head = poisson_cdf_strict(kappa, log2_m);
    return p2 - alpha * std::sqrt(p2) - alpha * std::sqrt(head) - pe;
}

} // namespace

BoundResult bec_theorem_achievable(const BecQuery& q) {
    double kappa = q.kappa();
    double alpha = alpha_coeff(q.epsilon, kappa);
    auto resid = [&](double x) { return achievable_residual(x, kappa, alpha, q.pe); };
    if (resid(0.0) > 0.0)
        throw numerical_error("bec achievability: pe unreachable at this blocklength");
    double root = bisect_root(resid, 0.0, static_cast<double>(q.n), kSolveTol);
    return BoundResult{root, Direction::achievability, Method::theorem, kTheoremMetadata};
}

BoundResult bec_theorem_converse(const BecQuery& q) {
    double kappa = q.kappa();
    double alpha = alpha_coeff(q.epsilon, kappa);
    auto resid = [&](double x) { return converse_residual(x, kappa, alpha, q.pe); };
    if (resid(static_cast<double>(q.n)) < 0.0)
        throw numerical_error("bec converse: no solution on [0, n]");
    double root = bisect_root(resid, 0.0, static_cast<double>(q.n), kSolveTol);
    return BoundResult{root, Direction::converse, Method::theorem, kTheoremMetadata};
}

double bec_rcu_raw_pe(uint32_t n, double epsilon, double log2_m) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw domain_error("bec_rcu: epsilon in (0,1)");
    if (log2_m < 0.0) throw domain_error("bec_rcu: log2_m must be nonnegative");
    // log2(M-1); the degenerate M=1 case keeps the exponent [r-0]^+ = r.
    double log2_m1 = log2_m > 0.0
                         ? log2_m + std::log1p(-std::exp2(-log2_m)) * kInvLn2
                         : 0.0;
    double l2_eps = std::log2(epsilon);
    double l2_1me = std::log1p(-epsilon) * kInvLn2;
    double acc = -std::numeric_limits<double>::infinity();
    for (uint32_t r = 0; r <= n; ++r) {
        double w = log2_binomial(n, r).log2_value() + (n - r) * l2_eps + r * l2_1me;
        double expo = -std::max(0.0, static_cast<double>(r) - log2_m1);
        acc = log2_add(acc, w + expo);
    }
    return std::min(std::exp2(acc), 1.0);
}

double bec_converse_raw_pe(uint32_t n, double epsilon, double log2_m) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw domain_error("bec_converse: epsilon in (0,1)");
    if (log2_m <= 0.0) return 0.0;
    double l2_eps = std::log2(epsilon);
    double l2_1me = std::log1p(-epsilon) * kInvLn2;
    double acc = -std::numeric_limits<double>::infinity();
    for (uint32_t r = 0; r <= n && static_cast<double>(r) < log2_m; ++r) {
        double w = log2_binomial(n, r).log2_value() + (n - r) * l2_eps + r * l2_1me;
        double corr = std::log1p(-std::exp2(static_cast<double>(r) - log2_m)) * kInvLn2;
        acc = log2_add(acc, w + corr);
    }
    return std::exp2(acc);
}

BoundResult bec_normal_approx(const BecQuery& q) {
    double c = 1.0 - q.epsilon;
    double v = q.epsilon * (1.0 - q.epsilon);
    double val = q.n * c - std::sqrt(q.n * v) * q_inv(q.pe);
    return BoundResult{std::max(val, 0.0), Direction::achievability, Method::normal_approx,
                       "two-term; order term dropped"};
}

BlocklengthInterval bec_blocklength_interval(uint32_t k, double epsilon, double pe) {
    if (k == 0) throw domain_error("bec_blocklength_interval: k must be positive");
    double kd = static_cast<double>(k);
    uint32_t start = 1;
    auto conv_reaches = [&](uint32_t n) {
        try {
            return bec_theorem_converse(make_bec_query(epsilon, n, pe)).log2_m >= kd;
        } catch (const numerical_error&) {
            return false;
        }
    };
    auto ach_reaches = [&](uint32_t n) {
        try {
            return bec_theorem_achievable(make_bec_query(epsilon, n, pe)).log2_m >= kd;
        } catch (const numerical_error&) {
            return false;
        }
    };
    BlocklengthInterval out;
    out.n_lower = smallest_n_where(conv_reaches, start);
    out.n_upper = smallest_n_where(ach_reaches, start);
    return out;
}

uint32_t bec_rcu_blocklength(uint32_t k, double epsilon, double pe) {
    if (k == 0) throw domain_error("bec_rcu_blocklength: k must be positive");
    return smallest_n_where(
        [&](uint32_t n) { return bec_rcu_raw_pe(n, epsilon, static_cast<double>(k)) <= pe; });
}

uint32_t bec_raw_converse_blocklength(uint32_t k, double epsilon, double pe) {
    if (k == 0) throw domain_error("bec_raw_converse_blocklength: k must be positive");
    return smallest_n_where(
        [&](uint32_t n) { return bec_converse_raw_pe(n, epsilon, static_cast<double>(k)) <= pe; });
}

uint32_t bec_normal_approx_blocklength(uint32_t k, double epsilon, double pe) {
    if (k == 0) throw domain_error("bec_normal_approx_blocklength: k must be positive");
    double kd = static_cast<double>(k);
    return smallest_n_where([&](uint32_t n) {
        return bec_normal_approx(make_bec_query(epsilon, n, pe)).log2_m >= kd;
    });
}

} // namespace lowcap
