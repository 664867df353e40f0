#include "lowcap/bounds_bsc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "lowcap/errors.hpp"
#include "lowcap/log_domain.hpp"
#include "lowcap/numerics.hpp"

namespace lowcap {

namespace {

constexpr double kLn2 = 0.6931471805599453094;
constexpr double kInvLn2 = 1.4426950408889634074;

void check_delta(double delta) {
    if (!(delta > 0.0 && delta < 0.5)) throw domain_error("bsc: delta must lie in (0,0.5)");
}

} // namespace

double BscQuery::cap() const { return 1.0 - binary_entropy(delta); }

double BscQuery::low_capacity_strain() const {
    double k = kappa();
    return k * std::sqrt(k) / static_cast<double>(n);
}

BscQuery make_bsc_query(double delta, uint32_t n, double pe) {
    check_delta(delta);
    if (n == 0) throw domain_error("bsc: n must be positive");
    if (!(pe > 0.0 && pe < 1.0)) throw domain_error("bsc: pe must lie in (0,1)");
    return BscQuery{delta, n, pe};
}

BoundResult bsc_theorem_log2m(const BscQuery& q) {
    check_delta(q.delta);
    double kappa = q.kappa();
    double coef = 2.0 * std::sqrt(2.0 * q.delta * (1.0 - q.delta) / kLn2);
    double val = kappa - coef * std::sqrt(kappa) * q_inv(q.pe) + 0.5 * std::log2(kappa) -
                 std::log2(q.pe);
    return BoundResult{std::max(val, 0.0), Direction::achievability, Method::theorem,
                       "loglog-order term dropped"};
}

uint32_t bsc_corollary_blocklength(uint32_t k, double delta, double pe) {
    if (k == 0) throw domain_error("bsc_corollary_blocklength: k must be positive");
    check_delta(delta);
    double c = 1.0 - binary_entropy(delta);
    double qi = q_inv(pe);
    double coef = 2.0 * std::sqrt(2.0 * delta * (1.0 - delta) / kLn2);
    double n = (k + coef * qi * std::sqrt(static_cast<double>(k)) +
                (4.0 * delta * (1.0 - delta) / kLn2) * qi * qi + std::log2(pe)) /
               c;
    if (!(n > 0.0)) throw numerical_error("bsc_corollary_blocklength: nonpositive solution");
    return static_cast<uint32_t>(std::ceil(n));
}

double bsc_rcu_raw_pe(uint32_t n, double delta, double log2_m) {
    check_delta(delta);
    if (log2_m < 0.0) throw domain_error("bsc_rcu: log2_m must be nonnegative");
    double log2_m1 = log2_m > 0.0
                         ? log2_m + std::log1p(-std::exp2(-log2_m)) * kInvLn2
                         : -std::numeric_limits<double>::infinity();
    double l2_d = std::log2(delta);
    double l2_1md = std::log1p(-delta) * kInvLn2;
    double acc = -std::numeric_limits<double>::infinity();
    double prefix = -std::numeric_limits<double>::infinity(); // log2 S_n^r
    for (uint32_t r = 0; r <= n; ++r) {
        double lb = log2_binomial(n, r).log2_value();
        prefix = log2_add(prefix, lb - static_cast<double>(n));
        double w = lb + r * l2_d + (n - r) * l2_1md;
        double inner = std::min(0.0, log2_m1 + prefix);
        acc = log2_add(acc, w + inner);
    }
    return std::min(std::exp2(acc), 1.0);
}

BoundResult bsc_metaconverse_log2m(uint32_t n, double delta, double pe) {
    check_delta(delta);
    if (n == 0) throw domain_error("bsc_metaconverse: n must be positive");
    if (!(pe > 0.0 && pe < 1.0)) throw domain_error("bsc_metaconverse: pe must lie in (0,1)");
    // alphas[l] = sum_{r<l} C(n,r) d^r (1-d)^{n-r}, l = 0..n+1 (nondecreasing)
    // betas[l]  = sum_{r<=l} C(n,r) 2^{-n},        l = 0..n
    std::vector<double> alphas(n + 2), betas(n + 1);
    double l2_d = std::log2(delta);
    double l2_1md = std::log1p(-delta) * kInvLn2;
    double acc_a = -std::numeric_limits<double>::infinity();
    double acc_b = -std::numeric_limits<double>::infinity();
    alphas[0] = 0.0;
    for (uint32_t r = 0; r <= n; ++r) {
        double lb = log2_binomial(n, r).log2_value();
        acc_a = log2_add(acc_a, lb + r * l2_d + (n - r) * l2_1md);
        acc_b = log2_add(acc_b, lb - static_cast<double>(n));
        alphas[r + 1] = std::min(std::exp2(acc_a), 1.0);
        betas[r] = std::min(std::exp2(acc_b), 1.0);
    }
    double target = 1.0 - pe;
    if (target < alphas[0] || target > alphas[n + 1])
        throw numerical_error("bsc_metaconverse: 1-pe outside [alpha_0, alpha_{n+1}]");
    // Largest L with alphas[L] <= target; binary search over the monotone table.
    uint32_t lo = 0, hi = n + 1;
    while (lo < hi) {
        uint32_t mid = lo + (hi - lo + 1) / 2;
        if (alphas[mid] <= target) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    uint32_t L = lo;
    double lambda = 0.0;
    if (L < n + 1 && alphas[L + 1] > alphas[L]) {
        lambda = (target - alphas[L]) / (alphas[L + 1] - alphas[L]);
    }
    auto beta_at = [&](uint32_t l) { return l <= n ? betas[l] : 1.0; };
    double beta = (1.0 - lambda) * beta_at(L) + lambda * beta_at(L + 1);
    return BoundResult{-std::log2(beta), Direction::converse, Method::raw_converse,
                       "beta interpolation, binary-searched L"};
}

BoundResult bsc_normal_approx(const BscQuery& q) {
    check_delta(q.delta);
    double c = q.cap();
    double lr = std::log2((1.0 - q.delta) / q.delta);
    double v = q.delta * (1.0 - q.delta) * lr * lr;
    double val = q.n * c - std::sqrt(q.n * v) * q_inv(q.pe) + 0.5 * std::log2(q.n);
    return BoundResult{std::max(val, 0.0), Direction::achievability, Method::normal_approx,
                       "three-term"};
}

uint32_t bsc_theorem_blocklength(uint32_t k, double delta, double pe) {
    if (k == 0) throw domain_error("bsc_theorem_blocklength: k must be positive");
    double kd = static_cast<double>(k);
    return smallest_n_where([&](uint32_t n) {
        return bsc_theorem_log2m(make_bsc_query(delta, n, pe)).log2_m >= kd;
    });
}

uint32_t bsc_rcu_blocklength(uint32_t k, double delta, double pe) {
    if (k == 0) throw domain_error("bsc_rcu_blocklength: k must be positive");
    return smallest_n_where(
        [&](uint32_t n) { return bsc_rcu_raw_pe(n, delta, static_cast<double>(k)) <= pe; });
}

uint32_t bsc_metaconverse_blocklength(uint32_t k, double delta, double pe) {
    if (k == 0) throw domain_error("bsc_metaconverse_blocklength: k must be positive");
    double kd = static_cast<double>(k);
    return smallest_n_where(
        [&](uint32_t n) { return bsc_metaconverse_log2m(n, delta, pe).log2_m >= kd; });
}

uint32_t bsc_normal_approx_blocklength(uint32_t k, double delta, double pe) {
    if (k == 0) throw domain_error("bsc_normal_approx_blocklength: k must be positive");
    double kd = static_cast<double>(k);
    return smallest_n_where([&](uint32_t n) {
        return bsc_normal_approx(make_bsc_query(delta, n, pe)).log2_m >= kd;
    });
}

} // namespace lowcap
