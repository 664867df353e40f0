#include "lowcap/repetition.hpp"

#include <cmath>

#include "lowcap/errors.hpp"
#include "lowcap/numerics.hpp"

namespace lowcap {

double bec_repeated_channel(double epsilon, uint32_t r) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("bec_repeated_channel: epsilon must lie in (0,1)");
    if (r == 0) throw domain_error("bec_repeated_channel: r must be positive");
    return std::pow(epsilon, static_cast<double>(r));
}

double exact_outer_blocks_bec(uint32_t n, double epsilon, double beta) {
    if (n == 0) throw domain_error("exact_outer_blocks_bec: n must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("exact_outer_blocks_bec: epsilon must lie in (0,1)");
    if (!(beta > 0.0 && beta < 1.0))
        throw domain_error("exact_outer_blocks_bec: beta must lie in (0,1)");
    double nd = static_cast<double>(n);
    double target = beta * nd * (1.0 - epsilon);
    double ln_eps = std::log(epsilon);
    // m (1 - eps^{n/m}) is increasing in m, 0 at m->0+ and kappa at m=n.
    auto resid = [&](double m) {
        return m * (1.0 - std::exp(ln_eps * nd / m)) - target;
    };
    double lo = 1e-9 * nd;
    while (resid(lo) > 0.0 && lo > 1e-300) lo *= 1e-3;
    if (resid(nd) < 0.0 || resid(lo) > 0.0)
        throw numerical_error("exact_outer_blocks_bec: no bracket for the retention equation");
    return bisect_root(resid, lo, nd, 1e-12 * nd);
}

std::pair<double, double> theorem_bracket(uint32_t n, double epsilon, double beta) {
    if (n == 0) throw domain_error("theorem_bracket: n must be positive");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw domain_error("theorem_bracket: epsilon must lie in (0,1)");
    if (!(beta > 0.0 && beta < 1.0)) throw domain_error("theorem_bracket: beta must lie in (0,1)");
    double ell = -std::log(epsilon) / (1.0 - epsilon);
    double ratio = beta / ell;
    double upper = static_cast<double>(n) * (1.0 - epsilon) * ell / (2.0 * (1.0 - ratio));
    return {upper * ratio * ratio, upper};
}

double bms_repetition_floor(uint32_t n, double cap, double beta) {
    if (n == 0) throw domain_error("bms_repetition_floor: n must be positive");
    if (!(cap > 0.0 && cap < 1.0))
        throw domain_error("bms_repetition_floor: capacity must lie in (0,1)");
    if (!(beta > 0.0 && beta < 1.0))
        throw domain_error("bms_repetition_floor: beta must lie in (0,1)");
    double kappa = static_cast<double>(n) * cap;
    return kappa * beta * beta / (2.0 * (1.0 - beta));
}

uint32_t negligible_loss_repetition(uint32_t n, double kappa) {
    if (n == 0) throw domain_error("negligible_loss_repetition: n must be positive");
    if (!(kappa > 0.0 && kappa < static_cast<double>(n)))
        throw domain_error("negligible_loss_repetition: kappa must lie in (0,n)");
    if (kappa <= 1.0) return 1;
    double beta = 1.0 - 1.0 / kappa;
    double epsilon = 1.0 - kappa / static_cast<double>(n);
    double m_exact = exact_outer_blocks_bec(n, epsilon, beta);
    double max_r = static_cast<double>(n) / m_exact;
    if (max_r < 2.0) return 1;
    uint32_t r = 1;
    while (2.0 * r <= max_r && 2ull * r <= n) r *= 2;
    return r;
}

RepetitionPlan plan_bec_repetition(uint32_t n, double epsilon, double beta) {
    RepetitionPlan plan;
    plan.n = n;
    plan.beta = beta;
    plan.m_exact = exact_outer_blocks_bec(n, epsilon, beta);
    auto [ml, mu] = theorem_bracket(n, epsilon, beta);
    plan.m_lower = ml;
    plan.m_upper = mu;
    // Outer length rounded down to the nearest power-of-two-divisor value
    // n/2^j; the induced beta slack is reported via beta_achieved.
    uint32_t outer = n;
    while (outer % 2 == 0 && static_cast<double>(outer) > plan.m_exact) outer /= 2;
    plan.outer_len = outer;
    plan.r = n / outer;
    double retained = static_cast<double>(outer) *
                      (1.0 - bec_repeated_channel(epsilon, plan.r));
    plan.beta_achieved = retained / (static_cast<double>(n) * (1.0 - epsilon));
    return plan;
}

} // namespace lowcap
