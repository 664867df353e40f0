#include "lowcap/bounds_awgn.hpp"

#include <cmath>

#include "lowcap/errors.hpp"
#include "lowcap/numerics.hpp"

namespace lowcap {

namespace {

constexpr double kLn2 = 0.6931471805599453094;

} // namespace

double AwgnQuery::kappa() const {
    return 0.5 * static_cast<double>(n) * std::log2(1.0 + eta);
}

AwgnQuery make_awgn_query(double eta, uint32_t n, double pe) {
    if (!(eta > 0.0)) throw domain_error("awgn: eta must be positive");
    if (n == 0) throw domain_error("awgn: n must be positive");
    if (!(pe > 0.0 && pe < 1.0)) throw domain_error("awgn: pe must lie in (0,1)");
    return AwgnQuery{eta, n, pe};
}

std::pair<BoundResult, BoundResult> awgn_theorem_interval(const AwgnQuery& q) {
    if (!(q.eta > 0.0)) throw domain_error("awgn: eta must be positive");
    double kappa = q.kappa();
    double coef = std::sqrt(q.eta + 2.0) / ((q.eta + 1.0) * std::sqrt(kLn2));
    double base = kappa - coef * std::sqrt(kappa) * q_inv(q.pe);
    double upper = base + 0.5 * std::log2(kappa) - std::log2(q.pe);
    BoundResult lo{std::max(base, 0.0), Direction::achievability, Method::theorem,
                   "bracket-excludes-O(1)"};
    BoundResult hi{std::max(upper, 0.0), Direction::converse, Method::theorem,
                   "bracket-excludes-O(1)"};
    return {lo, hi};
}

uint32_t awgn_corollary_blocklength(uint32_t k, double eta, double pe) {
    if (k == 0) throw domain_error("awgn_corollary_blocklength: k must be positive");
    if (!(eta > 0.0)) throw domain_error("awgn: eta must be positive");
    double coef = std::sqrt(eta + 2.0) / ((eta + 1.0) * std::sqrt(kLn2));
    double n = 2.0 / std::log2(1.0 + eta) *
               (k + coef * q_inv(pe) * std::sqrt(static_cast<double>(k)));
    return static_cast<uint32_t>(std::ceil(n));
}

double shannon_limit_ebn0(double rate) {
    if (!(rate > 0.0 && rate < 1.0)) throw domain_error("shannon_limit: rate must lie in (0,1)");
    double ebn0 = (std::exp2(2.0 * rate) - 1.0) / (2.0 * rate);
    return 10.0 * std::log10(ebn0);
}

} // namespace lowcap
