#include "lowcap/bounds.hpp"

#include "lowcap/errors.hpp"

namespace lowcap {

std::string to_string(Direction d) {
    return d == Direction::achievability ? "achievability" : "converse";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::theorem: return "theorem";
        case Method::raw_rcu: return "raw_rcu";
        case Method::raw_converse: return "raw_converse";
        case Method::normal_approx: return "normal_approx";
    }
    return "unknown";
}

uint32_t smallest_n_where(const std::function<bool(uint32_t)>& pred, uint32_t lo) {
    constexpr uint32_t kCap = 1u << 26;
    if (lo == 0) lo = 1;
    const uint32_t start = lo;
    uint32_t hi = lo;
    while (!pred(hi)) {
        if (hi >= kCap) throw numerical_error("smallest_n_where: no threshold below cap");
        uint64_t next = static_cast<uint64_t>(hi) * 2;
        lo = hi + 1;
        hi = static_cast<uint32_t>(std::min<uint64_t>(next, kCap));
    }
    while (lo < hi) {
        uint32_t mid = lo + (hi - lo) / 2;
        if (pred(mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    // Local monotonicity guard around the returned threshold.
    if (lo > start && pred(lo - 1))
        throw numerical_error("smallest_n_where: predicate not monotone near threshold");
    return lo;
}

} // namespace lowcap
