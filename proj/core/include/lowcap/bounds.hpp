#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace lowcap {

enum class Direction { achievability, converse };
enum class Method { theorem, raw_rcu, raw_converse, normal_approx };

// A code-size bound in the log2 domain with its provenance.
struct BoundResult {
    double log2_m = 0.0;
    Direction direction = Direction::achievability;
    Method method = Method::theorem;
    // Free-form evaluation notes (dropped order terms, solver tolerance).
    std::string metadata;
};

// [n_lower, n_upper] bracketing the optimal blocklength for a (k, pe) query.
struct BlocklengthInterval {
    uint32_t n_lower = 0;
    uint32_t n_upper = 0;
};

std::string to_string(Direction d);
std::string to_string(Method m);

// Smallest n >= lo with pred(n) true, for pred that is monotone in n
// (false below the threshold, true at and above it). Brackets by exponential
// doubling, then bisects; verifies pred flips at the returned point.
uint32_t smallest_n_where(const std::function<bool(uint32_t)>& pred, uint32_t lo = 1);

} // namespace lowcap
