#pragma once

#include <cmath>
#include <limits>

namespace lowcap {

// A nonnegative quantity stored as its base-2 logarithm. The value 0 is the
// sentinel -inf. Needed because binomial/Poisson tail terms underflow linear
// doubles long before the blocklengths of interest (n ~ 8000).
class LogDomainValue {
public:
    constexpr LogDomainValue() : log2_(-std::numeric_limits<double>::infinity()) {}

    static constexpr LogDomainValue zero() { return LogDomainValue(); }

    static LogDomainValue from_log2(double l2) {
        LogDomainValue v;
        v.log2_ = l2;
        return v;
    }

    static LogDomainValue from_linear(double x) {
        LogDomainValue v;
        v.log2_ = x > 0.0 ? std::log2(x) : -std::numeric_limits<double>::infinity();
        return v;
    }

    double log2_value() const { return log2_; }
    double to_linear() const { return std::exp2(log2_); }
    bool is_zero() const { return std::isinf(log2_) && log2_ < 0; }

    // log-sum-exp in base 2: result is never smaller than either operand.
    LogDomainValue& operator+=(LogDomainValue o) {
        if (o.is_zero()) return *this;
        if (is_zero()) { log2_ = o.log2_; return *this; }
        double hi = log2_, lo = o.log2_;
        if (lo > hi) std::swap(hi, lo);
        log2_ = hi + std::log1p(std::exp2(lo - hi)) * 1.4426950408889634074;
        return *this;
    }

    LogDomainValue& operator*=(LogDomainValue o) {
        if (is_zero() || o.is_zero()) {
            log2_ = -std::numeric_limits<double>::infinity();
        } else {
            log2_ += o.log2_;
        }
        return *this;
    }

    friend LogDomainValue operator+(LogDomainValue a, LogDomainValue b) { return a += b; }
    friend LogDomainValue operator*(LogDomainValue a, LogDomainValue b) { return a *= b; }
    friend bool operator<(LogDomainValue a, LogDomainValue b) { return a.log2_ < b.log2_; }
    friend bool operator==(LogDomainValue a, LogDomainValue b) { return a.log2_ == b.log2_; }

private:
    double log2_;
};

// Base-2 log-sum-exp of two raw log2 values.
inline double log2_add(double a, double b) {
    if (std::isinf(a) && a < 0) return b;
    if (std::isinf(b) && b < 0) return a;
    double hi = a > b ? a : b;
    double lo = a > b ? b : a;
    return hi + std::log1p(std::exp2(lo - hi)) * 1.4426950408889634074;
}

} // namespace lowcap
