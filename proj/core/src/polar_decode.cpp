#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "lowcap/errors.hpp"
#include "lowcap/polar.hpp"

namespace lowcap {

namespace {

bool g_min_sum = false;

double f_update(double a, double b) {
    if (std::isinf(a)) return a > 0 ? b : -b;
    if (std::isinf(b)) return b > 0 ? a : -a;
    double sa = std::abs(a), sb = std::abs(b);
    double sign = ((a < 0) == (b < 0)) ? 1.0 : -1.0;
    double mag = std::min(sa, sb);
    if (g_min_sum) return sign * mag;
    double corr = std::log1p(std::exp(-(sa + sb))) - std::log1p(std::exp(-std::abs(sa - sb)));
    return sign * mag + corr;
}

double g_update(double a, double b, uint8_t u) {
    return llr_saturating_add(b, u ? -a : a);
}

// |LLR| charged when the decision disagrees with the LLR sign.
double decision_penalty(double llr, uint8_t u) {
    if (u == 0) return llr < 0 ? -llr : 0.0;
    return llr > 0 ? llr : 0.0;
}

bool is_frozen(const PolarSpec& spec, uint32_t index) {
    return !std::binary_search(spec.info_set.begin(), spec.info_set.end(), index);
}

DecodeResult finish(const PolarSpec& spec, const std::vector<uint8_t>& u, double pm) {
    DecodeResult res;
    res.path_metric = pm;
    res.payload.resize(spec.k_payload());
    for (uint32_t j = 0; j < spec.k_payload(); ++j) {
        res.payload[j] = u[spec.reliability_order[j]];
    }
    if (spec.crc_len == 0) {
        res.crc_ok = true;
    } else {
        std::vector<uint8_t> crc(spec.crc_len);
        for (uint32_t j = 0; j < spec.crc_len; ++j) {
            crc[j] = u[spec.reliability_order[spec.k_payload() + j]];
        }
        res.crc_ok = crc_check(res.payload, crc, spec.crc_poly);
    }
    return res;
}

// ---- successive cancellation (single path), straightforward recursion ----

std::vector<uint8_t> sc_node(const PolarSpec& spec, std::span<const double> llr,
                             uint32_t first_leaf, std::vector<uint8_t>& u, double& pm) {
    size_t size = llr.size();
    if (size == 1) {
        uint8_t bit = 0;
        if (!is_frozen(spec, first_leaf) && llr[0] < 0) bit = 1;
        pm += decision_penalty(llr[0], bit);
        u[first_leaf] = bit;
        return {bit};
    }
    size_t half = size / 2;
    std::vector<double> sub(half);
    for (size_t j = 0; j < half; ++j) sub[j] = f_update(llr[j], llr[j + half]);
    auto left = sc_node(spec, sub, first_leaf, u, pm);
    for (size_t j = 0; j < half; ++j) sub[j] = g_update(llr[j], llr[j + half], left[j]);
    auto right = sc_node(spec, sub, first_leaf + static_cast<uint32_t>(half), u, pm);
    std::vector<uint8_t> out(size);
    for (size_t j = 0; j < half; ++j) {
        out[j] = left[j] ^ right[j];
        out[j + half] = right[j];
    }
    return out;
}

// ---- list decoding: L paths advanced leaf by leaf in lockstep ----

struct Path {
    // llr[d], sums[d] cover levels d = 1..m with length n >> d; level 0 is
    // the shared channel vector.
    std::vector<std::vector<double>> llr;
    std::vector<std::vector<uint8_t>> sums;
    std::vector<uint8_t> u;
    double pm = 0.0;
    bool active = false;
};

class ListEngine {
public:
    ListEngine(const PolarSpec& spec, std::span<const Llr> channel, uint32_t L)
        : spec_(spec), channel_(channel), m_(spec.m), n_(spec.n()), L_(L) {
        paths_.resize(2 * L_);
        active_.push_back(0);
        init_path(paths_[0]);
        paths_[0].active = true;
        for (size_t s = 1; s < paths_.size(); ++s) free_.push_back(s);
    }

    DecodeResult run() {
        for (uint32_t i = 0; i < n_; ++i) {
            compute_leaf_llrs(i);
            if (is_frozen(spec_, i)) {
                advance_frozen(i);
            } else {
                advance_info(i);
            }
            for (size_t s : active_) propagate(paths_[s], i);
        }
        return select_result();
    }

private:
    void init_path(Path& p) {
        p.llr.assign(m_ + 1, {});
        p.sums.assign(m_ + 1, {});
        for (uint32_t d = 1; d <= m_; ++d) {
            p.llr[d].assign(n_ >> d, 0.0);
            p.sums[d].assign(n_ >> d, 0);
        }
        p.u.assign(n_, 0);
        p.pm = 0.0;
    }

    void compute_leaf_llrs(uint32_t i) {
        uint32_t d0 = (i == 0) ? 1 : m_ - static_cast<uint32_t>(std::countr_zero(i));
        for (size_t s : active_) {
            Path& p = paths_[s];
            for (uint32_t d = d0; d <= m_; ++d) {
                uint32_t len = n_ >> d;
                const double* parent = (d == 1) ? channel_.data() : p.llr[d - 1].data();
                bool right = (i >> (m_ - d)) & 1;
                if (right) {
                    const uint8_t* su = p.sums[d].data();
                    for (uint32_t j = 0; j < len; ++j) {
                        p.llr[d][j] = g_update(parent[j], parent[j + len], su[j]);
                    }
                } else {
                    for (uint32_t j = 0; j < len; ++j) {
                        p.llr[d][j] = f_update(parent[j], parent[j + len]);
                    }
                }
            }
        }
    }

    void advance_frozen(uint32_t i) {
        for (size_t s : active_) {
            Path& p = paths_[s];
            double llr = p.llr[m_][0];
            p.pm += decision_penalty(llr, 0);
            p.u[i] = 0;
        }
    }

    void advance_info(uint32_t i) {
        struct Cand {
            double pm;
            uint32_t order; // position in active_ (stable tie-break)
            uint8_t bit;
        };
        std::vector<Cand> cands;
        cands.reserve(active_.size() * 2);
        for (size_t o = 0; o < active_.size(); ++o) {
            double llr = paths_[active_[o]].llr[m_][0];
            double base = paths_[active_[o]].pm;
            cands.push_back({base + decision_penalty(llr, 0), static_cast<uint32_t>(o), 0});
            cands.push_back({base + decision_penalty(llr, 1), static_cast<uint32_t>(o), 1});
        }
        size_t keep = std::min<size_t>(L_, cands.size());
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.pm != b.pm) return a.pm < b.pm;
            if (a.order != b.order) return a.order < b.order;
            return a.bit < b.bit;
        });
        cands.resize(keep);

        // survivors[o] = bitmask of kept decisions for active_[o]
        std::vector<uint8_t> survivors(active_.size(), 0);
        std::vector<double> new_pm(active_.size() * 2, 0.0);
        for (const Cand& c : cands) {
            survivors[c.order] |= (c.bit ? 2 : 1);
            new_pm[c.order * 2 + c.bit] = c.pm;
        }

        std::vector<size_t> next_active;
        next_active.reserve(keep);
        for (size_t o = 0; o < active_.size(); ++o) {
            size_t s = active_[o];
            Path& p = paths_[s];
            uint8_t mask = survivors[o];
            if (mask == 0) {
                p.active = false;
                free_.push_back(s);
                continue;
            }
            if (mask == 3) {
                size_t clone_slot = free_.back();
                free_.pop_back();
                Path& q = paths_[clone_slot];
                q = p; // deep copy of llr/sums/u
                q.active = true;
                p.u[i] = 0;
                p.pm = new_pm[o * 2];
                q.u[i] = 1;
                q.pm = new_pm[o * 2 + 1];
                next_active.push_back(s);
                next_active.push_back(clone_slot);
            } else {
                uint8_t bit = (mask == 2) ? 1 : 0;
                p.u[i] = bit;
                p.pm = new_pm[o * 2 + bit];
                next_active.push_back(s);
            }
        }
        active_ = std::move(next_active);
    }

    void propagate(Path& p, uint32_t i) {
        scratch_.assign(1, p.u[i]);
        uint32_t d = m_;
        while (d >= 1 && ((i >> (m_ - d)) & 1)) {
            uint32_t len = n_ >> d;
            merged_.resize(2 * len);
            for (uint32_t j = 0; j < len; ++j) {
                merged_[j] = p.sums[d][j] ^ scratch_[j];
                merged_[j + len] = scratch_[j];
            }
            scratch_.swap(merged_);
            --d;
        }
        if (d >= 1) p.sums[d] = scratch_;
    }

    DecodeResult select_result() {
        std::vector<size_t> order(active_.begin(), active_.end());
        std::stable_sort(order.begin(), order.end(), [this](size_t a, size_t b) {
            return paths_[a].pm < paths_[b].pm;
        });
        if (spec_.crc_len > 0) {
            for (size_t s : order) {
                DecodeResult r = finish(spec_, paths_[s].u, paths_[s].pm);
                if (r.crc_ok) return r;
            }
        }
        return finish(spec_, paths_[order.front()].u, paths_[order.front()].pm);
    }

    const PolarSpec& spec_;
    std::span<const Llr> channel_;
    uint32_t m_;
    uint32_t n_;
    uint32_t L_;
    std::vector<Path> paths_;
    std::vector<size_t> active_;
    std::vector<size_t> free_;
    std::vector<uint8_t> scratch_;
    std::vector<uint8_t> merged_;
};

} // namespace

DecodeResult sc_decode(const PolarSpec& spec, std::span<const Llr> llrs) {
    if (llrs.size() != spec.n()) throw domain_error("sc_decode: llr length mismatch");
    if (spec.info_set.empty()) throw domain_error("sc_decode: empty info set");
    std::vector<uint8_t> u(spec.n(), 0);
    double pm = 0.0;
    sc_node(spec, llrs, 0, u, pm);
    return finish(spec, u, pm);
}

DecodeResult scl_decode(const PolarSpec& spec, std::span<const Llr> llrs, uint32_t list_size) {
    if (llrs.size() != spec.n()) throw domain_error("scl_decode: llr length mismatch");
    if (spec.info_set.empty()) throw domain_error("scl_decode: empty info set");
    if (list_size == 0) throw domain_error("scl_decode: list size must be positive");
    ListEngine engine(spec, llrs, list_size);
    return engine.run();
}

void set_min_sum_f_update(bool enabled) { g_min_sum = enabled; }

} // namespace lowcap
