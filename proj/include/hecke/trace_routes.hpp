#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "class_numbers.hpp"
#include "curves.hpp"
#include "kernels.hpp"
#include "modular_forms.hpp"

namespace hecke {

struct TraceReport {
    int k = 0;
    std::int64_t p = 0;
    std::optional<Int> pointcount, hijikata, hypergeometric, recursive, oracle;
    bool agree = false;
    std::string failed_route;  // empty when every requested route succeeded
};

// Per-prime evaluation context. The expensive per-p state (Frobenius sweeps,
// the character table over F_q, Hijikata class-number data) is built lazily
// once and shared across weights.
class TraceContext {
public:
    explicit TraceContext(std::int64_t p)
        : p_(p), e_(extension_degree(p)), q_(e_ == 1 ? p : p * p), fp_(p, 1) {}

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    int degree() const { return e_; }

    // a(t, p) for t = 2..p-1 by the naive point-count sweep over F_p.
    const std::vector<std::int64_t>& frobenius_sweep() {
        if (!a_pc_) {
            std::vector<std::int64_t> v;
            v.reserve(static_cast<std::size_t>(p_ - 2));
            for (std::int64_t t = 2; t < p_; ++t)
                v.push_back(frobenius_trace(fp_, fp_.from_int(t)).a);
            a_pc_ = std::move(v);
        }
        return *a_pc_;
    }

    // a(t, q) for t = 2..p-1 by the hypergeometric evaluation over F_q.
    const std::vector<std::int64_t>& frobenius_sweep_hyp() {
        if (!a_hyp_) {
            ensure_char_table();
            FrobeniusHypSweep sweep(*tab_);
            std::vector<std::int64_t> v;
            v.reserve(static_cast<std::size_t>(p_ - 2));
            const Field& f = tab_->field();
            for (std::int64_t t = 2; t < p_; ++t) v.push_back(sweep.a(f.from_int(t)));
            if (sweep.max_residual() > max_resid_) max_resid_ = sweep.max_residual();
            a_hyp_ = std::move(v);
        }
        return *a_hyp_;
    }

    double max_hyp_residual() const { return max_resid_; }

    // Route 1: point counts.  Tr_k = -1 - lambda(k,p) - sum_t G_k(a(t,p), p).
    Int pointcount(int k) {
        require_weight(k, 4);
        if (auto it = memo_pc_.find(k); it != memo_pc_.end()) return it->second;
        Int acc = -1 - trace_correction(k, p_);
        for (const std::int64_t a : frobenius_sweep()) acc -= kernel_poly(k, Int(a), p_);
        memo_pc_.emplace(k, acc);
        return acc;
    }

    // Route 2: class numbers.  Accepts k = 2 (and returns 0 there).
    Int hijikata(int k) {
        require_weight(k, 2);
        ensure_hijikata_data();
        Rat acc = Rat(-1) - Rat(1, 2) * (*beta_) * Rat(pow_int(Int(-p_), k / 2 - 1));
        for (const auto& [s, inner] : *inner_sums_) acc -= Rat(kernel_poly(k, Int(s), p_)) * inner;
        if (k == 2) acc += p_ + 1;
        return rat_to_int(acc, "trace_hijikata");
    }

    // Route 3: hypergeometric values.  With m = k/2 - 1, each t contributes
    // (-p)^m H_m(-A/p) where A = a(t,p)^2 is recovered from the 2F1 value
    // (directly at q = p, through a(t,p^2) + 2p at q = p^2).
    Int hypergeometric(int k) {
        require_weight(k, 4);
        const int m = k / 2 - 1;
        Int acc = -1 - trace_correction(k, p_);
        const Rat mpm = pow_rat(Rat(-p_), m);
        for (const std::int64_t a : frobenius_sweep_hyp()) {
            const Int asq = e_ == 1 ? Int(a) * a : Int(a) + 2 * p_;
            acc -= rat_to_int(mpm * kernel_transform(m, Rat(Int(-asq), Int(p_))),
                              "trace_hypergeometric");
        }
        return acc;
    }

    // Route 4: weight recursion.  With b_i the inversion coefficients,
    //   Tr_{2m+2} = -1 - lambda + b_0 (p-2)
    //               - sum_{i=1}^{m-1} b_i (Tr_{2i+2} + 1 + lambda_{2i+2})
    //               - sum_t (a(t,q) + 2p(e-1))^{2m/e}.
    // Lower traces come from the point-count route, or from the recursion
    // itself in strict mode.
    Int recursive(int k, bool strict = false) {
        require_weight(k, 4);
        const int m = k / 2 - 1;
        const auto b = kernel_inverse_coeffs(m, p_);
        Int acc = -1 - trace_correction(k, p_);
        acc += b[0] * (p_ - 2);
        for (int i = 1; i <= m - 1; ++i) {
            const int kl = 2 * i + 2;
            const Int lower = strict ? recursive_memo(kl) : pointcount(kl);
            acc -= b[static_cast<std::size_t>(i)] * (lower + 1 + trace_correction(kl, p_));
        }
        for (const std::int64_t a : frobenius_sweep_hyp()) {
            const Int base = Int(a) + 2 * p_ * (e_ - 1);
            acc -= pow_int(base, static_cast<std::uint64_t>(2 * m / e_));
        }
        return acc;
    }

    Int oracle(int k) {
        require_weight(k, 2);
        if (auto it = memo_oracle_.find(k); it != memo_oracle_.end()) return it->second;
        Int v = hecke_trace_oracle(k, p_);
        memo_oracle_.emplace(k, v);
        return v;
    }

    TraceReport full_report(int k, bool with_oracle) {
        require_weight(k, 4);
        TraceReport rep;
        rep.k = k;
        rep.p = p_;
        auto run = [&rep](const char* name, std::optional<Int>& slot, auto&& fn) {
            try {
                slot = fn();
            } catch (const check_error&) {
                if (rep.failed_route.empty()) rep.failed_route = name;
            }
        };
        run("pointcount", rep.pointcount, [&] { return pointcount(k); });
        run("hijikata", rep.hijikata, [&] { return hijikata(k); });
        run("hyp", rep.hypergeometric, [&] { return hypergeometric(k); });
        run("recursion", rep.recursive, [&] { return recursive(k); });
        if (with_oracle) run("oracle", rep.oracle, [&] { return oracle(k); });
        rep.agree = rep.failed_route.empty() && rep.pointcount && rep.hijikata &&
                    rep.hypergeometric && rep.recursive &&
                    *rep.pointcount == *rep.hijikata &&
                    *rep.pointcount == *rep.hypergeometric &&
                    *rep.pointcount == *rep.recursive &&
                    (!with_oracle || (rep.oracle && *rep.pointcount == *rep.oracle));
        return rep;
    }

private:
    void require_weight(int k, int kmin) const {
        if (k < kmin || k % 2 != 0)
            throw std::invalid_argument("trace: k must be even and >= " + std::to_string(kmin));
    }

    void ensure_char_table() {
        if (tab_) return;
        if (e_ == 1) {
            tab_.emplace(fp_);
        } else {
            fq_.emplace(p_, 2);
            tab_.emplace(*fq_);
        }
    }

    void ensure_hijikata_data() {
        if (inner_sums_) return;
        beta_ = hijikata_beta(p_);
        std::vector<std::pair<std::int64_t, Rat>> v;
        for (std::int64_t s = 1; s * s < 4 * p_; ++s) v.emplace_back(s, hijikata_inner_sum(s, p_));
        inner_sums_ = std::move(v);
    }

    Int recursive_memo(int k) {
        if (auto it = memo_rec_.find(k); it != memo_rec_.end()) return it->second;
        Int v = recursive(k, true);
        memo_rec_.emplace(k, v);
        return v;
    }

    std::int64_t p_;
    int e_;
    std::int64_t q_;
    Field fp_;
    std::optional<Field> fq_;
    std::optional<CharTable> tab_;
    std::optional<std::vector<std::int64_t>> a_pc_, a_hyp_;
    std::optional<Rat> beta_;
    std::optional<std::vector<std::pair<std::int64_t, Rat>>> inner_sums_;
    std::map<int, Int> memo_pc_, memo_rec_, memo_oracle_;
    double max_resid_ = 0.0;
};

// One-shot conveniences.
inline Int trace_pointcount(int k, std::int64_t p) { return TraceContext(p).pointcount(k); }
inline Int trace_hijikata(int k, std::int64_t p) { return TraceContext(p).hijikata(k); }
inline Int trace_hypergeometric(int k, std::int64_t p) {
    return TraceContext(p).hypergeometric(k);
}
inline Int trace_recursive(int k, std::int64_t p, bool strict = false) {
    return TraceContext(p).recursive(k, strict);
}
inline TraceReport full_report(int k, std::int64_t p, bool with_oracle = true) {
    return TraceContext(p).full_report(k, with_oracle);
}

}  // namespace hecke
