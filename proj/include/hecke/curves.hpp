#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>

#include "hypergeometric.hpp"
#include "kernels.hpp"

namespace hecke {

// chi2(v) = v^{(q-1)/2} as 0/+1/-1, by exponentiation (deliberately not via
// a square table, so the point-count route shares nothing with dlog tables).
inline int quadratic_character(const Field& f, const FieldElem& v) {
    if (f.is_zero(v)) return 0;
    return f.pow(v, (f.q() - 1) / 2) == f.one() ? 1 : -1;
}

struct CurveTrace {
    FieldElem t;
    std::int64_t q = 0;
    std::int64_t a = 0;         // q + 1 - #E_t(F_q)
    std::int64_t npoints = 0;   // projective count, includes the point at infinity
};

// E_t : y^2 = 4x^3 - (27/(1-t)) x - 27/(1-t), the j = 1728/t family.
// #E_t(F_q) = 1 + sum_x (1 + chi2(f(x))).
inline CurveTrace frobenius_trace(const Field& f, const FieldElem& t) {
    if (f.is_zero(t) || t == f.one())
        throw std::invalid_argument("frobenius_trace: t must avoid 0 and 1");
    const FieldElem c = f.mul(f.from_int(27), f.inv(f.sub(f.one(), t)));
    const FieldElem four = f.from_int(4);
    std::int64_t npoints = 1;
    for (std::int64_t idx = 0; idx < f.q(); ++idx) {
        const FieldElem x = f.element_at(idx);
        const FieldElem fx =
            f.sub(f.mul(four, f.mul(x, f.mul(x, x))), f.mul(c, f.add(x, f.one())));
        npoints += 1 + quadratic_character(f, fx);
    }
    const std::int64_t a = f.q() + 1 - npoints;
    if (static_cast<double>(a) * static_cast<double>(a) > 4.0 * static_cast<double>(f.q()))
        throw check_error("frobenius_trace: Hasse bound violated");
    return {t, f.q(), a, npoints};
}

// a(t, q) recovered from the hypergeometric side:
//   a(t, q) = -q T^{(q-1)/2}(2) T^{(q-1)/4}(1-t) 2F1(t),
// rounded to the nearest integer with residual checked against 0.01.
inline std::int64_t round_frobenius(const Cplx& val, std::int64_t q, double* residual) {
    const double re = val.real();
    const auto a = static_cast<std::int64_t>(std::llround(re));
    const double resid = std::max(std::abs(re - static_cast<double>(a)), std::abs(val.imag()));
    if (residual) *residual = resid;
    if (resid >= 0.01) throw check_error("frobenius_trace_hyp: rounding residual too large");
    if (static_cast<double>(a) * static_cast<double>(a) > 4.0 * static_cast<double>(q))
        throw check_error("frobenius_trace_hyp: Hasse bound violated");
    return a;
}

inline Cplx frobenius_prefactor(const CharTable& tab, const FieldElem& t) {
    const Field& f = tab.field();
    const std::int64_t n = tab.order();
    if (n % 4 != 0) throw std::invalid_argument("frobenius_prefactor: need 4 | q-1");
    return -static_cast<double>(f.q()) * tab.chi({n / 2}, f.from_int(2)) *
           tab.chi({n / 4}, f.sub(f.one(), t));
}

inline std::int64_t frobenius_trace_hyp(const CharTable& tab, const FieldElem& t,
                                        double* residual = nullptr) {
    const Cplx val = frobenius_prefactor(tab, t) * hyp2f1_level1(tab, t);
    return round_frobenius(val, tab.field().q(), residual);
}

// Sweep form: one O(q^2) build, then each t costs O(q).
class FrobeniusHypSweep {
public:
    explicit FrobeniusHypSweep(const CharTable& tab) : tab_(&tab), f2_(tab) {}

    std::int64_t a(const FieldElem& t) const {
        double resid = 0.0;
        const std::int64_t v =
            round_frobenius(frobenius_prefactor(*tab_, t) * f2_(t), tab_->field().q(), &resid);
        if (resid > max_residual_) max_residual_ = resid;
        return v;
    }

    double max_residual() const { return max_residual_; }

private:
    const CharTable* tab_;
    Hyp2F1Level1Sweep f2_;
    mutable double max_residual_ = 0.0;
};

// a(t, p)^2 through the hypergeometric route alone: over F_p directly when
// p = 1 (mod 12), else over F_{p^2} via a(t,p)^2 = a(t,p^2) + 2p.
inline std::int64_t frobenius_trace_squared(std::int64_t p, std::int64_t t) {
    const int e = extension_degree(p);
    if (((t % p) + p) % p == 0 || ((t % p) + p) % p == 1)
        throw std::invalid_argument("frobenius_trace_squared: t must avoid 0, 1 mod p");
    Field f(p, e);
    CharTable tab(f);
    const std::int64_t a = frobenius_trace_hyp(tab, f.from_int(t));
    return e == 1 ? a * a : a + 2 * p;
}

// Quartic (j = 1728) and sextic (j = 0) twist families over F_p: the
// isomorphism classes are y^2 = x^3 + g^i x resp. y^2 = x^3 + g^i with
// g a generator and i < gcd(4, p-1) resp. gcd(6, p-1).
inline int twist_class_count(std::int64_t p, int j_invariant) {
    if (j_invariant != 0 && j_invariant != 1728)
        throw std::invalid_argument("twist_class_count: j must be 0 or 1728");
    const std::int64_t m = j_invariant == 1728 ? 4 : 6;
    return static_cast<int>(std::gcd(m, p - 1));
}

// sum of a(E)^n over the twist classes with the given j-invariant.
inline Int twist_power_sum(std::int64_t p, int j_invariant, int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("twist_power_sum: n must be even and >= 2");
    Field f(p, 1);
    const FieldElem g = f.generator();
    const int classes = twist_class_count(p, j_invariant);
    Int acc = 0;
    FieldElem coef = f.one();
    for (int i = 0; i < classes; ++i) {
        std::int64_t sum_chi = 0;
        for (std::int64_t x = 0; x < p; ++x) {
            const FieldElem xe = f.from_int(x);
            const FieldElem cube = f.mul(xe, f.mul(xe, xe));
            const FieldElem fx = j_invariant == 1728
                                     ? f.add(cube, f.mul(coef, xe))
                                     : f.add(cube, coef);
            sum_chi += quadratic_character(f, fx);
        }
        acc += pow_int(Int(-sum_chi), n);  // a(E) = -sum_x chi2(f(x))
        coef = f.mul(coef, g);
    }
    return acc;
}

}  // namespace hecke
