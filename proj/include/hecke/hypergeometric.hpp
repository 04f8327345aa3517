#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "characters.hpp"

namespace hecke {

// n+1F_n(A_0, ..., A_n; B_1, ..., B_n | x): top has exactly one more entry
// than bottom, n >= 1.
struct HypSpec {
    std::vector<CharIndex> top;
    std::vector<CharIndex> bottom;
    FieldElem x;
};

//   q/(q-1) * sum_chi binom(A_0 chi, chi) binom(A_1 chi, B_1 chi) ...
//                     binom(A_n chi, B_n chi) chi(x)
inline Cplx hyp_eval(const CharTable& tab, const HypSpec& spec) {
    if (spec.bottom.empty() || spec.top.size() != spec.bottom.size() + 1)
        throw std::invalid_argument("hyp_eval: need top = bottom + 1 entries, bottom nonempty");
    const std::int64_t n = tab.order();
    const double q = static_cast<double>(tab.field().q());
    Cplx acc{0.0, 0.0};
    for (std::int64_t j = 0; j < n; ++j) {
        Cplx term = greene_binom(tab, tab.normalize(spec.top[0].j + j), {j});
        for (std::size_t i = 1; i < spec.top.size(); ++i)
            term *= greene_binom(tab, tab.normalize(spec.top[i].j + j),
                                 tab.normalize(spec.bottom[i - 1].j + j));
        term *= tab.chi({j}, spec.x);
        acc += term;
    }
    return acc * (q / (q - 1.0));
}

inline Cplx hyp2f1(const CharTable& tab, CharIndex a, CharIndex b, CharIndex c,
                   const FieldElem& x) {
    return hyp_eval(tab, {{a, b}, {c}, x});
}

// All binomial values at once; only for small q (quadratic table).
class BinomTable {
public:
    explicit BinomTable(const CharTable& tab) : tab_(&tab), n_(tab.order()) {
        if (n_ > 4096)
            throw std::invalid_argument("BinomTable: q too large for dense table");
        vals_.resize(n_ * n_);
        // binom(A,B) = B(-1)/q J(A, conj B); build J by one pass per A.
        const Field& f = tab.field();
        std::vector<std::int64_t> dlog_x(f.q(), -1), dlog_1mx(f.q(), -1);
        for (std::int64_t idx = 0; idx < f.q(); ++idx) {
            FieldElem x = f.element_at(idx);
            if (f.is_zero(x)) continue;
            FieldElem y = f.sub(f.one(), x);
            if (f.is_zero(y)) continue;
            dlog_x[idx] = tab.dlog(x);
            dlog_1mx[idx] = tab.dlog(y);
        }
        const double q = static_cast<double>(f.q());
        const std::int64_t half = tab.dlog(f.from_int(-1));
        for (std::int64_t a = 0; a < n_; ++a) {
            for (std::int64_t b = 0; b < n_; ++b) {
                Cplx acc{0.0, 0.0};
                for (std::int64_t idx = 0; idx < f.q(); ++idx) {
                    if (dlog_x[idx] < 0) continue;
                    acc += tab.zeta(a * dlog_x[idx] - b * dlog_1mx[idx]);
                }
                vals_[a * n_ + b] = tab.zeta(b * half) / q * acc;
            }
        }
    }

    Cplx operator()(std::int64_t a, std::int64_t b) const {
        a %= n_; if (a < 0) a += n_;
        b %= n_; if (b < 0) b += n_;
        return vals_[a * n_ + b];
    }

    const CharTable& table() const { return *tab_; }

private:
    const CharTable* tab_;
    std::int64_t n_;
    std::vector<Cplx> vals_;
};

inline Cplx hyp_eval(const BinomTable& bt, const HypSpec& spec) {
    const CharTable& tab = bt.table();
    if (spec.bottom.empty() || spec.top.size() != spec.bottom.size() + 1)
        throw std::invalid_argument("hyp_eval: need top = bottom + 1 entries, bottom nonempty");
    const std::int64_t n = tab.order();
    const double q = static_cast<double>(tab.field().q());
    Cplx acc{0.0, 0.0};
    for (std::int64_t j = 0; j < n; ++j) {
        Cplx term = bt(spec.top[0].j + j, j);
        for (std::size_t i = 1; i < spec.top.size(); ++i)
            term *= bt(spec.top[i].j + j, spec.bottom[i - 1].j + j);
        term *= tab.chi({j}, spec.x);
        acc += term;
    }
    return acc * (q / (q - 1.0));
}

// 2F1 with top (T^{(q-1)/12}, T^{5(q-1)/12}) and bottom epsilon; the
// parameter pair attached to the weight-k trace sums. Needs q = 1 (mod 12).
inline void require_level1(const CharTable& tab, const FieldElem& x) {
    const Field& f = tab.field();
    if ((f.q() - 1) % 12 != 0)
        throw std::invalid_argument("hyp2f1_level1: q must be 1 mod 12");
    if (f.is_zero(x) || x == f.one())
        throw std::invalid_argument("hyp2f1_level1: x must avoid 0 and 1");
}

inline Cplx hyp2f1_level1(const CharTable& tab, const FieldElem& x) {
    require_level1(tab, x);
    const std::int64_t n = tab.order();
    return hyp2f1(tab, {n / 12}, {5 * (n / 12)}, {0}, x);
}

// Cached coefficient form of the level-1 2F1: the chi-sum coefficients do not
// depend on x, so a sweep over many x costs O(q) each after an O(q^2) build.
class Hyp2F1Level1Sweep {
public:
    explicit Hyp2F1Level1Sweep(const CharTable& tab) : tab_(&tab), n_(tab.order()) {
        if ((tab.field().q() - 1) % 12 != 0)
            throw std::invalid_argument("Hyp2F1Level1Sweep: q must be 1 mod 12");
        coeff_.resize(n_);
        const std::int64_t a0 = n_ / 12, a1 = 5 * (n_ / 12);
        // coeff_[j] = binom(T^{a0+j}, T^j) binom(T^{a1+j}, T^j); each factor is
        // T^j(-1)/q J(T^{a+j}, T^{-j}). Precomputing dlog(x), dlog(1-x) keeps
        // the O(n q) build in a tight loop.
        const Field& f = tab.field();
        const std::int64_t q = f.q();
        std::vector<std::int64_t> dx, dm;
        dx.reserve(q - 2);
        dm.reserve(q - 2);
        for (std::int64_t idx = 0; idx < q; ++idx) {
            const FieldElem x = f.element_at(idx);
            if (f.is_zero(x)) continue;
            const FieldElem y = f.sub(f.one(), x);
            if (f.is_zero(y)) continue;
            dx.push_back(tab.dlog(x));
            dm.push_back(tab.dlog(y));
        }
        const std::size_t sz = dx.size();
        const double qd = static_cast<double>(q);
        const std::int64_t half = n_ / 2;  // dlog(-1)
        for (std::int64_t j = 0; j < n_; ++j) {
            const std::int64_t e0 = (a0 + j) % n_, e1 = (a1 + j) % n_, eb = (n_ - j) % n_;
            Cplx j0{0.0, 0.0}, j1{0.0, 0.0};
            for (std::size_t i = 0; i < sz; ++i) {
                const std::int64_t base = eb * dm[i];
                j0 += tab.zeta(e0 * dx[i] + base);
                j1 += tab.zeta(e1 * dx[i] + base);
            }
            const Cplx pref = tab.zeta(j * half) / qd;
            coeff_[j] = (pref * j0) * (pref * j1);
        }
    }

    Cplx operator()(const FieldElem& x) const {
        require_level1(*tab_, x);
        const double q = static_cast<double>(tab_->field().q());
        Cplx acc{0.0, 0.0};
        for (std::int64_t j = 0; j < n_; ++j) acc += coeff_[j] * tab_->chi({j}, x);
        return acc * (q / (q - 1.0));
    }

    const CharTable& table() const { return *tab_; }

private:
    const CharTable* tab_;
    std::int64_t n_;
    std::vector<Cplx> coeff_;
};

// Both sides of the x -> 1-x transformation:
//   2F1(A,B;C|x) = A(-1) 2F1(A,B; A B conj(C) | 1-x),  x not in {0,1}.
inline std::pair<Cplx, Cplx> transform_1_minus_x(const CharTable& tab, CharIndex a,
                                                 CharIndex b, CharIndex c,
                                                 const FieldElem& x) {
    const Field& f = tab.field();
    if (f.is_zero(x) || x == f.one())
        throw std::invalid_argument("transform_1_minus_x: x must avoid 0 and 1");
    Cplx lhs = hyp2f1(tab, a, b, c, x);
    Cplx rhs = tab.chi(a, f.from_int(-1)) *
               hyp2f1(tab, a, b, tab.normalize(a.j + b.j - c.j), f.sub(f.one(), x));
    return {lhs, rhs};
}

}  // namespace hecke
