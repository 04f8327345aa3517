#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "finite_field.hpp"

namespace hecke {

using Cplx = std::complex<double>;

// Multiplicative character chi_j = T^j where T is the character sending the
// fixed generator g to zeta_{q-1}. Indices are taken mod q-1; j = 0 is the
// trivial character epsilon. All characters vanish at 0 (including epsilon).
struct CharIndex {
    std::int64_t j = 0;
};

class CharTable {
public:
    explicit CharTable(const Field& f) : CharTable(f, f.generator()) {}

    CharTable(const Field& f, const FieldElem& gen) : f_(f), g_(gen), n_(f.q() - 1) {
        if (f_.multiplicative_order(gen) != n_)
            throw std::invalid_argument("CharTable: element is not a generator");
        dlog_.assign(f_.q(), -1);
        FieldElem cur = f_.one();
        for (std::int64_t k = 0; k < n_; ++k) {
            dlog_[f_.index_of(cur)] = k;
            cur = f_.mul(cur, g_);
        }
        zeta_.resize(n_);
        for (std::int64_t k = 0; k < n_; ++k) {
            double arg = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_);
            zeta_[k] = Cplx(std::cos(arg), std::sin(arg));
        }
    }

    const Field& field() const { return f_; }
    std::int64_t order() const { return n_; }  // q - 1
    FieldElem generator() const { return g_; }

    CharIndex normalize(std::int64_t j) const {
        j %= n_;
        if (j < 0) j += n_;
        return {j};
    }
    CharIndex conj(CharIndex a) const { return normalize(-a.j); }

    std::int64_t dlog(const FieldElem& x) const {
        if (f_.is_zero(x)) throw std::invalid_argument("dlog: zero element");
        return dlog_[f_.index_of(x)];
    }

    Cplx zeta(std::int64_t e) const {
        e %= n_;
        if (e < 0) e += n_;
        return zeta_[e];
    }

    Cplx chi(CharIndex a, const FieldElem& x) const {
        if (f_.is_zero(x)) return {0.0, 0.0};
        return zeta(normalize(a.j).j * dlog_[f_.index_of(x)]);
    }

private:
    Field f_;
    FieldElem g_;
    std::int64_t n_;
    std::vector<std::int64_t> dlog_;
    std::vector<Cplx> zeta_;
};

// J(A, B) = sum_x A(x) B(1 - x); terms with x = 0 or x = 1 vanish.
inline Cplx jacobi_sum(const CharTable& tab, CharIndex a, CharIndex b) {
    const Field& f = tab.field();
    const std::int64_t ja = tab.normalize(a.j).j, jb = tab.normalize(b.j).j;
    Cplx acc{0.0, 0.0};
    for (std::int64_t idx = 0; idx < f.q(); ++idx) {
        FieldElem x = f.element_at(idx);
        if (f.is_zero(x)) continue;
        FieldElem y = f.sub(f.one(), x);
        if (f.is_zero(y)) continue;
        acc += tab.zeta(ja * tab.dlog(x) + jb * tab.dlog(y));
    }
    return acc;
}

// Normalized binomial: binom(A, B) = B(-1)/q * J(A, conj(B)).
inline Cplx greene_binom(const CharTable& tab, CharIndex a, CharIndex b) {
    const Field& f = tab.field();
    Cplx sign = tab.chi(b, f.from_int(-1));
    return sign / static_cast<double>(f.q()) * jacobi_sum(tab, a, tab.conj(b));
}

}  // namespace hecke
