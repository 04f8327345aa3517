#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "numeric.hpp"

namespace hecke {

// Element of F_p (b == 0) or F_{p^2} = F_p[x]/(x^2 - r), stored as a + b*x
// with 0 <= a, b < p and r the least quadratic nonresidue of F_p.
struct FieldElem {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

// smallest e in {1, 2} with p^e = 1 (mod 12)
inline int extension_degree(std::int64_t p) {
    if (p <= 3 || !is_prime(p))
        throw std::invalid_argument("extension_degree: p must be a prime > 3");
    return p % 12 == 1 ? 1 : 2;
    // p^2 = 1 (mod 12) for every prime p > 3, so e = 2 always suffices.
}

class Field {
public:
    Field(std::int64_t p, int e) : p_(p), e_(e) {
        if (p <= 3 || !is_prime(p))
            throw std::invalid_argument("Field: p must be a prime > 3");
        if (e != 1 && e != 2)
            throw std::invalid_argument("Field: degree must be 1 or 2");
        q_ = e == 1 ? p : p * p;
        if (q_ > 10'000'000)
            throw std::invalid_argument("Field: q > 1e7 exceeds table guard");
        if (e_ == 2) r_ = least_nonresidue();
        g_ = find_generator_impl();
    }

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    int degree() const { return e_; }
    std::int64_t nonresidue() const { return r_; }  // meaningful for degree 2
    FieldElem generator() const { return g_; }

    FieldElem zero() const { return {0, 0}; }
    FieldElem one() const { return {1, 0}; }

    FieldElem from_int(std::int64_t v) const {
        v %= p_;
        if (v < 0) v += p_;
        return {v, 0};
    }

    bool is_zero(const FieldElem& x) const { return x.a == 0 && x.b == 0; }

    FieldElem add(const FieldElem& x, const FieldElem& y) const {
        return {mod(x.a + y.a), mod(x.b + y.b)};
    }
    FieldElem sub(const FieldElem& x, const FieldElem& y) const {
        return {mod(x.a - y.a), mod(x.b - y.b)};
    }
    FieldElem neg(const FieldElem& x) const { return {mod(-x.a), mod(-x.b)}; }

    FieldElem mul(const FieldElem& x, const FieldElem& y) const {
        if (e_ == 1) return {mod(x.a * y.a), 0};
        // (a1 + b1 x)(a2 + b2 x) mod (x^2 - r)
        return {mod(x.a * y.a + mod(x.b * y.b) * r_), mod(x.a * y.b + x.b * y.a)};
    }

    FieldElem inv(const FieldElem& x) const {
        if (is_zero(x)) throw std::invalid_argument("Field::inv: zero element");
        if (e_ == 1) return {inv_mod(x.a), 0};
        // 1/(a + b x) = (a - b x) / (a^2 - r b^2); the norm is nonzero since
        // x^2 - r is irreducible over F_p.
        std::int64_t n = mod(x.a * x.a - mod(x.b * x.b) * r_);
        std::int64_t ni = inv_mod(n);
        return {mod(x.a * ni), mod(-x.b * ni)};
    }

    FieldElem pow(FieldElem x, std::int64_t e) const {
        if (e < 0) throw std::invalid_argument("Field::pow: negative exponent");
        FieldElem acc = one();
        while (e) {
            if (e & 1) acc = mul(acc, x);
            x = mul(x, x);
            e >>= 1;
        }
        return acc;
    }

    // Canonical enumeration: degree 1 ascends 0..p-1; degree 2 is
    // lexicographic in (a, b).
    std::int64_t index_of(const FieldElem& x) const {
        return e_ == 1 ? x.a : x.a * p_ + x.b;
    }
    FieldElem element_at(std::int64_t idx) const {
        if (idx < 0 || idx >= q_) throw std::invalid_argument("Field::element_at: index out of range");
        return e_ == 1 ? FieldElem{idx, 0} : FieldElem{idx / p_, idx % p_};
    }

    std::int64_t multiplicative_order(const FieldElem& x) const {
        if (is_zero(x)) throw std::invalid_argument("multiplicative_order: zero element");
        std::int64_t o = 1;
        FieldElem v = x;
        while (!(v == one())) {
            v = mul(v, x);
            ++o;
        }
        return o;
    }

    std::string to_string(const FieldElem& x) const {
        if (e_ == 1) return std::to_string(x.a);
        return std::to_string(x.a) + "+" + std::to_string(x.b) + "*sqrt(" +
               std::to_string(r_) + ")";
    }

private:
    std::int64_t mod(std::int64_t v) const {
        v %= p_;
        return v < 0 ? v + p_ : v;
    }

    std::int64_t inv_mod(std::int64_t a) const {  // extended gcd, a != 0 mod p
        std::int64_t t = 0, nt = 1, r = p_, nr = mod(a);
        while (nr != 0) {
            std::int64_t qq = r / nr;
            t -= qq * nt;
            std::swap(t, nt);
            r -= qq * nr;
            std::swap(r, nr);
        }
        return mod(t);
    }

    std::int64_t least_nonresidue() const {
        for (std::int64_t r = 2; r < p_; ++r) {
            // Euler criterion in F_p
            std::int64_t v = 1, b = r, e = (p_ - 1) / 2;
            while (e) {
                if (e & 1) v = v * b % p_;
                b = b * b % p_;
                e >>= 1;
            }
            if (v == p_ - 1) return r;
        }
        throw check_error("least_nonresidue: none found");  // unreachable for p > 2
    }

    FieldElem find_generator_impl() const {
        const std::int64_t n = q_ - 1;
        const auto fact = prime_factors(n);
        for (std::int64_t idx = 1; idx < q_; ++idx) {
            FieldElem cand = element_at(idx);
            bool ok = true;
            for (std::int64_t ell : fact) {
                if (pow(cand, n / ell) == one()) {
                    ok = false;
                    break;
                }
            }
            if (ok) return cand;
        }
        throw check_error("find_generator: no generator found");  // unreachable
    }

    std::int64_t p_;
    int e_;
    std::int64_t q_ = 0;
    std::int64_t r_ = 0;
    FieldElem g_;
};

// First element of order q-1 in canonical enumeration order.
inline FieldElem find_generator(const Field& f) {
    const std::int64_t n = f.q() - 1;
    const auto fact = prime_factors(n);
    for (std::int64_t idx = 1; idx < f.q(); ++idx) {
        FieldElem cand = f.element_at(idx);
        bool ok = true;
        for (std::int64_t ell : fact) {
            if (f.pow(cand, n / ell) == f.one()) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    }
    throw check_error("find_generator: no generator found");
}

}  // namespace hecke
