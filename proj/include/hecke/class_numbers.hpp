#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "numeric.hpp"

namespace hecke {

// h(d): primitive reduced forms (a,b,c), b^2 - 4ac = d, |b| <= a <= c,
// gcd(a,b,c) = 1, with b >= 0 whenever |b| = a or a = c.
// w(d): units/2, i.e. 3 for d = -3, 2 for d = -4, 1 otherwise.
struct ClassData {
    std::int64_t d = 0;
    std::int64_t h = 0;
    int w = 1;
    Rat h_star;  // h / w
};

inline ClassData class_number(std::int64_t d) {
    if (d >= 0) throw std::invalid_argument("class_number: d must be negative");
    const std::int64_t r4 = ((d % 4) + 4) % 4;
    if (r4 != 0 && r4 != 1)
        throw std::invalid_argument("class_number: d must be 0 or 1 mod 4");
    std::int64_t h = 0;
    for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            const std::int64_t num = b * b - d;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            if ((b < 0) && ((-b) == a || a == c)) continue;  // boundary forms: b >= 0
            ++h;
        }
    }
    const int w = d == -3 ? 3 : (d == -4 ? 2 : 1);
    return {d, h, w, Rat(Int(h), Int(w))};
}

inline Rat h_star(std::int64_t d) { return class_number(d).h_star; }

// s^2 - 4p < 0 factored as l^2 m with m squarefree and m = 1 (mod 4), or as
// l^2 4m with m squarefree and m = 2, 3 (mod 4).
struct SplitDiscriminant {
    std::int64_t s = 0;
    std::int64_t ell = 0;
    std::int64_t m = 0;   // squarefree, negative
    int case_id = 0;      // 1: D = l^2 m;  2: D = l^2 4m
};

inline SplitDiscriminant split_discriminant(std::int64_t s, std::int64_t p) {
    const std::int64_t d = s * s - 4 * p;
    if (d >= 0) throw std::invalid_argument("split_discriminant: need s^2 < 4p");
    std::int64_t v = -d, u = 1;
    for (std::int64_t f = 2; f * f <= v; ++f) {
        while (v % (f * f) == 0) {
            v /= f * f;
            u *= f;
        }
    }
    const std::int64_t m = -v;
    if (((m % 4) + 4) % 4 == 1) return {s, u, m, 1};
    if (u % 2 != 0) throw check_error("split_discriminant: odd square part with m != 1 mod 4");
    return {s, u / 2, m, 2};
}

// sum over f | l of h*((s^2 - 4p) / f^2); every quotient is a valid
// discriminant by the splitting above.
inline Rat hijikata_inner_sum(std::int64_t s, std::int64_t p) {
    const auto sd = split_discriminant(s, p);
    const std::int64_t d = s * s - 4 * p;
    Rat acc = 0;
    for (std::int64_t f = 1; f <= sd.ell; ++f) {
        if (sd.ell % f != 0) continue;
        const std::int64_t df = d / (f * f);
        if (d % (f * f) != 0) throw check_error("hijikata_inner_sum: non-integral quotient");
        acc += h_star(df);
    }
    return acc;
}

// beta(p) = h*(-4p) for p = 1 mod 4, h*(-4p) + h*(-p) for p = 3 mod 4.
inline Rat hijikata_beta(std::int64_t p) {
    if (p <= 3 || !is_prime(p))
        throw std::invalid_argument("hijikata_beta: p must be a prime > 3");
    Rat acc = h_star(-4 * p);
    if (p % 4 == 3) acc += h_star(-p);
    return acc;
}

}  // namespace hecke
