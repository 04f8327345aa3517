#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace hecke {

// Kernel polynomial of the weight-k trace formula:
//   G_k(s, p) = sum_{j=0}^{k/2-1} (-1)^j C(k-2-j, j) p^j s^{k-2j-2},
// so G_2 = 1 identically, and G_k(s,p) is even in s.
inline Int kernel_poly(int k, const Int& s, std::int64_t p) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("kernel_poly: k must be even and >= 2");
    Int acc = 0;
    for (int j = 0; j <= k / 2 - 1; ++j) {
        Int term = binomial(k - 2 - j, j) * pow_int(p, j) * pow_int(s, k - 2 * j - 2);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// H_m(x) = sum_{i=0}^m C(m+i, m-i) x^i; satisfies
// G_{2m+2}(s, p) = (-p)^m H_m(-s^2/p).
inline Rat kernel_transform(int m, const Rat& x) {
    if (m < 0) throw std::invalid_argument("kernel_transform: m must be >= 0");
    Rat acc = 0;
    for (int i = 0; i <= m; ++i) acc += Rat(binomial(m + i, m - i)) * pow_rat(x, i);
    return acc;
}

// Inversion coefficients b_i = p^{m-i} [C(2m, m-i) - C(2m, m-i-1)] giving
//   s^{2m} = sum_{i=0}^m b_i G_{2i+2}(s, p);   b_m = 1 always.
inline std::vector<Int> kernel_inverse_coeffs(int m, std::int64_t p) {
    if (m < 0) throw std::invalid_argument("kernel_inverse_coeffs: m must be >= 0");
    std::vector<Int> b(m + 1);
    for (int i = 0; i <= m; ++i)
        b[i] = pow_int(p, m - i) * (binomial(2 * m, m - i) - binomial(2 * m, m - i - 1));
    return b;
}

inline Int kernel_inverse_expand(int m, std::int64_t p, const Int& s) {
    if (m < 1) throw std::invalid_argument("kernel_inverse_expand: m must be >= 1");
    auto b = kernel_inverse_coeffs(m, p);
    Int acc = 0;
    for (int i = 0; i <= m; ++i) acc += b[i] * kernel_poly(2 * i + 2, s, p);
    return acc;
}

// Evaluates G_k(s,p) directly and through (-p)^m H_m(-s^2/p); the two agree.
inline std::pair<Int, Int> kernel_bridge(int k, const Int& s, std::int64_t p) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("kernel_bridge: k must be even and >= 2");
    const int m = k / 2 - 1;
    Rat h = kernel_transform(m, Rat(-s * s, Int(p))) * pow_rat(Rat(-p), m);
    return {kernel_poly(k, s, p), rat_to_int(h, "kernel_bridge")};
}

// p = a^2 + b^2 normalized by a + bi = 1 (mod (2+2i)) in Z[i]: equivalent to
// 4 | (a-1+b) and 4 | (b-a+1).
struct GaussianSplit {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(const GaussianSplit&, const GaussianSplit&) = default;
};

// p = c^2 - cd + d^2 with c = 2 (mod 3), d = 0 (mod 3) in Z[omega].
struct EisensteinSplit {
    std::int64_t c = 0;
    std::int64_t d = 0;
    friend bool operator==(const EisensteinSplit&, const EisensteinSplit&) = default;
};

inline bool gaussian_split_valid(std::int64_t p, std::int64_t a, std::int64_t b) {
    if (a * a + b * b != p) return false;
    std::int64_t x = a - 1, y = b;
    return (x + y) % 4 == 0 && (y - x) % 4 == 0;
}

inline bool eisenstein_split_valid(std::int64_t p, std::int64_t c, std::int64_t d) {
    if (c * c - c * d + d * d != p) return false;
    auto m3 = [](std::int64_t v) { return ((v % 3) + 3) % 3; };
    return m3(c) == 2 && m3(d) == 0;
}

inline std::vector<GaussianSplit> gaussian_splits(std::int64_t p) {
    if (!is_prime(p) || p % 4 != 1)
        throw std::invalid_argument("gaussian_splits: need a prime p = 1 mod 4");
    std::vector<GaussianSplit> out;
    const std::int64_t bound = isqrt64(p);
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            if (gaussian_split_valid(p, a, b)) out.push_back({a, b});
    if (out.empty()) throw check_error("gaussian_splits: no normalized representation");
    return out;  // lexicographic in (a, b) by construction
}

inline std::vector<EisensteinSplit> eisenstein_splits(std::int64_t p) {
    if (!is_prime(p) || p % 3 != 1)
        throw std::invalid_argument("eisenstein_splits: need a prime p = 1 mod 3");
    std::vector<EisensteinSplit> out;
    const std::int64_t bound = 2 * isqrt64(p) + 1;
    for (std::int64_t c = -bound; c <= bound; ++c)
        for (std::int64_t d = -bound; d <= bound; ++d)
            if (eisenstein_split_valid(p, c, d)) out.push_back({c, d});
    if (out.empty()) throw check_error("eisenstein_splits: no normalized representation");
    return out;
}

inline GaussianSplit gaussian_split(std::int64_t p) { return gaussian_splits(p).front(); }
inline EisensteinSplit eisenstein_split(std::int64_t p) { return eisenstein_splits(p).front(); }

// CM term at the Gaussian prime: (G_k(2a,p) + G_k(2b,p)) / 2, an integer.
inline Int cm_term_gaussian(int k, std::int64_t p) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("cm_term_gaussian: k must be even and >= 2");
    auto [a, b] = gaussian_split(p);
    Rat v = Rat(kernel_poly(k, Int(2 * a), p) + kernel_poly(k, Int(2 * b), p), Int(2));
    return rat_to_int(v, "cm_term_gaussian");
}

// CM term at the Eisenstein prime:
// (G_k(c+d,p) + G_k(2c-d,p) + G_k(c-2d,p)) / 3, an integer.
inline Int cm_term_eisenstein(int k, std::int64_t p) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("cm_term_eisenstein: k must be even and >= 2");
    auto [c, d] = eisenstein_split(p);
    Rat v = Rat(kernel_poly(k, Int(c + d), p) + kernel_poly(k, Int(2 * c - d), p) +
                    kernel_poly(k, Int(c - 2 * d), p),
                Int(3));
    return rat_to_int(v, "cm_term_eisenstein");
}

// Correction term lambda(k, p) of the trace formula, split on p mod 12.
inline Int trace_correction(int k, std::int64_t p) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("trace_correction: k must be even and >= 4");
    if (p <= 3 || !is_prime(p))
        throw std::invalid_argument("trace_correction: p must be a prime > 3");
    const Int mp = pow_int(Int(-p), k / 2 - 1);
    switch (p % 12) {
        case 1:  return cm_term_gaussian(k, p) + cm_term_eisenstein(k, p);
        case 5:  return cm_term_gaussian(k, p) + mp;
        case 7:  return cm_term_eisenstein(k, p) + mp;
        default: return 2 * mp;  // p = 11 mod 12
    }
}

}  // namespace hecke
