#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an internal mathematical consistency check fails (non-integral
// value where an integer is forced, rounding residual out of tolerance, ...).
// Distinct from std::invalid_argument, which marks caller/usage errors.
struct check_error : std::runtime_error {
    explicit check_error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d : {2, 3}) {
        if (n % d == 0) return n == d;
    }
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

inline std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt64: negative argument");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// C(n, k) with the usual convention: 0 for k < 0 or k > n.
inline Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int pow_int(Int base, std::uint64_t e) {
    Int acc = 1;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline Rat pow_rat(const Rat& base, std::uint64_t e) {
    Rat acc = 1, b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p <= n; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

// Distinct prime factors, ascending.
inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Exact conversion of an integral rational; throws check_error otherwise.
inline Int rat_to_int(const Rat& v, const char* where) {
    if (boost::multiprecision::denominator(v) != 1)
        throw check_error(std::string(where) + ": value is not an integer");
    return boost::multiprecision::numerator(v);
}

}  // namespace hecke
