#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <hecke/class_numbers.hpp>

using namespace hecke;

namespace {

// Hurwitz class number H(N) = sum of h*(-N/f^2) over f^2 | N with -N/f^2 a
// discriminant; H(0) = -1/12. Used below for the Kronecker-Hurwitz relation.
Rat hurwitz(std::int64_t n) {
    if (n == 0) return Rat(-1, 12);
    Rat acc = 0;
    for (std::int64_t f = 1; f * f <= n; ++f) {
        if (n % (f * f) != 0) continue;
        const std::int64_t d = -(n / (f * f));
        const std::int64_t r = ((d % 4) + 4) % 4;
        if (r == 0 || r == 1) acc += h_star(d);
    }
    return acc;
}

}  // namespace

TEST_CASE("class numbers of small discriminants match the published table", "[class]") {
    // fundamental
    CHECK(class_number(-3).h == 1);
    CHECK(class_number(-3).w == 3);
    CHECK(class_number(-4).h == 1);
    CHECK(class_number(-4).w == 2);
    CHECK(class_number(-7).h == 1);
    CHECK(class_number(-8).h == 1);
    CHECK(class_number(-11).h == 1);
    CHECK(class_number(-15).h == 2);
    CHECK(class_number(-19).h == 1);
    CHECK(class_number(-20).h == 2);
    CHECK(class_number(-23).h == 3);
    CHECK(class_number(-31).h == 3);
    CHECK(class_number(-47).h == 5);
    CHECK(class_number(-71).h == 7);
    CHECK(class_number(-163).h == 1);  // the last class-number-one field
    // non-fundamental
    CHECK(class_number(-16).h == 1);
    CHECK(class_number(-28).h == 1);
    CHECK(class_number(-32).h == 2);
    CHECK(class_number(-44).h == 3);
    CHECK(class_number(-52).h == 2);
    // weights only at -3 and -4
    CHECK(class_number(-7).w == 1);
    CHECK(h_star(-3) == Rat(1, 3));
    CHECK(h_star(-4) == Rat(1, 2));
    CHECK(h_star(-20) == 2);
}

TEST_CASE("class number input validation", "[class]") {
    CHECK_THROWS_AS(class_number(0), std::invalid_argument);
    CHECK_THROWS_AS(class_number(5), std::invalid_argument);
    CHECK_THROWS_AS(class_number(-5), std::invalid_argument);   // 3 mod 4
    CHECK_THROWS_AS(class_number(-14), std::invalid_argument);  // 2 mod 4
}

TEST_CASE("Kronecker-Hurwitz relation pins every small class number at once",
          "[class][oracle]") {
    // sum_{s^2 <= 4n} H(4n - s^2) = sum_{d | n} max(d, n/d), an identity from
    // the weight-3/2 Eisenstein series; it exercises h* for all |d| <= 4n.
    for (std::int64_t n = 1; n <= 40; ++n) {
        std::int64_t smax = 0;
        while ((smax + 1) * (smax + 1) <= 4 * n) ++smax;
        Rat lhs = 0;
        for (std::int64_t s = -smax; s <= smax; ++s) lhs += hurwitz(4 * n - s * s);
        Rat rhs = 0;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) rhs += std::max(d, n / d);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("discriminant splitting into squarefree part and conductor", "[class]") {
    auto sd = split_discriminant(2, 5);  // -16 = 4^2 * (-1), -1 = 3 mod 4
    CHECK(sd.ell == 2);
    CHECK(sd.m == -1);
    CHECK(sd.case_id == 2);
    auto sd2 = split_discriminant(1, 5);  // -19 squarefree, 1 mod 4
    CHECK(sd2.ell == 1);
    CHECK(sd2.m == -19);
    CHECK(sd2.case_id == 1);
    auto sd3 = split_discriminant(3, 9);  // -27 = 3^2 * (-3), -3 = 1 mod 4
    CHECK(sd3.ell == 3);
    CHECK(sd3.m == -3);
    CHECK(sd3.case_id == 1);
    CHECK_THROWS_AS(split_discriminant(10, 5), std::invalid_argument);  // s^2 >= 4p
    // reconstruction: D = l^2 m (case 1) or l^2 4m (case 2)
    for (std::int64_t p : {5, 7, 11, 13, 97})
        for (std::int64_t s = 0; s * s < 4 * p; ++s) {
            auto x = split_discriminant(s, p);
            std::int64_t rebuilt =
                x.case_id == 1 ? x.ell * x.ell * x.m : x.ell * x.ell * 4 * x.m;
            CHECK(rebuilt == s * s - 4 * p);
            CHECK(x.m < 0);
            // m squarefree
            for (std::int64_t f = 2; f * f <= -x.m; ++f) CHECK((-x.m) % (f * f) != 0);
        }
}

TEST_CASE("inner class-number sums", "[class]") {
    CHECK(hijikata_inner_sum(2, 5) == Rat(3, 2));  // h*(-16) + h*(-4)
    CHECK(hijikata_inner_sum(1, 5) == 1);          // h*(-19)
    CHECK(hijikata_inner_sum(3, 5) == 1);          // h*(-11)
    CHECK(hijikata_inner_sum(4, 5) == Rat(1, 2));  // h*(-4)
    CHECK(hijikata_inner_sum(1, 7) == Rat(4, 3));  // h*(-27) + h*(-3), ell = 3
}

TEST_CASE("beta and the weight-2 mass identity", "[class]") {
    CHECK(hijikata_beta(5) == 2);
    CHECK(hijikata_beta(7) == 2);
    CHECK(hijikata_beta(11) == 4);
    CHECK(hijikata_beta(13) == 2);
    CHECK_THROWS_AS(hijikata_beta(3), std::invalid_argument);
    CHECK_THROWS_AS(hijikata_beta(9), std::invalid_argument);
    // sum_{0 < s < 2 sqrt p} inner(s,p) = p - beta(p)/2: the content of the
    // empty weight-2 cusp space, checked exactly
    for (std::int64_t p : {5, 7, 11, 13, 29, 41}) {
        Rat acc = 0;
        for (std::int64_t s = 1; s * s < 4 * p; ++s) acc += hijikata_inner_sum(s, p);
        CHECK(acc == Rat(Int(p)) - hijikata_beta(p) / 2);
    }
}
