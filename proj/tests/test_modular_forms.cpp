#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include <hecke/modular_forms.hpp>

using namespace hecke;

namespace {

// Independent Delta: the eta product q prod_{n>=1} (1 - q^n)^24, built by
// 24 truncated multiplications of the sparse Euler factors.
QSeries delta_eta(std::size_t prec) {
    QSeries euler = QSeries::one(prec);
    for (std::size_t n = 1; n <= prec; ++n) {
        QSeries f(prec);
        f[0] = 1;
        f[n] = -1;
        euler = euler * f;
    }
    QSeries pw = QSeries::one(prec);
    for (int i = 0; i < 24; ++i) pw = pw * euler;
    QSeries out(prec);
    for (std::size_t n = 1; n <= prec; ++n) out[n] = pw[n - 1];  // shift by q
    return out;
}

}  // namespace

TEST_CASE("q-series ring operations", "[qexp]") {
    QSeries a(4), b(4);
    a[0] = 1; a[1] = 1;            // 1 + q
    b[0] = 1; b[1] = -1;           // 1 - q
    QSeries prod = a * b;          // 1 - q^2
    CHECK(prod[0] == 1);
    CHECK(prod[1] == 0);
    CHECK(prod[2] == -1);
    CHECK((a + b)[0] == 2);
    CHECK((a - b)[1] == 2);
    a *= Rat(3, 2);
    CHECK(a[1] == Rat(3, 2));
    CHECK(QSeries::one(3)[0] == 1);
    CHECK(QSeries::one(3).precision() == 3);
    CHECK_THROWS_AS(prod[5], std::out_of_range);
    // truncation keeps the shorter precision
    QSeries c(2);
    CHECK((a * c).precision() == 2);
}

TEST_CASE("Eisenstein coefficients", "[qexp]") {
    QSeries e4 = eisenstein_qexp(4, 6);
    CHECK(e4[0] == 1);
    CHECK(e4[1] == 240);
    CHECK(e4[2] == 2160);   // 240 * (1 + 8)
    CHECK(e4[3] == 6720);   // 240 * (1 + 27)
    CHECK(e4[6] == 240 * (1 + 8 + 27 + 216));
    QSeries e6 = eisenstein_qexp(6, 4);
    CHECK(e6[0] == 1);
    CHECK(e6[1] == -504);
    CHECK(e6[2] == -16632);  // -504 * 33
    CHECK(e6[4] == -504 * (1 + 32 + 1024));
    CHECK_THROWS_AS(eisenstein_qexp(8, 4), std::invalid_argument);
}

TEST_CASE("Delta from E_4, E_6 equals the eta product", "[qexp][oracle]") {
    const std::size_t prec = 60;
    QSeries d = delta_qexp(prec);
    QSeries eta = delta_eta(prec);
    for (std::size_t n = 0; n <= prec; ++n) CHECK(d[n] == eta[n]);
    // pinned tau values
    CHECK(d[1] == 1);
    CHECK(d[2] == -24);
    CHECK(d[3] == 252);
    CHECK(d[4] == -1472);
    CHECK(d[5] == 4830);
    CHECK(d[6] == -6048);
    CHECK(d[7] == -16744);
    CHECK(d[11] == 534612);
    CHECK(d[13] == -577738);
    // Hecke multiplicativity of tau
    CHECK(d[6] == d[2] * d[3]);
    CHECK(d[10] == d[2] * d[5]);
    CHECK(d[35] == d[5] * d[7]);
    CHECK(d[4] == d[2] * d[2] - 2048);         // tau(p^2) = tau(p)^2 - p^11
    CHECK(d[9] == d[3] * d[3] - 177147);
}

TEST_CASE("cusp space dimensions", "[qexp]") {
    CHECK(cusp_dim(4) == 0);
    CHECK(cusp_dim(6) == 0);
    CHECK(cusp_dim(8) == 0);
    CHECK(cusp_dim(10) == 0);
    CHECK(cusp_dim(12) == 1);
    CHECK(cusp_dim(14) == 0);
    CHECK(cusp_dim(16) == 1);
    CHECK(cusp_dim(18) == 1);
    CHECK(cusp_dim(20) == 1);
    CHECK(cusp_dim(22) == 1);
    CHECK(cusp_dim(24) == 2);
    CHECK(cusp_dim(26) == 1);
    CHECK(cusp_dim(28) == 2);
    CHECK(cusp_dim(36) == 3);
    CHECK(cusp_dim(38) == 2);
    CHECK(cusp_dim(11) == 0);
}

TEST_CASE("echelon basis structure", "[qexp]") {
    for (int k : {12, 16, 24, 28, 36}) {
        CuspBasis b = cusp_basis(k, 40);
        REQUIRE(b.dim == cusp_dim(k));
        REQUIRE(b.forms.size() == static_cast<std::size_t>(b.dim));
        for (int i = 0; i < b.dim; ++i) {
            CHECK(b.forms[i][0] == 0);  // cusp form
            for (int j = 1; j <= b.dim; ++j)
                CHECK(b.forms[i][j] == (j == i + 1 ? 1 : 0));
        }
    }
    // weight 12 basis form is Delta itself
    CuspBasis b12 = cusp_basis(12, 30);
    QSeries d = delta_qexp(30);
    for (std::size_t n = 0; n <= 30; ++n) CHECK(b12.forms[0][n] == d[n]);
    CHECK(cusp_basis(10, 20).dim == 0);
    CHECK_THROWS_AS(cusp_basis(13, 20), std::invalid_argument);
    CHECK_THROWS_AS(cusp_basis(24, 2), std::invalid_argument);  // prec below dim
}

TEST_CASE("one-dimensional spaces carry eigenforms", "[qexp]") {
    for (int k : {12, 16, 18, 20, 22, 26}) {
        CuspBasis b = cusp_basis(k, 40);
        REQUIRE(b.dim == 1);
        const QSeries& f = b.forms[0];
        // multiplicativity on coprime indices
        for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{
                 {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {2, 7}, {5, 7}, {2, 9}})
            CHECK(f[m * n] == f[m] * f[n]);
        // a_{p^2} = a_p^2 - p^{k-1} for p = 2, 3
        CHECK(f[4] == f[2] * f[2] - Rat(pow_int(Int(2), k - 1)));
        CHECK(f[9] == f[3] * f[3] - Rat(pow_int(Int(3), k - 1)));
        // trace on a one-dimensional space is the eigenvalue
        CHECK(Rat(hecke_trace_qexp(b, 5)) == f[5]);
        CHECK(Rat(hecke_trace_oracle(k, 7)) == f[7]);
    }
}

TEST_CASE("oracle traces at pinned values", "[qexp]") {
    CHECK(hecke_trace_oracle(12, 5) == 4830);
    CHECK(hecke_trace_oracle(12, 7) == -16744);
    CHECK(hecke_trace_oracle(16, 7) == 2822456);
    CHECK(hecke_trace_oracle(24, 5) == 73069020);
    CHECK(hecke_trace_oracle(24, 11) == Int("856801968264"));
    CHECK(hecke_trace_oracle(4, 13) == 0);
    CHECK(hecke_trace_oracle(14, 97) == 0);
    CHECK(hecke_trace_oracle(2, 5) == 0);
    CHECK_THROWS_AS(hecke_trace_oracle(12, 6), std::invalid_argument);
    CHECK_THROWS_AS(hecke_trace_oracle(11, 5), std::invalid_argument);
}

TEST_CASE("trace needs enough precision", "[qexp]") {
    CuspBasis b = cusp_basis(24, 12);
    CHECK_THROWS_AS(hecke_trace_qexp(b, 7), check_error);  // needs 2*7 coefficients
    CHECK(hecke_trace_qexp(cusp_basis(24, 14), 7) == Int("-1359184400"));
    CHECK_THROWS_AS(hecke_trace_qexp(b, 4), std::invalid_argument);
}
