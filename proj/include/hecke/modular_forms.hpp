#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "numeric.hpp"

namespace hecke {

// Dense q-expansion with exact rational coefficients a_0 .. a_N.
class QSeries {
public:
    explicit QSeries(std::size_t prec) : c_(prec + 1) {}

    std::size_t precision() const { return c_.size() - 1; }  // N
    const Rat& operator[](std::size_t n) const { return c_.at(n); }
    Rat& operator[](std::size_t n) { return c_.at(n); }

    QSeries operator+(const QSeries& o) const {
        QSeries r(std::min(precision(), o.precision()));
        for (std::size_t n = 0; n <= r.precision(); ++n) r.c_[n] = c_[n] + o.c_[n];
        return r;
    }
    QSeries operator-(const QSeries& o) const {
        QSeries r(std::min(precision(), o.precision()));
        for (std::size_t n = 0; n <= r.precision(); ++n) r.c_[n] = c_[n] - o.c_[n];
        return r;
    }
    QSeries operator*(const QSeries& o) const {  // truncated product
        QSeries r(std::min(precision(), o.precision()));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (i > r.precision()) break;
            for (std::size_t j = 0; i + j <= r.precision() && j < o.c_.size(); ++j) {
                if (o.c_[j] == 0) continue;
                r.c_[i + j] += c_[i] * o.c_[j];
            }
        }
        return r;
    }
    QSeries& operator*=(const Rat& s) {
        for (auto& v : c_) v *= s;
        return *this;
    }

    static QSeries one(std::size_t prec) {
        QSeries r(prec);
        r.c_[0] = 1;
        return r;
    }

private:
    std::vector<Rat> c_;
};

// E_4 = 1 + 240 sum sigma_3(n) q^n,  E_6 = 1 - 504 sum sigma_5(n) q^n.
inline QSeries eisenstein_qexp(int k, std::size_t prec) {
    if (k != 4 && k != 6) throw std::invalid_argument("eisenstein_qexp: k must be 4 or 6");
    QSeries r(prec);
    r[0] = 1;
    const int pw = k - 1;
    std::vector<Int> sigma(prec + 1, 0);
    for (std::size_t d = 1; d <= prec; ++d) {
        const Int dk = pow_int(Int(d), pw);
        for (std::size_t m = d; m <= prec; m += d) sigma[m] += dk;
    }
    const Int scale = k == 4 ? 240 : -504;
    for (std::size_t n = 1; n <= prec; ++n) r[n] = Rat(scale * sigma[n]);
    return r;
}

// Delta = (E_4^3 - E_6^2) / 1728; the division is exact, enforced term by term.
inline QSeries delta_qexp(std::size_t prec) {
    const QSeries e4 = eisenstein_qexp(4, prec);
    const QSeries e6 = eisenstein_qexp(6, prec);
    QSeries num = e4 * e4 * e4 - e6 * e6;
    QSeries r(prec);
    for (std::size_t n = 0; n <= prec; ++n) {
        const Int c = rat_to_int(num[n], "delta_qexp");
        if (c % 1728 != 0) throw check_error("delta_qexp: coefficient not divisible by 1728");
        r[n] = Rat(c / 1728);
    }
    return r;
}

// dim S_k(SL2(Z)): 0 for k odd or k < 12 or k = 14; floor(k/12) adjusted
// downward by one when k = 2 (mod 12).
inline int cusp_dim(int k) {
    if (k < 12 || k % 2 != 0) return 0;
    return k % 12 == 2 ? k / 12 - 1 : k / 12;
}

// Echelonized basis of S_k: row i (0-based) has a_{i+1} = 1 and a_j = 0 for
// the other j <= dim.
struct CuspBasis {
    int k = 0;
    int dim = 0;
    std::vector<QSeries> forms;
};

inline CuspBasis cusp_basis(int k, std::size_t prec) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("cusp_basis: k must be even, >= 0");
    const int dim = cusp_dim(k);
    if (prec < static_cast<std::size_t>(dim) + 1)
        throw std::invalid_argument("cusp_basis: precision below dimension");
    CuspBasis out{k, dim, {}};
    if (dim == 0) return out;

    const QSeries e4 = eisenstein_qexp(4, prec);
    const QSeries e6 = eisenstein_qexp(6, prec);
    const QSeries delta = delta_qexp(prec);

    // spanning set Delta^j E_4^a E_6^b with 4a + 6b + 12j = k, j >= 1
    std::vector<QSeries> rows;
    QSeries dpow = delta;
    for (int j = 1; 12 * j <= k; ++j) {
        const int rem = k - 12 * j;
        for (int a = 0; 4 * a <= rem; ++a) {
            if ((rem - 4 * a) % 6 != 0) continue;
            QSeries f = dpow;
            for (int i = 0; i < a; ++i) f = f * e4;
            for (int i = 0; i < (rem - 4 * a) / 6; ++i) f = f * e6;
            rows.push_back(f);
        }
        if (12 * (j + 1) <= k) dpow = dpow * delta;
    }

    // echelonize on columns 1..dim
    std::vector<QSeries> basis;
    for (int col = 1; col <= dim; ++col) {
        std::size_t pick = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            bool clean = true;
            for (int c = 1; c < col; ++c)
                if (rows[r][c] != 0) { clean = false; break; }
            if (clean && rows[r][col] != 0) { pick = r; break; }
        }
        if (pick == rows.size()) throw check_error("cusp_basis: rank deficiency");
        QSeries piv = rows[pick];
        piv *= Rat(1) / piv[col];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pick));
        for (auto& r : rows) {
            if (r[col] == 0) continue;
            Rat fct = r[col];
            QSeries scaled = piv;
            scaled *= fct;
            r = r - scaled;
        }
        basis.push_back(piv);
    }
    // clear entries above the pivots
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (j == i) continue;
            if (basis[i][static_cast<std::size_t>(j) + 1] == 0) continue;
            Rat fct = basis[i][static_cast<std::size_t>(j) + 1];
            QSeries scaled = basis[j];
            scaled *= fct;
            basis[i] = basis[i] - scaled;
        }
    }
    out.forms = std::move(basis);
    return out;
}

// trace of T_p on the echelon basis: sum_i [a_{ip}(f_i) + p^{k-1} a_{i/p}(f_i)],
// the second term only when p | i.
inline Int hecke_trace_qexp(const CuspBasis& basis, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("hecke_trace_qexp: p must be prime");
    if (basis.dim == 0) return 0;
    const auto need = static_cast<std::size_t>(basis.dim) * static_cast<std::size_t>(p);
    for (const auto& f : basis.forms)
        if (f.precision() < need) throw check_error("hecke_trace_qexp: insufficient precision");
    Rat tr = 0;
    for (int i = 1; i <= basis.dim; ++i) {
        const QSeries& f = basis.forms[static_cast<std::size_t>(i) - 1];
        tr += f[static_cast<std::size_t>(i) * static_cast<std::size_t>(p)];
        if (i % p == 0)
            tr += Rat(pow_int(Int(p), basis.k - 1)) * f[static_cast<std::size_t>(i / p)];
    }
    return rat_to_int(tr, "hecke_trace_qexp");
}

inline Int hecke_trace_oracle(int k, std::int64_t p) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("hecke_trace_oracle: k must be even, >= 2");
    if (!is_prime(p)) throw std::invalid_argument("hecke_trace_oracle: p must be prime");
    const int dim = cusp_dim(k);
    if (dim == 0) return 0;
    const std::size_t prec = static_cast<std::size_t>(dim) * static_cast<std::size_t>(p) + 8;
    return hecke_trace_qexp(cusp_basis(k, prec), p);
}

}  // namespace hecke
