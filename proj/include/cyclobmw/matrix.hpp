/*
   Copyright 2026 The cyclobmw authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file matrix.hpp
 * @brief Dense matrices over a coefficient ring, Bareiss determinants and modular certificates.
 */

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "laurent.hpp"

namespace cyclobmw {

template <class C>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const C& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const C& zero, const C& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    C& operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    const C& operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

    std::vector<C> column(std::size_t c) const {
        std::vector<C> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorKind::Mismatch, "matrix shapes");
        Matrix m(a.rows_, b.cols_, C(a(0, 0) - a(0, 0)));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                if (is_zero(a(i, l))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) = C(m(i, j) + a(i, l) * b(l, j));
            }
        return m;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = C(a.data_[i] + b.data_.at(i));
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = C(a.data_[i] - b.data_.at(i));
        return a;
    }
    Matrix scaled(const C& s) const {
        Matrix m = *this;
        for (auto& x : m.data_) x = C(s * x);
        return m;
    }
    std::vector<C> apply(const std::vector<C>& v) const {
        std::vector<C> r(rows_, C(v.at(0) - v.at(0)));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] = C(r[i] + (*this)(i, j) * v[j]);
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<C> data_;
};

/// Bareiss fraction-free elimination; every division is exact.
template <class C>
C det_fraction_free(Matrix<C> m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::NotSquare, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return C(1);
    C prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t r = k + 1;
            while (r < n && is_zero(m(r, k))) ++r;
            if (r == n) return C(m(0, 0) - m(0, 0));
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                C num = C(m(k, k) * m(i, j) - m(i, k) * m(k, j));
                auto q = exact_div(num, prev);
                if (!q) throw Error(ErrorKind::DegenerateParameters, "inexact Bareiss division");
                m(i, j) = *q;
            }
        }
        prev = m(k, k);
    }
    C d = m(n - 1, n - 1);
    return sign > 0 ? d : C(-d);
}

/// Laplace expansion along the first row; exponential, for cross-checking small sizes.
template <class C>
C det_cofactor(const Matrix<C>& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::NotSquare, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return C(1);
    if (n == 1) return m(0, 0);
    C acc = C(m(0, 0) - m(0, 0));
    for (std::size_t c = 0; c < n; ++c) {
        Matrix<C> minor(n - 1, n - 1, m(0, 0));
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        C t = C(m(0, c) * det_cofactor(minor));
        acc = (c % 2 == 0) ? C(acc + t) : C(acc - t);
    }
    return acc;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Determinant over Z/p by Gaussian elimination; p must be prime.
inline std::uint64_t det_mod_p(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
    const std::size_t n = a.size();
    std::uint64_t det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = (p - det) % p;
        }
        det = detail::mulmod(det, a[c][c], p);
        std::uint64_t inv = detail::powmod(a[c][c], p - 2, p);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            std::uint64_t f = detail::mulmod(a[r][c], inv, p);
            for (std::size_t j = c; j < n; ++j) a[r][j] = (a[r][j] + p - detail::mulmod(f, a[c][j], p)) % p;
        }
    }
    return det;
}

enum class Certificate { CertifiedNonzero, Inconclusive };

inline const char* certificate_name(Certificate c) {
    return c == Certificate::CertifiedNonzero ? "CertifiedNonzero" : "Inconclusive";
}

/**
 * @brief Random evaluation of a polynomial matrix modulo a prime.
 *
 * Generators are sampled uniformly from the nonzero residues, so Laurent
 * monomials stay defined. A nonzero modular determinant proves det != 0.
 */
inline Certificate nonzero_certificate(const Matrix<LaurentPoly>& m, int trials, std::uint64_t prime,
                                       std::uint64_t seed = 0x5eed) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::NotSquare, "certificate of non-square matrix");
    std::size_t ngen = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).space()) ngen = std::max(ngen, m(i, j).space()->size());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, prime - 1);
    for (int t = 0; t < trials; ++t) {
        std::vector<std::uint64_t> vals(ngen), invs(ngen);
        for (std::size_t g = 0; g < ngen; ++g) {
            vals[g] = dist(rng);
            invs[g] = detail::powmod(vals[g], prime - 2, prime);
        }
        std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols(), 0));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::uint64_t acc = 0;
                for (const auto& [e, c] : m(i, j).terms()) {
                    mpz_class cm = c % static_cast<unsigned long>(prime);
                    if (cm < 0) cm += static_cast<unsigned long>(prime);
                    std::uint64_t term = cm.get_ui();
                    for (std::size_t g = 0; g < e.size(); ++g) {
                        if (e[g] > 0) term = detail::mulmod(term, detail::powmod(vals[g], e[g], prime), prime);
                        if (e[g] < 0) term = detail::mulmod(term, detail::powmod(invs[g], -e[g], prime), prime);
                    }
                    acc = (acc + term) % prime;
                }
                a[i][j] = acc;
            }
        if (det_mod_p(std::move(a), prime) != 0) return Certificate::CertifiedNonzero;
    }
    return Certificate::Inconclusive;
}

}  // namespace cyclobmw
