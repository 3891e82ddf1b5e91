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
 * @file words.hpp
 * @brief Generator letters, alpha-chains, normal words and their enumeration.
 *
 * A normal word on n strands is either an Ariki-Koike word
 * Y_1'^{c_1} ... Y_n'^{c_n} X_w, or a triple (alpha, inner, beta) where
 * alpha and beta are chains ending in e_{n-1} and inner is a normal word on
 * n-2 strands. Its value is A_0^{-1} alpha inner beta^*, which makes e_i a
 * normal word with coefficient one.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cyclobmw {

enum class Gen : unsigned char { Y, Yinv, X, Xinv, E };

struct Letter {
    Gen g;
    int i = 0;
    auto operator<=>(const Letter&) const = default;
};

using LetterWord = std::vector<Letter>;

inline std::string letter_name(const Letter& l) {
    switch (l.g) {
        case Gen::Y: return "Y";
        case Gen::Yinv: return "Y^-1";
        case Gen::X: return "X" + std::to_string(l.i);
        case Gen::Xinv: return "X" + std::to_string(l.i) + "^-1";
        case Gen::E: return "e" + std::to_string(l.i);
    }
    return "?";
}

inline LetterWord operator+(LetterWord a, const LetterWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Y_j'^a as letters; Y_j' = X_{j-1} ... X_1 Y X_1 ... X_{j-1}.
inline LetterWord ypow(int j, int a) {
    LetterWord one;
    const bool inv = a < 0;
    for (int t = j - 1; t >= 1; --t) one.push_back({inv ? Gen::Xinv : Gen::X, t});
    one.push_back({inv ? Gen::Yinv : Gen::Y, 0});
    for (int t = 1; t <= j - 1; ++t) one.push_back({inv ? Gen::Xinv : Gen::X, t});
    LetterWord r;
    for (int s = 0; s < std::abs(a); ++s) r = r + one;
    return r;
}

/// X_hi^{-1} X_{hi-1}^{-1} ... X_lo^{-1}; empty when hi < lo.
inline LetterWord xinv_desc(int hi, int lo) {
    LetterWord r;
    for (int t = hi; t >= lo; --t) r.push_back({Gen::Xinv, t});
    return r;
}

inline LetterWord x_asc(int lo, int hi) {
    LetterWord r;
    for (int t = lo; t <= hi; ++t) r.push_back({Gen::X, t});
    return r;
}

inline LetterWord e_asc(int lo, int hi) {
    LetterWord r;
    for (int t = lo; t <= hi; ++t) r.push_back({Gen::E, t});
    return r;
}

/// alpha_{i,j,l}^p = Y_i'^p X_i ... X_{j-1} e_j ... e_l.
struct Chain {
    int i = 1, j = 1, p = 0;
    auto operator<=>(const Chain&) const = default;
};

inline LetterWord chain_letters(const Chain& a, int l) { return ypow(a.i, a.p) + x_asc(a.i, a.j - 1) + e_asc(a.j, l); }

/// Prefix of a chain up to and including index `upto`.
inline LetterWord chain_prefix(const Chain& a, int upto) {
    return ypow(a.i, a.p) + x_asc(a.i, std::min(a.j - 1, upto)) + e_asc(a.j, upto);
}

/// Exponent window P = {floor(k/2) - (k-1), ..., floor(k/2)}.
inline int p_min(int k) { return k / 2 - (k - 1); }
inline int p_max(int k) { return k / 2; }
inline bool in_window(int p, int k) { return p >= p_min(k) && p <= p_max(k); }

struct NormalWord {
    int n = 0;
    std::vector<Chain> left, right;  ///< outermost first
    std::vector<int> c;              ///< Y' exponents on the n - 2f inner strands
    std::vector<int> w;              ///< one-line permutation on the inner strands

    int f() const { return static_cast<int>(left.size()); }
    int ak_rank() const { return n - 2 * f(); }

    auto operator<=>(const NormalWord&) const = default;

    static NormalWord identity(int n) {
        NormalWord r;
        r.n = n;
        r.c.assign(n, 0);
        r.w.resize(n);
        std::iota(r.w.begin(), r.w.end(), 1);
        return r;
    }

    /// Drop the outer chains.
    NormalWord inner() const {
        NormalWord r;
        r.n = n - 2;
        r.left.assign(left.begin() + 1, left.end());
        r.right.assign(right.begin() + 1, right.end());
        r.c = c;
        r.w = w;
        return r;
    }

    static NormalWord wrap(const Chain& a, const NormalWord& in, const Chain& b) {
        NormalWord r;
        r.n = in.n + 2;
        r.left.push_back(a);
        r.left.insert(r.left.end(), in.left.begin(), in.left.end());
        r.right.push_back(b);
        r.right.insert(r.right.end(), in.right.begin(), in.right.end());
        r.c = in.c;
        r.w = in.w;
        return r;
    }

    std::string str() const {
        std::string s;
        auto chain = [](const Chain& a, int l) {
            return "a(" + std::to_string(a.i) + "," + std::to_string(a.j) + "," + std::to_string(l) + ")^" +
                   std::to_string(a.p);
        };
        for (int m = 0; m < f(); ++m) s += chain(left[m], n - 2 * m - 1) + " ";
        s += "[";
        for (std::size_t t = 0; t < c.size(); ++t) s += (t ? "," : "") + std::to_string(c[t]);
        s += "|";
        for (std::size_t t = 0; t < w.size(); ++t) s += (t ? "," : "") + std::to_string(w[t]);
        s += "]";
        for (int m = f() - 1; m >= 0; --m) s += " " + chain(right[m], n - 2 * m - 1) + "*";
        return s;
    }
};

// ---------------------------------------------------------------------------
// Permutations: X_{a_1} ... X_{a_t} stands for s_{a_1} o ... o s_{a_t}.

namespace perm {

inline int length(const std::vector<int>& w) {
    int inv = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b) inv += w[a] > w[b];
    return inv;
}

/// s_m o w: swap the values m and m+1.
inline std::vector<int> left_mul(int m, std::vector<int> w) {
    for (int& x : w) {
        if (x == m) x = m + 1;
        else if (x == m + 1) x = m;
    }
    return w;
}

/// True when s_m o w is longer than w.
inline bool left_ascent(int m, const std::vector<int>& w) {
    auto pm = std::find(w.begin(), w.end(), m), pm1 = std::find(w.begin(), w.end(), m + 1);
    return pm < pm1;
}

/// Lexicographically smallest reduced word.
inline std::vector<int> reduced_word(std::vector<int> w) {
    std::vector<int> out;
    for (;;) {
        int a = 0;
        for (int m = 1; m < static_cast<int>(w.size()); ++m)
            if (!left_ascent(m, w)) {
                a = m;
                break;
            }
        if (a == 0) return out;
        out.push_back(a);
        w = left_mul(a, w);
    }
}

inline std::vector<std::vector<int>> all(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace perm

/// Letters whose product equals A_0^f times the word.
inline LetterWord word_letters(const NormalWord& w) {
    LetterWord r;
    const int f = w.f();
    for (int m = 0; m < f; ++m) r = r + chain_letters(w.left[m], w.n - 2 * m - 1);
    for (std::size_t t = 0; t < w.c.size(); ++t) r = r + ypow(static_cast<int>(t) + 1, w.c[t]);
    for (int a : perm::reduced_word(w.w)) r.push_back({Gen::X, a});
    for (int m = f - 1; m >= 0; --m) {
        LetterWord b = chain_letters(w.right[m], w.n - 2 * m - 1);
        std::reverse(b.begin(), b.end());
        r = r + b;
    }
    return r;
}

inline long long bmw_rank(int n, int k) {
    long long r = 1;
    for (int i = 0; i < n; ++i) r *= k;
    for (int i = 2 * n - 1; i > 1; i -= 2) r *= i;
    return r;
}

/**
 * @brief All normal words on n strands.
 *
 * Left chains at depth m end in e_{n-2m+1} and have strictly decreasing i;
 * right chains likewise in g. Exponents lie in the window P.
 */
inline std::vector<NormalWord> enumerate_basis(int n, int k, long long max_basis = 10000) {
    if (n < 0 || k < 1) throw Error(ErrorKind::IndexOutOfRange, "bad (n,k)");
    if (bmw_rank(n, k) > max_basis) throw Error(ErrorKind::TooLarge, "basis exceeds bound");
    std::vector<NormalWord> out;
    for (int f = 0; 2 * f <= n; ++f) {
        const int r = n - 2 * f;
        // Chain stacks of depth f with decreasing i.
        std::vector<std::vector<Chain>> stacks;
        std::vector<Chain> cur;
        auto rec = [&](auto&& self, int depth, int bound) -> void {
            if (depth == f) {
                stacks.push_back(cur);
                return;
            }
            const int l = n - 2 * depth - 1;
            for (int i = 1; i <= l && i < bound; ++i)
                for (int j = i; j <= l; ++j)
                    for (int p = p_min(k); p <= p_max(k); ++p) {
                        cur.push_back({i, j, p});
                        self(self, depth + 1, i);
                        cur.pop_back();
                    }
        };
        rec(rec, 0, n + 1);
        std::vector<std::vector<int>> cs;
        std::vector<int> cv(r, 0);
        for (;;) {
            cs.push_back(cv);
            int pos = 0;
            while (pos < r && ++cv[pos] == k) cv[pos++] = 0;
            if (pos == r) break;
        }
        auto ws = perm::all(r);
        for (const auto& L : stacks)
            for (const auto& R : stacks)
                for (const auto& c : cs)
                    for (const auto& w : ws) {
                        NormalWord nw;
                        nw.n = n;
                        nw.left = L;
                        nw.right = R;
                        nw.c = c;
                        nw.w = w;
                        out.push_back(std::move(nw));
                    }
    }
    return out;
}

}  // namespace cyclobmw
