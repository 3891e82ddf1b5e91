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
 * @file bmw_core.hpp
 * @brief Normal-form arithmetic in the cyclotomic BMW algebra B_n^k.
 *
 * Left multiplication by a generator is pushed through the outermost chain
 * of a word. The residue lands in the rank n-2 middle and is reduced
 * recursively; the chain is then reattached, restoring the window on its
 * exponent and the decreasing order of the chain stack. Words with no chain
 * are handled by Ariki-Koike rewriting, with e_i reached through the
 * anti-involution.
 */

#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "brauer.hpp"
#include "env.hpp"
#include "words.hpp"

namespace cyclobmw {

template <Coefficient C>
using Element = std::map<NormalWord, C>;

template <Coefficient C>
void add_term(Element<C>& x, const NormalWord& w, const C& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = x.try_emplace(w, c);
    if (!fresh) {
        it->second = C(it->second + c);
        if (is_zero(it->second)) x.erase(it);
    }
}

template <Coefficient C>
void add_scaled(Element<C>& x, const Element<C>& y, const C& c) {
    if (is_zero(c)) return;
    for (const auto& [w, d] : y) add_term(x, w, C(c * d));
}

template <Coefficient C>
Element<C> scaled(const Element<C>& y, const C& c) {
    Element<C> r;
    add_scaled(r, y, c);
    return r;
}

template <Coefficient C>
bool equal(const Element<C>& a, const Element<C>& b) {
    if (a.size() != b.size()) return false;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
        if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
    return true;
}

/// Identities used by the rewriting, in the form lhs = sum rhs.
enum class Formula { Magic, M2, M3, M4, M5, M6, M7, M8, M9, M10, M11, M12, M13, Xi2, Exe, Prop1b, Prop1c, Prop1d, Ep2, XXp1 };

template <Coefficient C>
struct FormalIdentity {
    LetterWord lhs;
    std::vector<std::pair<C, LetterWord>> rhs;
};

template <Coefficient C>
class BmwEngine {
public:
    explicit BmwEngine(ParamEnv<C> env) : env_(std::move(env)), one_(env_.one()), zero_(env_.zero()) {}

    const ParamEnv<C>& env() const { return env_; }
    int k() const { return env_.k(); }

    Element<C> unit(const NormalWord& w) const { return Element<C>{{w, one_}}; }
    Element<C> identity(int n) const { return unit(NormalWord::identity(n)); }

    /// e_m on n strands as a normal word.
    static NormalWord e_word(int n, int m) {
        return NormalWord::wrap({m, m, 0}, NormalWord::identity(n - 2), {m, m, 0});
    }

    /// Y^p = sum_i c_i Y^i with 0 <= i < k.
    std::vector<C> y_power_reduce(int p) {
        std::lock_guard lock(mu_);
        return ypr(p);
    }

    Element<C> mul_gen_left(const Letter& g, const NormalWord& w) {
        std::lock_guard lock(mu_);
        return mgl(g, w);
    }

    Element<C> apply_word(const LetterWord& lw, const Element<C>& x) {
        std::lock_guard lock(mu_);
        return apply(lw, x);
    }

    Element<C> star(const NormalWord& w) {
        std::lock_guard lock(mu_);
        return star_word(w);
    }

    Element<C> star(const Element<C>& x) {
        std::lock_guard lock(mu_);
        return star_elem(x);
    }

    Element<C> multiply(const Element<C>& x, const Element<C>& y) {
        std::lock_guard lock(mu_);
        const int n = rank_of(x, rank_of(y, -1));
        if (n >= 0) {
            for (const auto& [w, c] : x) if (w.n != n) throw Error(ErrorKind::Mismatch, "element ranks differ");
            for (const auto& [w, c] : y) if (w.n != n) throw Error(ErrorKind::Mismatch, "element ranks differ");
        }
        Element<C> r;
        for (const auto& [w, c] : x) add_scaled(r, apply(word_letters(w), y), C(c * a0inv_pow(w.f())));
        return r;
    }

    /// Normal form of A_0^{-f} times the product of the letters of an arbitrary word.
    Element<C> reduce(const Element<C>& raw) {
        std::lock_guard lock(mu_);
        Element<C> r;
        for (const auto& [w, c] : raw) {
            check_shape(w);
            add_scaled(r, apply(word_letters(w), identity(w.n)), C(c * a0inv_pow(w.f())));
        }
        return r;
    }

    /// Normal form of a product of letters on n strands.
    Element<C> evaluate(const LetterWord& lw, int n) {
        std::lock_guard lock(mu_);
        return apply(lw, identity(n));
    }

    FormalIdentity<C> commutation_formula(Formula f, int i, int p) const;

private:
    struct ChainTerm {
        C coef;
        Chain ch;
        LetterWord res;
    };
    using Poly = std::map<std::vector<int>, C>;

    // -- small helpers ------------------------------------------------------

    static int rank_of(const Element<C>& x, int dflt) { return x.empty() ? dflt : x.begin()->first.n; }

    C a0inv_pow(int f) const {
        C r = one_;
        for (int t = 0; t < f; ++t) r = C(r * env_.A0_inv());
        return r;
    }

    void check_shape(const NormalWord& w) const {
        int n = w.n;
        if (w.left.size() != w.right.size()) throw Error(ErrorKind::Mismatch, "left and right chain counts differ");
        for (int m = 0; m < w.f(); ++m) {
            const int l = n - 2 * m - 1;
            for (const Chain* a : {&w.left[m], &w.right[m]})
                if (a->i < 1 || a->i > a->j || a->j > l)
                    throw Error(ErrorKind::IndexOutOfRange, "chain indices out of range");
        }
        const int r = w.ak_rank();
        if (r < 0 || static_cast<int>(w.c.size()) != r || static_cast<int>(w.w.size()) != r)
            throw Error(ErrorKind::Mismatch, "AK part has the wrong size");
        std::vector<int> s = w.w;
        std::sort(s.begin(), s.end());
        for (int t = 0; t < r; ++t)
            if (s[t] != t + 1) throw Error(ErrorKind::Mismatch, "not a permutation");
    }

    static void check_letter(const Letter& g, int n) {
        if (g.g == Gen::Y || g.g == Gen::Yinv) {
            if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "Y on zero strands");
        } else if (g.i < 1 || g.i > n - 1) {
            throw Error(ErrorKind::IndexOutOfRange, letter_name(g) + " on " + std::to_string(n) + " strands");
        }
    }

    C delta(bool dual) const { return dual ? C(-env_.delta()) : env_.delta(); }
    C lam(bool dual) const { return dual ? env_.lambda_inv() : env_.lambda(); }
    C aval(int j, bool dual) const { return env_.A(dual ? -j : j); }

    // -- powers of Y ----------------------------------------------------------

    std::vector<C> ypr(int p) {
        auto it = ypow_memo_.find(p);
        if (it != ypow_memo_.end()) return it->second;
        const int k = env_.k();
        std::vector<C> v(k, zero_);
        if (p >= 0 && p < k) {
            v[p] = one_;
        } else if (p >= k) {
            auto u = ypr(p - 1);
            const C top = u[k - 1];
            for (int i = k - 1; i > 0; --i) v[i] = u[i - 1];
            v[0] = zero_;
            for (int i = 0; i < k; ++i) v[i] = C(v[i] + top * env_.qi(i));
        } else {
            auto u = ypr(p + 1);
            const C bottom = u[0];
            for (int i = 0; i + 1 < k; ++i) v[i] = u[i + 1];
            v[k - 1] = zero_;
            for (int i = 0; i < k; ++i) v[i] = C(v[i] - bottom * env_.q0_inv() * env_.qi(i + 1));
        }
        ypow_memo_.emplace(p, v);
        return v;
    }

    // -- the polynomials F_{m,p}, G_{m,p} ------------------------------------
    //
    // e_m Y_m'^p e_m = F_{m,p}(Y_1', ..., Y_{m-1}') e_m and
    // X_m Y_m'^p e_m = G_{m,p}(Y_1', ..., Y_m') e_m. Negative p uses the
    // algebra with inverted parameters, tracked by `dual`.

    static void padd(Poly& a, std::vector<int> e, const C& c) {
        if (is_zero(c)) return;
        auto [it, fresh] = a.try_emplace(std::move(e), c);
        if (!fresh) {
            it->second = C(it->second + c);
            if (is_zero(it->second)) a.erase(it);
        }
    }

    static std::vector<int> pad(std::vector<int> e, std::size_t n) {
        e.resize(n, 0);
        return e;
    }

    const Poly& polyF(int m, int p, bool dual) {
        auto key = std::make_tuple(m, p, dual);
        auto it = fmemo_.find(key);
        if (it != fmemo_.end()) return it->second;
        Poly r;
        const std::size_t nv = m - 1;
        if (p == 0) {
            padd(r, std::vector<int>(nv, 0), env_.A(0));
        } else if (p < 0) {
            for (const auto& [e, c] : polyF(m, -p, !dual)) {
                auto ne = e;
                for (int& x : ne) x = -x;
                padd(r, ne, c);
            }
        } else if (m == 1) {
            padd(r, {}, aval(p, dual));
        } else {
            const C d = delta(dual);
            for (const auto& [e, c] : polyF(m - 1, p, dual)) padd(r, pad(e, nv), c);
            for (int s = 0; s <= p - 1; ++s) {
                for (const auto& [e, c] : Poly(polyG(m, s, dual))) {
                    std::vector<int> ne(e.begin(), e.end() - 1);
                    ne[nv - 1] += p - s - e[nv];
                    padd(r, ne, C(d * c));
                }
                std::vector<int> mono(nv, 0);
                mono[nv - 1] = p - 2 * s;
                padd(r, mono, C(-(d * d)));
                for (const auto& [e, c] : Poly(polyF(m, s, dual))) {
                    auto ne = e;
                    ne[nv - 1] += p - s;
                    padd(r, ne, C(d * d * c));
                }
                for (const auto& [e, c] : Poly(polyG(m - 1, p - s, dual))) {
                    auto ne = e;
                    ne[nv - 1] -= s;
                    padd(r, ne, C(-(d * c)));
                }
            }
        }
        return fmemo_.emplace(key, std::move(r)).first->second;
    }

    const Poly& polyG(int m, int p, bool dual) {
        auto key = std::make_tuple(m, p, dual);
        auto it = gmemo_.find(key);
        if (it != gmemo_.end()) return it->second;
        Poly r;
        const std::size_t nv = m;
        const C d = delta(dual);
        auto mono = [&](int a) {
            std::vector<int> e(nv, 0);
            e[nv - 1] = a;
            return e;
        };
        if (p >= 0) {
            padd(r, mono(-p), lam(dual));
            for (int s = 1; s <= p; ++s) {
                padd(r, mono(p - 2 * s), C(-d));
                for (const auto& [e, c] : Poly(polyF(m, p - s, dual))) {
                    auto ne = pad(e, nv);
                    ne[nv - 1] -= s;
                    padd(r, ne, C(d * c));
                }
            }
        } else {
            const int P = -p;
            padd(r, mono(P), lam(dual));
            for (int s = 1; s <= P; ++s) {
                padd(r, mono(P - 2 * s), d);
                for (const auto& [e, c] : Poly(polyF(m, -s, dual))) {
                    auto ne = pad(e, nv);
                    ne[nv - 1] += P - s;
                    padd(r, ne, C(-(d * c)));
                }
            }
        }
        return gmemo_.emplace(key, std::move(r)).first->second;
    }

    static LetterWord ymono(const std::vector<int>& e, std::size_t count) {
        LetterWord r;
        for (std::size_t t = 0; t < count; ++t) r = r + ypow(static_cast<int>(t) + 1, e[t]);
        return r;
    }

    // -- a generator against the outermost chain ----------------------------

    std::vector<ChainTerm> chain_action(const Letter& g, const Chain& a, int n) {
        const int L = n - 1;
        const int i = a.i, j = a.j, p = a.p;
        const C d = env_.delta();
        std::vector<ChainTerm> out;
        switch (g.g) {
            case Gen::Y:
            case Gen::Yinv: {
                const int s = g.g == Gen::Y ? 1 : -1;
                if (i == 1) out.push_back({one_, {1, j, p + s}, {}});
                else out.push_back({one_, a, {g}});
                break;
            }
            case Gen::E: {
                const int m = g.i;
                const Chain top{m, m, 0};
                if (m == i && m == j) {
                    for (const auto& [e, c] : polyF(m, p, false)) out.push_back({c, top, ymono(e, m - 1)});
                } else if (m == i) {
                    for (const auto& [e, c] : polyG(m, p, false))
                        out.push_back({c, top, xinv_desc(j - 2, m) + ymono(e, m)});
                } else if (m == i - 1) {
                    out.push_back({one_, top, xinv_desc(j - 2, m) + ypow(m, -p)});
                } else if (m <= i - 2) {
                    out.push_back({one_, a, {g}});
                } else if (m < j) {
                    out.push_back({one_, top, xinv_desc(j - 2, m) + ypow(i, p) + x_asc(i, m - 2) + LetterWord{{Gen::E, m - 1}}});
                } else if (m == j) {
                    out.push_back({env_.lambda_inv(), top, ypow(i, p) + x_asc(i, m - 2)});
                } else {
                    out.push_back({one_, top, chain_prefix(a, m - 2)});
                }
                break;
            }
            case Gen::X: {
                const int m = g.i;
                if (m <= i - 2) {
                    out.push_back({one_, a, {g}});
                } else if (m == i - 1) {
                    out.push_back({one_, {m, j, p}, {}});
                    if (p >= 0) {
                        for (int s = 1; s <= p; ++s) {
                            out.push_back({d, {m + 1, j, s}, ypow(m, p - s)});
                            out.push_back({C(-d), {m, m, p - s}, xinv_desc(j - 2, m) + ypow(m, -s)});
                        }
                    } else {
                        const int P = -p;
                        for (int s = 1; s <= P; ++s) {
                            out.push_back({C(-d), {m + 1, j, s - P}, ypow(m, -s)});
                            out.push_back({d, {m, m, -s}, xinv_desc(j - 2, m) + ypow(m, P - s)});
                        }
                    }
                } else if (m == i && j == m) {
                    for (const auto& [e, c] : polyG(m, p, false)) {
                        out.push_back({c, {m, m, e[m - 1]}, ymono(e, m - 1)});
                    }
                } else if (m == i) {
                    out.push_back({one_, {m + 1, j, p}, {}});
                    auto viaA = [&](int q, const C& coef, const LetterWord& tail) {
                        for (auto& t : chain_action(g, {m + 1, j, q}, n))
                            out.push_back({C(coef * t.coef), t.ch, t.res + tail});
                    };
                    auto viaB = [&](int q, const C& coef, const LetterWord& tail) {
                        for (auto& t : chain_action(g, {m, m, q}, n))
                            out.push_back({C(coef * t.coef), t.ch, t.res + tail});
                    };
                    if (p >= 1) {
                        for (int s = 1; s <= p - 1; ++s) {
                            viaA(p - s, C(-d), ypow(m, s));
                            viaB(s, d, xinv_desc(j - 2, m) + ypow(m, s - p));
                        }
                    } else {
                        const int P = -p;
                        for (int s = 0; s <= P; ++s) {
                            viaA(s - P, d, ypow(m, -s));
                            viaB(-s, C(-d), xinv_desc(j - 2, m) + ypow(m, P - s));
                        }
                    }
                } else if (m < j) {
                    out.push_back({one_, a, {{Gen::X, m - 1}}});
                } else if (m == j) {
                    out.push_back({one_, {i, j - 1, p}, {}});
                } else {
                    if (j <= m - 2) out.push_back({one_, a, {{Gen::Xinv, m - 2}}});
                    else out.push_back({one_, {i, m, p}, {}});
                    out.push_back({C(-d), {m, m, 0}, chain_prefix(a, m - 2)});
                    out.push_back({d, a, {}});
                }
                break;
            }
            case Gen::Xinv:
                throw Error(ErrorKind::Mismatch, "inverse letters are expanded before chain actions");
        }
        (void)L;
        return out;
    }

    // -- reattaching a chain ------------------------------------------------

    Element<C> comb(const Chain& a, const Element<C>& mid, const Chain& b) {
        Element<C> r;
        for (const auto& [w, c] : mid) add_scaled(r, assemble(a, w, b), c);
        return r;
    }

    /**
     * Normal form of A_0^{-1} a u b^* where u has rank n-2.
     *
     * The exponent of a is brought into the window first. A left chain of u
     * that does not sit strictly below a is exchanged with it; the same is
     * done on the right through the anti-involution.
     */
    const Element<C>& assemble(const Chain& a, const NormalWord& u, const Chain& b) {
        auto key = std::make_tuple(a, u, b);
        auto it = asm_memo_.find(key);
        if (it != asm_memo_.end()) return it->second;
        const int k = env_.k();
        Element<C> r;
        if (!in_window(a.p, k)) {
            if (a.i == 1) {
                auto v = ypr(a.p - p_min(k));
                for (int t = 0; t < k; ++t)
                    if (!is_zero(v[t])) add_scaled(r, assemble({1, a.j, p_min(k) + t}, u, b), v[t]);
            } else {
                const int p0 = a.p > p_max(k) ? p_max(k) : p_min(k);
                Element<C> base = assemble({a.i, a.j, p0}, u, b);
                r = apply(ypow(a.i, a.p - p0), base);
            }
        } else if (!in_window(b.p, k)) {
            throw Error(ErrorKind::Mismatch, "right chain exponent outside the window");
        } else if (u.f() >= 1 && a.i <= u.left[0].i) {
            for (auto& [ch, v] : left_repair(a, u.left[0], unit(u.inner()), u.right[0], u.n + 2))
                add_scaled(r, comb(ch, v, b), one_);
        } else if (u.f() >= 1 && b.i <= u.right[0].i) {
            Element<C> inner_star = star_word(u.inner());
            for (auto& [ch, v] : left_repair(b, u.right[0], inner_star, u.left[0], u.n + 2))
                add_scaled(r, comb(a, star_elem(v), ch), one_);
        } else {
            r.emplace(NormalWord::wrap(a, u, b), one_);
        }
        return asm_memo_.emplace(key, std::move(r)).first->second;
    }

    /**
     * Rewrite A_0^{-1} a [A_0^{-1} a2 U2 b2^*] (...)^* with a.i <= a2.i as a
     * sum of a' [v] (...)^*, each a'.i > a.i and v of rank n-2.
     */
    std::vector<std::pair<Chain, Element<C>>> left_repair(const Chain& a, const Chain& a2, const Element<C>& U2,
                                                          const Chain& b2, int n) {
        const int i = a.i, j = a.j, p = a.p, g = a2.i, h = a2.j, r = a2.p;
        const C d = env_.delta();
        std::vector<std::pair<Chain, Element<C>>> out;
        auto inner = [&](const Chain& x) { return comb(x, U2, b2); };
        if (g >= j) {
            out.emplace_back(Chain{g + 2, h + 2, r}, inner({i, j, p}));
            return out;
        }
        if (h <= j - 2) {
            out.emplace_back(Chain{g + 1, h + 1, r}, inner({i, j - 2, p}));
        } else {
            out.emplace_back(Chain{g + 1, h + 2, r}, inner({i, j - 1, p}));
            out.emplace_back(Chain{g + 1, j, r}, scaled(inner({i, h, p}), d));
            out.emplace_back(Chain{j + 1, h + 2, 0}, scaled(apply(ypow(g + 1, r), inner({i, g, p})), C(-d)));
        }
        const LetterWord pre = ypow(i, p) + x_asc(i, g - 1);
        auto sigma = [&](int t, int rp, const C& coef) {
            Element<C> mid = apply(xinv_desc(j - 2, g), inner({g, h, rp}));
            for (const auto& [w, c] : mid) {
                if (w.f() < 1 || w.left[0].i < g) throw Error(ErrorKind::Mismatch, "unexpected chain in reordering");
                const Chain& a3 = w.left[0];
                Element<C> v = apply(pre + ypow(g + 1, t), assemble({g, g, 0}, w.inner(), w.right[0]));
                out.emplace_back(Chain{a3.i + 2, a3.j + 2, a3.p}, scaled(v, C(coef * c)));
            }
        };
        if (r >= 0) {
            for (int s = 1; s <= r; ++s) {
                out.emplace_back(Chain{g + 1, j, s}, scaled(apply(pre, inner({g, h, r - s})), C(-d)));
                sigma(s, r - s, d);
            }
        } else {
            const int R = -r;
            for (int s = 1; s <= R; ++s) {
                out.emplace_back(Chain{g + 1, j, s - R}, scaled(apply(pre, inner({g, h, -s})), d));
                sigma(s - R, -s, C(-d));
            }
        }
        (void)n;
        return out;
    }

    // -- left multiplication --------------------------------------------------

    const Element<C>& mgl(const Letter& g, const NormalWord& w) {
        auto key = std::make_pair(g, w);
        auto it = mgl_memo_.find(key);
        if (it != mgl_memo_.end()) return it->second;
        check_letter(g, w.n);
        Element<C> r;
        if (g.g == Gen::Xinv) {
            const C d = env_.delta();
            r = mgl({Gen::X, g.i}, w);
            add_term(r, w, C(-d));
            add_scaled(r, mgl({Gen::E, g.i}, w), d);
        } else if (w.f() >= 1) {
            const NormalWord u = w.inner();
            for (auto& t : chain_action(g, w.left[0], w.n)) {
                Element<C> v = apply(t.res, unit(u));
                add_scaled(r, comb(t.ch, v, w.right[0]), t.coef);
            }
        } else {
            r = ak_left(g, w);
        }
        return mgl_memo_.emplace(key, std::move(r)).first->second;
    }

    Element<C> apply_letter(const Letter& g, const Element<C>& x) {
        Element<C> r;
        for (const auto& [w, c] : x) add_scaled(r, mgl(g, w), c);
        return r;
    }

    Element<C> apply(const LetterWord& lw, Element<C> x) {
        for (auto it = lw.rbegin(); it != lw.rend(); ++it) x = apply_letter(*it, x);
        return x;
    }

    static LetterWord ymono_word(const std::vector<int>& c) { return ymono(c, c.size()); }

    /// Adds coef * U (e_m V) for a Y'-monomial U and an AK word V.
    void add_e_term(Element<C>& r, const std::vector<int>& U, int m, const NormalWord& V, const C& coef) {
        add_scaled(r, apply(ymono_word(U), mgl({Gen::E, m}, V)), coef);
    }

    /// Adds coef * Y'^c X_m X_w.
    void add_x_perm(Element<C>& r, const std::vector<int>& c, int m, const std::vector<int>& w, int n, const C& coef) {
        NormalWord x;
        x.n = n;
        x.c = c;
        x.w = perm::left_mul(m, w);
        if (perm::left_ascent(m, w)) {
            add_term(r, x, coef);
            return;
        }
        const C d = env_.delta();
        add_term(r, x, coef);
        NormalWord y = x;
        y.w = w;
        add_term(r, y, C(coef * d));
        NormalWord v = NormalWord::identity(n);
        v.w = x.w;
        add_e_term(r, c, m, v, C(-(coef * d * env_.lambda())));
    }

    Element<C> ak_left(const Letter& g, const NormalWord& w) {
        const int n = w.n;
        const C d = env_.delta();
        Element<C> r;
        switch (g.g) {
            case Gen::Y:
            case Gen::Yinv: {
                auto v = ypr(w.c[0] + (g.g == Gen::Y ? 1 : -1));
                for (int t = 0; t < env_.k(); ++t) {
                    NormalWord x = w;
                    x.c[0] = t;
                    add_term(r, x, v[t]);
                }
                break;
            }
            case Gen::X: {
                const int m = g.i;
                const int a = w.c[m - 1], b = w.c[m];
                auto with = [&](int x, int y) {
                    auto c = w.c;
                    c[m - 1] = x;
                    c[m] = y;
                    return c;
                };
                auto plain = [&](const std::vector<int>& c, const C& coef) {
                    NormalWord x = w;
                    x.c = c;
                    add_term(r, x, coef);
                };
                auto vword = [&](int pos, int e) {
                    NormalWord v = NormalWord::identity(n);
                    v.c[pos] = e;
                    v.w = w.w;
                    return v;
                };
                if (a == b) {
                    add_x_perm(r, w.c, m, w.w, n, one_);
                } else if (a > b) {
                    const int dd = a - b;
                    add_x_perm(r, with(b, a), m, w.w, n, one_);
                    for (int s = 1; s <= dd; ++s) {
                        plain(with(b + dd - s, b + s), C(-d));
                        add_e_term(r, with(b, b + s), m, vword(m - 1, dd - s), d);
                    }
                } else {
                    const int dd = b - a;
                    add_x_perm(r, with(b, a), m, w.w, n, one_);
                    for (int s = 1; s <= dd; ++s) {
                        plain(with(a + dd - s, a + s), d);
                        add_e_term(r, with(a + dd - s, a), m, vword(m, s), C(-d));
                    }
                }
                break;
            }
            case Gen::E: {
                LetterWord lw = word_letters(w);
                std::reverse(lw.begin(), lw.end());
                r = star_elem(apply(lw, unit(e_word(n, g.i))));
                break;
            }
            case Gen::Xinv:
                break;
        }
        return r;
    }

    // -- anti-involution --------------------------------------------------------

    const Element<C>& star_word(const NormalWord& w) {
        auto it = star_memo_.find(w);
        if (it != star_memo_.end()) return it->second;
        Element<C> r;
        if (w.f() >= 1) {
            r = comb(w.right[0], star_word(w.inner()), w.left[0]);
        } else {
            LetterWord lw = word_letters(w);
            std::reverse(lw.begin(), lw.end());
            r = apply(lw, identity(w.n));
        }
        return star_memo_.emplace(w, std::move(r)).first->second;
    }

    Element<C> star_elem(const Element<C>& x) {
        Element<C> r;
        for (const auto& [w, c] : x) add_scaled(r, star_word(w), c);
        return r;
    }

    ParamEnv<C> env_;
    C one_, zero_;
    std::recursive_mutex mu_;
    std::map<int, std::vector<C>> ypow_memo_;
    std::map<std::tuple<int, int, bool>, Poly> fmemo_, gmemo_;
    std::map<std::tuple<Chain, NormalWord, Chain>, Element<C>> asm_memo_;
    std::map<std::pair<Letter, NormalWord>, Element<C>> mgl_memo_;
    std::map<NormalWord, Element<C>> star_memo_;
};

// ---------------------------------------------------------------------------
// Displayed identities.

template <Coefficient C>
FormalIdentity<C> BmwEngine<C>::commutation_formula(Formula f, int i, int p) const {
    if (i < 1) throw Error(ErrorKind::IndexOutOfRange, "i must be positive");
    const C d = env_.delta();
    const C md = C(-d);
    auto Y = [](int j, int a) { return ypow(j, a); };
    const LetterWord X{{Gen::X, i}}, Xi{{Gen::Xinv, i}}, E{{Gen::E, i}};
    FormalIdentity<C> r;
    auto need_p = [&] {
        if (p < 0) throw Error(ErrorKind::IndexOutOfRange, "p must be non-negative");
    };
    auto add = [&](const C& c, LetterWord w) { r.rhs.emplace_back(c, std::move(w)); };
    switch (f) {
        case Formula::Magic:
            need_p();
            r.lhs = X + Y(i, p);
            add(one_, Y(i + 1, p) + X);
            for (int s = 1; s <= p; ++s) add(md, Y(i + 1, s) + Y(i, p - s));
            for (int s = 1; s <= p; ++s) add(d, Y(i + 1, s) + E + Y(i, p - s));
            break;
        case Formula::M2:
            need_p();
            r.lhs = X + Y(i, -p);
            add(one_, Y(i + 1, -p) + X);
            for (int s = 1; s <= p; ++s) add(d, Y(i + 1, s - p) + Y(i, -s));
            for (int s = 1; s <= p; ++s) add(md, Y(i + 1, s - p) + E + Y(i, -s));
            break;
        case Formula::M3:
            need_p();
            r.lhs = Xi + Y(i, p);
            add(one_, Y(i + 1, p) + Xi);
            for (int s = 1; s <= p; ++s) add(md, Y(i + 1, p - s) + Y(i, s));
            for (int s = 1; s <= p; ++s) add(d, Y(i + 1, p - s) + E + Y(i, s));
            break;
        case Formula::M4:
            need_p();
            r.lhs = Xi + Y(i, -p);
            add(one_, Y(i + 1, -p) + Xi);
            for (int s = 1; s <= p; ++s) add(d, Y(i + 1, -s) + Y(i, -(p - s)));
            for (int s = 1; s <= p; ++s) add(md, Y(i + 1, -s) + E + Y(i, -(p - s)));
            break;
        case Formula::M5:
            need_p();
            r.lhs = X + Y(i + 1, p);
            add(one_, Y(i, p) + X);
            for (int s = 1; s <= p; ++s) add(d, Y(i, p - s) + Y(i + 1, s));
            for (int s = 1; s <= p; ++s) add(md, Y(i, p - s) + E + Y(i + 1, s));
            break;
        case Formula::M6:
            need_p();
            r.lhs = X + Y(i + 1, -p);
            add(one_, Y(i, -p) + X);
            for (int s = 1; s <= p; ++s) add(md, Y(i, -s) + Y(i + 1, s - p));
            for (int s = 1; s <= p; ++s) add(d, Y(i, -s) + E + Y(i + 1, s - p));
            break;
        case Formula::M7:
            need_p();
            r.lhs = Xi + Y(i + 1, p);
            add(one_, Y(i, p) + Xi);
            for (int s = 1; s <= p; ++s) add(d, Y(i, s) + Y(i + 1, p - s));
            for (int s = 1; s <= p; ++s) add(md, Y(i, s) + E + Y(i + 1, p - s));
            break;
        case Formula::M8:
            need_p();
            r.lhs = Xi + Y(i + 1, -p);
            add(one_, Y(i, -p) + Xi);
            for (int s = 1; s <= p; ++s) add(md, Y(i, -(p - s)) + Y(i + 1, -s));
            for (int s = 1; s <= p; ++s) add(d, Y(i, -(p - s)) + E + Y(i + 1, -s));
            break;
        case Formula::M9:
            r.lhs = E + Y(i + 1, p);
            add(one_, E + Y(i, -p));
            break;
        case Formula::M10:
            if (p < 1) throw Error(ErrorKind::IndexOutOfRange, "p must be positive");
            r.lhs = X + Y(i, p) + X;
            add(one_, Y(i + 1, p));
            for (int s = 1; s <= p - 1; ++s) add(md, Y(i + 1, s) + Y(i, p - s) + X);
            for (int s = 1; s <= p - 1; ++s) add(d, Y(i + 1, s) + E + Y(i, p - s) + X);
            break;
        case Formula::M11:
            if (p < 1) throw Error(ErrorKind::IndexOutOfRange, "p must be positive");
            r.lhs = X + Y(i, p) + X;
            add(one_, Y(i + 1, p));
            for (int s = 1; s <= p - 1; ++s) add(md, X + Y(i, s) + Y(i + 1, p - s));
            for (int s = 1; s <= p - 1; ++s) add(d, X + Y(i, s) + E + Y(i + 1, p - s));
            break;
        case Formula::M12:
            need_p();
            r.lhs = X + Y(i, -p) + X;
            add(one_, Y(i + 1, -p));
            for (int s = 0; s <= p; ++s) add(d, Y(i + 1, s - p) + Y(i, -s) + X);
            for (int s = 0; s <= p; ++s) add(md, Y(i + 1, s - p) + E + Y(i, -s) + X);
            break;
        case Formula::M13:
            need_p();
            r.lhs = X + Y(i, -p) + X;
            add(one_, Y(i + 1, -p));
            for (int s = 0; s <= p; ++s) add(d, X + Y(i, -s) + Y(i + 1, s - p));
            for (int s = 0; s <= p; ++s) add(md, X + Y(i, -s) + E + Y(i + 1, s - p));
            break;
        case Formula::Xi2:
            r.lhs = X + X;
            add(one_, {});
            add(d, X);
            add(C(-(d * env_.lambda())), E);
            break;
        case Formula::Exe:
            r.lhs = E + LetterWord{{Gen::X, i + 1}} + E;
            add(env_.lambda_inv(), E);
            break;
        case Formula::Prop1b:
            // p is the index j of Y_j'.
            if (p == i || p == i + 1 || p < 1) throw Error(ErrorKind::IndexOutOfRange, "need j != i, i+1");
            r.lhs = X + Y(p, 1);
            add(one_, Y(p, 1) + X);
            break;
        case Formula::Prop1c:
            if (p < 1) throw Error(ErrorKind::IndexOutOfRange, "j must be positive");
            r.lhs = Y(i, 1) + Y(p, 1);
            add(one_, Y(p, 1) + Y(i, 1));
            break;
        case Formula::Prop1d:
            r.lhs = Y(i, 1) + X + Y(i, 1) + E;
            add(env_.lambda_inv(), E);
            break;
        case Formula::Ep2: {
            // p selects gamma: 0 for X, 1 for e, 2 for Y'.
            const LetterWord eee{{Gen::E, i}, {Gen::E, i + 1}, {Gen::E, i + 2}};
            LetterWord g0, g2;
            if (p == 0) g0 = X, g2 = {{Gen::X, i + 2}};
            else if (p == 1) g0 = E, g2 = {{Gen::E, i + 2}};
            else if (p == 2) g0 = Y(i, 1), g2 = Y(i + 2, 1);
            else throw Error(ErrorKind::IndexOutOfRange, "gamma selector");
            r.lhs = eee + g0;
            add(one_, g2 + eee);
            break;
        }
        case Formula::XXp1: {
            // p selects gamma: 0 for X, 1 for e.
            const LetterWord xx{{Gen::X, i}, {Gen::X, i + 1}};
            LetterWord g0, g1;
            if (p == 0) g0 = X, g1 = {{Gen::X, i + 1}};
            else if (p == 1) g0 = E, g1 = {{Gen::E, i + 1}};
            else throw Error(ErrorKind::IndexOutOfRange, "gamma selector");
            r.lhs = xx + g0;
            add(one_, g1 + xx);
            break;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Relations, the map to diagrams and the trace.

struct RelationFailure {
    std::string relation;
    std::string word;
};

/// Defining relations of B_n^k as lists of (coefficient, letters) summing to zero.
template <Coefficient C>
std::vector<std::pair<std::string, std::vector<std::pair<C, LetterWord>>>> defining_relations(const ParamEnv<C>& env,
                                                                                                int n) {
    using Terms = std::vector<std::pair<C, LetterWord>>;
    std::vector<std::pair<std::string, Terms>> rel;
    const C one = env.one(), mone = C(-one), d = env.delta(), lam = env.lambda(), li = env.lambda_inv();
    auto X = [](int i) { return Letter{Gen::X, i}; };
    auto Xi = [](int i) { return Letter{Gen::Xinv, i}; };
    auto E = [](int i) { return Letter{Gen::E, i}; };
    const Letter Y{Gen::Y, 0}, Yi{Gen::Yinv, 0};
    auto nm = [](const char* s, int i, int j = 0) {
        return std::string(s) + "[" + std::to_string(i) + (j ? "," + std::to_string(j) : "") + "]";
    };
    for (int i = 1; i < n; ++i) {
        rel.push_back({nm("X-Xinv=delta(1-e)", i), {{one, {X(i)}}, {mone, {Xi(i)}}, {C(-d), {}}, {d, {E(i)}}}});
        rel.push_back({nm("X Xinv=1", i), {{one, {X(i), Xi(i)}}, {mone, {}}}});
        rel.push_back({nm("Xinv X=1", i), {{one, {Xi(i), X(i)}}, {mone, {}}}});
        rel.push_back({nm("Xe=lambda e", i), {{one, {X(i), E(i)}}, {C(-lam), {E(i)}}}});
        rel.push_back({nm("eX=lambda e", i), {{one, {E(i), X(i)}}, {C(-lam), {E(i)}}}});
        rel.push_back({nm("ee=A0 e", i), {{one, {E(i), E(i)}}, {C(-env.A(0)), {E(i)}}}});
        if (i > 1) {
            rel.push_back({nm("YX=XY", i), {{one, {Y, X(i)}}, {mone, {X(i), Y}}}});
            rel.push_back({nm("Ye=eY", i), {{one, {Y, E(i)}}, {mone, {E(i), Y}}}});
        }
        for (int j = 1; j < n; ++j) {
            if (std::abs(i - j) >= 2) {
                rel.push_back({nm("XX far", i, j), {{one, {X(i), X(j)}}, {mone, {X(j), X(i)}}}});
                rel.push_back({nm("Xe far", i, j), {{one, {X(i), E(j)}}, {mone, {E(j), X(i)}}}});
                rel.push_back({nm("ee far", i, j), {{one, {E(i), E(j)}}, {mone, {E(j), E(i)}}}});
            }
            if (std::abs(i - j) == 1) {
                rel.push_back({nm("braid", i, j), {{one, {X(i), X(j), X(i)}}, {mone, {X(j), X(i), X(j)}}}});
                rel.push_back({nm("XXe=ee", i, j), {{one, {X(i), X(j), E(i)}}, {mone, {E(j), E(i)}}}});
                rel.push_back({nm("eXX=ee", i, j), {{one, {E(j), X(i), X(j)}}, {mone, {E(j), E(i)}}}});
                rel.push_back({nm("eee=e", i, j), {{one, {E(i), E(j), E(i)}}, {mone, {E(i)}}}});
            }
        }
    }
    if (n >= 1) {
        const int k = env.k();
        Terms ypoly;
        for (int l = 0; l <= k; ++l) ypoly.push_back({env.qi(l), LetterWord(l, Y)});
        rel.push_back({"sum q_l Y^l=0", ypoly});
        rel.push_back({"Y Yinv=1", {{one, {Y, Yi}}, {mone, {}}}});
        rel.push_back({"Yinv Y=1", {{one, {Yi, Y}}, {mone, {}}}});
        Terms yinv{{one, {Yi}}};
        for (int l = 0; l < k; ++l) yinv.push_back({C(env.q0_inv() * env.qi(l + 1)), LetterWord(l, Y)});
        rel.push_back({"Yinv expansion", yinv});
    }
    if (n >= 2) {
        rel.push_back({"X1YX1Y=YX1YX1", {{one, {X(1), Y, X(1), Y}}, {mone, {Y, X(1), Y, X(1)}}}});
        rel.push_back({"YX1Ye1=lambda^-1 e1", {{one, {Y, X(1), Y, E(1)}}, {C(-li), {E(1)}}}});
        rel.push_back({"e1YX1Y=lambda^-1 e1", {{one, {E(1), Y, X(1), Y}}, {C(-li), {E(1)}}}});
        for (int m = 0; m < env.k(); ++m) {
            LetterWord w{E(1)};
            for (int t = 0; t < m; ++t) w.push_back(Y);
            w.push_back(E(1));
            rel.push_back({nm("e1Y^me1=A_m e1", m), {{one, w}, {C(-env.A(m)), {E(1)}}}});
        }
    }
    return rel;
}

/// Applies every defining relation on the left of every basis word.
template <Coefficient C>
std::vector<RelationFailure> verify_relations(BmwEngine<C>& eng, int n, long long max_basis = 10000) {
    std::vector<RelationFailure> fail;
    auto basis = enumerate_basis(n, eng.k(), max_basis);
    auto rels = defining_relations(eng.env(), n);
    for (const auto& [name, terms] : rels) {
        for (const auto& b : basis) {
            Element<C> acc;
            Element<C> x = eng.unit(b);
            for (const auto& [c, lw] : terms) add_scaled(acc, eng.apply_word(lw, x), c);
            if (!acc.empty()) {
                fail.push_back({name, b.str()});
                break;
            }
        }
    }
    return fail;
}

/// Both sides of a displayed identity agree on n strands.
template <Coefficient C>
bool check_identity(BmwEngine<C>& eng, const FormalIdentity<C>& id, int n) {
    Element<C> acc = eng.evaluate(id.lhs, n);
    for (const auto& [c, lw] : id.rhs) add_scaled(acc, eng.evaluate(lw, n), C(-c));
    return acc.empty();
}

inline void require_rc(RingTag t) {
    if (t != RingTag::Rc) throw Error(ErrorKind::WrongEnv, "needs an R_c environment");
}

/// Image of a letter word under xi, scaled by A_0^{-f}.
inline WeightedDiagram xi_letters(const RcEnv& env, const LetterWord& lw, int n, int f) {
    require_rc(env.tag());
    const auto& sp = env.space();
    const int k = env.k();
    WeightedDiagram acc{LaurentPoly(1).in_space(sp), CycloDiagram::identity(n, k)};
    for (int t = 0; t < f; ++t) acc.coeff *= env.A0_inv();
    const int sign = env.sign();
    for (const auto& l : lw) {
        CycloDiagram g;
        LaurentPoly c = LaurentPoly(1).in_space(sp);
        switch (l.g) {
            case Gen::Y: g = CycloDiagram::y_diagram(n, k, 1); break;
            case Gen::Yinv: g = CycloDiagram::y_diagram(n, k, -1); break;
            case Gen::X:
            case Gen::Xinv:
                g = CycloDiagram::transposition(n, k, l.i);
                c = LaurentPoly(sign).in_space(sp);
                break;
            case Gen::E: g = CycloDiagram::e_diagram(n, k, l.i); break;
        }
        auto w = multiply(acc.diagram, g, sp);
        acc = {acc.coeff * c * w.coeff, w.diagram};
    }
    return acc;
}

inline WeightedDiagram xi_to_brauer(const RcEnv& env, const NormalWord& w) {
    return xi_letters(env, word_letters(w), w.n, w.f());
}

inline DiagramElement xi_to_brauer(const RcEnv& env, const Element<LaurentPoly>& x) {
    DiagramElement r;
    for (const auto& [w, c] : x) {
        auto d = xi_to_brauer(env, w);
        add_to(r, d.diagram, c * d.coeff);
    }
    return r;
}

inline LaurentPoly trace_Rc(const RcEnv& env, const Element<LaurentPoly>& x) {
    require_rc(env.tag());
    return trace_eps_c(xi_to_brauer(env, x), env.space());
}

}  // namespace cyclobmw
