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
 * @file brauer.hpp
 * @brief Z_k-labelled Brauer diagrams, their product, closure and trace.
 *
 * Vertices are numbered by position in the order 1 < ... < n < n' < ... < 1',
 * so top vertex i sits at i-1 and bottom vertex i' at 2n-i. Each vertex
 * stores its partner and the label of the strand read away from it.
 */

#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "env.hpp"
#include "matrix.hpp"

namespace cyclobmw {

class CycloDiagram {
public:
    CycloDiagram() = default;

    /// Strand given by endpoint positions and the label read from `a` to `b`.
    struct RawStrand {
        int a, b, label;
    };

    static CycloDiagram from_strands(int n, int k, const std::vector<RawStrand>& strands) {
        if (n < 0 || k < 1) throw Error(ErrorKind::Mismatch, "bad diagram shape");
        CycloDiagram d;
        d.n_ = n;
        d.k_ = k;
        d.mate_.assign(2 * n, -1);
        d.lab_.assign(2 * n, 0);
        if (static_cast<int>(strands.size()) != n) throw Error(ErrorKind::NotAMatching, "need n strands");
        for (const auto& s : strands) {
            if (s.a < 0 || s.b < 0 || s.a >= 2 * n || s.b >= 2 * n || s.a == s.b || d.mate_[s.a] >= 0 ||
                d.mate_[s.b] >= 0)
                throw Error(ErrorKind::NotAMatching, "vertices do not form a perfect matching");
            d.link(s.a, s.b, s.label);
        }
        return d;
    }

    static CycloDiagram identity(int n, int k) {
        std::vector<RawStrand> s;
        for (int i = 1; i <= n; ++i) s.push_back({top(i), bottom(n, i), 0});
        return from_strands(n, k, s);
    }
    /// Strand 1 carries `label`, read from top to bottom.
    static CycloDiagram y_diagram(int n, int k, int label = 1) {
        auto d = identity(n, k);
        d.link(top(1), bottom(n, 1), label);
        return d;
    }
    static CycloDiagram transposition(int n, int k, int i) {
        auto d = identity(n, k);
        d.link(top(i), bottom(n, i + 1), 0);
        d.link(top(i + 1), bottom(n, i), 0);
        return d;
    }
    static CycloDiagram e_diagram(int n, int k, int i) {
        auto d = identity(n, k);
        d.link(top(i), top(i + 1), 0);
        d.link(bottom(n, i), bottom(n, i + 1), 0);
        return d;
    }

    static int top(int i) { return i - 1; }
    static int bottom(int n, int i) { return 2 * n - i; }

    int n() const { return n_; }
    int k() const { return k_; }
    int mate(int v) const { return mate_.at(v); }
    /// Label of the strand at `v`, read away from `v`.
    int label(int v) const { return lab_.at(v); }

    bool is_top(int v) const { return v < n_; }
    /// 1-based strand index of a position.
    int index(int v) const { return v < n_ ? v + 1 : 2 * n_ - v; }
    std::string vertex_name(int v) const { return std::to_string(index(v)) + (v < n_ ? "" : "'"); }

    /// Strands oriented from their smaller endpoint.
    std::vector<RawStrand> strands() const {
        std::vector<RawStrand> s;
        for (int v = 0; v < 2 * n_; ++v)
            if (v < mate_[v]) s.push_back({v, mate_[v], lab_[v]});
        return s;
    }

    friend bool operator==(const CycloDiagram& a, const CycloDiagram& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.mate_ == b.mate_ && a.lab_ == b.lab_;
    }
    friend bool operator<(const CycloDiagram& a, const CycloDiagram& b) {
        return std::tie(a.n_, a.k_, a.mate_, a.lab_) < std::tie(b.n_, b.k_, b.mate_, b.lab_);
    }

    std::string str() const {
        std::string s;
        for (const auto& st : strands()) {
            if (!s.empty()) s += " ";
            s += vertex_name(st.a) + "-" + vertex_name(st.b) + ":" + std::to_string(st.label);
        }
        return s.empty() ? "()" : s;
    }

private:
    int mod(int x) const { return ((x % k_) + k_) % k_; }
    void link(int a, int b, int label) {
        mate_[a] = b;
        mate_[b] = a;
        lab_[a] = mod(label);
        lab_[b] = mod(-label);
    }

    int n_ = 0, k_ = 1;
    std::vector<int> mate_;
    std::vector<int> lab_;
};

/// Canonical diagram from a raw pairing; orientation and labels are normalized.
inline CycloDiagram canonicalize(int n, int k, const std::vector<CycloDiagram::RawStrand>& raw) {
    return CycloDiagram::from_strands(n, k, raw);
}

/// Reduce a loop label to the representative in 0..floor(k/2).
inline int loop_rep(int c, int k) {
    int a = ((c % k) + k) % k, b = ((-c % k) + k) % k;
    return std::min(a, b);
}

struct WeightedDiagram {
    LaurentPoly coeff;
    CycloDiagram diagram;
};

/// A_d as an element of R_c for a loop label d in 0..floor(k/2).
inline LaurentPoly loop_value(const GenSpacePtr& sp, int d) { return LaurentPoly::gen(sp, "A_" + std::to_string(d)); }

inline WeightedDiagram multiply(const CycloDiagram& d1, const CycloDiagram& d2, const GenSpacePtr& sp) {
    if (d1.n() != d2.n() || d1.k() != d2.k()) throw Error(ErrorKind::Mismatch, "diagram shapes differ");
    const int n = d1.n(), k = d1.k();
    const CycloDiagram* D[2] = {&d1, &d2};
    // Middle vertex i lives at bottom(i) of d1 and top(i) of d2.
    std::vector<char> seen_mid(n + 1, 0);
    std::vector<CycloDiagram::RawStrand> out;
    LaurentPoly coeff = LaurentPoly(1).in_space(sp);

    auto walk = [&](int d, int v, int& acc, int& end_d, int& end_v) {
        for (;;) {
            const CycloDiagram& g = *D[d];
            int u = g.mate(v);
            acc += g.label(v);
            if (d == 0 && !g.is_top(u)) {
                int i = g.index(u);
                seen_mid[i] = 1;
                d = 1;
                v = CycloDiagram::top(i);
            } else if (d == 1 && g.is_top(u)) {
                int i = g.index(u);
                seen_mid[i] = 1;
                d = 0;
                v = CycloDiagram::bottom(n, i);
            } else {
                end_d = d;
                end_v = u;
                return;
            }
        }
    };
    std::vector<char> done(2 * n, 0);
    for (int start = 0; start < 2 * n; ++start) {
        int d = start < n ? 0 : 1;
        int v = start;
        if (done[start]) continue;
        int acc = 0, ed = 0, ev = 0;
        walk(d, v, acc, ed, ev);
        // Free vertices keep their positions: tops from d1, bottoms from d2.
        (void)ed;
        done[start] = done[ev] = 1;
        out.push_back({start, ev, acc});
    }
    for (int i = 1; i <= n; ++i) {
        if (seen_mid[i]) continue;
        int acc = 0, d = 0, v = CycloDiagram::bottom(n, i);
        seen_mid[i] = 1;
        for (;;) {
            const CycloDiagram& g = *D[d];
            int u = g.mate(v);
            acc += g.label(v);
            int j = g.index(u);
            seen_mid[j] = 1;
            if (d == 0) {
                d = 1;
                v = CycloDiagram::top(j);
            } else {
                d = 0;
                v = CycloDiagram::bottom(n, j);
            }
            if (d == 0 && j == i) break;
        }
        coeff *= loop_value(sp, loop_rep(acc, k));
    }
    return {coeff, CycloDiagram::from_strands(n, k, out)};
}

/// Join n to n', drop to n-1 strands, scale by A_0^{-1}.
inline WeightedDiagram closure(const CycloDiagram& d, const GenSpacePtr& sp) {
    const int n = d.n(), k = d.k();
    if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "closure of empty diagram");
    const int tn = CycloDiagram::top(n), bn = CycloDiagram::bottom(n, n);
    LaurentPoly coeff = LaurentPoly::gen(sp, "A_0", -1);
    auto newpos = [&](int v) {
        int i = d.index(v);
        return d.is_top(v) ? CycloDiagram::top(i) : CycloDiagram::bottom(n - 1, i);
    };
    std::vector<char> done(2 * n, 0);
    std::vector<CycloDiagram::RawStrand> out;
    for (int s = 0; s < 2 * n; ++s) {
        if (s == tn || s == bn || done[s]) continue;
        int v = s, acc = 0;
        for (;;) {
            int u = d.mate(v);
            acc += d.label(v);
            if (u == tn) v = bn;
            else if (u == bn) v = tn;
            else {
                done[s] = done[u] = 1;
                out.push_back({newpos(s), newpos(u), acc});
                break;
            }
        }
    }
    // Otherwise the glued pair lay on an open strand above.
    if (d.mate(tn) == bn) coeff *= loop_value(sp, loop_rep(d.label(tn), k));
    return {coeff, CycloDiagram::from_strands(n - 1, k, out)};
}

using DiagramElement = std::map<CycloDiagram, LaurentPoly>;

inline void add_to(DiagramElement& x, const CycloDiagram& d, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = x.try_emplace(d, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) x.erase(it);
    }
}

inline DiagramElement multiply(const DiagramElement& x, const DiagramElement& y, const GenSpacePtr& sp) {
    DiagramElement r;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            auto w = multiply(a, b, sp);
            add_to(r, w.diagram, ca * cb * w.coeff);
        }
    return r;
}

/// Iterated closure down to zero strands.
inline LaurentPoly trace_eps_c(const CycloDiagram& d, const GenSpacePtr& sp) {
    LaurentPoly c = LaurentPoly(1).in_space(sp);
    CycloDiagram cur = d;
    while (cur.n() > 0) {
        auto w = closure(cur, sp);
        c *= w.coeff;
        cur = w.diagram;
    }
    return c;
}

inline LaurentPoly trace_eps_c(const DiagramElement& x, const GenSpacePtr& sp) {
    LaurentPoly r = LaurentPoly(0).in_space(sp);
    for (const auto& [d, c] : x) r += c * trace_eps_c(d, sp);
    return r;
}

inline long long brauer_rank(int n, int k) {
    long long r = 1;
    for (int i = 0; i < n; ++i) r *= k;
    for (int i = 2 * n - 1; i > 1; i -= 2) r *= i;
    return r;
}

inline constexpr long long kDefaultMaxBasis = 10000;

inline std::vector<CycloDiagram> enumerate_diagrams(int n, int k, long long max_basis = kDefaultMaxBasis) {
    if (n < 0 || k < 1) throw Error(ErrorKind::IndexOutOfRange, "bad (n,k)");
    if (brauer_rank(n, k) > max_basis) throw Error(ErrorKind::TooLarge, "diagram basis exceeds bound");
    std::vector<std::vector<std::pair<int, int>>> matchings;
    std::vector<std::pair<int, int>> cur;
    std::vector<char> used(2 * n, 0);
    auto rec = [&](auto&& self) -> void {
        int first = 0;
        while (first < 2 * n && used[first]) ++first;
        if (first == 2 * n) {
            matchings.push_back(cur);
            return;
        }
        used[first] = 1;
        for (int o = first + 1; o < 2 * n; ++o) {
            if (used[o]) continue;
            used[o] = 1;
            cur.emplace_back(first, o);
            self(self);
            cur.pop_back();
            used[o] = 0;
        }
        used[first] = 0;
    };
    rec(rec);
    std::vector<CycloDiagram> out;
    for (const auto& m : matchings) {
        std::vector<int> labels(n, 0);
        for (;;) {
            std::vector<CycloDiagram::RawStrand> s;
            for (int i = 0; i < n; ++i) s.push_back({m[i].first, m[i].second, labels[i]});
            out.push_back(CycloDiagram::from_strands(n, k, s));
            int pos = 0;
            while (pos < n && ++labels[pos] == k) labels[pos++] = 0;
            if (pos == n) break;
        }
    }
    return out;
}

inline Matrix<LaurentPoly> gram_matrix(const std::vector<CycloDiagram>& basis, const GenSpacePtr& sp) {
    const std::size_t m = basis.size();
    Matrix<LaurentPoly> g(m, m, LaurentPoly(0).in_space(sp));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            auto w = multiply(basis[i], basis[j], sp);
            g(i, j) = w.coeff * trace_eps_c(w.diagram, sp);
        }
    return g;
}

}  // namespace cyclobmw
