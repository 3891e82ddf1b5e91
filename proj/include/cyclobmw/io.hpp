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
 * @file io.hpp
 * @brief JSON forms of polynomials, environments, diagrams and algebra elements.
 *
 * Objects serialize with sorted keys, so equal values give identical bytes.
 * Rationals are strings "p/q".
 */

#pragma once

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "admissibility.hpp"
#include "bmw_core.hpp"
#include "brauer.hpp"
#include "env.hpp"

namespace cyclobmw {

using Json = nlohmann::json;

// -- polynomials and coefficients ----------------------------------------------

inline Json poly_to_json(const LaurentPoly& a) {
    Json terms = Json::array();
    for (const auto& [e, c] : a.terms()) {
        Json ex = Json::object();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) ex[a.space()->name(i)] = e[i];
        terms.push_back({{"coef", c.get_str()}, {"exps", ex}});
    }
    return {{"terms", terms}};
}

inline mpz_class parse_integer(const Json& j) {
    mpz_class z;
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (!j.is_string() || z.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::Parse, "bad integer");
    return z;
}

inline LaurentPoly poly_from_json(const Json& j, const GenSpacePtr& sp) {
    if (j.is_number_integer() || j.is_string()) return LaurentPoly(parse_integer(j)).in_space(sp);
    if (!j.is_object() || !j.contains("terms")) throw Error(ErrorKind::Parse, "polynomial needs \"terms\"");
    LaurentPoly r = LaurentPoly(0).in_space(sp);
    for (const auto& t : j.at("terms")) {
        std::vector<int> e(sp ? sp->size() : 0, 0);
        if (t.contains("exps")) {
            for (const auto& [name, v] : t.at("exps").items()) {
                const int idx = sp ? sp->index(name) : -1;
                if (idx < 0) throw Error(ErrorKind::Parse, "unknown generator " + name);
                e[idx] += v.get<int>();
            }
        }
        if (sp) r += LaurentPoly::monomial(sp, e, parse_integer(t.at("coef")));
        else r += LaurentPoly(parse_integer(t.at("coef")));
    }
    return r;
}

inline Json coef_to_json(const LaurentPoly& a) { return poly_to_json(a); }
inline Json coef_to_json(const mpq_class& a) { return a.get_str(); }

inline Json rational_json(const mpq_class& a) { return a.get_str(); }

inline mpq_class rational_from_json(const Json& j) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) throw Error(ErrorKind::Parse, "rational must be a \"p/q\" string");
    return parse_rational(j.get<std::string>());
}

inline LaurentPoly coef_from_json(const Json& j, const ParamEnv<LaurentPoly>& env) {
    return poly_from_json(j, env.space());
}
inline mpq_class coef_from_json(const Json& j, const ParamEnv<mpq_class>&) { return rational_from_json(j); }

// -- environments ---------------------------------------------------------------

using AnyEnv = std::variant<OmegaEnv, RationalEnv>;

inline std::string sign_name(int s) { return s > 0 ? "plus" : "minus"; }

inline int parse_sign(const std::string& s) {
    if (s == "plus" || s == "+" || s == "+1" || s == "1") return 1;
    if (s == "minus" || s == "-" || s == "-1") return -1;
    throw Error(ErrorKind::Parse, "sign must be plus or minus");
}

/// Environment file: {"k","ring","q","lambda","q_i","A_i","sign"}.
inline AnyEnv env_from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "environment must be an object");
    const int k = j.at("k").get<int>();
    const std::string ring = j.value("ring", std::string("rational"));
    if (ring == "rc") return make_Rc_env(k, parse_sign(j.value("sign", std::string("plus"))));
    if (ring == "omega") return make_omega_env(k);
    if (ring != "rational") throw Error(ErrorKind::Parse, "unknown ring " + ring);
    for (const char* key : {"q", "lambda", "q_i", "A_i"})
        if (!j.contains(key)) throw Error(ErrorKind::MissingValue, std::string("environment lacks ") + key);
    std::vector<mpq_class> qs, as;
    for (const auto& x : j.at("q_i")) qs.push_back(rational_from_json(x));
    for (const auto& x : j.at("A_i")) as.push_back(rational_from_json(x));
    int sign = j.contains("sign") ? parse_sign(j.at("sign").get<std::string>()) : 0;
    return make_rational_env(k, rational_from_json(j.at("q")), rational_from_json(j.at("lambda")), qs, as, sign);
}

inline Json env_to_json(const RationalEnv& env) {
    Json j{{"k", env.k()}, {"ring", "rational"}, {"q", rational_json(env.q())}, {"lambda", rational_json(env.lambda())}};
    Json qs = Json::array(), as = Json::array();
    for (int i = 0; i < env.k(); ++i) qs.push_back(rational_json(env.qi(i)));
    for (int i = 0; i < env.k(); ++i) as.push_back(rational_json(env.A(i)));
    j["q_i"] = qs;
    j["A_i"] = as;
    if (env.sign() != 0) j["sign"] = sign_name(env.sign());
    return j;
}

inline Json env_to_json(const OmegaEnv& env) {
    Json j{{"k", env.k()}, {"ring", env.tag() == RingTag::Rc ? "rc" : "omega"}};
    if (env.tag() == RingTag::Rc) j["sign"] = sign_name(env.sign());
    return j;
}

// -- diagrams -------------------------------------------------------------------

inline std::string vertex_json(const CycloDiagram& d, int v) { return d.vertex_name(v); }

inline int vertex_from_json(const std::string& s, int n) {
    const bool bottom = !s.empty() && s.back() == '\'';
    int i = 0;
    try {
        i = std::stoi(bottom ? s.substr(0, s.size() - 1) : s);
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad vertex '" + s + "'");
    }
    if (i < 1 || i > n) throw Error(ErrorKind::NotAMatching, "vertex out of range '" + s + "'");
    return bottom ? CycloDiagram::bottom(n, i) : CycloDiagram::top(i);
}

inline Json diagram_to_json(const CycloDiagram& d) {
    Json strands = Json::array();
    for (const auto& s : d.strands())
        strands.push_back({{"from", vertex_json(d, s.a)}, {"to", vertex_json(d, s.b)}, {"label", s.label}});
    return {{"n", d.n()}, {"k", d.k()}, {"strands", strands}};
}

/// Parses and canonicalizes a diagram.
inline CycloDiagram diagram_from_json(const Json& j) {
    const int n = j.at("n").get<int>(), k = j.at("k").get<int>();
    std::vector<CycloDiagram::RawStrand> raw;
    for (const auto& s : j.at("strands"))
        raw.push_back({vertex_from_json(s.at("from").get<std::string>(), n),
                       vertex_from_json(s.at("to").get<std::string>(), n), s.value("label", 0)});
    return CycloDiagram::from_strands(n, k, raw);
}

inline Json diagram_element_to_json(const DiagramElement& x, int n, int k) {
    Json terms = Json::array();
    for (const auto& [d, c] : x) terms.push_back({{"coef", poly_to_json(c)}, {"diagram", diagram_to_json(d)}});
    return {{"n", n}, {"k", k}, {"terms", terms}};
}

// -- normal words and elements --------------------------------------------------------

inline Json chain_json(const Chain& a) { return Json::array({a.i, a.j, a.p}); }

inline Json word_to_json(const NormalWord& w) {
    Json l = Json::array(), r = Json::array();
    for (const auto& a : w.left) l.push_back(chain_json(a));
    for (const auto& a : w.right) r.push_back(chain_json(a));
    return {{"f", w.f()}, {"left", l}, {"c", w.c}, {"w", w.w}, {"right", r}};
}

inline NormalWord word_from_json(const Json& j, int n) {
    NormalWord w;
    w.n = n;
    auto chains = [](const Json& arr) {
        std::vector<Chain> out;
        for (const auto& c : arr) {
            if (!c.is_array() || c.size() != 3) throw Error(ErrorKind::Parse, "chain must be [i,j,p]");
            out.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>()});
        }
        return out;
    };
    w.left = chains(j.value("left", Json::array()));
    w.right = chains(j.value("right", Json::array()));
    if (j.contains("f") && j.at("f").get<int>() != w.f()) throw Error(ErrorKind::Parse, "f disagrees with chains");
    const int r = n - 2 * w.f();
    if (r < 0) throw Error(ErrorKind::Parse, "too many chains");
    w.c = j.value("c", std::vector<int>(r, 0));
    if (j.contains("w")) {
        w.w = j.at("w").get<std::vector<int>>();
    } else {
        w.w.resize(r);
        for (int t = 0; t < r; ++t) w.w[t] = t + 1;
    }
    return w;
}

template <Coefficient C>
Json element_to_json(const Element<C>& x, int n, int k) {
    Json terms = Json::array();
    for (const auto& [w, c] : x) terms.push_back({{"coef", coef_to_json(c)}, {"word", word_to_json(w)}});
    return {{"n", n}, {"k", k}, {"terms", terms}};
}

/// Parses an element without reducing it; words may lie outside the normal form.
template <Coefficient C>
Element<C> element_from_json(const Json& j, const ParamEnv<C>& env, int& n) {
    n = j.at("n").get<int>();
    if (j.contains("k") && j.at("k").get<int>() != env.k()) throw Error(ErrorKind::Mismatch, "k differs from env");
    Element<C> x;
    for (const auto& t : j.at("terms")) {
        C c = t.contains("coef") ? coef_from_json(t.at("coef"), env) : env.one();
        add_term(x, word_from_json(t.at("word"), n), c);
    }
    return x;
}

// -- reports --------------------------------------------------------------------

template <Coefficient C>
Json report_to_json(const AdmissibilityReport<C>& r) {
    auto texts = [](const std::vector<C>& v) {
        Json a = Json::array();
        for (const auto& x : v) a.push_back(to_text(x));
        return a;
    };
    return {{"k", r.k},
            {"z", r.z},
            {"eps", r.eps},
            {"beta", to_text(r.beta)},
            {"beta_plus", to_text(r.beta_plus)},
            {"beta_minus", to_text(r.beta_minus)},
            {"h", texts(r.h)},
            {"h_prime", texts(r.h_prime)},
            {"h_all", texts(r.h_all)},
            {"verdict", r.verdict},
            {"all_h_zero", r.all_h_zero},
            {"range_discrepancy", r.range_discrepancy}};
}

}  // namespace cyclobmw
