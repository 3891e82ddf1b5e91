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
 * @file cli.hpp
 * @brief The `cyclobmw` command line: argument parsing and dispatch.
 *
 * Exit codes: 0 success, 1 computation error or failed check, 2 usage or input error.
 */

#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "acceptance.hpp"
#include "io.hpp"

namespace cyclobmw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Thrown for malformed arguments or input documents.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = -1, k = -1;
    std::string env_file, rc_sign;
    long long max_basis = kDefaultMaxBasis;
    bool det = false;
};

inline Json read_json(std::istream& in) {
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError(std::string("invalid JSON on stdin: ") + e.what());
    }
}

inline AnyEnv load_env(const Options& o, bool omega_default) {
    if (!o.env_file.empty() && !o.rc_sign.empty()) throw UsageError("--env and --rc are exclusive");
    std::optional<AnyEnv> env;
    if (!o.env_file.empty()) {
        std::ifstream f(o.env_file);
        if (!f) throw UsageError("cannot open " + o.env_file);
        Json j;
        try {
            j = Json::parse(f);
        } catch (const Json::exception& e) {
            throw UsageError(std::string("invalid environment file: ") + e.what());
        }
        env = env_from_json(j);
    } else {
        if (o.k < 1) throw UsageError("--k is required");
        if (!o.rc_sign.empty()) env = make_Rc_env(o.k, parse_sign(o.rc_sign));
        else if (omega_default) env = make_omega_env(o.k);
        else env = make_Rc_env(o.k, 1);
    }
    const int ek = std::visit([](const auto& e) { return e.k(); }, *env);
    if (o.k >= 1 && o.k != ek) throw UsageError("--k disagrees with the environment");
    return *env;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

inline int need_n(const Options& o) {
    if (o.n < 0) throw UsageError("--n is required");
    return o.n;
}

inline int need_k(const Options& o) {
    if (o.k < 1) throw UsageError("--k is required");
    return o.k;
}

// -- adm ------------------------------------------------------------------------

inline int adm_report(const Options& o, std::ostream& out) {
    auto env = load_env(o, true);
    std::visit([&](const auto& e) { emit(out, report_to_json(is_admissible(e))); }, env);
    return kExitOk;
}

inline int adm_identity(const Options& o, std::ostream& out) {
    auto env = make_omega_env(need_k(o));
    const int k = env.k();
    const auto beta = compute_beta(env, BetaVariant::Full);
    const LaurentPoly h0 = compute_h(env, 0);
    Json failed = Json::array();
    const int top = z_of(k) - eps_of(k);
    for (int l = 1; l <= top; ++l) {
        LaurentPoly lhs = env.q0_inv() * compute_h(env, k - l) - compute_h(env, l) + beta * env.q0_inv() * env.qi(l) -
                          h0 * env.qi(l);
        if (!(lhs == env.delta() * compute_h_prime(env, l))) failed.push_back(l);
    }
    const bool ok = failed.empty();
    emit(out, {{"k", k}, {"checked", top}, {"failed", failed}, {"ok", ok}});
    return ok ? kExitOk : kExitFailure;
}

// -- brauer ---------------------------------------------------------------------

inline void check_nk(const Options& o, const CycloDiagram& d) {
    if ((o.n >= 0 && o.n != d.n()) || (o.k >= 1 && o.k != d.k())) throw UsageError("--n/--k disagree with input");
}

inline int brauer_mul(const Options& o, std::istream& in, std::ostream& out) {
    Json j = read_json(in);
    if (!j.contains("a") || !j.contains("b")) throw UsageError("expected {\"a\": diagram, \"b\": diagram}");
    auto a = diagram_from_json(j.at("a")), b = diagram_from_json(j.at("b"));
    check_nk(o, a);
    check_nk(o, b);
    auto w = multiply(a, b, rc_space(a.k()));
    emit(out, {{"coef", poly_to_json(w.coeff)}, {"diagram", diagram_to_json(w.diagram)}});
    return kExitOk;
}

inline int brauer_trace(const Options& o, std::istream& in, std::ostream& out) {
    auto d = diagram_from_json(read_json(in));
    check_nk(o, d);
    emit(out, {{"trace", poly_to_json(trace_eps_c(d, rc_space(d.k())))}});
    return kExitOk;
}

inline int brauer_gram(const Options& o, std::ostream& out) {
    const int n = need_n(o), k = need_k(o);
    auto basis = enumerate_diagrams(n, k, o.max_basis);
    auto g = gram_matrix(basis, rc_space(k));
    Json rows = Json::array();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(to_text(g(r, c)));
        rows.push_back(row);
    }
    Json j{{"n", n}, {"k", k}, {"size", basis.size()}, {"gram", rows}};
    if (o.det) {
        auto d = det_fraction_free(g);
        j["det"] = poly_to_json(d);
        j["nonzero"] = !d.is_zero();
    } else {
        j["certificate"] = certificate_name(nonzero_certificate(g, 8, 2305843009213693951ULL, 99));
    }
    emit(out, j);
    return kExitOk;
}

inline int brauer_count(const Options& o, std::ostream& out) {
    emit(out, {{"count", enumerate_diagrams(need_n(o), need_k(o), o.max_basis).size()}});
    return kExitOk;
}

// -- bmw ------------------------------------------------------------------------

template <Coefficient C>
Element<C> read_element(const Json& j, const ParamEnv<C>& env, const Options& o, int& n) {
    Element<C> x = element_from_json(j, env, n);
    if (o.n >= 0 && o.n != n) throw UsageError("--n disagrees with input");
    return x;
}

template <Coefficient C>
int bmw_run(const std::string& op, const ParamEnv<C>& env, const Options& o, std::istream& in, std::ostream& out) {
    BmwEngine<C> eng(env);
    const int k = env.k();
    if (op == "count") {
        emit(out, {{"count", enumerate_basis(need_n(o), k, o.max_basis).size()}});
        return kExitOk;
    }
    if (op == "verify") {
        const int n = need_n(o);
        auto fails = verify_relations(eng, n, o.max_basis);
        Json f = Json::array();
        for (const auto& r : fails) f.push_back({{"relation", r.relation}, {"word", r.word}});
        emit(out, {{"n", n}, {"k", k}, {"relations", defining_relations(env, n).size()}, {"failures", f},
                   {"ok", fails.empty()}});
        return fails.empty() ? kExitOk : kExitFailure;
    }
    Json j = read_json(in);
    int n = 0;
    if (op == "mul") {
        if (!j.contains("a") || !j.contains("b")) throw UsageError("expected {\"a\": element, \"b\": element}");
        int nb = 0;
        auto a = read_element(j.at("a"), env, o, n);
        auto b = read_element(j.at("b"), env, o, nb);
        if (n != nb) throw UsageError("factors have different n");
        emit(out, element_to_json(eng.multiply(eng.reduce(a), eng.reduce(b)), n, k));
        return kExitOk;
    }
    auto x = read_element(j, env, o, n);
    if (op == "reduce") {
        emit(out, element_to_json(eng.reduce(x), n, k));
    } else if (op == "star") {
        emit(out, element_to_json(eng.star(eng.reduce(x)), n, k));
    } else if (op == "trace") {
        if constexpr (std::is_same_v<C, LaurentPoly>) {
            emit(out, {{"trace", poly_to_json(trace_Rc(env, eng.reduce(x)))}});
        } else {
            throw Error(ErrorKind::WrongEnv, "trace needs an R_c environment");
        }
    }
    return kExitOk;
}

// -- repv -----------------------------------------------------------------------

inline int repv_verify(const Options& o, std::ostream& out) {
    auto env = load_env(o, true);
    auto fails = std::visit([](const auto& e) { return verify_V_relations(e); }, env);
    emit(out, {{"k", std::visit([](const auto& e) { return e.k(); }, env)}, {"failures", fails}, {"ok", fails.empty()}});
    return fails.empty() ? kExitOk : kExitFailure;
}

inline int repv_obstruction(const Options& o, std::ostream& out) {
    const int k = need_k(o);
    auto env = make_omega_env(k);
    auto ob = obstruction_coeffs(k);
    bool match = ob.beta == compute_beta(env, BetaVariant::Full);
    Json h = Json::array();
    for (int l = 1; l < k; ++l) {
        h.push_back(to_text(ob.h[l - 1]));
        match = match && ob.h[l - 1] == compute_h(env, l);
    }
    emit(out, {{"k", k}, {"beta", to_text(ob.beta)}, {"h", h}, {"matches", match}});
    return match ? kExitOk : kExitFailure;
}

// -- dispatch -------------------------------------------------------------------

inline int selftest(std::ostream& out) {
    const bool ok = acceptance::run_all([&](const acceptance::Outcome& r) {
        out << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << '\n';
    });
    return ok ? kExitOk : kExitFailure;
}

inline int dispatch(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclotomic BMW algebras: admissibility, diagrams, normal forms"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--max-basis", o.max_basis, "Upper bound on enumerated bases")->check(CLI::PositiveNumber);

    auto add_nk = [&](CLI::App* s, bool with_n) {
        if (with_n) s->add_option("--n", o.n, "Number of strands")->check(CLI::NonNegativeNumber);
        s->add_option("--k", o.k, "Order of the cyclotomic relation")->check(CLI::PositiveNumber);
    };
    auto add_env = [&](CLI::App* s) {
        auto* e = s->add_option("--env", o.env_file, "Environment JSON file");
        auto* r = s->add_option("--rc", o.rc_sign, "Use R_c with sign plus or minus");
        e->excludes(r);
    };

    std::string which;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        auto* s = parent->add_subcommand(name, help);
        s->callback([&which, parent, name] { which = parent->get_name() + " " + name; });
        return s;
    };

    auto* adm = app.add_subcommand("adm", "Admissibility of parameters")->require_subcommand(1);
    auto* s = leaf(adm, "report", "Print beta, h, h' and the verdict");
    add_nk(s, false);
    add_env(s);
    add_nk(leaf(adm, "identity", "Check the delta h' identity in the free ring"), false);

    auto* br = app.add_subcommand("brauer", "Cyclotomic Brauer diagrams")->require_subcommand(1);
    add_nk(leaf(br, "mul", "Multiply {\"a\",\"b\"} read from stdin"), true);
    add_nk(leaf(br, "trace", "Trace of a diagram read from stdin"), true);
    s = leaf(br, "gram", "Gram matrix of the trace form");
    add_nk(s, true);
    s->add_flag("--det", o.det, "Compute the exact determinant instead of a certificate");
    add_nk(leaf(br, "count", "Number of diagrams"), true);

    auto* bmw = app.add_subcommand("bmw", "Normal forms in the cyclotomic BMW algebra")->require_subcommand(1);
    for (const char* op : {"reduce", "mul", "star", "trace", "verify", "count"}) {
        s = leaf(bmw, op, std::string("bmw ") + op);
        add_nk(s, true);
        add_env(s);
    }

    auto* rv = app.add_subcommand("repv", "The k-dimensional module V")->require_subcommand(1);
    s = leaf(rv, "verify", "Check the module relations");
    add_nk(s, false);
    add_env(s);
    add_nk(leaf(rv, "obstruction", "Obstruction coefficients in the free ring"), false);

    app.add_subcommand("selftest", "Run the acceptance suite")->callback([&which] { which = "selftest"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream so, se;
        const int rc = app.exit(e, so, se);
        out << so.str();
        err << se.str();
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (which == "adm report") return adm_report(o, out);
        if (which == "adm identity") return adm_identity(o, out);
        if (which == "brauer mul") return brauer_mul(o, in, out);
        if (which == "brauer trace") return brauer_trace(o, in, out);
        if (which == "brauer gram") return brauer_gram(o, out);
        if (which == "brauer count") return brauer_count(o, out);
        if (which.rfind("bmw ", 0) == 0) {
            auto env = load_env(o, false);
            const std::string op = which.substr(4);
            return std::visit([&](const auto& e) { return bmw_run(op, e, o, in, out); }, env);
        }
        if (which == "repv verify") return repv_verify(o, out);
        if (which == "repv obstruction") return repv_obstruction(o, out);
        if (which == "selftest") return selftest(out);
        err << "unknown command\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Json::exception& e) {
        err << "input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return e.kind() == ErrorKind::Parse ? kExitUsage : kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace cyclobmw::cli
