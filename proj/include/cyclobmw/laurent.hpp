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
 * @file laurent.hpp
 * @brief Multivariate Laurent polynomials over the integers.
 *
 * Exponent vectors are dense over a fixed generator space. A polynomial
 * without a space is a constant and promotes to any space on contact.
 */

#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace cyclobmw {

class GenSpace {
public:
    explicit GenSpace(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) index_[names_[i]] = static_cast<int>(i);
    }
    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index(std::string_view n) const {
        auto it = index_.find(std::string(n));
        return it == index_.end() ? -1 : it->second;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

using GenSpacePtr = std::shared_ptr<const GenSpace>;

inline GenSpacePtr make_space(std::vector<std::string> names) {
    return std::make_shared<const GenSpace>(std::move(names));
}

class LaurentPoly {
public:
    using Exps = std::vector<int>;
    using Terms = std::map<Exps, mpz_class>;

    LaurentPoly() = default;
    LaurentPoly(long c) { if (c != 0) terms_[Exps{}] = c; }
    LaurentPoly(int c) : LaurentPoly(static_cast<long>(c)) {}
    LaurentPoly(const mpz_class& c) { if (c != 0) terms_[Exps{}] = c; }

    static LaurentPoly monomial(GenSpacePtr sp, Exps e, const mpz_class& c = 1) {
        LaurentPoly r;
        r.space_ = std::move(sp);
        if (e.size() != r.space_->size()) throw Error(ErrorKind::Mismatch, "exponent vector length");
        if (c != 0) r.terms_[std::move(e)] = c;
        return r;
    }

    static LaurentPoly gen(const GenSpacePtr& sp, std::string_view name, int e = 1) {
        int i = sp->index(name);
        if (i < 0) throw Error(ErrorKind::MissingValue, "unknown generator " + std::string(name));
        Exps v(sp->size(), 0);
        v[i] = e;
        return monomial(sp, std::move(v));
    }

    const GenSpacePtr& space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        for (int x : terms_.begin()->first) if (x != 0) return false;
        return true;
    }
    mpz_class constant_value() const {
        for (const auto& [e, c] : terms_) {
            bool z = true;
            for (int x : e) if (x != 0) { z = false; break; }
            if (z) return c;
        }
        return 0;
    }

    LaurentPoly in_space(const GenSpacePtr& sp) const {
        if (space_ == sp) return *this;
        if (space_ && sp && space_->names() == sp->names()) {
            LaurentPoly r = *this;
            r.space_ = sp;
            return r;
        }
        if (space_) throw Error(ErrorKind::Mismatch, "generator spaces differ");
        LaurentPoly r;
        r.space_ = sp;
        if (!terms_.empty()) r.terms_[Exps(sp ? sp->size() : 0, 0)] = terms_.begin()->second;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, 1); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, -1); }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.terms_.empty() || b.terms_.empty()) {
            LaurentPoly z;
            z.space_ = a.space_ ? a.space_ : b.space_;
            return z;
        }
        GenSpacePtr sp = common(a, b);
        LaurentPoly x = a.in_space(sp), y = b.in_space(sp);
        LaurentPoly r;
        r.space_ = sp;
        Exps e(sp ? sp->size() : 0);
        for (const auto& [ea, ca] : x.terms_) {
            for (const auto& [eb, cb] : y.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                auto [it, fresh] = r.terms_.try_emplace(e, 0);
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.space_ == b.space_) return a.terms_ == b.terms_;
        if (a.is_constant() && b.is_constant()) return a.constant_value() == b.constant_value();
        if (!a.space_ || !b.space_) return false;
        if (a.space_->names() != b.space_->names()) return false;
        return a.terms_ == b.terms_;
    }

    /// Total order for use as a map key; structural within a fixed space.
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

    /// Inverse of a signed monomial; anything else is not a unit.
    LaurentPoly inverse() const {
        if (terms_.size() != 1) throw Error(ErrorKind::NotAUnit, str());
        const auto& [e, c] = *terms_.begin();
        if (c != 1 && c != -1) throw Error(ErrorKind::NotAUnit, str());
        Exps ne = e;
        for (int& x : ne) x = -x;
        LaurentPoly r;
        r.space_ = space_;
        r.terms_[ne] = c;
        return r;
    }

    LaurentPoly pow(int n) const {
        if (n < 0) return inverse().pow(-n);
        LaurentPoly r(1), b = *this;
        r = r.in_space(space_);
        while (n) {
            if (n & 1) r *= b;
            n >>= 1;
            if (n) b *= b;
        }
        return r;
    }

    /// Exact quotient, or nullopt when the divisor does not divide.
    std::optional<LaurentPoly> divexact(const LaurentPoly& d) const {
        if (d.is_zero()) throw Error(ErrorKind::DegenerateParameters, "division by zero");
        GenSpacePtr sp = common(*this, d);
        LaurentPoly a = in_space(sp), b = d.in_space(sp), q;
        q.space_ = sp;
        if (a.is_zero()) return q;
        const Exps& lb = b.terms_.rbegin()->first;
        const mpz_class& cb = b.terms_.rbegin()->second;
        Exps floor = a.terms_.begin()->first;
        for (std::size_t i = 0; i < floor.size(); ++i) floor[i] -= b.terms_.begin()->first[i];
        while (!a.is_zero()) {
            const auto& [la, ca] = *a.terms_.rbegin();
            if (!mpz_divisible_p(ca.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
            Exps e(la.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = la[i] - lb[i];
            if (e < floor) return std::nullopt;
            mpz_class c = ca / cb;
            LaurentPoly t = monomial_in(sp, e, c);
            q.terms_[e] += c;
            a -= t * b;
        }
        return q;
    }

    /// Canonical text: terms in increasing exponent order, `coef * gen^exp * ...`.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.get_str();
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                os << " * " << space_->name(i);
                if (e[i] != 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

    /// Ring homomorphism defined by generator values; `val(i, e)` returns gen_i^e.
    template <class C, class F>
    C evaluate(F&& val) const {
        C r(0);
        for (const auto& [e, c] : terms_) {
            C t{mpz_class(c)};
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t = C(t * val(i, e[i]));
            r = C(r + t);
        }
        return r;
    }

private:
    static GenSpacePtr common(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.space_ && b.space_ && a.space_ != b.space_ && a.space_->names() != b.space_->names())
            throw Error(ErrorKind::Mismatch, "generator spaces differ");
        return a.space_ ? a.space_ : b.space_;
    }
    static LaurentPoly monomial_in(const GenSpacePtr& sp, const Exps& e, const mpz_class& c) {
        LaurentPoly r;
        r.space_ = sp;
        r.terms_[e] = c;
        return r;
    }
    LaurentPoly& accumulate(const LaurentPoly& o, int sign) {
        if (o.terms_.empty()) return *this;
        GenSpacePtr sp = common(*this, o);
        if (space_ != sp) *this = in_space(sp);
        LaurentPoly y = o.in_space(sp);
        for (const auto& [e, c] : y.terms_) {
            auto [it, fresh] = terms_.try_emplace(e, 0);
            if (sign > 0) it->second += c; else it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    GenSpacePtr space_;
    Terms terms_;
};

inline bool is_zero(const LaurentPoly& a) { return a.is_zero(); }
inline bool is_zero(const mpq_class& a) { return sgn(a) == 0; }

inline LaurentPoly inverse(const LaurentPoly& a) { return a.inverse(); }
inline mpq_class inverse(const mpq_class& a) {
    if (sgn(a) == 0) throw Error(ErrorKind::NotAUnit, "0");
    return mpq_class(1) / a;
}

inline std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) { return a.divexact(b); }
inline std::optional<mpq_class> exact_div(const mpq_class& a, const mpq_class& b) {
    if (sgn(b) == 0) throw Error(ErrorKind::DegenerateParameters, "division by zero");
    return mpq_class(a / b);
}

inline std::string to_text(const LaurentPoly& a) { return a.str(); }
inline std::string to_text(const mpq_class& a) { return a.get_str(); }

inline mpq_class parse_rational(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
    if (r.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

/// Coefficient types accepted by the algebra engines.
template <class C>
concept Coefficient = requires(const C& a, const C& b) {
    { C(a + b) };
    { C(a - b) };
    { C(a * b) };
    { C(-a) };
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { C(1) };
};

}  // namespace cyclobmw
