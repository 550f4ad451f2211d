// Sparse multivariate polynomials with exact rational coefficients.
//
// Variables are free-form identifiers kept in a sorted list; the monomial
// order is graded lexicographic with the alphabetically first variable most
// significant, which makes printing and normalization deterministic.
// Values are immutable in spirit: every operation returns a fresh
// polynomial, so concurrent readers need no synchronization.

#pragma once

#include "quadrica/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace quadrica {

using Exponents = std::vector<int>;

struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        return a > b;  // lexicographic on exponents, first variable dominant
    }
};

class MPoly {
public:
    using TermMap = std::map<Exponents, Rat, GrlexGreater>;

    MPoly() = default;

    static MPoly constant(const Rat& c) {
        MPoly p;
        if (c != 0) p.terms_[{}] = c;
        return p;
    }

    static MPoly variable(const std::string& name) {
        MPoly p;
        p.vars_ = {name};
        p.terms_[{1}] = 1;
        return p;
    }

    static MPoly zero(std::vector<std::string> vars = {}) {
        MPoly p;
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        p.vars_ = std::move(vars);
        return p;
    }

    static MPoly monomial(const std::vector<std::string>& vars, const Exponents& exps,
                          const Rat& coeff) {
        if (vars.size() != exps.size())
            throw internal_error("MPoly::monomial: exponent arity mismatch");
        MPoly p = zero(vars);
        if (coeff == 0) return p;
        Exponents aligned(p.vars_.size(), 0);
        for (size_t i = 0; i < vars.size(); ++i) {
            auto it = std::lower_bound(p.vars_.begin(), p.vars_.end(), vars[i]);
            aligned[size_t(it - p.vars_.begin())] += exps[i];
        }
        p.terms_[aligned] = coeff;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    Rat constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw internal_error("constant_value on non-constant polynomial");
        return terms_.begin()->second;
    }
    size_t term_count() const { return terms_.size(); }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;  // -1 for the zero polynomial
    }

    int degree_in(const std::string& var) const {
        auto idx = var_index(var);
        if (!idx) return 0;
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
        return d;
    }

    // Total degree counting only the named variables.
    int degree_in_vars(const std::vector<std::string>& subset) const {
        std::vector<size_t> idx = indices_of(subset);
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (size_t i : idx) s += e[i];
            d = std::max(d, s);
        }
        return d;
    }

    bool is_homogeneous_in(const std::vector<std::string>& subset, int deg) const {
        std::vector<size_t> idx = indices_of(subset);
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (size_t i : idx) s += e[i];
            if (s != deg) return false;
        }
        return true;
    }

    std::set<std::string> support_vars() const {
        std::set<std::string> out;
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) out.insert(vars_[i]);
        return out;
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    MPoly operator+(const MPoly& o) const {
        auto [a, b] = aligned(*this, o);
        for (const auto& [e, c] : b.terms_) {
            auto [it, fresh] = a.terms_.try_emplace(e, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) a.terms_.erase(it);
            }
        }
        return a;
    }

    MPoly operator-(const MPoly& o) const { return *this + (-o); }

    MPoly operator*(const MPoly& o) const {
        auto [a, b] = aligned(*this, o);
        MPoly r = zero_like(a);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                auto [it, fresh] = r.terms_.try_emplace(e, ca * cb);
                if (!fresh) {
                    it->second += ca * cb;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    MPoly operator*(const Rat& c) const {
        if (c == 0) return zero_like(*this);
        MPoly r = *this;
        for (auto& [e, v] : r.terms_) v *= c;
        return r;
    }

    MPoly operator/(const Rat& c) const {
        if (c == 0) throw validation_error("division of polynomial by zero");
        return *this * (Rat(1) / c);
    }

    MPoly pow(int e) const {
        if (e < 0) throw validation_error("negative polynomial exponent");
        MPoly acc = constant(1), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            if (e >>= 1) base = base * base;
        }
        return acc;
    }

    bool operator==(const MPoly& o) const {
        auto [a, b] = aligned(*this, o);
        return a.terms_ == b.terms_;
    }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly derivative(const std::string& var) const {
        auto idx = var_index(var);
        MPoly r = zero_like(*this);
        if (!idx) return r;
        for (const auto& [e, c] : terms_) {
            if (e[*idx] == 0) continue;
            Exponents d = e;
            d[*idx] -= 1;
            r.terms_[d] = c * e[*idx];
        }
        return r;
    }

    // Substitutes polynomials for a subset of variables; untouched
    // variables pass through.
    MPoly substitute(const std::map<std::string, MPoly>& repl) const {
        MPoly acc;
        for (const auto& [e, c] : terms_) {
            MPoly term = constant(c);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = repl.find(vars_[i]);
                MPoly base = (it != repl.end()) ? it->second : variable(vars_[i]);
                term = term * base.pow(e[i]);
            }
            acc = acc + term;
        }
        return acc;
    }

    MPoly specialize(const std::map<std::string, Rat>& vals) const {
        std::map<std::string, MPoly> repl;
        for (const auto& [k, v] : vals) repl.emplace(k, constant(v));
        return substitute(repl);
    }

    Rat eval(const std::map<std::string, Rat>& point) const {
        Rat acc = 0;
        for (const auto& [e, c] : terms_) {
            Rat t = c;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = point.find(vars_[i]);
                if (it == point.end())
                    throw validation_error("eval: no value for variable '" + vars_[i] + "'");
                t *= rat_pow(it->second, unsigned(e[i]));
            }
            acc += t;
        }
        return acc;
    }

    // Groups terms by their exponents in `subset` (keys have the subset's
    // length, zero where a variable does not occur); the mapped values are
    // the cofactor polynomials in the remaining variables.
    std::map<Exponents, MPoly, GrlexGreater> collect(const std::vector<std::string>& subset) const {
        std::vector<long> where(subset.size(), -1);
        for (size_t k = 0; k < subset.size(); ++k) {
            auto i = var_index(subset[k]);
            if (i) where[k] = long(*i);
        }
        std::vector<std::string> rest;
        std::vector<size_t> rest_idx;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (std::find(where.begin(), where.end(), long(i)) == where.end()) {
                rest.push_back(vars_[i]);
                rest_idx.push_back(i);
            }
        }
        std::map<Exponents, MPoly, GrlexGreater> out;
        for (const auto& [e, c] : terms_) {
            Exponents key(subset.size(), 0);
            for (size_t k = 0; k < subset.size(); ++k)
                if (where[k] >= 0) key[k] = e[size_t(where[k])];
            Exponents rest_e(rest_idx.size());
            for (size_t k = 0; k < rest_idx.size(); ++k) rest_e[k] = e[rest_idx[k]];
            auto [it, fresh] = out.try_emplace(key, zero(rest));
            it->second.terms_[rest_e] += c;
            if (it->second.terms_[rest_e] == 0) it->second.terms_.erase(rest_e);
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }

    // Leading term under grlex (throws on zero).
    std::pair<Exponents, Rat> leading_term() const {
        if (terms_.empty()) throw internal_error("leading_term of zero polynomial");
        return *terms_.begin();
    }

    // Positive rational c such that (*this)/c has coprime integer
    // coefficients; 0 for the zero polynomial.
    Rat rational_content() const {
        if (terms_.empty()) return 0;
        Int g = 0, l = 1;
        for (const auto& [e, c] : terms_) {
            g = boost::multiprecision::gcd(g, int_abs(num(c)));
            l = boost::multiprecision::lcm(l, den(c));
        }
        return Rat(g, l);
    }

    // Divides out rational content and fixes the grlex-leading coefficient
    // positive; the zero polynomial stays zero.
    MPoly normalized_primitive() const {
        if (terms_.empty()) return *this;
        Rat c = rational_content();
        if (terms_.begin()->second < 0) c = -c;
        return *this / c;
    }

    // Exact multivariate division; empty when the divisor does not divide.
    std::optional<MPoly> try_divide(const MPoly& divisor) const {
        if (divisor.is_zero()) throw validation_error("division of polynomial by zero");
        auto [f, g] = aligned(*this, divisor);
        MPoly q = zero_like(f);
        auto [ge, gc] = g.leading_term();
        while (!f.is_zero()) {
            auto [fe, fc] = f.leading_term();
            Exponents d(fe.size());
            for (size_t i = 0; i < fe.size(); ++i) {
                d[i] = fe[i] - ge[i];
                if (d[i] < 0) return std::nullopt;
            }
            MPoly t = zero_like(f);
            t.terms_[d] = fc / gc;
            q = q + t;
            f = f - t * g;
        }
        return q;
    }

    // Division with remainder by an ordered divisor list (grlex).  Returns
    // quotients and the remainder; certifies ideal membership when the
    // remainder comes back zero.
    std::pair<std::vector<MPoly>, MPoly> divmod(const std::vector<MPoly>& divisors) const {
        MPoly f = *this;
        std::vector<MPoly> qs(divisors.size(), MPoly());
        MPoly rem;
        while (!f.is_zero()) {
            bool reduced = false;
            for (size_t k = 0; k < divisors.size() && !reduced; ++k) {
                if (divisors[k].is_zero()) continue;
                auto [g, fcopy] = aligned(divisors[k], f);
                auto [ge, gc] = g.leading_term();
                auto [fe2, fc2] = fcopy.leading_term();
                Exponents d(fe2.size());
                bool ok = true;
                for (size_t i = 0; i < fe2.size() && ok; ++i) {
                    d[i] = fe2[i] - ge[i];
                    ok = d[i] >= 0;
                }
                if (!ok) continue;
                MPoly t = zero_like(fcopy);
                t.terms_[d] = fc2 / gc;
                qs[k] = qs[k] + t;
                f = f - t * divisors[k];
                reduced = true;
            }
            if (!reduced) {
                MPoly lt = f.leading_monomial_poly();
                rem = rem + lt;
                f = f - lt;
            }
        }
        return {qs, rem};
    }

    std::string str() const;

private:
    std::vector<std::string> vars_;  // sorted, unique
    TermMap terms_;                  // no zero coefficients stored

    static int total_degree(const Exponents& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    static MPoly zero_like(const MPoly& p) {
        MPoly r;
        r.vars_ = p.vars_;
        return r;
    }

    std::optional<size_t> var_index(const std::string& v) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it == vars_.end() || *it != v) return std::nullopt;
        return size_t(it - vars_.begin());
    }

    std::vector<size_t> indices_of(const std::vector<std::string>& subset) const {
        std::vector<size_t> idx;
        for (const auto& v : subset) {
            auto i = var_index(v);
            if (i) idx.push_back(*i);
        }
        return idx;
    }

    MPoly leading_monomial_poly() const {
        MPoly r = zero_like(*this);
        auto [e, c] = leading_term();
        r.terms_[e] = c;
        return r;
    }

    // Re-expresses both operands over the union of their variable lists.
    static std::pair<MPoly, MPoly> aligned(const MPoly& a, const MPoly& b) {
        if (a.vars_ == b.vars_) return {a, b};
        std::vector<std::string> u;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(u));
        return {a.remapped(u), b.remapped(u)};
    }

    MPoly remapped(const std::vector<std::string>& u) const {
        MPoly r;
        r.vars_ = u;
        std::vector<size_t> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::lower_bound(u.begin(), u.end(), vars_[i]);
            pos[i] = size_t(it - u.begin());
        }
        for (const auto& [e, c] : terms_) {
            Exponents ne(u.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            r.terms_[std::move(ne)] = c;
        }
        return r;
    }
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

inline std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mon;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += vars_[i];
            if (e[i] > 1) mon += "^" + std::to_string(e[i]);
        }
        if (mon.empty()) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << mon;
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

}  // namespace quadrica
