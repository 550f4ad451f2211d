// Exact rational scalars, square classes and small number-theoretic helpers.
//
// Everything downstream computes over Q; this header pins the integer and
// rational types (boost::multiprecision, header-only) and the canonical
// square-class reduction used by discriminants.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quadrica {

// et_off so arithmetic yields plain values (storable in containers, safe
// with auto) instead of expression templates.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

// Caller mistakes: malformed text, bad payloads, violated signatures.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed requests whose mathematical answer does not exist or could
// not be certified (anisotropic input, exhausted search cap, ...).  The
// short `code` is stable and machine-checkable; `what()` elaborates.
class math_error : public std::runtime_error {
public:
    math_error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class internal_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Int& n) { return n.sign(); }
inline int sign_of(const Rat& r) { return r.sign(); }

inline Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }
inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat rat_pow(const Rat& base, unsigned e) {
    Rat acc(1), b = base;
    unsigned k = e;
    while (k) {
        if (k & 1u) acc *= b;
        b *= b;
        k >>= 1u;
    }
    return acc;
}

inline std::string rat_to_string(const Rat& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

// Parses "p", "-p", "p/q" with q > 0 after normalization.
inline Rat parse_rat(const std::string& text) {
    auto bad = [&]() -> Rat { throw validation_error("invalid rational literal: '" + text + "'"); };
    if (text.empty()) return bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int n(text.substr(0, slash));
        Int d(text.substr(slash + 1));
        if (d == 0) throw validation_error("zero denominator in '" + text + "'");
        if (d < 0) { n = -n; d = -d; }
        return Rat(n, d);
    } catch (const validation_error&) {
        throw;
    } catch (const std::exception&) {
        return bad();
    }
}

inline Int mod_reduce(Int a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int pow_mod(Int base, Int exp, const Int& m) {
    return boost::multiprecision::powm(mod_reduce(base, m), exp, m);
}

inline Int inv_mod(const Int& a, const Int& m) {
    // extended euclid; requires gcd(a, m) == 1
    Int old_r = mod_reduce(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_s - q * s; old_s = s; s = t;
    }
    if (old_r != 1) throw internal_error("inv_mod: arguments not coprime");
    return mod_reduce(old_s, m);
}

inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

// Trial-division factorization; adequate for the coefficient sizes that
// arise here (determinants of small integer matrices and user input).
inline std::vector<std::pair<Int, unsigned>> factor(Int n) {
    if (n == 0) throw validation_error("factor: zero input");
    n = int_abs(n);
    std::vector<std::pair<Int, unsigned>> out;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

inline Int square_free_part(const Int& n) {
    if (n == 0) return 0;
    Int out = n < 0 ? Int(-1) : Int(1);
    for (const auto& [p, e] : factor(n))
        if (e & 1u) out *= p;
    return out;
}

// A rational modulo nonzero rational squares, represented by its unique
// square-free integer (0 only for the zero class).
struct SquareClass {
    Int representative;

    bool operator==(const SquareClass& o) const { return representative == o.representative; }
    bool operator!=(const SquareClass& o) const { return representative != o.representative; }
    bool is_one() const { return representative == 1; }

    SquareClass operator*(const SquareClass& o) const {
        return SquareClass{square_free_part(representative * o.representative)};
    }
};

inline SquareClass square_class(const Rat& x) {
    if (x == 0) return SquareClass{0};
    return SquareClass{square_free_part(num(x) * den(x))};
}

inline bool is_square(const Rat& x) {
    if (x < 0) return false;
    if (x == 0) return true;
    Int sn = boost::multiprecision::sqrt(num(x));
    Int sd = boost::multiprecision::sqrt(den(x));
    return sn * sn == num(x) && sd * sd == den(x);
}

// p-adic valuation of a nonzero rational (negative for denominators).
inline long padic_valuation(const Rat& x, const Int& p) {
    if (x == 0) throw validation_error("padic_valuation: zero input");
    long v = 0;
    Int n = num(x), d = den(x);
    while (n % p == 0) { n /= p; ++v; }
    while (d % p == 0) { d /= p; --v; }
    return v;
}

// The p-free unit part of x reduced modulo m (m a power of p).
inline Int padic_unit_mod(const Rat& x, const Int& p, const Int& m) {
    Int n = num(x), d = den(x);
    while (n % p == 0) n /= p;
    while (d % p == 0) d /= p;
    return mod_reduce(mod_reduce(n, m) * inv_mod(mod_reduce(d, m), m), m);
}

}  // namespace quadrica
