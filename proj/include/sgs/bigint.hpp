#pragma once

// Arbitrary-precision integer/rational scalars. GMP supplies the limb
// arithmetic; everything built on top of these aliases is ours.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgs {

using BigInt = mpz_class;
using Rational = mpq_class;

inline int sign(const BigInt& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign(const Rational& a) { return mpq_sgn(a.get_mpq_t()); }

inline BigInt big_abs(const BigInt& a) { return abs(a); }

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt pow10(unsigned long digits) { return big_pow(BigInt(10), digits); }

// Quotient a/b asserting exact divisibility.
inline BigInt divexact(const BigInt& a, const BigInt& b) {
    if (sign(b) == 0) throw std::domain_error("divexact: division by zero");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sign(r) != 0) throw std::logic_error("divexact: inexact division");
    return q;
}

inline bool divides(const BigInt& d, const BigInt& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool fits_long(const BigInt& a) { return a.fits_slong_p(); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (sign(den) == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(const BigInt& a) { return a.get_d(); }

// Fixed-point decimal rendering of a rational, round-half-away-from-zero,
// always printing `digits` places so CLI output is byte-stable.
inline std::string decimal_string(const Rational& q, unsigned digits) {
    BigInt num = q.get_num();
    BigInt den = q.get_den();
    bool neg = sign(num) < 0;
    if (neg) num = -num;
    BigInt scale = pow10(digits);
    BigInt scaled = (2 * num * scale + den) / (2 * den);  // floor((2ns+d)/2d) = round(ns/d)
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = neg && (sign(whole) != 0 || sign(frac) != 0) ? "-" : "";
    out += whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }

// "p/q" (or just "p" when integral); parses the same shape back.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline BigInt parse_bigint(const std::string& s) {
    BigInt r;
    if (mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return r;
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_bigint(s));
    return make_rational(parse_bigint(s.substr(0, slash)), parse_bigint(s.substr(slash + 1)));
}

}  // namespace sgs
