#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace qder {

using BigInt = mpz_class;

// Arbitrary-precision rational. mpq_class keeps gcd(|num|, den) = 1 and
// den > 0 as long as values are produced through canonicalizing entry points,
// which is what make_rational and all arithmetic operators do.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline BigRational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

// gmpxx has no long long constructor; fine on LP64 where long is 64-bit.
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }

inline BigInt rational_num(const BigRational& r) { return r.get_num(); }
inline BigInt rational_den(const BigRational& r) { return r.get_den(); }

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

// q^k for integer k (k < 0 requires q != 0).
inline BigRational rational_pow(const BigRational& q, long k) {
    if (k == 0) return BigRational(1);
    if (q == 0 && k < 0) throw std::domain_error("0 raised to a negative power");
    BigInt n, d;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_pow_ui(n.get_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q.get_den().get_mpz_t(), e);
    return k > 0 ? make_rational(n, d) : make_rational(d, n);
}

// Exact square root when the argument is a perfect square of a rational.
inline std::optional<BigRational> rational_sqrt(const BigRational& q) {
    if (q < 0) return std::nullopt;
    BigInt n = q.get_num(), d = q.get_den(), rn, rd;
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return make_rational(rn, rd);
}

std::string rational_to_decimal(const BigRational& r, int significant_digits = 6);

// Element of Q(i) with exact rational real and imaginary parts. Used only by
// the tau-weighted orthogonal sums; every exported sum must come back real.
struct GaussianRational {
    BigRational re;
    BigRational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(const BigRational& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
};

// The four units of Z[i], as multipliers for tau weights.
inline GaussianRational gaussian_unit(int re_sign, int im_sign) {
    return {BigRational(re_sign), BigRational(im_sign)};
}

}  // namespace qder
