#pragma once

#include <string>
#include <vector>

#include "qder/laurent.hpp"
#include "qder/polyops.hpp"
#include "qder/rational.hpp"

namespace qder {

// Quotient of Laurent polynomials in s (s^2 = q), kept in canonical form:
//   - denominator is a polynomial in s with nonzero constant term,
//     leading coefficient 1 and gcd(numerator, denominator) = 1;
//   - numerator is a Laurent polynomial carrying any net power of s;
//   - zero is 0/1.
// Two values are equal iff their canonical components coincide.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(HalfPowerLaurent::one()) {}
    RationalFunction(long v)  // NOLINT(google-explicit-constructor)
        : num_(HalfPowerLaurent::monomial(BigRational(v), 0)), den_(HalfPowerLaurent::one()) {}
    RationalFunction(const BigRational& v)  // NOLINT(google-explicit-constructor)
        : num_(HalfPowerLaurent::monomial(v, 0)), den_(HalfPowerLaurent::one()) {}
    explicit RationalFunction(const HalfPowerLaurent& num)
        : num_(num), den_(HalfPowerLaurent::one()) {}
    RationalFunction(HalfPowerLaurent num, HalfPowerLaurent den) { normalize(std::move(num), std::move(den)); }

    // The formal variable q = s^2 and its powers.
    static RationalFunction q() { return monomial_q(1); }
    static RationalFunction monomial_q(int k) {
        return RationalFunction(HalfPowerLaurent::monomial(BigRational(1), 2 * k));
    }
    static RationalFunction monomial_s(int k) {
        return RationalFunction(HalfPowerLaurent::monomial(BigRational(1), k));
    }
    // (-q)^k as an exact signed monomial.
    static RationalFunction neg_q_pow(int k) {
        BigRational c(k % 2 == 0 ? 1 : -1);
        return RationalFunction(HalfPowerLaurent::monomial(c, 2 * k));
    }

    const HalfPowerLaurent& numerator() const { return num_; }
    const HalfPowerLaurent& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool has_integral_q_degree() const {
        return num_.all_exponents_even() && den_.all_exponents_even();
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const;
    RationalFunction pow(int k) const;

    // q -> c * q^stride on a value of integral q-degree; c nonzero rational,
    // stride != 0. Reading the variable as x: x -> -1/q is
    // substitute_monomial(-1, -1), x -> 1/q^2 is substitute_monomial(1, -2).
    RationalFunction substitute_monomial(const BigRational& c, int stride) const;

    // Exact evaluation at a rational q0. q0 must be nonzero; values of
    // half-integral q-degree additionally require q0 to be a rational square.
    BigRational eval_at_q(const BigRational& q0) const;

    // Power series coefficients [c_0 .. c_n] when the value expands as a
    // series at q = 0 (denominator nonzero at 0 and numerator a polynomial).
    std::vector<BigRational> series_coefficients_q(int n) const;

    // Canonical text rendering, e.g. "(q^2 - q + 1)/q^3"; half powers render
    // as "q^(k/2)".
    std::string to_string() const;

  private:
    void normalize(HalfPowerLaurent num, HalfPowerLaurent den);

    HalfPowerLaurent num_;
    HalfPowerLaurent den_;
};

std::string laurent_to_string(const HalfPowerLaurent& p);

}  // namespace qder
