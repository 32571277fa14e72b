#include "qder/rational_function.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace qder {

namespace {

// Laurent (rational coefficients) -> (rational scale, integer dense poly,
// base exponent, stride). value = scale * sum_i poly[i] * s^(base + i*stride).
struct Integerized {
    BigRational scale;
    ZPoly poly;
    int base = 0;
};

Integerized integerize(const HalfPowerLaurent& p, int stride) {
    Integerized r;
    r.base = p.min_exp();
    BigInt lcm(1);
    for (const auto& [e, c] : p.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    int len = (p.max_exp() - r.base) / stride + 1;
    r.poly.c.assign(len, BigInt(0));
    for (const auto& [e, c] : p.terms()) {
        BigRational v = c * BigRational(lcm);
        r.poly.c[(e - r.base) / stride] = v.get_num();
    }
    BigInt content = zpoly_content(r.poly);
    if (content != 1)
        for (auto& v : r.poly.c) v /= content;
    r.scale = make_rational(content, lcm);
    return r;
}

HalfPowerLaurent from_zpoly(const ZPoly& p, const BigRational& scale, int base, int stride) {
    HalfPowerLaurent r;
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0) continue;
        r.add_term(base + static_cast<int>(i) * stride, BigRational(p.c[i]) * scale);
    }
    return r;
}

int exponent_stride(const HalfPowerLaurent& a, int a_base, const HalfPowerLaurent& b, int b_base) {
    int g = 0;
    for (const auto& [e, c] : a.terms()) g = std::gcd(g, e - a_base);
    for (const auto& [e, c] : b.terms()) g = std::gcd(g, e - b_base);
    return g == 0 ? 1 : g;
}

std::string exponent_to_string(int s_exp) {
    // q^(s_exp/2) with integral exponents rendered plainly.
    std::ostringstream os;
    if (s_exp % 2 == 0) {
        int k = s_exp / 2;
        if (k == 1) return "q";
        os << "q^" << k;
    } else {
        os << "q^(" << s_exp << "/2)";
    }
    return os.str();
}

std::string coeff_to_string(const BigRational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

}  // namespace

std::string laurent_to_string(const HalfPowerLaurent& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending exponents.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        BigRational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << coeff_to_string(a);
        } else {
            if (a != 1) {
                if (is_integer(a))
                    os << coeff_to_string(a) << "*";
                else
                    os << "(" << coeff_to_string(a) << ")*";
            }
            os << exponent_to_string(e);
        }
    }
    return os.str();
}

void RationalFunction::normalize(HalfPowerLaurent num, HalfPowerLaurent den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = HalfPowerLaurent();
        den_ = HalfPowerLaurent::one();
        return;
    }

    int num_base = num.min_exp();
    int den_base = den.min_exp();
    int stride = exponent_stride(num, num_base, den, den_base);

    Integerized n = integerize(num, stride);
    Integerized d = integerize(den, stride);
    reduce_fraction(n.poly, d.poly);

    // Monic denominator: fold lc(den) and the scalar parts into the numerator.
    BigRational lead(d.poly.leading());
    BigRational num_scale = n.scale / (d.scale * lead);
    HalfPowerLaurent new_den;
    for (size_t i = 0; i < d.poly.c.size(); ++i) {
        if (d.poly.c[i] == 0) continue;
        new_den.add_term(static_cast<int>(i) * stride, BigRational(d.poly.c[i]) / lead);
    }
    // Numerator keeps the net monomial shift num_base - den_base.
    num_ = from_zpoly(n.poly, num_scale, num_base - den_base, stride);
    den_ = std::move(new_den);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) return a;
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    if (a.is_zero()) return RationalFunction();
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int k) const {
    if (k == 0) return RationalFunction(1);
    if (k < 0) return inverse().pow(-k);
    RationalFunction r(1);
    RationalFunction base = *this;
    int e = k;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return r;
}

RationalFunction RationalFunction::substitute_monomial(const BigRational& c, int stride) const {
    if (c == 0 || stride == 0) throw std::domain_error("invalid monomial substitution");
    HalfPowerLaurent n = num_.substitute_q_monomial(c, stride);
    HalfPowerLaurent d = den_.substitute_q_monomial(c, stride);
    return RationalFunction(std::move(n), std::move(d));
}

BigRational RationalFunction::eval_at_q(const BigRational& q0) const {
    if (q0 == 0) throw std::domain_error("evaluation at q = 0");
    BigRational s0;
    if (has_integral_q_degree()) {
        // Evaluate in the variable q directly by halving exponents.
        BigRational nv(0), dv(0);
        for (const auto& [e, c] : num_.terms()) nv += c * rational_pow(q0, e / 2);
        for (const auto& [e, c] : den_.terms()) dv += c * rational_pow(q0, e / 2);
        if (dv == 0) throw std::domain_error("denominator vanishes at evaluation point");
        return nv / dv;
    }
    auto root = rational_sqrt(q0);
    if (!root)
        throw std::domain_error(
            "value has half-integral q-degree; evaluation needs a perfect-square q");
    s0 = *root;
    BigRational nv = num_.eval(s0);
    BigRational dv = den_.eval(s0);
    if (dv == 0) throw std::domain_error("denominator vanishes at evaluation point");
    return nv / dv;
}

std::vector<BigRational> RationalFunction::series_coefficients_q(int n) const {
    std::vector<BigRational> out(n + 1, BigRational(0));
    if (is_zero()) return out;
    if (!has_integral_q_degree())
        throw std::domain_error("series expansion requires integral q-degree");
    if (num_.min_exp() < 0) throw std::domain_error("series expansion of a Laurent tail");
    // den_(0) != 0 by canonical form; standard recurrence den * C = num.
    std::vector<BigRational> nc(n + 1, BigRational(0)), dc(n + 1, BigRational(0));
    for (const auto& [e, c] : num_.terms())
        if (e / 2 <= n) nc[e / 2] = c;
    for (const auto& [e, c] : den_.terms())
        if (e / 2 <= n) dc[e / 2] = c;
    BigRational d0 = dc[0];
    for (int k = 0; k <= n; ++k) {
        BigRational acc = nc[k];
        for (int j = 1; j <= k; ++j) acc -= dc[j] * out[k - j];
        out[k] = acc / d0;
    }
    return out;
}

std::string rational_to_decimal(const BigRational& r, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, mpq_get_d(r.get_mpq_t()));
    return buf;
}

std::string RationalFunction::to_string() const {
    if (is_zero()) return "0";
    // Shift so both displayed parts are genuine polynomials.
    int k = std::min(num_.min_exp(), 0);
    HalfPowerLaurent dn = num_.shifted(-k);
    HalfPowerLaurent dd = den_.shifted(-k);
    std::string ns = laurent_to_string(dn);
    std::string ds = laurent_to_string(dd);
    if (dd.is_one()) return ns;
    if (dn.term_count() > 1) ns = "(" + ns + ")";
    if (dd.term_count() > 1) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

}  // namespace qder
