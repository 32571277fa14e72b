#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qder/rational.hpp"

namespace qder {

// Sparse Laurent polynomial in the formal variable s, where s^2 = q.
// Exponents are s-exponents: even exponents are integral powers of q, odd
// exponents are genuine half powers of q. No zero coefficient is ever stored.
template <class C>
class BasicLaurent {
  public:
    using coeff_type = C;
    using map_type = std::map<int, C>;

    BasicLaurent() = default;

    static BasicLaurent monomial(C coeff, int s_exp) {
        BasicLaurent r;
        if (!(coeff == C(0))) r.terms_.emplace(s_exp, std::move(coeff));
        return r;
    }
    static BasicLaurent one() { return monomial(C(1), 0); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == C(1);
    }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const map_type& terms() const { return terms_; }

    int min_exp() const {
        if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
        return terms_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
        return terms_.rbegin()->first;
    }

    C coefficient(int s_exp) const {
        auto it = terms_.find(s_exp);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(int s_exp, const C& coeff) {
        if (coeff == C(0)) return;
        auto [it, inserted] = terms_.emplace(s_exp, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    BasicLaurent& operator+=(const BasicLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    BasicLaurent& operator-=(const BasicLaurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, C(0) - c);
        return *this;
    }
    friend BasicLaurent operator+(BasicLaurent a, const BasicLaurent& b) { return a += b; }
    friend BasicLaurent operator-(BasicLaurent a, const BasicLaurent& b) { return a -= b; }
    friend BasicLaurent operator-(const BasicLaurent& a) {
        BasicLaurent r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, C(0) - c);
        return r;
    }

    friend BasicLaurent operator*(const BasicLaurent& a, const BasicLaurent& b) {
        BasicLaurent r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    BasicLaurent& operator*=(const BasicLaurent& o) { return *this = *this * o; }

    friend bool operator==(const BasicLaurent& a, const BasicLaurent& b) {
        return a.terms_ == b.terms_;
    }

    // Multiply by coeff * s^k.
    BasicLaurent scaled(const C& coeff, int k = 0) const {
        BasicLaurent r;
        if (coeff == C(0)) return r;
        for (const auto& [e, c] : terms_) {
            C v = c * coeff;
            if (!(v == C(0))) r.terms_.emplace(e + k, v);
        }
        return r;
    }
    BasicLaurent shifted(int k) const { return scaled(C(1), k); }

    BasicLaurent pow(int n) const {
        if (n < 0) throw std::domain_error("negative Laurent power");
        BasicLaurent r = one();
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    // q^k -> (c0 * q^stride)^k on a value of integral q-degree (every stored
    // s-exponent even). c0 must be nonzero when negative exponents occur.
    BasicLaurent substitute_q_monomial(const C& c0, int stride) const {
        BasicLaurent r;
        for (const auto& [e, c] : terms_) {
            if (e % 2 != 0)
                throw std::domain_error("monomial substitution needs integral q-degree");
            int k = e / 2;
            C factor(1);
            if (k >= 0) {
                for (int i = 0; i < k; ++i) factor = factor * c0;
            } else {
                if (c0 == C(0)) throw std::domain_error("substituting zero into negative power");
                C inv = invert_coeff(c0);
                for (int i = 0; i < -k; ++i) factor = factor * inv;
            }
            r.add_term(2 * k * stride, c * factor);
        }
        return r;
    }

    bool all_exponents_even() const {
        for (const auto& [e, c] : terms_)
            if (e % 2 != 0) return false;
        return true;
    }

    // Value at s = v (v must be nonzero if negative exponents occur).
    C eval(const C& v) const {
        C acc(0);
        for (const auto& [e, c] : terms_) {
            C p(1);
            if (e >= 0) {
                for (int i = 0; i < e; ++i) p = p * v;
            } else {
                C inv = invert_coeff(v);
                for (int i = 0; i < -e; ++i) p = p * inv;
            }
            acc += c * p;
        }
        return acc;
    }

  private:
    static C invert_coeff(const C& v);

    map_type terms_;
};

template <>
inline BigRational BasicLaurent<BigRational>::invert_coeff(const BigRational& v) {
    if (v == 0) throw std::domain_error("division by zero coefficient");
    return 1 / v;
}

template <>
inline GaussianRational BasicLaurent<GaussianRational>::invert_coeff(const GaussianRational& v) {
    BigRational n = v.re * v.re + v.im * v.im;
    if (n == 0) throw std::domain_error("division by zero coefficient");
    return {v.re / n, -v.im / n};
}

using HalfPowerLaurent = BasicLaurent<BigRational>;
using GaussianLaurent = BasicLaurent<GaussianRational>;

inline HalfPowerLaurent real_part(const GaussianLaurent& g, bool require_real = true) {
    HalfPowerLaurent r;
    for (const auto& [e, c] : g.terms()) {
        if (require_real && c.im != 0)
            throw std::domain_error("nonzero imaginary part in a sum expected to be real");
        r.add_term(e, c.re);
    }
    return r;
}

}  // namespace qder
