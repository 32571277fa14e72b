#include <doctest.h>

#include <random>

#include "qder/qfunctions.hpp"
#include "qder/rational_function.hpp"

using namespace qder;

namespace {

RationalFunction Q() { return RationalFunction::q(); }

// Random small rational function from a fixed-seed pool; denominators are
// arbitrary (not Pochhammer-shaped) to exercise the general gcd path.
struct Rng {
    std::mt19937 gen{20250810};

    int small(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }

    HalfPowerLaurent laurent() {
        HalfPowerLaurent p;
        int terms = small(1, 4);
        for (int i = 0; i < terms; ++i)
            p.add_term(small(-4, 6), BigRational(small(-5, 5)));
        if (p.is_zero()) p.add_term(0, BigRational(1));
        return p;
    }

    RationalFunction value() {
        HalfPowerLaurent den = laurent();
        while (den.is_zero()) den = laurent();
        return RationalFunction(laurent(), den);
    }
};

}  // namespace

TEST_CASE("pochhammer base cases and spec examples") {
    CHECK(pochhammer(Q(), 0) == RationalFunction(1));
    CHECK(pochhammer(RationalFunction(7) / Q(), 0) == RationalFunction(1));

    RationalFunction x = RationalFunction(1) / (Q() * Q());
    CHECK(pochhammer(x, 1) == RationalFunction(1) - x);

    // (1 + 1/q)(1 - 1/q^2), expanded by an independent Laurent multiply.
    RationalFunction y = RationalFunction(-1) / Q();
    HalfPowerLaurent a = HalfPowerLaurent::one();
    a.add_term(-2, BigRational(1));  // 1 + q^{-1}
    HalfPowerLaurent b = HalfPowerLaurent::one();
    b.add_term(-4, BigRational(-1));  // 1 - q^{-2}
    CHECK(pochhammer(y, 2) == RationalFunction(a * b));
}

TEST_CASE("pochhammer recurrence (x)_{j+1} = (x)_j (1 - x^{j+1})") {
    RationalFunction x = RationalFunction(-1) / Q();
    RationalFunction acc(1);
    for (int j = 0; j <= 30; ++j) {
        CHECK(pochhammer(x, j) == acc);
        acc *= RationalFunction(1) - x.pow(j + 1);
    }
}

TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(5, 0) == RationalFunction(1));
    CHECK(gaussian_binomial(2, 1) == RationalFunction(1) + Q());

    // (4,2): brute-force expansion of (q)_4 / ((q)_2 (q)_2).
    RationalFunction expect = pochhammer(Q(), 4) / (pochhammer(Q(), 2) * pochhammer(Q(), 2));
    CHECK(gaussian_binomial(4, 2) == expect);
    CHECK(gaussian_binomial(4, 2).to_string() == "q^4 + q^3 + 2*q^2 + q + 1");

    CHECK_THROWS(gaussian_binomial(3, 4));
}

TEST_CASE("gaussian binomial symmetry and value at q = 1") {
    for (int n = 0; n <= 9; ++n) {
        for (int k = 0; k <= n; ++k) {
            RationalFunction g = gaussian_binomial(n, k);
            CHECK(g == gaussian_binomial(n, n - k));
            // coefficient sum = binomial(n, k)
            BigRational sum(0);
            for (const auto& [e, c] : g.numerator().terms()) sum += c;
            BigInt expect;
            mpz_bin_uiui(expect.get_mpz_t(), n, k);
            CHECK(sum == BigRational(expect));
        }
    }
}

TEST_CASE("field operations and evaluation") {
    RationalFunction f = RationalFunction(1) / (Q() + 1);
    CHECK(f.eval_at_q(BigRational(2)) == BigRational(1, 3));

    RationalFunction g = (Q() - 1) / (Q() * Q());
    CHECK(g.eval_at_q(BigRational(2)) == BigRational(1, 4));

    RationalFunction h = RationalFunction(1) - RationalFunction(1) / (Q() * Q());
    CHECK(h.inverse() * h == RationalFunction(1));

    CHECK_THROWS(RationalFunction().inverse());
    CHECK_THROWS(f.eval_at_q(BigRational(0)));
    // denominator vanishing at the evaluation point
    CHECK_THROWS(f.eval_at_q(BigRational(-1)));
}

TEST_CASE("half powers require square q at evaluation") {
    RationalFunction s = RationalFunction::monomial_s(1);
    CHECK_FALSE(s.has_integral_q_degree());
    CHECK(s.eval_at_q(BigRational(4)) == BigRational(2));
    CHECK(s.eval_at_q(BigRational(9, 4)) == BigRational(3, 2));
    CHECK_THROWS(s.eval_at_q(BigRational(2)));
    CHECK((s * s).has_integral_q_degree());
    CHECK((s * s).eval_at_q(BigRational(2)) == BigRational(2));
}

TEST_CASE("canonical form is idempotent and stable under reconstruction") {
    Rng rng;
    for (int i = 0; i < 1000; ++i) {
        RationalFunction v = rng.value();
        // Rebuild from the canonical parts; must reproduce itself exactly.
        RationalFunction w(v.numerator(), v.denominator());
        CHECK(v == w);
        // scaling numerator and denominator by a common junk factor reduces back
        HalfPowerLaurent junk = rng.laurent();
        if (junk.is_zero()) continue;
        RationalFunction u(v.numerator() * junk, v.denominator() * junk);
        CHECK(u == v);
    }
}

TEST_CASE("ring axioms on random small operands") {
    Rng rng;
    for (int i = 0; i < 700; ++i) {
        RationalFunction a = rng.value(), b = rng.value(), c = rng.value();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == RationalFunction());
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("canonical denominator properties") {
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        RationalFunction v = rng.value();
        if (v.is_zero()) continue;
        const HalfPowerLaurent& d = v.denominator();
        CHECK(d.min_exp() == 0);
        CHECK(d.coefficient(d.max_exp()) == BigRational(1));
    }
}

TEST_CASE("rendering") {
    CHECK(((Q() * Q() - Q() + 1) / (Q() * Q() * Q())).to_string() == "(q^2 - q + 1)/q^3");
    CHECK(RationalFunction(BigRational(25, 64)).to_string() == "25/64");
    CHECK((RationalFunction(1) / Q()).to_string() == "1/q");
    CHECK(RationalFunction::monomial_s(3).to_string() == "q^(3/2)");
    CHECK(RationalFunction().to_string() == "0");
}

TEST_CASE("gaussian-coefficient laurent ring") {
    GaussianRational i = gaussian_unit(0, 1);
    CHECK(i * i == GaussianRational(BigRational(-1)));

    GaussianLaurent a = GaussianLaurent::monomial(i, 2);
    GaussianLaurent b = GaussianLaurent::monomial(gaussian_unit(0, -1), -2);
    CHECK((a * b).is_one());

    // (1 + i q)(1 - i q) = 1 + q^2: purely real product
    GaussianLaurent u = GaussianLaurent::one();
    u.add_term(2, i);
    GaussianLaurent v = GaussianLaurent::one();
    v.add_term(2, gaussian_unit(0, -1));
    GaussianLaurent prod = u * v;
    HalfPowerLaurent re = real_part(prod);
    HalfPowerLaurent expect = HalfPowerLaurent::one();
    expect.add_term(4, BigRational(1));
    CHECK(re == expect);

    CHECK_THROWS(real_part(u));  // imaginary survives
}

TEST_CASE("series expansion of rational functions") {
    auto geo = (RationalFunction(1) / (RationalFunction(1) - Q())).series_coefficients_q(6);
    for (const auto& c : geo) CHECK(c == 1);

    auto sq = ((Q() * Q()) / (RationalFunction(1) - Q())).series_coefficients_q(5);
    CHECK(sq[0] == 0);
    CHECK(sq[1] == 0);
    for (int i = 2; i <= 5; ++i) CHECK(sq[i] == 1);
}
