#include <doctest.h>

#include "qder/formulas.hpp"
#include "qder/qfunctions.hpp"

using namespace qder;

namespace {
RationalFunction Q() { return RationalFunction::q(); }
}

TEST_CASE("delta_agl") {
    CHECK(delta_agl(1) == RationalFunction(1) / Q());
    CHECK(delta_agl(2) == RationalFunction(1) / Q() - (Q() * Q() * Q()).inverse());
    CHECK(delta_agl(3).eval_at_q(BigRational(2)) == BigRational(25, 64));
}

TEST_CASE("delta_au") {
    CHECK(delta_au(1) == (Q() - 1) / (Q() * Q()));
    CHECK(delta_au(1).eval_at_q(BigRational(2)) == BigRational(1, 4));
    CHECK(delta_au(2).eval_at_q(BigRational(2)) == BigRational(11, 32));
}

TEST_CASE("delta_p_au") {
    CHECK(delta_p_au(1) == (Q() - 1) / (Q() * Q()));
    CHECK(delta_p_au(1).eval_at_q(BigRational(2)) == BigRational(1, 4));
}

TEST_CASE("delta_au complement display sums to one") {
    for (int m = 1; m <= 25; ++m) CHECK(delta_au(m) + d_prime_unitary_display(m) == RationalFunction(1));
}

TEST_CASE("telescoping of the unitary partial sums") {
    // (1/(q+1)) sum_{i=1..m} ((-q)^{i+1}-1)/(-q)^{i(i+3)/2} telescopes to delta_au.
    for (int m = 1; m <= 30; ++m) {
        RationalFunction acc;
        for (int i = 1; i <= m; ++i) {
            long t = static_cast<long>(i) * (i + 3) / 2;
            acc += (RationalFunction::neg_q_pow(i + 1) - 1) * RationalFunction::neg_q_pow(0) /
                   RationalFunction::neg_q_pow(static_cast<int>(t));
        }
        acc = acc / (Q() + 1);
        CHECK(acc == delta_au(m));
    }
}

TEST_CASE("telescoping of the symplectic partial sums") {
    for (int m = 1; m <= 30; ++m) {
        RationalFunction acc;
        for (int i = 1; i <= m; ++i) {
            RationalFunction sgn(i % 2 == 0 ? -1 : 1);
            acc += sgn * (RationalFunction::monomial_q(2 * i + 1) + 1) /
                   RationalFunction::monomial_q(i * (i + 2));
        }
        acc = acc / (Q() + 1);
        CHECK(acc == conj_delta(Family::asp, m));
    }
    for (int m = 1; m <= 25; ++m)
        CHECK(conj_delta(Family::asp, m) + d_prime_sympl_display(m) == RationalFunction(1));
}

TEST_CASE("conj_delta examples") {
    CHECK(conj_delta(Family::asp, 1).eval_at_q(BigRational(3)) == BigRational(7, 27));
    CHECK(conj_delta(Family::ao_odd, 1).eval_at_q(BigRational(3)) == BigRational(41, 81));
    CHECK(conj_delta(Family::ao_plus, 1).eval_at_q(BigRational(3)) == BigRational(5, 9));
    CHECK(conj_delta(Family::ao_minus, 1).eval_at_q(BigRational(3)) == BigRational(4, 9));
    CHECK_THROWS(conj_delta(Family::au, 1));
}

TEST_CASE("conjectured identity right-hand sides") {
    CHECK(conj_identity_rhs(ConjIdentity::sympl, 1) ==
          (Q() * Q() - Q() + 1) / (Q() * Q() * Q()));
    CHECK(conj_identity_rhs(ConjIdentity::orth_even, 1) == RationalFunction(1) / Q());
    CHECK(conj_identity_rhs(ConjIdentity::orth_odd, 1).eval_at_q(BigRational(3)) ==
          BigRational(85, 324));
}

TEST_CASE("orth_diff_rhs is g evaluated at 1/q^2") {
    CHECK(orth_diff_rhs(1) == (Q() * Q()).inverse());
    for (int m = 1; m <= 10; ++m)
        CHECK(orth_diff_rhs(m) == g_rhs(m).substitute_monomial(BigRational(1), -2));
}

TEST_CASE("generating functions at m = 1 and 2") {
    CHECK(genfun_cute_rhs(1) == Q());  // x, reading the variable as x
    CHECK(g_rhs(1) == Q());
    CHECK(h_rhs(1) == Q() + Q() * Q());

    auto c2 = genfun_cute_rhs(2).series_coefficients_q(6);
    CHECK(c2[2] == 1);
    CHECK(c2[3] == 0);
    CHECK(c2[4] == 0);
    CHECK(c2[5] == 1);
    CHECK(c2[6] == 1);  // the partition (4,2)
    CHECK(genfun_cute_rhs(2) == Q() * Q() * (RationalFunction(1) - Q() + Q().pow(3)) /
                                    (RationalFunction(1) - Q()));
}

TEST_CASE("h = g + x k for m <= 12, and k equals the cute generating function") {
    for (int m = 1; m <= 12; ++m) {
        CHECK(h_rhs(m) == g_rhs(m) + Q() * k_rhs(m));
        CHECK(k_rhs(m) == genfun_cute_rhs(m));
    }
}

TEST_CASE("steinberg proportions") {
    CHECK(steinberg_proportion(LinearFamily::sp, 1).eval_at_q(BigRational(3)) ==
          BigRational(3, 8));
    CHECK(steinberg_proportion(LinearFamily::u, 1) == (Q() + 1).inverse());
    CHECK(steinberg_proportion(LinearFamily::o_plus, 1).eval_at_q(BigRational(3)) ==
          BigRational(1, 4));
}

TEST_CASE("group orders") {
    CHECK(group_order(LinearFamily::u, 1) == Q() + 1);
    CHECK(group_order(LinearFamily::u, 2).eval_at_q(BigRational(2)) == BigRational(18));
    CHECK(group_order(LinearFamily::sp, 1).eval_at_q(BigRational(3)) == BigRational(24));
    CHECK(group_order(LinearFamily::o_plus, 1).eval_at_q(BigRational(3)) == BigRational(4));
    CHECK(group_order(LinearFamily::o_minus, 1).eval_at_q(BigRational(3)) == BigRational(8));
    CHECK(group_order(LinearFamily::o_odd, 1).eval_at_q(BigRational(3)) == BigRational(48));
    CHECK(group_order(LinearFamily::gl, 2).eval_at_q(BigRational(3)) == BigRational(48));
}

TEST_CASE("proportions stay strictly inside (0,1)") {
    for (int m = 1; m <= 10; ++m) {
        for (int q : {2, 3, 4, 5, 7, 9}) {
            BigRational v = delta_au(m).eval_at_q(BigRational(q));
            CHECK(v > 0);
            CHECK(v < 1);
            v = delta_agl(m).eval_at_q(BigRational(q));
            CHECK(v > 0);
            CHECK(v < 1);
        }
        for (int q : {3, 5, 7, 9}) {
            for (Family f : {Family::asp, Family::ao_odd, Family::ao_plus, Family::ao_minus}) {
                BigRational v = conj_delta(f, m).eval_at_q(BigRational(q));
                CHECK(v > 0);
                CHECK(v < 1);
            }
        }
    }
}
