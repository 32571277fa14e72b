#include <doctest.h>

#include "qder/formulas.hpp"
#include "qder/series.hpp"

using namespace qder;

namespace {
RationalFunction Q() { return RationalFunction::q(); }
}

TEST_CASE("series basics") {
    int n = 10;
    TruncatedSeries one = TruncatedSeries::one(n);
    TruncatedSeries geo = TruncatedSeries::geometric(n);

    // invert(1 - y) = sum y^k
    TruncatedSeries one_minus_y(n);
    one_minus_y.set_coefficient(0, RationalFunction(1));
    one_minus_y.set_coefficient(1, RationalFunction(-1));
    CHECK(one_minus_y.inverse() == geo);
    CHECK(one_minus_y * geo == one);

    CHECK_THROWS(TruncatedSeries(n).inverse());
    CHECK_THROWS(one + TruncatedSeries(n + 1));
}

TEST_CASE("T-series coefficients") {
    int n = 16;
    TruncatedSeries tu = build_T(TFamily::u, n);
    CHECK(tu.coefficient(0) == RationalFunction(1));
    for (int m = 1; m < n; ++m)
        CHECK(tu.coefficient(m) == steinberg_proportion(LinearFamily::u, m));

    TruncatedSeries tsp = build_T(TFamily::sp, n);
    for (int m = 1; 2 * m < n; ++m) {
        CHECK(tsp.coefficient(2 * m) == steinberg_proportion(LinearFamily::sp, m));
        CHECK(tsp.coefficient(2 * m - 1).is_zero());
    }

    // T_O = (1 + y) T_Sp
    TruncatedSeries one_plus_y(n);
    one_plus_y.set_coefficient(0, RationalFunction(1));
    one_plus_y.set_coefficient(1, RationalFunction(1));
    CHECK(build_T(TFamily::o, n) == one_plus_y * tsp);

    TruncatedSeries tbar = build_T(TFamily::o_bar, n);
    CHECK(tbar.coefficient(2) ==
          (Q() * Q() * (RationalFunction(1) - (Q() * Q()).inverse())).inverse());
}

TEST_CASE("all-ones specialization: D' U'^{-1} T_U is the geometric series") {
    int n = 13;
    TruncatedSeries dprime(n), uprime(n);
    dprime.set_coefficient(0, RationalFunction(1));
    uprime.set_coefficient(0, RationalFunction(1));
    for (int m = 1; m < n; ++m) {
        dprime.set_coefficient(m, d_prime_unitary_display(m));
        uprime.set_coefficient(m, steinberg_proportion(LinearFamily::u, m) - delta_p_au(m));
    }
    TruncatedSeries lhs = dprime * uprime.inverse() * build_T(TFamily::u, n);
    CHECK(lhs == TruncatedSeries::geometric(n));
}

TEST_CASE("factorization chains at order 10") {
    for (ChainFamily f : {ChainFamily::u, ChainFamily::sp, ChainFamily::o_sum, ChainFamily::o_diff}) {
        auto recs = verify_chain(f, 10);
        CHECK(!recs.empty());
        for (const auto& r : recs) CHECK(r.equal);
    }
}

TEST_CASE("o-diff chain reproduces the difference display at order 22") {
    auto recs = verify_chain(ChainFamily::o_diff, 22);
    REQUIRE(recs.size() == 10);
    for (const auto& r : recs) CHECK(r.equal);
}

TEST_CASE("euler and jacobi windows") {
    CHECK(euler_check(6));
    CHECK(jacobi_check(12));
    CHECK(jacobi_specialization_check(10));
    CHECK_THROWS(euler_check(1));
}
