#include <doctest.h>

#include "qder/poch_sum.hpp"
#include "qder/qfunctions.hpp"
#include "qder/report.hpp"

using namespace qder;

namespace {
RationalFunction Q() { return RationalFunction::q(); }
}

TEST_CASE("poch accumulator agrees with direct rational arithmetic") {
    // 3/( (1-q^-2)(1+q^-1) ) + q^2/(1-q^-2)^2, assembled both ways.
    std::vector<PochFactor> basis{{-2, +1}, {-1, -1}};
    PochSum acc(basis, {2, 1}, 0, 4);
    acc.add_term(BigInt(3), {{0, 1}}, 0, {1, 1});
    acc.add_term(BigInt(1), {{0, 1}}, 4, {2, 0});
    CHECK(acc.terms_added() == 2);

    RationalFunction f1 = RationalFunction(3) /
                          ((RationalFunction(1) - RationalFunction::monomial_q(-1).pow(2)) *
                           (RationalFunction(1) + RationalFunction::monomial_q(-1)));
    RationalFunction one_m = RationalFunction(1) - RationalFunction::monomial_q(-1) *
                                                       RationalFunction::monomial_q(-1);
    RationalFunction f2 = (Q() * Q()) / (one_m * one_m);
    CHECK(std::move(acc).finalize() == f1 + f2);
}

TEST_CASE("poch accumulator scale and merge") {
    std::vector<PochFactor> basis{{1, +1}};
    PochSum a(basis, {1}, 0, 2), b(basis, {1}, 0, 2);
    a.add_term(BigInt(1), {{0, 1}}, 0, {1});   // 1/(1-q)
    b.add_term(BigInt(1), {{2, -1}}, 0, {0});  // -q
    a.merge(b);
    // 1/(1-q) - q, scaled by 1/2
    RationalFunction expect =
        (RationalFunction(1) / (RationalFunction(1) - Q()) - Q()) * RationalFunction(BigRational(1, 2));
    CHECK(std::move(a).finalize(BigRational(1, 2)) == expect);
}

TEST_CASE("poch accumulator rejects surviving imaginary parts") {
    std::vector<PochFactor> basis{{-1, +1}};
    PochSum acc(basis, {1}, 0, 0);
    acc.add_term(BigInt(0), BigInt(1), {{0, 1}}, 0, {0});  // purely imaginary term
    CHECK(acc.has_imaginary_part());
    CHECK_THROWS_AS(std::move(acc).finalize(), std::domain_error);
}

TEST_CASE("imaginary contributions that cancel are fine") {
    std::vector<PochFactor> basis{{-1, +1}};
    PochSum acc(basis, {1}, 0, 0);
    acc.add_term(BigInt(2), BigInt(5), {{0, 1}}, 0, {1});
    acc.add_term(BigInt(1), BigInt(-5), {{0, 1}}, 0, {1});
    CHECK_FALSE(acc.has_imaginary_part());
    RationalFunction expect = RationalFunction(3) / (RationalFunction(1) - Q().inverse());
    CHECK(std::move(acc).finalize() == expect);
}

TEST_CASE("report summaries, exit semantics and timing strip") {
    Report r;
    r.command = "verify";
    r.config = {{"family", "demo"}};
    Record a;
    a.family = "demo";
    a.params = {{"m", 1}};
    a.lhs = a.rhs = "1/q";
    a.equal = true;
    a.terms = 2;
    a.elapsed_ms = 7;
    Record b = a;
    b.equal = false;
    b.rhs = "1/q^2";
    r.records = {a, b};

    CHECK(r.checked() == 2);
    CHECK(r.passed() == 1);
    CHECK(r.failed() == 1);
    CHECK_FALSE(r.all_equal());

    std::string json = r.to_json();
    CHECK(json.find("\"checked\": 2") != std::string::npos);
    CHECK(json.find("\"elapsed_ms\": 7") != std::string::npos);
    r.strip_timing();
    json = r.to_json();
    CHECK(json.find("\"elapsed_ms\": 7") == std::string::npos);

    std::string csv = r.to_csv();
    CHECK(csv.find("demo,m=1,1/q,1/q,true,false,2,0") != std::string::npos);
    std::string pretty = r.to_pretty();
    CHECK(pretty.find("[FAIL]") != std::string::npos);
}

TEST_CASE("substitution guards") {
    RationalFunction f = (Q() - 1) / (Q() + 1);
    CHECK_THROWS(f.substitute_monomial(BigRational(0), 1));
    CHECK_THROWS(f.substitute_monomial(BigRational(1), 0));
    CHECK_THROWS(RationalFunction::monomial_s(1).substitute_monomial(BigRational(1), 2));
    // q -> q^2 then q -> q^{1} inverse round trip on integral values
    RationalFunction g = f.substitute_monomial(BigRational(1), 2);
    CHECK(g == (Q().pow(2) - 1) / (Q().pow(2) + 1));
}
