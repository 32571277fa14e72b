#pragma once

#include <string>
#include <vector>

#include "qder/rational_function.hpp"
#include "qder/report.hpp"

namespace qder {

// Power series in y truncated at a fixed exclusive order, with exact
// rational-function coefficients. Arithmetic never consults degrees >= order.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int order);

    static TruncatedSeries one(int order);
    // 1/(1 - y^step)
    static TruncatedSeries geometric(int order, int step = 1);

    int order() const { return static_cast<int>(c_.size()); }
    const RationalFunction& coefficient(int k) const;
    void set_coefficient(int k, RationalFunction v);

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries inverse() const;  // needs an invertible constant term

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.c_ == b.c_;
    }

  private:
    std::vector<RationalFunction> c_;
};

enum class TFamily { u, sp, o, o_bar };
TruncatedSeries build_T(TFamily f, int order);

// Re-executes the cycle-index factorization proofs: builds U' from the
// proved/conjectured coefficient formulas, recovers D' through the stated
// factorization, and compares the resulting coefficients against the closed
// forms, one record per index.
enum class ChainFamily { u, sp, o_sum, o_diff };
std::string chain_family_name(ChainFamily f);
std::vector<Record> verify_chain(ChainFamily f, int order);

// Truncated verification of the classical identities used by the proofs.
// euler: sum_m y^m/(q^m (1/q)_m) = prod_i (1 - y q^{-i})^{-1}, compared in
// Q[[1/q, y]] with both grades windowed; jacobi: the triple product, compared
// as z-Laurent polynomials with q-degree windowed at the bound.
bool euler_check(int order);
bool jacobi_check(int degree_bound);
// The bilateral-difference specialization used alongside the triple product:
// F21 - F22 = -((xy+1)/(xy)) prod (1-yx^b)(1-y^{-1}x^{b-1})(1-x^b).
bool jacobi_specialization_check(int degree_bound);

}  // namespace qder
