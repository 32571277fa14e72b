#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qder/rational_function.hpp"

namespace qder {

// One factor (1 - sign * q^q_exp) of a q-Pochhammer-style denominator.
struct PochFactor {
    int q_exp;  // nonzero; negative for the (1/q^k)_j flavors
    int sign;   // +1 or -1

    friend bool operator==(const PochFactor& a, const PochFactor& b) {
        return a.q_exp == b.q_exp && a.sign == b.sign;
    }
};

// Accumulates sum_t coeff_t * numer_t(s) * s^shift_t / prod_i f_i^{mult_t[i]}
// over a fixed factor basis, on the shared denominator prod_i f_i^{max_mult[i]}.
// Coefficients are Gaussian integers so tau-weighted sums ride the same path;
// purely real sums simply never touch the imaginary half. One exact reduction
// happens at finalize instead of one gcd per term.
class PochSum {
  public:
    // numer_lo/high: bounds of (shift_t + exponents of numer_t) over all terms
    // to come; the dense window is widened by the cofactor exponent range.
    PochSum(std::vector<PochFactor> basis, std::vector<int> max_mult, int numer_lo, int numer_hi);

    // Sparse integer Laurent numerator: (s_exp, coefficient) pairs.
    using SparseNumer = std::vector<std::pair<int, long>>;

    void add_term(const BigInt& coeff_re, const BigInt& coeff_im, const SparseNumer& numer,
                  int s_shift, const std::vector<int>& mult);
    void add_term(const BigInt& coeff_re, const SparseNumer& numer, int s_shift,
                  const std::vector<int>& mult) {
        add_term(coeff_re, BigInt(0), numer, s_shift, mult);
    }

    // Exact merge of a partial sum built with identical parameters.
    void merge(const PochSum& other);

    bool has_imaginary_part() const;

    // value = scale * numerator / prod f_i^{max_mult[i]}, canonically reduced.
    // Throws if any imaginary residue survived.
    RationalFunction finalize(const BigRational& scale = BigRational(1)) const;

    long long terms_added() const { return terms_; }

  private:
    const std::vector<std::pair<int, BigInt>>& cofactor(const std::vector<int>& mult);

    std::vector<PochFactor> basis_;
    std::vector<int> max_mult_;
    int lo_ = 0;
    std::vector<BigInt> re_, im_;
    bool any_im_ = false;
    long long terms_ = 0;
    std::map<std::vector<int>, std::vector<std::pair<int, BigInt>>> cofactor_cache_;
};

}  // namespace qder
