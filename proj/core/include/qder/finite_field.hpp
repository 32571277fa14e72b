#pragma once

#include <vector>

namespace qder {

// Finite field with at most a few thousand elements, fully tabulated.
// Elements are indices 0..q-1; index encodes the polynomial coordinates over
// the prime field in base p, so 0 is zero and 1 is one.
class SmallField {
  public:
    // q = p^f a prime power.
    static SmallField make(int q);

    int size() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return f_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;
    int pow(int a, long e) const;

    // x -> x^r as a table; r = q0 gives the conjugation of F_{q0^2} over F_{q0}.
    std::vector<int> power_table(long r) const;

  private:
    int p_ = 0, f_ = 0, q_ = 0;
    std::vector<int> add_, mul_, neg_, inv_;
};

// Largest prime dividing v, or 0 if v < 2. Used for prime-power validation.
int smallest_prime_factor(int v);
// True iff q = p^k for a prime p, k >= 1; reports p and k.
bool is_prime_power(int q, int* p_out = nullptr, int* k_out = nullptr);

}  // namespace qder
