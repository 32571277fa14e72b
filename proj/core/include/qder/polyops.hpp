#pragma once

#include <optional>
#include <vector>

#include "qder/rational.hpp"

namespace qder {

// Dense polynomial over Z, coefficient of x^i at index i. Invariant: either
// empty (the zero polynomial) or the last coefficient is nonzero.
struct ZPoly {
    std::vector<BigInt> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const BigInt& leading() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    static ZPoly constant(long v) {
        ZPoly p;
        if (v != 0) p.c.push_back(BigInt(v));
        return p;
    }
};

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);

// Exact division over Q, returned re-primitivized over Z together with no
// scale tracking (caller handles contents). nullopt when not divisible.
std::optional<ZPoly> zpoly_divide_exact(const ZPoly& num, const ZPoly& den);

// Fast probabilistic rejection: false means "certainly not divisible".
// Requires den monic (used with cyclotomic divisors).
bool zpoly_divisible_quick(const ZPoly& num, const ZPoly& den);

// Content (gcd of coefficients, nonnegative) and primitive part.
BigInt zpoly_content(const ZPoly& p);
void zpoly_make_primitive(ZPoly& p);

// d-th cyclotomic polynomial, cached.
const ZPoly& cyclotomic(int d);

// gcd over Q up to units, returned as a primitive integer polynomial with
// positive leading coefficient. Primitive pseudo-remainder sequence.
ZPoly zpoly_gcd(ZPoly a, ZPoly b);

// Removes the common polynomial factors of num and den, leaving the pair
// coprime in Q[x]. Fast path: strip known cyclotomic factors of den; when den
// factors completely into cyclotomics (true for every q-Pochhammer-built
// denominator in this project) coprimality is reached by exhaustion. General
// denominators fall back to a full gcd.
void reduce_fraction(ZPoly& num, ZPoly& den);

// Scan bound for the cyclotomic fast path. Covers Phi_d divisors of every
// (1 +- q^-l) factor with l <= 64, i.e. partition sums well past the desk
// scale; larger operands still reduce correctly through the gcd fallback.
inline constexpr int kCyclotomicScanLimit = 128;

}  // namespace qder
