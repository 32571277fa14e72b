#include "qder/finite_field.hpp"

#include <stdexcept>

namespace qder {

namespace {

// Polynomials over F_p of degree < f, encoded as base-p integers.
struct PolyArith {
    int p, f;

    std::vector<int> digits(int v) const {
        std::vector<int> d(f, 0);
        for (int i = 0; i < f; ++i) {
            d[i] = v % p;
            v /= p;
        }
        return d;
    }

    int encode(const std::vector<int>& d) const {
        int v = 0;
        for (int i = f - 1; i >= 0; --i) v = v * p + d[i];
        return v;
    }
};

// Multiplies two degree-<f polys and reduces mod the monic irreducible,
// given by its low coefficients irr[0..f-1] (x^f = -irr).
int mul_mod(const PolyArith& pa, const std::vector<int>& irr, int a, int b) {
    int p = pa.p, f = pa.f;
    std::vector<int> da = pa.digits(a), db = pa.digits(b);
    std::vector<int> prod(2 * f - 1, 0);
    for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (int k = 2 * f - 2; k >= f; --k) {
        int c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < f; ++i) prod[k - f + i] = (prod[k - f + i] + c * (p - irr[i])) % p;
    }
    prod.resize(f);
    return pa.encode(prod);
}

bool is_irreducible(const PolyArith& pa, const std::vector<int>& irr) {
    // Trial division by all monic polynomials of degree 1..f/2.
    int p = pa.p, f = pa.f;
    // Work with full coefficient vectors: candidate poly x^f + irr.
    std::vector<int> target(f + 1, 0);
    for (int i = 0; i < f; ++i) target[i] = irr[i];
    target[f] = 1;
    for (int deg = 1; deg <= f / 2; ++deg) {
        int count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (int low = 0; low < count; ++low) {
            std::vector<int> div(deg + 1, 0);
            int v = low;
            for (int i = 0; i < deg; ++i) {
                div[i] = v % p;
                v /= p;
            }
            div[deg] = 1;
            // long division of target by div over F_p
            std::vector<int> rem = target;
            for (int k = f; k >= deg; --k) {
                int c = rem[k];
                if (c == 0) continue;
                for (int i = 0; i <= deg; ++i)
                    rem[k - deg + i] = ((rem[k - deg + i] - c * div[i]) % p + p) % p;
            }
            bool zero = true;
            for (int i = 0; i < deg; ++i)
                if (rem[i] != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

int smallest_prime_factor(int v) {
    if (v < 2) return 0;
    for (int d = 2; static_cast<long long>(d) * d <= v; ++d)
        if (v % d == 0) return d;
    return v;
}

bool is_prime_power(int q, int* p_out, int* k_out) {
    int p = smallest_prime_factor(q);
    if (p == 0) return false;
    int k = 0, v = q;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    if (v != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

SmallField SmallField::make(int q) {
    int p = 0, f = 0;
    if (!is_prime_power(q, &p, &f)) throw std::invalid_argument("field size must be a prime power");
    if (q > 4096) throw std::invalid_argument("field too large to tabulate");

    SmallField fld;
    fld.p_ = p;
    fld.f_ = f;
    fld.q_ = q;

    PolyArith pa{p, f};
    std::vector<int> irr(f, 0);
    if (f > 1) {
        // Find a monic irreducible x^f + irr by scanning low coefficients.
        int count = 1;
        for (int i = 0; i < f; ++i) count *= p;
        bool found = false;
        for (int low = 0; low < count && !found; ++low) {
            int v = low;
            for (int i = 0; i < f; ++i) {
                irr[i] = v % p;
                v /= p;
            }
            if (is_irreducible(pa, irr)) found = true;
        }
        if (!found) throw std::logic_error("no irreducible polynomial found");
    }

    fld.add_.resize(q * q);
    fld.mul_.resize(q * q);
    fld.neg_.resize(q);
    for (int a = 0; a < q; ++a) {
        auto da = pa.digits(a);
        std::vector<int> dn(f);
        for (int i = 0; i < f; ++i) dn[i] = (p - da[i]) % p;
        fld.neg_[a] = pa.encode(dn);
        for (int b = 0; b < q; ++b) {
            auto db = pa.digits(b);
            std::vector<int> ds(f);
            for (int i = 0; i < f; ++i) ds[i] = (da[i] + db[i]) % p;
            fld.add_[a * q + b] = pa.encode(ds);
            fld.mul_[a * q + b] = f == 1 ? (a * b) % p : mul_mod(pa, irr, a, b);
        }
    }
    fld.inv_.assign(q, 0);
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b)
            if (fld.mul_[a * q + b] == 1) {
                fld.inv_[a] = b;
                break;
            }
        if (fld.inv_[a] == 0) throw std::logic_error("field element without inverse");
    }
    return fld;
}

int SmallField::inv(int a) const {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    return inv_[a];
}

int SmallField::pow(int a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    int r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<int> SmallField::power_table(long r) const {
    std::vector<int> t(q_);
    for (int a = 0; a < q_; ++a) t[a] = pow(a, r);
    return t;
}

}  // namespace qder
