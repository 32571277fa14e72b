#include "qder/polyops.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

namespace qder {

namespace {

// 2^61 - 1. Products of residues fit in __uint128_t.
constexpr std::uint64_t kPrime = 2305843009213693951ULL;

std::uint64_t mod_reduce(const BigInt& v) {
    return static_cast<std::uint64_t>(mpz_fdiv_ui(v.get_mpz_t(), kPrime));
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % kPrime);
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return (a + kPrime - b) % kPrime; }

std::vector<std::uint64_t> to_mod(const ZPoly& p) {
    std::vector<std::uint64_t> r(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) r[i] = mod_reduce(p.c[i]);
    return r;
}

// Exact division restricted to monic divisors: stays in Z throughout.
std::optional<ZPoly> divide_exact_monic(const ZPoly& num, const ZPoly& den) {
    int dd = den.degree();
    ZPoly rem = num;
    ZPoly quot;
    quot.c.assign(num.degree() - dd + 1, BigInt(0));
    for (int i = num.degree(); i >= dd; --i) {
        BigInt top = rem.c[i];
        if (top == 0) continue;
        quot.c[i - dd] = top;
        // den is monic, so this zeroes rem.c[i] exactly.
        for (int j = 0; j <= dd; ++j)
            mpz_submul(rem.c[i - dd + j].get_mpz_t(), top.get_mpz_t(), den.c[j].get_mpz_t());
    }
    for (int i = 0; i < dd; ++i)
        if (rem.c[i] != 0) return std::nullopt;
    quot.trim();
    return quot;
}

}  // namespace

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j] == 0) continue;
            mpz_addmul(r.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
        }
    }
    r.trim();
    return r;
}

bool zpoly_divisible_quick(const ZPoly& num, const ZPoly& den) {
    if (num.is_zero()) return true;
    if (den.is_zero() || num.degree() < den.degree()) return false;
    // Synthetic division mod kPrime; only called with monic den.
    std::vector<std::uint64_t> rem = to_mod(num);
    std::vector<std::uint64_t> d = to_mod(den);
    int dd = den.degree();
    for (int i = num.degree(); i >= dd; --i) {
        std::uint64_t q = rem[i];
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] = submod(rem[i - dd + j], mulmod(q, d[j]));
    }
    for (int i = 0; i < dd; ++i)
        if (rem[i] != 0) return false;
    return true;
}

std::optional<ZPoly> zpoly_divide_exact(const ZPoly& num, const ZPoly& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return ZPoly{};
    if (num.degree() < den.degree()) return std::nullopt;
    if (den.leading() == 1) return divide_exact_monic(num, den);

    // General divisor: divide over Q and demand an integral quotient, which
    // Gauss's lemma guarantees whenever den is primitive and divides num.
    const BigInt& lc = den.leading();
    int dd = den.degree();
    std::vector<BigRational> rem(num.c.size());
    for (size_t i = 0; i < num.c.size(); ++i) rem[i] = BigRational(num.c[i]);
    std::vector<BigRational> quot(num.degree() - dd + 1);
    for (int i = num.degree(); i >= dd; --i) {
        BigRational q = rem[i] / BigRational(lc);
        quot[i - dd] = q;
        if (q != 0)
            for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * BigRational(den.c[j]);
    }
    for (int i = 0; i < dd; ++i)
        if (rem[i] != 0) return std::nullopt;
    ZPoly r;
    r.c.resize(quot.size());
    for (size_t i = 0; i < quot.size(); ++i) {
        if (quot[i].get_den() != 1)
            throw std::logic_error("exact polynomial division produced a non-integral quotient");
        r.c[i] = quot[i].get_num();
    }
    r.trim();
    return r;
}

BigInt zpoly_content(const ZPoly& p) {
    BigInt g(0);
    for (const auto& v : p.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

void zpoly_make_primitive(ZPoly& p) {
    if (p.is_zero()) return;
    BigInt g = zpoly_content(p);
    if (p.leading() < 0) g = -g;
    if (g != 1)
        for (auto& v : p.c) v /= g;
}

const ZPoly& cyclotomic(int d) {
    static std::map<int, ZPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // Phi_e = (x^e - 1) / prod_{f | e, f < e} Phi_f, filled bottom-up.
    for (int e = 1; e <= d; ++e) {
        if (cache.count(e)) continue;
        ZPoly xe;
        xe.c.assign(e + 1, BigInt(0));
        xe.c[0] = -1;
        xe.c[e] = 1;
        for (int f = 1; f < e; ++f) {
            if (e % f != 0) continue;
            auto q = zpoly_divide_exact(xe, cache.at(f));
            xe = std::move(*q);
        }
        cache.emplace(e, std::move(xe));
    }
    return cache.at(d);
}

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    zpoly_make_primitive(a);
    zpoly_make_primitive(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);

    auto prem = [](const ZPoly& u, const ZPoly& v) {
        ZPoly r = u;
        const BigInt lv = v.leading();
        int dv = v.degree();
        while (!r.is_zero() && r.degree() >= dv) {
            int k = r.degree() - dv;
            BigInt lr = r.leading();
            for (auto& cc : r.c) cc *= lv;
            for (int j = 0; j <= dv; ++j)
                mpz_submul(r.c[k + j].get_mpz_t(), lr.get_mpz_t(), v.c[j].get_mpz_t());
            r.trim();
        }
        return r;
    };

    while (!b.is_zero()) {
        ZPoly r = prem(a, b);
        zpoly_make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    zpoly_make_primitive(a);
    return a;
}

void reduce_fraction(ZPoly& num, ZPoly& den) {
    if (num.is_zero() || den.degree() == 0) return;

    // Factor den by cyclotomic trial division. `rest` keeps whatever part of
    // den (content included) the scan does not explain.
    std::vector<std::pair<int, int>> factors;  // (d, multiplicity)
    ZPoly rest = den;
    for (int d = 1; d <= kCyclotomicScanLimit && rest.degree() > 0; ++d) {
        const ZPoly& phi = cyclotomic(d);
        if (phi.degree() > rest.degree()) continue;
        int mult = 0;
        while (phi.degree() <= rest.degree() && zpoly_divisible_quick(rest, phi)) {
            auto q = zpoly_divide_exact(rest, phi);
            if (!q) break;
            rest = std::move(*q);
            ++mult;
        }
        if (mult > 0) factors.emplace_back(d, mult);
    }

    if (rest.degree() == 0) {
        // den = rest * prod Phi_d^mult with every factor irreducible over Q,
        // so exhausting them against num leaves the pair coprime.
        ZPoly new_den = rest;
        for (auto& [d, mult] : factors) {
            const ZPoly& phi = cyclotomic(d);
            while (mult > 0 && zpoly_divisible_quick(num, phi)) {
                auto q = zpoly_divide_exact(num, phi);
                if (!q) break;
                num = std::move(*q);
                --mult;
            }
            for (int i = 0; i < mult; ++i) new_den = zpoly_mul(new_den, phi);
        }
        den = std::move(new_den);
        return;
    }

    ZPoly g = zpoly_gcd(num, den);
    if (g.degree() > 0) {
        num = *zpoly_divide_exact(num, g);
        den = *zpoly_divide_exact(den, g);
    }
}

}  // namespace qder
