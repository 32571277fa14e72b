#include "qder/series.hpp"

#include <chrono>
#include <map>
#include <stdexcept>

#include "qder/formulas.hpp"

namespace qder {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 1) throw std::invalid_argument("series order must be >= 1");
    c_.assign(order, RationalFunction());
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.c_[0] = RationalFunction(1);
    return s;
}

TruncatedSeries TruncatedSeries::geometric(int order, int step) {
    TruncatedSeries s(order);
    for (int k = 0; k < order; k += step) s.c_[k] = RationalFunction(1);
    return s;
}

const RationalFunction& TruncatedSeries::coefficient(int k) const {
    if (k < 0 || k >= order()) throw std::out_of_range("series coefficient out of range");
    return c_[k];
}

void TruncatedSeries::set_coefficient(int k, RationalFunction v) {
    if (k < 0 || k >= order()) throw std::out_of_range("series coefficient out of range");
    c_[k] = std::move(v);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    TruncatedSeries r(a.order());
    for (int k = 0; k < a.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    TruncatedSeries r(a.order());
    for (int k = 0; k < a.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    TruncatedSeries r(a.order());
    for (int i = 0; i < a.order(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j < b.order(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("series inverse needs a nonzero constant term");
    TruncatedSeries r(order());
    RationalFunction inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (int k = 1; k < order(); ++k) {
        RationalFunction acc;
        for (int j = 1; j <= k; ++j) {
            if (c_[j].is_zero() || r.c_[k - j].is_zero()) continue;
            acc += c_[j] * r.c_[k - j];
        }
        r.c_[k] = -(inv0 * acc);
    }
    return r;
}

namespace {

// 1/(q^h (1/q^2)_h)
RationalFunction t_sp_coefficient(int h) {
    if (h == 0) return RationalFunction(1);
    return steinberg_proportion(LinearFamily::sp, h);
}

}  // namespace

TruncatedSeries build_T(TFamily f, int order) {
    TruncatedSeries s(order);
    for (int m = 0; m < order; ++m) {
        switch (f) {
            case TFamily::u:
                s.set_coefficient(m, m == 0 ? RationalFunction(1)
                                            : steinberg_proportion(LinearFamily::u, m));
                break;
            case TFamily::sp:
                if (m % 2 == 0) s.set_coefficient(m, t_sp_coefficient(m / 2));
                break;
            case TFamily::o:
                s.set_coefficient(m, t_sp_coefficient(m / 2));
                break;
            case TFamily::o_bar:
                if (m % 2 == 0)
                    s.set_coefficient(m, RationalFunction::monomial_q(-m / 2) *
                                             t_sp_coefficient(m / 2));
                break;
        }
    }
    return s;
}

std::string chain_family_name(ChainFamily f) {
    switch (f) {
        case ChainFamily::u: return "chain-u";
        case ChainFamily::sp: return "chain-sp";
        case ChainFamily::o_sum: return "chain-o-sum";
        case ChainFamily::o_diff: return "chain-o-diff";
    }
    throw std::logic_error("unreachable");
}

namespace {

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

Record make_record(const std::string& family, int m, const RationalFunction& lhs,
                   const RationalFunction& rhs, bool extra_ok, bool conjectural, long long t0) {
    Record r;
    r.family = family;
    r.params = {{"m", m}};
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.equal = extra_ok && lhs == rhs;
    r.conjectural = conjectural;
    r.elapsed_ms = now_ms() - t0;
    return r;
}

}  // namespace

std::vector<Record> verify_chain(ChainFamily f, int order) {
    if (order < 3) throw std::invalid_argument("verify_chain: order >= 3");
    std::vector<Record> out;
    std::string name = chain_family_name(f);

    switch (f) {
        case ChainFamily::u: {
            long long t0 = now_ms();
            TruncatedSeries uprime(order);
            uprime.set_coefficient(0, RationalFunction(1));
            for (int m = 1; m < order; ++m)
                uprime.set_coefficient(m, steinberg_proportion(LinearFamily::u, m) - delta_p_au(m));
            TruncatedSeries dprime =
                build_T(TFamily::u, order).inverse() * TruncatedSeries::geometric(order) * uprime;
            for (int m = 1; m < order; ++m) {
                RationalFunction lhs = dprime.coefficient(m);
                RationalFunction rhs = d_prime_unitary_display(m);
                bool delta_ok = RationalFunction(1) - lhs == delta_au(m);
                out.push_back(make_record(name, m, lhs, rhs, delta_ok, false, t0));
                t0 = now_ms();
            }
            break;
        }
        case ChainFamily::sp: {
            long long t0 = now_ms();
            TruncatedSeries uprime(order);
            uprime.set_coefficient(0, RationalFunction(1));
            for (int m = 1; 2 * m < order; ++m)
                uprime.set_coefficient(
                    2 * m, t_sp_coefficient(m) - conj_identity_rhs(ConjIdentity::sympl, m));
            TruncatedSeries dprime = build_T(TFamily::sp, order).inverse() *
                                     TruncatedSeries::geometric(order, 2) * uprime;
            for (int m = 1; 2 * m < order; ++m) {
                RationalFunction lhs = dprime.coefficient(2 * m);
                RationalFunction rhs = d_prime_sympl_display(m);
                bool ok = RationalFunction(1) - lhs == conj_delta(Family::asp, m) &&
                          dprime.coefficient(2 * m - 1).is_zero();
                out.push_back(make_record(name, m, lhs, rhs, ok, true, t0));
                t0 = now_ms();
            }
            break;
        }
        case ChainFamily::o_sum: {
            long long t0 = now_ms();
            TruncatedSeries uprime(order);
            uprime.set_coefficient(0, RationalFunction(1));
            for (int m = 1; m < order; ++m) {
                RationalFunction u_m = m % 2 == 0
                                           ? conj_identity_rhs(ConjIdentity::orth_even, m / 2)
                                           : conj_identity_rhs(ConjIdentity::orth_odd, m / 2);
                uprime.set_coefficient(m, t_sp_coefficient(m / 2) - u_m);
            }
            TruncatedSeries dprime = build_T(TFamily::sp, order).inverse() *
                                     TruncatedSeries::geometric(order) * uprime;
            for (int m = 1; m < order; ++m) {
                RationalFunction lhs = dprime.coefficient(m);
                RationalFunction rhs;
                bool extra_ok = true;
                if (m % 2 == 0) {
                    rhs = RationalFunction(1);
                } else {
                    int d = m / 2;
                    rhs = RationalFunction(1) +
                          RationalFunction(BigRational(d % 2 == 0 ? 1 : -1)) *
                              RationalFunction::monomial_q(-(d + 1) * (d + 1));
                    if (d >= 1) {
                        // delta(AO_{2d+1}) = (2 - d'_{2d+1})/2
                        RationalFunction delta =
                            (RationalFunction(2) - lhs) * RationalFunction(BigRational(1, 2));
                        extra_ok = delta == conj_delta(Family::ao_odd, d);
                    }
                }
                out.push_back(make_record(name, m, lhs, rhs, extra_ok, true, t0));
                t0 = now_ms();
            }
            break;
        }
        case ChainFamily::o_diff: {
            long long t0 = now_ms();
            TruncatedSeries uprime(order);
            uprime.set_coefficient(0, RationalFunction(1));
            for (int m = 1; 2 * m < order; ++m)
                uprime.set_coefficient(2 * m, RationalFunction::monomial_q(-m) *
                                                      t_sp_coefficient(m) -
                                                  orth_diff_rhs(m));
            TruncatedSeries dprime = build_T(TFamily::o_bar, order).inverse() * uprime;
            for (int m = 1; 2 * m < order; ++m) {
                RationalFunction lhs = dprime.coefficient(2 * m);
                RationalFunction rhs = RationalFunction(BigRational(m % 2 == 0 ? 1 : -1)) *
                                       RationalFunction::monomial_q(-m * (m + 1));
                // Assembled even-dimension proportions: (d_{2m} +- dbar_{2m})/2
                // with d_{2m} = 1 from the sum chain and dbar = -dbar'.
                RationalFunction dbar = -lhs;
                RationalFunction half(BigRational(1, 2));
                bool ok = (RationalFunction(1) + dbar) * half == conj_delta(Family::ao_plus, m) &&
                          (RationalFunction(1) - dbar) * half == conj_delta(Family::ao_minus, m) &&
                          dprime.coefficient(2 * m - 1).is_zero();
                out.push_back(make_record(name, m, lhs, rhs, ok, true, t0));
                t0 = now_ms();
            }
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Euler and Jacobi windows.

namespace {

// Bivariate truncated object: x-exponents clamped to [xlo, xhi], arbitrary
// y-exponents (kept sparse). Multiplication drops anything outside the
// window; callers arrange factor order so dropped terms can never re-enter.
struct BiPoly {
    int xlo, xhi;
    std::map<int, std::vector<BigRational>> rows;  // y -> coeffs [xlo..xhi]

    BiPoly(int lo, int hi) : xlo(lo), xhi(hi) {}

    void add(int ye, int xe, const BigRational& v) {
        if (xe < xlo || xe > xhi || v == 0) return;
        auto& row = rows[ye];
        if (row.empty()) row.assign(xhi - xlo + 1, BigRational(0));
        row[xe - xlo] += v;
    }

    void prune() {
        for (auto it = rows.begin(); it != rows.end();) {
            bool all_zero = true;
            for (const auto& v : it->second)
                if (v != 0) {
                    all_zero = false;
                    break;
                }
            it = all_zero ? rows.erase(it) : ++it;
        }
    }

    BiPoly times(const BiPoly& o) const {
        BiPoly r(xlo, xhi);
        for (const auto& [ya, rowa] : rows)
            for (int i = 0; i < static_cast<int>(rowa.size()); ++i) {
                if (rowa[i] == 0) continue;
                for (const auto& [yb, rowb] : o.rows)
                    for (int j = 0; j < static_cast<int>(rowb.size()); ++j) {
                        if (rowb[j] == 0) continue;
                        r.add(ya + yb, (xlo + i) + (o.xlo + j), rowa[i] * rowb[j]);
                    }
            }
        return r;
    }

    bool equals(BiPoly o) const {
        BiPoly a = *this;
        a.prune();
        o.prune();
        return a.xlo == o.xlo && a.rows == o.rows;
    }
};

}  // namespace

bool euler_check(int order) {
    if (order < 2) throw std::invalid_argument("euler_check: order >= 2");
    int tmax = 2 * order + 12;  // window in t = 1/q; both sides exact below it

    // Left side: sum_m y^m t^m / prod_{l<=m}(1 - t^l).
    BiPoly lhs(0, tmax);
    for (int m = 0; m < order; ++m) {
        std::vector<BigRational> row(tmax + 1, BigRational(0));
        if (m <= tmax) row[m] = 1;
        for (int l = 1; l <= m; ++l) {
            // multiply by 1/(1 - t^l) = sum_j t^{jl}
            std::vector<BigRational> next(tmax + 1, BigRational(0));
            for (int a = 0; a <= tmax; ++a) {
                if (row[a] == 0) continue;
                for (int b = a; b <= tmax; b += l) next[b] += row[a];
            }
            row = std::move(next);
        }
        for (int a = 0; a <= tmax; ++a) lhs.add(m, a, row[a]);
    }

    // Right side: prod_{i=1..tmax} (1 - y t^i)^{-1}, truncated in both grades.
    BiPoly rhs(0, tmax);
    rhs.add(0, 0, BigRational(1));
    for (int i = 1; i <= tmax; ++i) {
        BiPoly factor(0, tmax);
        for (int j = 0; j < order && j * i <= tmax; ++j) factor.add(j, j * i, BigRational(1));
        rhs = rhs.times(factor);
        // drop y-degrees at or above the order
        for (auto it = rhs.rows.begin(); it != rhs.rows.end();)
            it = it->first >= order ? rhs.rows.erase(it) : ++it;
    }
    return lhs.equals(rhs);
}

bool jacobi_check(int degree_bound) {
    if (degree_bound < 2) throw std::invalid_argument("jacobi_check: bound >= 2");
    int b = degree_bound;

    BiPoly lhs(0, b);  // x-axis carries q, rows carry z
    for (int j = -b; j <= b; ++j)
        if (static_cast<long long>(j) * j <= b) lhs.add(j, j * j, BigRational(1));

    BiPoly rhs(0, b);
    rhs.add(0, 0, BigRational(1));
    for (int j = 1; 2 * j - 1 <= b; ++j) {
        BiPoly f1(0, b), f2(0, b), f3(0, b);
        f1.add(0, 0, BigRational(1));
        f1.add(1, 2 * j - 1, BigRational(1));  // 1 + z q^{2j-1}
        f2.add(0, 0, BigRational(1));
        f2.add(-1, 2 * j - 1, BigRational(1));  // 1 + z^{-1} q^{2j-1}
        f3.add(0, 0, BigRational(1));
        if (2 * j <= b) f3.add(0, 2 * j, BigRational(-1));  // 1 - q^{2j}
        rhs = rhs.times(f1).times(f2).times(f3);
    }
    return lhs.equals(rhs);
}

bool jacobi_specialization_check(int degree_bound) {
    if (degree_bound < 2) throw std::invalid_argument("degree bound >= 2");
    int b = degree_bound;

    // Bilateral difference sum_{v in Z} (-y)^v (x^{v(v+3)/2} - x^{v(v+1)/2});
    // all exponents are >= -1.
    BiPoly lhs(-1, b);
    for (int v = -(2 * b + 4); v <= 2 * b + 4; ++v) {
        long long e1 = static_cast<long long>(v) * (v + 3) / 2;
        long long e2 = static_cast<long long>(v) * (v + 1) / 2;
        BigRational sgn(v % 2 == 0 ? 1 : -1);
        if (e1 <= b) lhs.add(v, static_cast<int>(e1), sgn);
        if (e2 <= b) lhs.add(v, static_cast<int>(e2), -sgn);
    }

    // -(1 + 1/(xy)) prod_{v>=1} (1 - y x^v)(1 - y^{-1} x^{v-1})(1 - x^v).
    // Factors through v = b+2 can still reach the window: the middle term
    // x^{v-1} combines with the trailing x^{-1}.
    BiPoly prod(0, b + 1);
    prod.add(0, 0, BigRational(1));
    for (int v = 1; v <= b + 2; ++v) {
        BiPoly f1(0, b + 1), f2(0, b + 1), f3(0, b + 1);
        f1.add(0, 0, BigRational(1));
        if (v <= b + 1) f1.add(1, v, BigRational(-1));
        f2.add(0, 0, BigRational(1));
        f2.add(-1, v - 1, BigRational(-1));
        f3.add(0, 0, BigRational(1));
        if (v <= b + 1) f3.add(0, v, BigRational(-1));
        prod = prod.times(f1).times(f2).times(f3);
    }
    BiPoly outer(-1, b);
    outer.add(0, 0, BigRational(-1));
    outer.add(-1, -1, BigRational(-1));
    BiPoly rhs(-1, b);
    // multiply prod by outer within the final window
    for (const auto& [ya, rowa] : prod.rows)
        for (int i = 0; i < static_cast<int>(rowa.size()); ++i) {
            if (rowa[i] == 0) continue;
            for (const auto& [yb, rowb] : outer.rows)
                for (int j = 0; j < static_cast<int>(rowb.size()); ++j) {
                    if (rowb[j] == 0) continue;
                    rhs.add(ya + yb, (prod.xlo + i) + (outer.xlo + j), rowa[i] * rowb[j]);
                }
        }
    return lhs.equals(rhs);
}

}  // namespace qder
