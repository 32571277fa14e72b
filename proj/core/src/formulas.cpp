#include "qder/formulas.hpp"

#include <stdexcept>

#include "qder/poch_sum.hpp"

namespace qder {

namespace {

int neg1_pow(long k) { return k % 2 == 0 ? 1 : -1; }

// Collected term list feeding one PochSum.
struct TermSpec {
    long coeff;
    PochSum::SparseNumer numer;
    int s_shift;
    std::vector<int> mult;
};

RationalFunction sum_terms(const std::vector<PochFactor>& basis, const std::vector<TermSpec>& terms,
                           const BigRational& scale = BigRational(1)) {
    std::vector<int> max_mult(basis.size(), 0);
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& t : terms) {
        for (size_t i = 0; i < basis.size(); ++i)
            max_mult[i] = std::max(max_mult[i], t.mult[i]);
        for (const auto& [e, c] : t.numer) {
            int v = t.s_shift + e;
            if (first || v < lo) lo = v;
            if (first || v > hi) hi = v;
            first = false;
        }
    }
    PochSum acc(basis, max_mult, lo, hi);
    for (const auto& t : terms) acc.add_term(BigInt(t.coeff), t.numer, t.s_shift, t.mult);
    return acc.finalize(scale);
}

// Basis of the (1/q^2)_j symbols up to index jmax: factors 1 - q^{-2l}.
std::vector<PochFactor> inv_q2_basis(int jmax) {
    std::vector<PochFactor> b;
    for (int l = 1; l <= jmax; ++l) b.push_back({-2 * l, +1});
    return b;
}

// Multiplicity vector for (1/q^2)_j over inv_q2_basis(jmax), optionally with
// extra leading slots already present in `mult`.
void mark_prefix(std::vector<int>& mult, int offset, int j) {
    for (int l = 1; l <= j; ++l) ++mult[offset + l - 1];
}

// Basis of (-1/q)_j: factor 1 - (-1)^l q^{-l}.
std::vector<PochFactor> neg_inv_q_basis(int jmax) {
    std::vector<PochFactor> b;
    for (int l = 1; l <= jmax; ++l) b.push_back({-l, l % 2 == 0 ? +1 : -1});
    return b;
}

// Basis of (x)_j read over the q variable with positive powers.
std::vector<PochFactor> x_basis(int jmax) {
    std::vector<PochFactor> b;
    for (int l = 1; l <= jmax; ++l) b.push_back({l, +1});
    return b;
}

void require_positive(int m) {
    if (m < 1) throw std::invalid_argument("family index m must be >= 1");
}

}  // namespace

LinearFamily linear_part(Family f) {
    switch (f) {
        case Family::agl: return LinearFamily::gl;
        case Family::au: return LinearFamily::u;
        case Family::asp: return LinearFamily::sp;
        case Family::ao_odd: return LinearFamily::o_odd;
        case Family::ao_plus: return LinearFamily::o_plus;
        case Family::ao_minus: return LinearFamily::o_minus;
    }
    throw std::logic_error("unreachable");
}

int extension_degree(Family f) { return f == Family::au ? 2 : 1; }

int natural_dimension(Family f, int m) {
    switch (f) {
        case Family::agl:
        case Family::au: return m;
        case Family::asp:
        case Family::ao_plus:
        case Family::ao_minus: return 2 * m;
        case Family::ao_odd: return 2 * m + 1;
    }
    throw std::logic_error("unreachable");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::agl: return "agl";
        case Family::au: return "au";
        case Family::asp: return "asp";
        case Family::ao_odd: return "ao-odd";
        case Family::ao_plus: return "ao-plus";
        case Family::ao_minus: return "ao-minus";
    }
    throw std::logic_error("unreachable");
}

std::string linear_family_name(LinearFamily f) {
    switch (f) {
        case LinearFamily::gl: return "gl";
        case LinearFamily::u: return "u";
        case LinearFamily::sp: return "sp";
        case LinearFamily::o_odd: return "o-odd";
        case LinearFamily::o_plus: return "o-plus";
        case LinearFamily::o_minus: return "o-minus";
    }
    throw std::logic_error("unreachable");
}

bool is_conjectural(Family f) {
    return f == Family::asp || f == Family::ao_odd || f == Family::ao_plus ||
           f == Family::ao_minus;
}

RationalFunction delta_agl(int m) {
    require_positive(m);
    HalfPowerLaurent acc;
    for (int i = 1; i <= m; ++i)
        acc.add_term(-i * (i + 1), BigRational(neg1_pow(i - 1)));
    return RationalFunction(acc);
}

RationalFunction delta_au(int m) {
    require_positive(m);
    long k = static_cast<long>(m) * (m + 3) / 2;
    HalfPowerLaurent num = HalfPowerLaurent::one();
    num.add_term(static_cast<int>(-2 * k), BigRational(-neg1_pow(k)));
    return RationalFunction(std::move(num),
                            (RationalFunction::q() + 1).numerator());
}

RationalFunction d_prime_unitary_display(int m) {
    require_positive(m);
    HalfPowerLaurent acc;
    for (int i = 0; i <= m; ++i) {
        long t = static_cast<long>(i) * (i + 3) / 2;
        int s = neg1_pow(t);
        // (1 - (-q)^{i+1}) * (-q)^{-t}
        acc.add_term(static_cast<int>(-2 * t), BigRational(s));
        acc.add_term(static_cast<int>(2 * (i + 1 - t)), BigRational(-neg1_pow(i + 1) * s));
    }
    return RationalFunction(std::move(acc), (RationalFunction::q() + 1).numerator());
}

RationalFunction delta_p_au(int m) {
    require_positive(m);
    // Basis: (q+1) once, then (-1/q)_{m-i} prefix factors.
    std::vector<PochFactor> basis{{1, -1}};
    auto tail = neg_inv_q_basis(m - 1);
    basis.insert(basis.end(), tail.begin(), tail.end());

    std::vector<TermSpec> terms;
    for (int i = 1; i <= m; ++i) {
        long t = static_cast<long>(i) * (i + 1) / 2;
        int st = neg1_pow(t);
        TermSpec ts;
        ts.coeff = 1;
        // (-1)^i ((-q)^{i+1} - 1) (-q)^{-t}
        ts.numer.emplace_back(static_cast<int>(2 * (i + 1 - t)),
                              neg1_pow(i) * neg1_pow(i + 1) * st);
        ts.numer.emplace_back(static_cast<int>(-2 * t), -neg1_pow(i) * st);
        ts.s_shift = -2 * m;  // global 1/q^m
        ts.mult.assign(basis.size(), 0);
        ts.mult[0] = 1;  // 1/(q+1)
        for (int l = 1; l <= m - i; ++l) ++ts.mult[l];
        terms.push_back(std::move(ts));
    }
    return sum_terms(basis, terms);
}

RationalFunction conj_delta(Family f, int m) {
    require_positive(m);
    RationalFunction half = RationalFunction(BigRational(1, 2));
    switch (f) {
        case Family::asp: {
            long k = static_cast<long>(m) * (m + 2);
            HalfPowerLaurent num = HalfPowerLaurent::one();
            num.add_term(static_cast<int>(-2 * k), BigRational(-neg1_pow(k)));
            return RationalFunction(std::move(num), (RationalFunction::q() + 1).numerator());
        }
        case Family::ao_odd: {
            long e = static_cast<long>(m + 1) * (m + 1);
            return half + RationalFunction(make_rational(neg1_pow(m - 1), 2)) *
                              RationalFunction::monomial_q(static_cast<int>(-e));
        }
        case Family::ao_plus:
        case Family::ao_minus: {
            long e = static_cast<long>(m) * (m + 1);
            int outer = f == Family::ao_plus ? 1 : -1;
            return half + RationalFunction(make_rational(outer * neg1_pow(m - 1), 2)) *
                              RationalFunction::monomial_q(static_cast<int>(-e));
        }
        default:
            throw std::invalid_argument("conj_delta: family has a proved formula, not a conjecture");
    }
}

RationalFunction d_prime_sympl_display(int m) {
    require_positive(m);
    HalfPowerLaurent acc;
    for (int i = 0; i <= m; ++i) {
        long t = static_cast<long>(i) * (i + 2);
        acc.add_term(static_cast<int>(2 * (2 * i + 1 - t)), BigRational(neg1_pow(i)));
        acc.add_term(static_cast<int>(-2 * t), BigRational(neg1_pow(i)));
    }
    return RationalFunction(std::move(acc), (RationalFunction::q() + 1).numerator());
}

RationalFunction conj_identity_rhs(ConjIdentity which, int m) {
    switch (which) {
        case ConjIdentity::sympl: {
            require_positive(m);
            std::vector<PochFactor> basis{{1, -1}};
            auto tail = inv_q2_basis(m - 1);
            basis.insert(basis.end(), tail.begin(), tail.end());
            std::vector<TermSpec> terms;
            for (int i = 1; i <= m; ++i) {
                long t = static_cast<long>(i) * (i + 1);
                TermSpec ts;
                ts.coeff = 1;
                ts.numer.emplace_back(static_cast<int>(2 * (2 * i + 1 - t)), neg1_pow(i - 1));
                ts.numer.emplace_back(static_cast<int>(-2 * t), neg1_pow(i - 1));
                ts.s_shift = -2 * m;
                ts.mult.assign(basis.size(), 0);
                ts.mult[0] = 1;
                mark_prefix(ts.mult, 1, m - i);
                terms.push_back(std::move(ts));
            }
            return sum_terms(basis, terms);
        }
        case ConjIdentity::orth_odd: {
            if (m < 0) throw std::invalid_argument("orth_odd right-hand side needs m >= 0");
            auto basis = inv_q2_basis(m);
            std::vector<TermSpec> terms;
            {
                TermSpec lead;  // 1/(q^m (1/q^2)_m)
                lead.coeff = 1;
                lead.numer.emplace_back(0, 1);
                lead.s_shift = -2 * m;
                lead.mult.assign(basis.size(), 0);
                mark_prefix(lead.mult, 0, m);
                terms.push_back(std::move(lead));
            }
            for (int i = 0; i <= m; ++i) {
                long t = static_cast<long>(i) * (i + 1);
                TermSpec ts;
                ts.coeff = 1;
                ts.numer.emplace_back(static_cast<int>(-2 * t), neg1_pow(i - 1));
                ts.s_shift = -2 * (m + 1);
                ts.mult.assign(basis.size(), 0);
                mark_prefix(ts.mult, 0, m - i);
                terms.push_back(std::move(ts));
            }
            return sum_terms(basis, terms);
        }
        case ConjIdentity::orth_even: {
            require_positive(m);
            auto basis = inv_q2_basis(m - 1);
            std::vector<TermSpec> terms;
            for (int i = 1; i <= m; ++i) {
                long t = static_cast<long>(i) * (i - 1);
                TermSpec ts;
                ts.coeff = 1;
                ts.numer.emplace_back(static_cast<int>(-2 * t), neg1_pow(i - 1));
                ts.s_shift = -2 * m;
                ts.mult.assign(basis.size(), 0);
                mark_prefix(ts.mult, 0, m - i);
                terms.push_back(std::move(ts));
            }
            return sum_terms(basis, terms);
        }
    }
    throw std::logic_error("unreachable");
}

RationalFunction orth_diff_rhs(int m) {
    require_positive(m);
    auto basis = inv_q2_basis(m - 1);
    std::vector<TermSpec> terms;
    for (int i = 1; i <= m; ++i) {
        long t = static_cast<long>(i) * (i - 1);
        TermSpec ts;
        ts.coeff = 1;
        ts.numer.emplace_back(static_cast<int>(-2 * t), neg1_pow(i - 1));
        ts.s_shift = -4 * m;
        ts.mult.assign(basis.size(), 0);
        mark_prefix(ts.mult, 0, m - i);
        terms.push_back(std::move(ts));
    }
    return sum_terms(basis, terms);
}

RationalFunction genfun_cute_rhs(int m) {
    require_positive(m);
    std::vector<PochFactor> basis{{1, +1}};  // the 1/(1-x) prefactor
    auto tail = x_basis(m - 1);
    basis.insert(basis.end(), tail.begin(), tail.end());
    std::vector<TermSpec> terms;
    for (int i = 1; i <= m; ++i) {
        long t = static_cast<long>(i) * (i - 1) / 2;
        TermSpec ts;
        ts.coeff = 1;
        // (-1)^i x^t (x^i - 1)
        ts.numer.emplace_back(static_cast<int>(2 * (t + i)), neg1_pow(i));
        ts.numer.emplace_back(static_cast<int>(2 * t), -neg1_pow(i));
        ts.s_shift = 2 * m;
        ts.mult.assign(basis.size(), 0);
        ts.mult[0] = 1;
        for (int l = 1; l <= m - i; ++l) ++ts.mult[l];
        terms.push_back(std::move(ts));
    }
    return sum_terms(basis, terms);
}

RationalFunction g_rhs(int m) {
    require_positive(m);
    auto basis = x_basis(m - 1);
    std::vector<TermSpec> terms;
    for (int i = 1; i <= m; ++i) {
        long t = static_cast<long>(i) * (i - 1) / 2;
        TermSpec ts;
        ts.coeff = neg1_pow(i - 1);
        ts.numer.emplace_back(static_cast<int>(2 * t), 1);
        ts.s_shift = 2 * m;
        ts.mult.assign(basis.size(), 0);
        mark_prefix(ts.mult, 0, m - i);
        terms.push_back(std::move(ts));
    }
    return sum_terms(basis, terms);
}

RationalFunction k_rhs(int m) {
    require_positive(m);
    auto basis = x_basis(m - 1);
    // shared numerator polynomial (x)_{m-1}, expanded once
    HalfPowerLaurent xpm = HalfPowerLaurent::one();
    for (int l = 1; l <= m - 1; ++l) {
        HalfPowerLaurent f = HalfPowerLaurent::one();
        f.add_term(2 * l, BigRational(-1));
        xpm *= f;
    }
    PochSum::SparseNumer poch_numer;
    for (const auto& [e, c] : xpm.terms())
        poch_numer.emplace_back(e, static_cast<long>(c.get_num().get_si()));

    std::vector<TermSpec> terms;
    for (int j = 0; j <= m - 1; ++j) {
        TermSpec ts;
        ts.coeff = 1;
        ts.numer = poch_numer;
        ts.s_shift = 2 * ((m - j) * (m - j) + m - 1);
        ts.mult.assign(basis.size(), 0);
        for (int l = 1; l <= m - j - 1; ++l) ts.mult[l - 1] += 2;
        for (int l = 1; l <= j; ++l) ts.mult[l - 1] += 1;
        terms.push_back(std::move(ts));
    }
    return sum_terms(basis, terms);
}

RationalFunction h_rhs(int m) {
    require_positive(m);
    std::vector<PochFactor> basis{{1, +1}};
    auto tail = x_basis(m - 1);
    basis.insert(basis.end(), tail.begin(), tail.end());
    std::vector<TermSpec> terms;
    for (int i = 1; i <= m; ++i) {
        long t = static_cast<long>(i) * (i + 1) / 2;
        TermSpec ts;
        ts.coeff = 1;
        // (-1)^i x^t (1 - x^{-(i+1)})
        ts.numer.emplace_back(static_cast<int>(2 * t), neg1_pow(i));
        ts.numer.emplace_back(static_cast<int>(2 * (t - i - 1)), -neg1_pow(i));
        ts.s_shift = 2 * (m + 1);
        ts.mult.assign(basis.size(), 0);
        ts.mult[0] = 1;
        for (int l = 1; l <= m - i; ++l) ++ts.mult[l];
        terms.push_back(std::move(ts));
    }
    return sum_terms(basis, terms);
}

RationalFunction steinberg_proportion(LinearFamily f, int m) {
    require_positive(m);
    RationalFunction q = RationalFunction::q();
    switch (f) {
        case LinearFamily::u: {
            RationalFunction den = RationalFunction::monomial_q(m);
            for (int l = 1; l <= m; ++l)
                den *= RationalFunction(1) -
                       RationalFunction(HalfPowerLaurent::monomial(BigRational(neg1_pow(l)), -2 * l));
            return den.inverse();
        }
        case LinearFamily::sp: {
            RationalFunction den = RationalFunction::monomial_q(m);
            for (int l = 1; l <= m; ++l) den *= RationalFunction(1) - RationalFunction::monomial_q(-2 * l);
            return den.inverse();
        }
        case LinearFamily::o_odd: {
            RationalFunction den = RationalFunction(2) * RationalFunction::monomial_q(m);
            for (int l = 1; l <= m; ++l) den *= RationalFunction(1) - RationalFunction::monomial_q(-2 * l);
            return den.inverse();
        }
        case LinearFamily::o_plus:
        case LinearFamily::o_minus: {
            int sign = f == LinearFamily::o_plus ? -1 : +1;  // q^m -+ 1
            RationalFunction den = RationalFunction(2) *
                                   (RationalFunction::monomial_q(m) + RationalFunction(sign));
            for (int l = 1; l <= m - 1; ++l)
                den *= RationalFunction::monomial_q(2 * l) - RationalFunction(1);
            return RationalFunction::monomial_q(m * m - m) / den;
        }
        case LinearFamily::gl:
            throw std::invalid_argument("steinberg_proportion: GL not needed here");
    }
    throw std::logic_error("unreachable");
}

RationalFunction group_order(LinearFamily f, int m) {
    require_positive(m);
    switch (f) {
        case LinearFamily::gl: {
            RationalFunction r = RationalFunction::monomial_q(m * (m - 1) / 2);
            for (int i = 1; i <= m; ++i)
                r *= RationalFunction::monomial_q(i) - RationalFunction(1);
            return r;
        }
        case LinearFamily::u: {
            RationalFunction r = RationalFunction::monomial_q(m * (m - 1) / 2);
            for (int i = 1; i <= m; ++i)
                r *= RationalFunction::monomial_q(i) - RationalFunction(neg1_pow(i));
            return r;
        }
        case LinearFamily::sp: {
            RationalFunction r = RationalFunction::monomial_q(m * m);
            for (int i = 1; i <= m; ++i)
                r *= RationalFunction::monomial_q(2 * i) - RationalFunction(1);
            return r;
        }
        case LinearFamily::o_odd: {
            RationalFunction r = RationalFunction(2) * RationalFunction::monomial_q(m * m);
            for (int i = 1; i <= m; ++i)
                r *= RationalFunction::monomial_q(2 * i) - RationalFunction(1);
            return r;
        }
        case LinearFamily::o_plus:
        case LinearFamily::o_minus: {
            int sign = f == LinearFamily::o_plus ? -1 : +1;
            RationalFunction r = RationalFunction(2) * RationalFunction::monomial_q(m * m - m) *
                                 (RationalFunction::monomial_q(m) + RationalFunction(sign));
            for (int i = 1; i <= m - 1; ++i)
                r *= RationalFunction::monomial_q(2 * i) - RationalFunction(1);
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace qder
