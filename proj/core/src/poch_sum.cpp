#include "qder/poch_sum.hpp"

#include <stdexcept>

namespace qder {

PochSum::PochSum(std::vector<PochFactor> basis, std::vector<int> max_mult, int numer_lo,
                 int numer_hi)
    : basis_(std::move(basis)), max_mult_(std::move(max_mult)) {
    if (basis_.size() != max_mult_.size())
        throw std::invalid_argument("PochSum: basis and multiplicity size mismatch");
    int cof_lo = 0, cof_hi = 0;
    for (size_t i = 0; i < basis_.size(); ++i) {
        int e = 2 * basis_[i].q_exp;  // factor exponents live at 0 and e
        if (e < 0)
            cof_lo += e * max_mult_[i];
        else
            cof_hi += e * max_mult_[i];
    }
    lo_ = numer_lo + cof_lo;
    int hi = numer_hi + cof_hi;
    if (hi < lo_) hi = lo_;
    re_.assign(hi - lo_ + 1, BigInt(0));
    im_.assign(hi - lo_ + 1, BigInt(0));
}

const std::vector<std::pair<int, BigInt>>& PochSum::cofactor(const std::vector<int>& mult) {
    auto it = cofactor_cache_.find(mult);
    if (it != cofactor_cache_.end()) return it->second;

    std::map<int, BigInt> acc;
    acc[0] = 1;
    for (size_t i = 0; i < basis_.size(); ++i) {
        int count = max_mult_[i] - mult[i];
        if (count < 0) throw std::invalid_argument("PochSum: term multiplicity above maximum");
        int e = 2 * basis_[i].q_exp;
        long sgn = basis_[i].sign;
        for (int r = 0; r < count; ++r) {
            // acc *= 1 - sgn * s^e
            std::map<int, BigInt> next = acc;
            for (const auto& [ex, c] : acc) {
                BigInt& cell = next[ex + e];
                if (sgn > 0)
                    cell -= c;
                else
                    cell += c;
                if (cell == 0) next.erase(ex + e);
            }
            acc = std::move(next);
        }
    }
    std::vector<std::pair<int, BigInt>> flat(acc.begin(), acc.end());
    return cofactor_cache_.emplace(mult, std::move(flat)).first->second;
}

void PochSum::add_term(const BigInt& coeff_re, const BigInt& coeff_im, const SparseNumer& numer,
                       int s_shift, const std::vector<int>& mult) {
    const auto& cof = cofactor(mult);
    bool has_im = coeff_im != 0;
    if (has_im) any_im_ = true;
    BigInt tre, tim;
    for (const auto& [e1, c1] : cof) {
        tre = coeff_re * c1;
        if (has_im) tim = coeff_im * c1;
        for (const auto& [e2, c2] : numer) {
            long raw = static_cast<long>(s_shift) + e1 + e2 - lo_;
            if (raw < 0 || raw >= static_cast<long>(re_.size()))
                throw std::logic_error("PochSum: term outside the declared window");
            size_t idx = static_cast<size_t>(raw);
            if (c2 == 1) {
                re_[idx] += tre;
                if (has_im) im_[idx] += tim;
            } else if (c2 == -1) {
                re_[idx] -= tre;
                if (has_im) im_[idx] -= tim;
            } else {
                re_[idx] += tre * c2;
                if (has_im) im_[idx] += tim * c2;
            }
        }
    }
    ++terms_;
}

void PochSum::merge(const PochSum& other) {
    if (other.basis_.size() != basis_.size() || other.lo_ != lo_ ||
        other.re_.size() != re_.size())
        throw std::invalid_argument("PochSum: merging incompatible accumulators");
    for (size_t i = 0; i < re_.size(); ++i) {
        re_[i] += other.re_[i];
        im_[i] += other.im_[i];
    }
    any_im_ = any_im_ || other.any_im_;
    terms_ += other.terms_;
}

bool PochSum::has_imaginary_part() const {
    for (const auto& v : im_)
        if (v != 0) return true;
    return false;
}

RationalFunction PochSum::finalize(const BigRational& scale) const {
    if (has_imaginary_part())
        throw std::domain_error("PochSum: imaginary part did not cancel");
    HalfPowerLaurent num;
    for (size_t i = 0; i < re_.size(); ++i) {
        if (re_[i] == 0) continue;
        num.add_term(lo_ + static_cast<int>(i), BigRational(re_[i]) * scale);
    }
    HalfPowerLaurent den = HalfPowerLaurent::one();
    for (size_t i = 0; i < basis_.size(); ++i) {
        HalfPowerLaurent f = HalfPowerLaurent::one();
        f.add_term(2 * basis_[i].q_exp, BigRational(-basis_[i].sign));
        for (int r = 0; r < max_mult_[i]; ++r) den *= f;
    }
    return RationalFunction(std::move(num), std::move(den));
}

}  // namespace qder
