#pragma once

#include <string>
#include <vector>

#include "qder/formulas.hpp"
#include "qder/partition.hpp"
#include "qder/rational_function.hpp"
#include "qder/report.hpp"
#include "qder/signed_partition.hpp"

namespace qder {

// Conjugacy-class centralizer factor for the z-1 coordinate of GL-type data:
// base^{sum_i (lambda'_i)^2} prod_i (1/base)_{m_i(lambda)}.
RationalFunction c_gl(const Partition& lam, const RationalFunction& base);

// Wall centralizer orders for unipotent classes of the symplectic and
// orthogonal groups, indexed by signed partitions. Exact values in the
// half-power ring; the aggregate q-degree of each value is integral and is
// asserted.
RationalFunction c_sp(const SignedPartition& sp);
RationalFunction c_o(const SignedPartition& sp);

enum class SumMode { with_signs, reduced };
enum class OrthVariant { sum, diff };

struct SumOptions {
    int threads = 0;  // 0 = resolve from environment / hardware
};

struct SumResult {
    RationalFunction value;
    long long terms = 0;
};

// (-1)^m sum_{|lambda|=m} (1 - q^{-2 lambda'_1}) /
//        ((-q)^{sum (lambda'_i)^2} prod_i (-1/q)_{m_i}).
SumResult u_unitary_lhs(int m, const SumOptions& opts = {});

// with_signs: sum over symplectic signed partitions of 2m of
//             (1 - q^{-lambda'_1}) / c_sp;
// reduced:    sum over |lambda| = 2m, odd parts with even multiplicity, of
//             (1 - q^{-lambda'_1}) / (q^{(sum (l'_i)^2 + o(l))/2}
//              prod_i (1/q^2)_{floor(m_i/2)}).
SumResult sum_sympl_lhs(int m, SumMode mode, const SumOptions& opts = {});

// sum variant: orthogonal signed partitions of n (reduced: even parts with
// even multiplicity, weight q^{(sum - o)/2}); diff variant (n even): the
// tau-weighted signed sum (Gaussian arithmetic, imaginary parts must cancel
// exactly; q_mod4 in {1,3} selects the sign convention) or the reduced sum
// over partitions with all multiplicities even.
SumResult sum_orth_lhs(int n, OrthVariant variant, SumMode mode, int q_mod4 = 1,
                       const SumOptions& opts = {});

// The same sweeps without the derangement numerator; they must reproduce the
// unipotent proportions (Steinberg counts).
SumResult steinberg_sum_unitary(int m, const SumOptions& opts = {});
SumResult steinberg_sum_sympl(int m, const SumOptions& opts = {});
SumResult steinberg_sum_orth(int n, OrthVariant variant, int q_mod4 = 1,
                             const SumOptions& opts = {});

enum class IdentityFamily {
    unitary_p,
    sympl,
    orth_odd,
    orth_even,
    orth_diff,
    h_decomposition,
    cute_genfun
};

std::string identity_family_name(IdentityFamily f);

struct VerifyOptions {
    int threads = 0;
    int max_n = 40;      // cute_genfun: series window
    int max_parts = 12;  // cute_genfun: part counts (overrides the m range)
};

// One record per m in [m_lo, m_hi]; equality is canonical-form equality.
// Inequality is a reported outcome, never an error.
std::vector<Record> verify_identity(IdentityFamily fam, int m_lo, int m_hi,
                                    const VerifyOptions& opts = {});

}  // namespace qder
