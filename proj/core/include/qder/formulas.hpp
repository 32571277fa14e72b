#pragma once

#include <string>

#include "qder/rational_function.hpp"

namespace qder {

// Affine classical families and their linear parts. The extension degree e is
// 2 for the unitary family and 1 otherwise; the natural dimension of the
// linear part is m (GL, U), 2m (Sp, O+-) or 2m+1 (O-odd).
enum class Family { agl, au, asp, ao_odd, ao_plus, ao_minus };
enum class LinearFamily { gl, u, sp, o_odd, o_plus, o_minus };

LinearFamily linear_part(Family f);
int extension_degree(Family f);
int natural_dimension(Family f, int m);
std::string family_name(Family f);
std::string linear_family_name(LinearFamily f);

// Proportion of derangements in the affine general linear group,
// sum_{i=1..m} (-1)^(i-1) / q^(i(i+1)/2).
RationalFunction delta_agl(int m);

// Proportion of derangements in the affine unitary group,
// (1/(q+1)) (1 - (-q)^(-m(m+3)/2)). Proved.
RationalFunction delta_au(int m);

// Its complement partial-sum display,
// (1/(q+1)) sum_{i=0..m} (1 - (-q)^(i+1)) / (-q)^(i(i+3)/2).
RationalFunction d_prime_unitary_display(int m);

// Proportion of derangements of p-power order in the affine unitary group,
// (1/(q^m(q+1))) sum_{i=1..m} (-1)^i ((-q)^{i+1}-1) / ((-q)^{i(i+1)/2} (-1/q)_{m-i}).
// Proved.
RationalFunction delta_p_au(int m);

// Conjectured derangement proportions for the symplectic/orthogonal affine
// families (odd characteristic).
RationalFunction conj_delta(Family f, int m);

// The complement partial-sum display in the symplectic case,
// (1/(q+1)) sum_{i=0..m} (-1)^i (q^{2i+1}+1)/q^{i(i+2)}.
RationalFunction d_prime_sympl_display(int m);

// Conjectured q-polynomial identity right-hand sides.
enum class ConjIdentity { sympl, orth_odd, orth_even };
RationalFunction conj_identity_rhs(ConjIdentity which, int m);

// Difference-of-orthogonal closed form (proved),
// (1/q^{2m}) sum_{i=1..m} (-1)^{i-1} / (q^{i(i-1)} (1/q^2)_{m-i}).
RationalFunction orth_diff_rhs(int m);

// Generating function (in the formal variable, read x for q) for partitions
// into m parts whose first part is 1 or with lambda_{k-1} > lambda_k = k:
// (x^m/(1-x)) sum_{i=1..m} (-1)^i x^{i(i-1)/2} (x^i - 1) / (x)_{m-i}.
RationalFunction genfun_cute_rhs(int m);

// Generating function for partitions into m parts with a fixed point
// lambda_k = k:  x^m sum_{i=1..m} (-1)^{i-1} x^{i(i-1)/2} / (x)_{m-i}.
RationalFunction g_rhs(int m);

// sum_{j=0..m-1} x^{(m-j)^2+m-1} (x)_{m-1} / ((x)_{m-j-1}^2 (x)_j); equals
// genfun_cute_rhs.
RationalFunction k_rhs(int m);

// (x^{m+1}/(1-x)) sum_{i=1..m} (-1)^i x^{i(i+1)/2} (1 - x^{-(i+1)}) / (x)_{m-i};
// satisfies h = g + x k.
RationalFunction h_rhs(int m);

// Proportion of unipotent elements (Steinberg) in the linear families. m is
// the family index: U_m, Sp_{2m}, O_{2m+1}, O^{+-}_{2m}.
RationalFunction steinberg_proportion(LinearFamily f, int m);

// Group orders as polynomials in q, same indexing as above (GL_m for gl).
RationalFunction group_order(LinearFamily f, int m);

// True for values whose correctness rests on the conjectured identities.
bool is_conjectural(Family f);

}  // namespace qder
