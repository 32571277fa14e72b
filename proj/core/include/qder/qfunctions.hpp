#pragma once

#include "qder/rational_function.hpp"

namespace qder {

// (x)_j = (1 - x)(1 - x^2)...(1 - x^j), with (x)_0 = 1.
RationalFunction pochhammer(const RationalFunction& x, int j);

// Gaussian binomial (q)_n / ((q)_k (q)_{n-k}); a polynomial in q.
RationalFunction gaussian_binomial(int n, int k);

}  // namespace qder
