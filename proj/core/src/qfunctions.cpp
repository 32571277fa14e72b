#include "qder/qfunctions.hpp"

#include <stdexcept>

namespace qder {

RationalFunction pochhammer(const RationalFunction& x, int j) {
    if (j < 0) throw std::invalid_argument("pochhammer: negative index");
    RationalFunction acc(1);
    RationalFunction xi(1);
    for (int i = 1; i <= j; ++i) {
        xi *= x;
        acc *= RationalFunction(1) - xi;
    }
    return acc;
}

RationalFunction gaussian_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("gaussian_binomial: need 0 <= k <= n");
    // prod_{i=1..k} (1 - q^(n-k+i)) / (1 - q^i); each partial product stays a
    // polynomial, and the final division reduces exactly.
    RationalFunction num(1), den(1);
    for (int i = 1; i <= k; ++i) {
        num *= RationalFunction(1) - RationalFunction::monomial_q(n - k + i);
        den *= RationalFunction(1) - RationalFunction::monomial_q(i);
    }
    RationalFunction r = num / den;
    if (!r.is_polynomial()) throw std::logic_error("gaussian binomial failed to reduce");
    return r;
}

}  // namespace qder
