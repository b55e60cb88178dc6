#pragma once

#include <map>

#include "apery/polynomial.hpp"

namespace apery {

// P_1(x) = 2x+1;
// P_m(x) = (x+1)^3 x^{m-3} + (34x^3+51x^2+27x+5)(x-1)^{m-3} + x^3 (x-2)^{m-3}
// for m >= 3 (degree m, leading coefficient 36). m = 2 and m <= 0 rejected.
RationalPolynomial p_poly(long m);

// Q_k(y) = 2^{k-2} P_k(y/2), k >= 3. Integer coefficients, degree k,
// leading coefficient 9, even constant term.
RationalPolynomial q_poly(long k);

// G_k(z) = (z+1)^3/8 (z+2)^{k-3} + (17z^3/4 + 3z/4) z^{k-3}
//        + (z-1)^3/8 (z-2)^{k-3}, k >= 3. Satisfies G_k(-z) = (-1)^k G_k(z).
RationalPolynomial g_poly(long k);

// Certified decomposition (2x+1)^m = sum_{k=3}^{m} a_k P_k(x) + c_m (2x+1)
// for odd m. Every a_k and c_m has a 3-power denominator; the numerator of
// c_m is odd.
struct ReductionResult {
  long m = 1;
  std::map<long, Rat> a;  // k -> a_k for 3 <= k <= m, exact zeros included
  Rat c_m = 0;

  // sum a_k P_k + c_m (2x+1); equals (2x+1)^m coefficientwise.
  RationalPolynomial reconstruct() const;
};

// Eliminates the leading term degree by degree against P_m..P_3 and
// certifies that the remainder is proportional to 2x+1.
ReductionResult reduce_odd_power(long m);

}  // namespace apery
