#include "apery/polyreduce.hpp"

#include <string>

namespace apery {

namespace {

const RationalPolynomial& linear_2x1() {
  static const RationalPolynomial p({Rat(1), Rat(2)});
  return p;
}

}  // namespace

RationalPolynomial p_poly(long m) {
  if (m == 1) return linear_2x1();
  if (m < 3) {
    throw std::invalid_argument("p_poly: m must be 1 or >= 3, got " +
                                std::to_string(m));
  }
  const unsigned long e = static_cast<unsigned long>(m - 3);
  // (x+1)^3 x^{m-3}
  RationalPolynomial t1 = RationalPolynomial({Rat(1), Rat(3), Rat(3), Rat(1)}) *
                          RationalPolynomial::monomial(m - 3, Rat(1));
  // (34x^3 + 51x^2 + 27x + 5)(x-1)^{m-3}
  RationalPolynomial t2 =
      RationalPolynomial({Rat(5), Rat(27), Rat(51), Rat(34)}) *
      RationalPolynomial({Rat(-1), Rat(1)}).pow(e);
  // x^3 (x-2)^{m-3}
  RationalPolynomial t3 = RationalPolynomial::monomial(3, Rat(1)) *
                          RationalPolynomial({Rat(-2), Rat(1)}).pow(e);
  return t1 + t2 + t3;
}

RationalPolynomial q_poly(long k) {
  if (k < 3) throw std::invalid_argument("q_poly: k must be >= 3");
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(k - 2));
  return p_poly(k).compose_linear(Rat(1, 2), Rat(0)).scaled(Rat(scale));
}

RationalPolynomial g_poly(long k) {
  if (k < 3) throw std::invalid_argument("g_poly: k must be >= 3");
  const unsigned long e = static_cast<unsigned long>(k - 3);
  // (z+1)^3/8 (z+2)^{k-3}
  RationalPolynomial t1 =
      RationalPolynomial({Rat(1, 8), Rat(3, 8), Rat(3, 8), Rat(1, 8)}) *
      RationalPolynomial({Rat(2), Rat(1)}).pow(e);
  // (17z^3/4 + 3z/4) z^{k-3}
  RationalPolynomial t2 =
      RationalPolynomial({Rat(0), Rat(3, 4), Rat(0), Rat(17, 4)}) *
      RationalPolynomial::monomial(k - 3, Rat(1));
  // (z-1)^3/8 (z-2)^{k-3}
  RationalPolynomial t3 =
      RationalPolynomial({Rat(-1, 8), Rat(3, 8), Rat(-3, 8), Rat(1, 8)}) *
      RationalPolynomial({Rat(-2), Rat(1)}).pow(e);
  return t1 + t2 + t3;
}

RationalPolynomial ReductionResult::reconstruct() const {
  RationalPolynomial sum;
  for (const auto& [k, ak] : a) {
    if (ak != 0) sum = sum + p_poly(k).scaled(ak);
  }
  return sum + linear_2x1().scaled(c_m);
}

ReductionResult reduce_odd_power(long m) {
  if (m < 1 || m % 2 == 0) {
    throw std::invalid_argument("reduce_odd_power: m must be odd and >= 1, got " +
                                std::to_string(m));
  }
  ReductionResult result;
  result.m = m;
  if (m == 1) {
    result.c_m = 1;
    return result;
  }
  RationalPolynomial r = linear_2x1().pow(static_cast<unsigned long>(m));
  for (long k = m; k >= 3; --k) {
    Rat ak = 0;
    if (r.degree() == k) {
      // each P_k has exact degree k with leading coefficient 36
      ak = r.leading() / 36;
      r = r - p_poly(k).scaled(ak);
    }
    result.a.emplace(k, std::move(ak));
  }
  // Remainder must be c*(2x+1): zero quadratic part, linear = 2 * constant.
  if (r.degree() > 1) {
    throw internal_error("reduce_odd_power: remainder of degree " +
                         std::to_string(r.degree()) + " at m = " +
                         std::to_string(m));
  }
  Rat c = r.coeff(0);
  if (r.coeff(1) != 2 * c) {
    throw internal_error("reduce_odd_power: remainder not proportional to 2x+1 at m = " +
                         std::to_string(m));
  }
  result.c_m = std::move(c);
  return result;
}

}  // namespace apery
