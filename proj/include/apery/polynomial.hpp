#pragma once

#include <optional>
#include <vector>

#include "apery/exactnum.hpp"

namespace apery {

// Dense univariate polynomial with exact rational coefficients.
// Normal form: an empty coefficient vector is the zero polynomial;
// otherwise the leading coefficient is nonzero.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rat> coeffs);  // low to high degree

  static RationalPolynomial constant(Rat c);
  static RationalPolynomial monomial(long degree, Rat coeff);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rat coeff(long i) const;   // 0 outside the stored range
  const Rat& leading() const;

  Rat eval(const Rat& x) const;
  Rat eval(const Int& x) const;

  // P(a*x + b)
  RationalPolynomial compose_linear(const Rat& a, const Rat& b) const;
  RationalPolynomial pow(unsigned long e) const;
  RationalPolynomial scaled(const Rat& c) const;

  // All coefficients as integers, low to high; nullopt if any denominator
  // differs from 1.
  std::optional<std::vector<Int>> integer_coefficients() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a,
                                      const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a,
                                      const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a,
                                      const RationalPolynomial& b);
  RationalPolynomial operator-() const;

  bool operator==(const RationalPolynomial& other) const {
    return coeffs_ == other.coeffs_;
  }

 private:
  void normalize();

  std::vector<Rat> coeffs_;
};

}  // namespace apery
