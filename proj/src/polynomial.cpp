#include "apery/polynomial.hpp"

#include <algorithm>

namespace apery {

RationalPolynomial::RationalPolynomial(std::vector<Rat> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

void RationalPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(Rat c) {
  RationalPolynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

RationalPolynomial RationalPolynomial::monomial(long degree, Rat coeff) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  RationalPolynomial p;
  if (coeff != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
    p.coeffs_.back() = std::move(coeff);
  }
  return p;
}

Rat RationalPolynomial::coeff(long i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& RationalPolynomial::leading() const {
  if (is_zero()) throw std::invalid_argument("leading: zero polynomial");
  return coeffs_.back();
}

Rat RationalPolynomial::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Rat RationalPolynomial::eval(const Int& x) const { return eval(Rat(x)); }

RationalPolynomial RationalPolynomial::compose_linear(const Rat& a,
                                                      const Rat& b) const {
  const RationalPolynomial lin({b, a});
  RationalPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin + constant(*it);
  }
  return acc;
}

RationalPolynomial RationalPolynomial::pow(unsigned long e) const {
  RationalPolynomial result = constant(1);
  for (unsigned long i = 0; i < e; ++i) result = result * *this;
  return result;
}

RationalPolynomial RationalPolynomial::scaled(const Rat& c) const {
  if (c == 0) return {};
  RationalPolynomial p = *this;
  for (Rat& x : p.coeffs_) x *= c;
  return p;
}

RationalPolynomial operator+(const RationalPolynomial& a,
                             const RationalPolynomial& b) {
  RationalPolynomial r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  r.normalize();
  return r;
}

RationalPolynomial operator-(const RationalPolynomial& a,
                             const RationalPolynomial& b) {
  return a + (-b);
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial r = *this;
  for (Rat& c : r.coeffs_) c = -c;
  return r;
}

RationalPolynomial operator*(const RationalPolynomial& a,
                             const RationalPolynomial& b) {
  RationalPolynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.normalize();
  return r;
}

std::optional<std::vector<Int>> RationalPolynomial::integer_coefficients()
    const {
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (const Rat& c : coeffs_) {
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace apery
