#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace apery {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an identity the construction is supposed to guarantee fails to
// hold at runtime (non-exact recurrence division, malformed reduction
// remainder). Signals a transcription bug, not a mathematical discrepancy,
// and is reported separately from ordinary congruence failures.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// num/den reduced to lowest terms, denominator positive.
Rat make_rat(Int num, Int den);

// p-adic valuation of a rational value; infinite iff the value is zero.
struct PadicValuation {
  long prime = 0;
  bool infinite = false;
  long value = 0;

  bool at_least(long e) const { return infinite || value >= e; }
};

PadicValuation padic_valuation(const Rat& x, long p);

// Least non-negative r with den(x) * r == num(x) (mod p^e).
// Requires v_p(x) >= 0; otherwise throws std::domain_error.
Int residue_mod_prime_power(const Rat& x, long p, long e);

// v_p(x - y) >= e
bool congruent_mod(const Rat& x, const Rat& y, long p, long e);

// Deterministic trial division; intended for desk-scale inputs (<= ~10^6).
bool is_prime(const Int& n);
bool is_prime(long n);

// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
// legendre_symbol(p, 3) is 1 for p = 1 (mod 3), -1 for p = 2 (mod 3),
// 0 for p = 3.
int legendre_symbol(const Int& a, const Int& p);
int legendre_symbol(long a, long p);

// B_0..B_N with the B_1 = -1/2 convention, from the recurrence
// sum_{j=0}^{n} C(n+1,j) B_j = 0 for n >= 1.
std::vector<Rat> bernoulli_upto(long n_max);

// (H_{p-1}, H_{p-1}^(2)) as exact rationals, p > 3 prime.
std::pair<Rat, Rat> harmonic_sums(long p);

// C(n,k) mod 3 by base-3 digit products (Lucas).
int lucas_binom_mod3(const Int& n, const Int& k);

// Exact binomial coefficient.
Int binomial(unsigned long n, unsigned long k);

}  // namespace apery
