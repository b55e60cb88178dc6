#include "apery/exactnum.hpp"

#include <string>

namespace apery {

namespace {

// Divides out every factor p from n; returns the multiplicity.
long strip_factor(Int& n, const Int& p) {
  Int reduced;
  mp_bitcnt_t count =
      mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  n = std::move(reduced);
  return static_cast<long>(count);
}

void require_prime(long p, const char* who) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::string(who) + ": p = " +
                                std::to_string(p) + " is not prime");
  }
}

}  // namespace

Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

PadicValuation padic_valuation(const Rat& x, long p) {
  require_prime(p, "padic_valuation");
  if (x == 0) return {p, true, 0};
  Int num = x.get_num();
  Int den = x.get_den();
  const Int prime(p);
  long v = strip_factor(num, prime) - strip_factor(den, prime);
  return {p, false, v};
}

Int residue_mod_prime_power(const Rat& x, long p, long e) {
  if (e < 1) {
    throw std::invalid_argument("residue_mod_prime_power: e must be >= 1");
  }
  PadicValuation v = padic_valuation(x, p);
  if (!v.infinite && v.value < 0) {
    throw std::domain_error("residue_mod_prime_power: not a p-adic integer at p = " +
                            std::to_string(p));
  }
  Int modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e));
  Int den_inv;
  if (!mpz_invert(den_inv.get_mpz_t(), x.get_den().get_mpz_t(),
                  modulus.get_mpz_t())) {
    throw std::domain_error("residue_mod_prime_power: denominator not invertible");
  }
  Int r = x.get_num() * den_inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

bool congruent_mod(const Rat& x, const Rat& y, long p, long e) {
  if (e < 1) throw std::invalid_argument("congruent_mod: e must be >= 1");
  return padic_valuation(x - y, p).at_least(e);
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime(long n) { return is_prime(Int(n)); }

int legendre_symbol(const Int& a, const Int& p) {
  if (p == 2 || p % 2 == 0) {
    throw std::invalid_argument("legendre_symbol: p must be odd");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("legendre_symbol: p must be prime");
  }
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  if (r == 0) return 0;
  Int exponent = (p - 1) / 2;
  Int pow;
  mpz_powm(pow.get_mpz_t(), r.get_mpz_t(), exponent.get_mpz_t(), p.get_mpz_t());
  if (pow == 1) return 1;
  if (pow == p - 1) return -1;
  throw internal_error("legendre_symbol: Euler criterion out of range");
}

int legendre_symbol(long a, long p) { return legendre_symbol(Int(a), Int(p)); }

std::vector<Rat> bernoulli_upto(long n_max) {
  if (n_max < 0) throw std::invalid_argument("bernoulli_upto: N must be >= 0");
  std::vector<Rat> b;
  b.reserve(static_cast<std::size_t>(n_max) + 1);
  b.emplace_back(1);
  for (long n = 1; n <= n_max; ++n) {
    // B_n = -1/(n+1) * sum_{j=0}^{n-1} C(n+1,j) B_j
    Rat sum = 0;
    for (long j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      sum += Rat(binomial(n + 1, j)) * b[j];
    }
    b.push_back(make_rat(-sum.get_num(), sum.get_den() * (n + 1)));
  }
  return b;
}

std::pair<Rat, Rat> harmonic_sums(long p) {
  if (p <= 3 || !is_prime(p)) {
    throw std::invalid_argument("harmonic_sums: p must be a prime > 3");
  }
  Rat h1 = 0;
  Rat h2 = 0;
  for (long k = 1; k < p; ++k) {
    h1 += Rat(1, k);
    h2 += make_rat(1, Int(k) * k);
  }
  return {h1, h2};
}

int lucas_binom_mod3(const Int& n, const Int& k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("lucas_binom_mod3: arguments must be >= 0");
  }
  static constexpr int small[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
  Int nn = n;
  Int kk = k;
  int result = 1;
  while (kk > 0 || nn > 0) {
    long nd = mpz_tdiv_q_ui(nn.get_mpz_t(), nn.get_mpz_t(), 3);
    long kd = mpz_tdiv_q_ui(kk.get_mpz_t(), kk.get_mpz_t(), 3);
    result = result * small[nd][kd] % 3;
    if (result == 0) return 0;
  }
  return result;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace apery
