#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "apery/exactnum.hpp"
#include "apery/sequences.hpp"

namespace apery {

// Outcome of a single congruence check. modulus = modulus_base ^
// modulus_exponent; lhs/rhs are least non-negative residues. Exact-equality
// checks carry modulus 0 with the full values in lhs/rhs, and pass iff the
// difference is zero (infinite diff_valuation).
struct CongruenceReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  Int modulus = 0;
  Int modulus_base = 0;
  long modulus_exponent = 0;
  Int lhs = 0;
  Int rhs = 0;
  bool diff_valuation_infinite = false;
  long diff_valuation = 0;  // multiplicity of modulus_base in lhs - rhs
  bool pass = false;
  std::string error;     // nonempty: the check could not be evaluated
  bool internal = false; // error came from an internal-consistency failure
};

// Shared state for a batch of checks, built once and then only read.
struct Context {
  AperyTable table;
  EtaSeries eta;               // empty unless eta_max >= 1
  std::map<long, Rat> cm;      // c_m for the odd m requested up front
  std::vector<Rat> bernoulli;  // B_0..B_{bernoulli_max}, empty if max < 0

  Context(long apery_max, long eta_max, const std::vector<long>& m_values,
          long bernoulli_max);

  // Falls back to computing the value when it was not prebuilt.
  Rat cm_value(long m) const;
  Rat bernoulli_value(long n) const;
};

// sum (2k+1)^m (-1)^k A_k = c_m p (p/3)  (mod p^3), p > 3
CongruenceReport check_thm1(long m, long p, const Context& ctx);
// sum P_m(k) (-1)^k A_k = 0  (mod p^3), m >= 3, p > 3
CongruenceReport check_lemma21(long m, long p, const Context& ctx);
// T_n > 0, n(n+1) | T_n, T_n/(n(n+1)) odd
CongruenceReport check_thm2_integrality(long n, const Context& ctx);
// sum_{k=1}^{p} (-1)^k (9k^2+10k+3) k^2 A_k = p/3 (p/3) - 15p^2 (mod p^3)
CongruenceReport check_thm2_congruence(long p, const Context& ctx);
// A_{p-1} = 1 + p^3 (4/3 B_{p-3} - 1/2 B_{2p-4}) + p^4/9 B_{p-3} (mod p^5)
CongruenceReport check_liu_wang(long p, const Context& ctx);
// A_{p-2} = 5 - 12p (mod p^3), p > 3
CongruenceReport check_ap_minus2(long p, const Context& ctx);
// A_p = 5 (mod p), p odd
CongruenceReport check_ap_mod_p(long p, const Context& ctx);
// A_{(p-1)/2} = a_p (mod p^2), p odd
CongruenceReport check_beukers(long p, const Context& ctx);
// h(n) = n^2/4 (A_n - A_{n-1}) + n^3/6 (A_n - A_{n-1}) + n^3 A_{n-1} + 2n A_n
// is 0 mod 4 for even n and 2 mod 4 for odd n
CongruenceReport check_h_mod4(long n, const Context& ctx);
// A_n = (-1)^n (mod 3)
CongruenceReport check_gessel_mod3(long n, const Context& ctx);
// A_{2n} = 1 (mod 8)
CongruenceReport check_gessel_mod8_even(long n, const Context& ctx);
// A_{2n+1} = 5 (mod 8)
CongruenceReport check_gessel_mod8_odd(long n, const Context& ctx);
// A_n + A_{n-1} = (-1)^n 3n (mod 9), 3 does not divide n
CongruenceReport check_lemma33_mod9(long n, const Context& ctx);
// A_n - A_{n-1} = 4 (-1)^{(n-1)/2} (mod 16), n odd
CongruenceReport check_lemma33_mod16(long n, const Context& ctx);
// S_n = (-1)^{n-1} n (mod 3)
CongruenceReport check_lemma32_s(long n, const Context& ctx);
// B_n = (-1)^n (mod 3)
CongruenceReport check_lemma32_b(long n, const Context& ctx);
// n * guo_zeng_rhs(n) == sum_{k<n} (2k+1) (-1)^k A_k, exactly
CongruenceReport check_guo_zeng(long n, const Context& ctx);

struct Ranges {
  long prime_lo = 5;
  long prime_hi = 300;
  long n_lo = 1;
  long n_hi = 300;
  std::vector<long> m_list = {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21};
};

struct BatchSummary {
  std::vector<CongruenceReport> reports;  // canonical order
  double wall_seconds = 0.0;

  long total() const { return static_cast<long>(reports.size()); }
  std::vector<CongruenceReport> failures() const;
  long failure_count() const;
  long internal_error_count() const;
};

const std::vector<std::string>& suite_names();  // includes "all"
bool is_suite(const std::string& name);

// Expands the suite over the ranges, builds the shared context, runs every
// check (optionally on `jobs` worker threads) and returns reports sorted by
// (check, params). The report list is independent of `jobs`. Per-check
// evaluation errors become failed reports; the batch itself never aborts.
BatchSummary run_batch(const std::string& suite, const Ranges& ranges,
                       int jobs = 1);

}  // namespace apery
