#pragma once

#include <vector>

#include "apery/exactnum.hpp"

namespace apery {

// A_0..A_N generated by the Zeilberger recurrence
//   (n+1)^3 A_n - (2n+3)(17n^2+51n+39) A_{n+1} + (n+2)^3 A_{n+2} = 0,
// seeded with A_0 = 1, A_1 = 5. Every division by (n+2)^3 is checked exact.
// Immutable after construction and safe to share between threads.
class AperyTable {
 public:
  explicit AperyTable(long max_index);

  const Int& at(long n) const;
  long max_index() const { return static_cast<long>(values_.size()) - 1; }

 private:
  std::vector<Int> values_;
};

// sum_{k=0}^{n} C(n,k)^2 C(n+k,k)^2, cross-checked against the second
// closed form sum_{k} C(n+k,2k)^2 C(2k,k)^2.
Int apery_direct(long n);

// sum_{k=0}^{n-1} (2k+1)^m (-1)^k A_k, m odd >= 1, n >= 1
Int weighted_sum_thm1(long m, long n, const AperyTable& table);

// sum_{k=0}^{n} P_m(k) (-1)^k A_k, m >= 3
Int pm_weighted_sum(long m, long n, const AperyTable& table);

// Telescoped value of the same sum:
//   (-1)^{n-1} (n-1)^{m-3} n^3 A_{n-1} + (-1)^n n^{m-3} (n+1)^3 A_n
//   + (-1)^n (34n^3+51n^2+27n+5)(n-1)^{m-3} A_n
// with the 0^0 = 1 convention at m = 3, n = 1.
Int pm_weighted_sum_closed(long m, long n, const AperyTable& table);

// T_n = sum_{k=1}^{n} (-1)^{n-k} (9k^2+10k+3) k^2 A_k
Int t_sum(long n, const AperyTable& table);

// T_n via the closed form
//   (-1)^n/3 sum_{k=0}^{n-1} (-1)^k (2k+1) A_k
//   + n^2(630n^2+745n+216)/72 A_n - n^3(18n-7)/72 A_{n-1};
// the rational intermediate must come out integral.
Int t_sum_closed(long n, const AperyTable& table);

// S_n = sum_{m=0}^{n-1} C(2m,m) sum_{k=0}^{m}
//         C(m,k) C(m+k,k) C(n-1,m+k) C(n+m+k,m+k)
Int s_double_sum(long n);

// Same double sum with all three upper limits n instead of n-1.
Int b_double_sum(long n);

// (-1)^{n-1} S_n; n * guo_zeng_rhs(n) == weighted_sum_thm1(1, n).
Int guo_zeng_rhs(long n);

// Coefficients a_1..a_N of q prod_{n>=1} (1-q^{2n})^4 (1-q^{4n})^4.
class EtaSeries {
 public:
  EtaSeries() = default;

  long truncation() const { return static_cast<long>(coeff_.size()) - 1; }
  const Int& a(long n) const;

 private:
  friend EtaSeries eta_coefficients(long n_max);
  std::vector<Int> coeff_;
};

EtaSeries eta_coefficients(long n_max);

}  // namespace apery
