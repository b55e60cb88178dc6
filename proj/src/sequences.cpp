#include "apery/sequences.hpp"

#include <string>

#include "apery/polyreduce.hpp"

namespace apery {

namespace {

Int pow_int(long base, long exp) {
  // mpz_pow_ui defines 0^0 = 1, which is exactly the convention the
  // telescoped identity needs at m = 3, n = 1.
  Int b(base);
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

void divexact(Int& n, const Int& d) {
  mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
}

Int eval_int(const std::vector<Int>& coeffs, long x) {
  Int acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

// sum_{m=0}^{M} C(2m,m) sum_{k=0}^{m} C(m,k) C(m+k,k) C(n1,m+k) C(n2+m+k,m+k)
// with every binomial updated incrementally along the row.
Int binomial_double_sum(long M, long n1, long n2) {
  Int total = 0;
  Int central = 1;    // C(2m, m)
  Int row3 = 1;       // C(n1, m)
  Int row4 = 1;       // C(n2+m, m)
  for (long m = 0; m <= M; ++m) {
    if (m > 0) {
      central *= 2 * (2 * m - 1);
      divexact(central, Int(m));
      row3 *= n1 - m + 1;
      divexact(row3, Int(m));
      row4 *= n2 + m;
      divexact(row4, Int(m));
    }
    if (row3 == 0) break;  // C(n1, m+k) vanishes for this and all later rows
    Int b1 = 1;     // C(m, k)
    Int b2 = 1;     // C(m+k, k)
    Int b3 = row3;  // C(n1, m+k)
    Int b4 = row4;  // C(n2+m+k, m+k)
    Int row = 0;
    for (long k = 0;; ++k) {
      row += b1 * b2 * b3 * b4;
      if (k == m) break;
      const long j = m + k;  // second index of b3/b4
      b1 *= m - k;
      divexact(b1, Int(k + 1));
      b2 *= j + 1;
      divexact(b2, Int(k + 1));
      b3 *= n1 - j;
      divexact(b3, Int(j + 1));
      b4 *= n2 + j + 1;
      divexact(b4, Int(j + 1));
      if (b3 == 0) break;  // past the C(n1, .) support
    }
    total += central * row;
  }
  return total;
}

}  // namespace

AperyTable::AperyTable(long max_index) {
  if (max_index < 0) {
    throw std::invalid_argument("AperyTable: max_index must be >= 0");
  }
  values_.reserve(static_cast<std::size_t>(max_index) + 1);
  values_.emplace_back(1);
  if (max_index >= 1) values_.emplace_back(5);
  for (long n = 0; static_cast<long>(values_.size()) <= max_index; ++n) {
    Int num = Int(2 * n + 3) * (17 * n * n + 51 * n + 39) * values_[n + 1] -
              pow_int(n + 1, 3) * values_[n];
    Int den = pow_int(n + 2, 3);
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                den.get_mpz_t());
    if (rem != 0) {
      throw internal_error("AperyTable: recurrence division not exact at n = " +
                           std::to_string(n));
    }
    values_.push_back(std::move(q));
  }
}

const Int& AperyTable::at(long n) const {
  if (n < 0 || n > max_index()) {
    throw std::out_of_range("AperyTable: index " + std::to_string(n) +
                            " outside 0.." + std::to_string(max_index()));
  }
  return values_[static_cast<std::size_t>(n)];
}

Int apery_direct(long n) {
  if (n < 0) throw std::invalid_argument("apery_direct: n must be >= 0");
  Int sum1 = 0;
  Int sum2 = 0;
  const unsigned long un = static_cast<unsigned long>(n);
  for (unsigned long k = 0; k <= un; ++k) {
    Int b1 = binomial(un, k);
    Int b2 = binomial(un + k, k);
    sum1 += b1 * b1 * b2 * b2;
    Int c1 = binomial(un + k, 2 * k);
    Int c2 = binomial(2 * k, k);
    sum2 += c1 * c1 * c2 * c2;
  }
  if (sum1 != sum2) {
    throw internal_error("apery_direct: the two closed forms disagree at n = " +
                         std::to_string(n));
  }
  return sum1;
}

Int weighted_sum_thm1(long m, long n, const AperyTable& table) {
  if (m < 1 || m % 2 == 0) {
    throw std::invalid_argument("weighted_sum_thm1: m must be odd and >= 1");
  }
  if (n < 1) throw std::invalid_argument("weighted_sum_thm1: n must be >= 1");
  Int sum = 0;
  for (long k = 0; k < n; ++k) {
    Int term = pow_int(2 * k + 1, m) * table.at(k);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Int pm_weighted_sum(long m, long n, const AperyTable& table) {
  if (m < 3) throw std::invalid_argument("pm_weighted_sum: m must be >= 3");
  if (n < 0) throw std::invalid_argument("pm_weighted_sum: n must be >= 0");
  auto coeffs = p_poly(m).integer_coefficients();
  if (!coeffs) {
    throw internal_error("pm_weighted_sum: P_m has non-integer coefficients");
  }
  Int sum = 0;
  for (long k = 0; k <= n; ++k) {
    Int term = eval_int(*coeffs, k) * table.at(k);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Int pm_weighted_sum_closed(long m, long n, const AperyTable& table) {
  if (m < 3) {
    throw std::invalid_argument("pm_weighted_sum_closed: m must be >= 3");
  }
  if (n < 1) {
    throw std::invalid_argument("pm_weighted_sum_closed: n must be >= 1");
  }
  const int sign_n = (n % 2 == 0) ? 1 : -1;
  const Int prev_pow = pow_int(n - 1, m - 3);  // 0^0 = 1 covers m = 3, n = 1
  Int t1 = -sign_n * prev_pow * pow_int(n, 3) * table.at(n - 1);
  Int t2 = sign_n * pow_int(n, m - 3) * pow_int(n + 1, 3) * table.at(n);
  Int mid = Int(34) * n * n * n + Int(51) * n * n + Int(27) * n + 5;
  Int t3 = sign_n * mid * prev_pow * table.at(n);
  return t1 + t2 + t3;
}

Int t_sum(long n, const AperyTable& table) {
  if (n < 1) throw std::invalid_argument("t_sum: n must be >= 1");
  Int sum = 0;
  for (long k = 1; k <= n; ++k) {
    Int term = Int(9 * k * k + 10 * k + 3) * k * k * table.at(k);
    if ((n - k) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Int t_sum_closed(long n, const AperyTable& table) {
  if (n < 1) throw std::invalid_argument("t_sum_closed: n must be >= 1");
  const int sign_n = (n % 2 == 0) ? 1 : -1;
  const Int nn(n);
  Rat value = Rat(sign_n) / 3 * Rat(weighted_sum_thm1(1, n, table));
  value += make_rat(nn * nn * (630 * nn * nn + 745 * nn + 216), Int(72)) *
           table.at(n);
  value -= make_rat(nn * nn * nn * (18 * nn - 7), Int(72)) * table.at(n - 1);
  if (value.get_den() != 1) {
    throw internal_error("t_sum_closed: non-integral value at n = " +
                         std::to_string(n));
  }
  return value.get_num();
}

Int s_double_sum(long n) {
  if (n < 1) throw std::invalid_argument("s_double_sum: n must be >= 1");
  return binomial_double_sum(n - 1, n - 1, n);
}

Int b_double_sum(long n) {
  if (n < 0) throw std::invalid_argument("b_double_sum: n must be >= 0");
  return binomial_double_sum(n, n, n);
}

Int guo_zeng_rhs(long n) {
  if (n < 1) throw std::invalid_argument("guo_zeng_rhs: n must be >= 1");
  Int s = s_double_sum(n);
  return (n % 2 == 1) ? s : -s;
}

const Int& EtaSeries::a(long n) const {
  if (n < 1 || n > truncation()) {
    throw std::out_of_range("EtaSeries: index " + std::to_string(n) +
                            " outside 1.." + std::to_string(truncation()));
  }
  return coeff_[static_cast<std::size_t>(n)];
}

EtaSeries eta_coefficients(long n_max) {
  if (n_max < 1) throw std::invalid_argument("eta_coefficients: N must be >= 1");
  EtaSeries series;
  series.coeff_.assign(static_cast<std::size_t>(n_max) + 1, Int(0));
  auto& c = series.coeff_;
  c[1] = 1;
  // Multiply by (1 - q^d)^4 for d = 2n and d = 4n; factors with d > N are
  // identities modulo q^{N+1} and are skipped.
  for (long step : {2L, 4L}) {
    for (long n = 1; step * n <= n_max; ++n) {
      const long d = step * n;
      for (int rep = 0; rep < 4; ++rep) {
        for (long i = n_max; i >= d; --i) {
          c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - d)];
        }
      }
    }
  }
  if (c[1] != 1) throw internal_error("eta_coefficients: a_1 != 1");
  return series;
}

}  // namespace apery
