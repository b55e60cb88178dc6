#include "apery/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "apery/polyreduce.hpp"

namespace apery {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

Params params_of(std::initializer_list<std::pair<const char*, long>> kv) {
  Params out;
  for (const auto& [k, v] : kv) out.emplace_back(k, std::to_string(v));
  return out;
}

Int pow_int(long base, long exp) {
  Int b(base);
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

// Multiplicity of base in diff (base >= 2); infinite for diff = 0.
void base_valuation(const Int& diff, const Int& base, CongruenceReport& rep) {
  if (diff == 0) {
    rep.diff_valuation_infinite = true;
    rep.diff_valuation = 0;
    return;
  }
  Int reduced;
  rep.diff_valuation_infinite = false;
  rep.diff_valuation = static_cast<long>(
      mpz_remove(reduced.get_mpz_t(), diff.get_mpz_t(), base.get_mpz_t()));
}

// Congruence of two p-integral rationals modulo p^e.
CongruenceReport padic_report(std::string check, Params params, const Rat& lhs,
                              const Rat& rhs, long p, long e) {
  CongruenceReport rep;
  rep.check = std::move(check);
  rep.params = std::move(params);
  rep.modulus_base = p;
  rep.modulus_exponent = e;
  rep.modulus = pow_int(p, e);
  PadicValuation v = padic_valuation(lhs - rhs, p);
  rep.diff_valuation_infinite = v.infinite;
  rep.diff_valuation = v.infinite ? 0 : v.value;
  rep.pass = v.at_least(e);
  rep.lhs = residue_mod_prime_power(lhs, p, e);
  rep.rhs = residue_mod_prime_power(rhs, p, e);
  return rep;
}

void require_prime_above(long p, long bound, const char* who) {
  if (p <= bound || !is_prime(p)) {
    throw std::invalid_argument(std::string(who) + ": p = " +
                                std::to_string(p) + " must be a prime > " +
                                std::to_string(bound));
  }
}

void require_odd_prime(long p, const char* who) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::invalid_argument(std::string(who) + ": p = " +
                                std::to_string(p) + " must be an odd prime");
  }
}

void require_at_least(long n, long bound, const char* who) {
  if (n < bound) {
    throw std::invalid_argument(std::string(who) + ": n = " +
                                std::to_string(n) + " must be >= " +
                                std::to_string(bound));
  }
}

}  // namespace

Context::Context(long apery_max, long eta_max,
                 const std::vector<long>& m_values, long bernoulli_max)
    : table(apery_max) {
  if (eta_max >= 1) eta = eta_coefficients(eta_max);
  for (long m : m_values) {
    if (m >= 1 && m % 2 == 1 && !cm.count(m)) {
      cm.emplace(m, reduce_odd_power(m).c_m);
    }
  }
  if (bernoulli_max >= 0) bernoulli = bernoulli_upto(bernoulli_max);
}

Rat Context::cm_value(long m) const {
  auto it = cm.find(m);
  if (it != cm.end()) return it->second;
  return reduce_odd_power(m).c_m;
}

Rat Context::bernoulli_value(long n) const {
  if (n >= 0 && n < static_cast<long>(bernoulli.size())) {
    return bernoulli[static_cast<std::size_t>(n)];
  }
  return bernoulli_upto(n).back();
}

CongruenceReport check_thm1(long m, long p, const Context& ctx) {
  if (m < 1 || m % 2 == 0) {
    throw std::invalid_argument("check_thm1: m must be odd and >= 1");
  }
  require_prime_above(p, 3, "check_thm1");
  Rat lhs(weighted_sum_thm1(m, p, ctx.table));
  Rat rhs = ctx.cm_value(m) * p * legendre_symbol(p, 3);
  return padic_report("thm1", params_of({{"m", m}, {"p", p}}), lhs, rhs, p, 3);
}

CongruenceReport check_lemma21(long m, long p, const Context& ctx) {
  require_at_least(m, 3, "check_lemma21");
  require_prime_above(p, 3, "check_lemma21");
  Rat lhs(pm_weighted_sum(m, p - 1, ctx.table));
  return padic_report("lemma21", params_of({{"m", m}, {"p", p}}), lhs, Rat(0),
                      p, 3);
}

CongruenceReport check_thm2_integrality(long n, const Context& ctx) {
  require_at_least(n, 1, "check_thm2_integrality");
  CongruenceReport rep;
  rep.check = "thm2-int";
  rep.params = params_of({{"n", n}});
  const Int t = t_sum(n, ctx.table);
  const Int half = Int(n) * (n + 1);
  rep.modulus_base = 2 * half;
  rep.modulus_exponent = 1;
  rep.modulus = rep.modulus_base;
  // T_n = n(n+1) (mod 2n(n+1)) captures divisibility and odd quotient at once.
  mpz_mod(rep.lhs.get_mpz_t(), t.get_mpz_t(), rep.modulus.get_mpz_t());
  rep.rhs = half;
  base_valuation(t - half, rep.modulus_base, rep);
  rep.pass = (rep.diff_valuation_infinite || rep.diff_valuation >= 1) && t > 0;
  return rep;
}

CongruenceReport check_thm2_congruence(long p, const Context& ctx) {
  require_odd_prime(p, "check_thm2_congruence");
  Rat lhs(-t_sum(p, ctx.table));  // (-1)^p T_p restores the k-indexed signs
  Rat rhs = make_rat(Int(p), Int(3)) * legendre_symbol(p, 3) - Rat(15) * p * p;
  return padic_report("thm2-cong", params_of({{"p", p}}), lhs, rhs, p, 3);
}

CongruenceReport check_liu_wang(long p, const Context& ctx) {
  require_prime_above(p, 5, "check_liu_wang");
  Rat lhs(ctx.table.at(p - 1));
  const Rat b_small = ctx.bernoulli_value(p - 3);
  const Rat b_large = ctx.bernoulli_value(2 * p - 4);
  Rat rhs = 1 + Rat(pow_int(p, 3)) * (Rat(4, 3) * b_small - Rat(1, 2) * b_large) +
            Rat(pow_int(p, 4)) / 9 * b_small;
  return padic_report("liu-wang", params_of({{"p", p}}), lhs, rhs, p, 5);
}

CongruenceReport check_ap_minus2(long p, const Context& ctx) {
  require_prime_above(p, 3, "check_ap_minus2");
  Rat lhs(ctx.table.at(p - 2));
  Rat rhs(5 - 12 * p);
  return padic_report("ap-minus2", params_of({{"p", p}}), lhs, rhs, p, 3);
}

CongruenceReport check_ap_mod_p(long p, const Context& ctx) {
  require_odd_prime(p, "check_ap_mod_p");
  return padic_report("ap-mod-p", params_of({{"p", p}}), Rat(ctx.table.at(p)),
                      Rat(5), p, 1);
}

CongruenceReport check_beukers(long p, const Context& ctx) {
  require_odd_prime(p, "check_beukers");
  Rat lhs(ctx.table.at((p - 1) / 2));
  Rat rhs(ctx.eta.truncation() >= p ? ctx.eta.a(p) : eta_coefficients(p).a(p));
  return padic_report("beukers", params_of({{"p", p}}), lhs, rhs, p, 2);
}

CongruenceReport check_h_mod4(long n, const Context& ctx) {
  require_at_least(n, 1, "check_h_mod4");
  const Int& a_n = ctx.table.at(n);
  const Int& a_prev = ctx.table.at(n - 1);
  const Int diff = a_n - a_prev;
  const Int nn(n);
  Rat h = make_rat(nn * nn * diff, Int(4)) + make_rat(nn * nn * nn * diff, Int(6)) +
          Rat(nn * nn * nn * a_prev) + Rat(2 * nn * a_n);
  if (!padic_valuation(h, 2).at_least(0)) {
    CongruenceReport rep;
    rep.check = "h-mod4";
    rep.params = params_of({{"n", n}});
    rep.modulus_base = 2;
    rep.modulus_exponent = 2;
    rep.modulus = 4;
    rep.error = "h(n) is not 2-integral at n = " + std::to_string(n);
    return rep;
  }
  Rat target(n % 2 == 0 ? 0 : 2);
  return padic_report("h-mod4", params_of({{"n", n}}), h, target, 2, 2);
}

CongruenceReport check_gessel_mod3(long n, const Context& ctx) {
  require_at_least(n, 0, "check_gessel_mod3");
  Rat target(n % 2 == 0 ? 1 : -1);
  return padic_report("gessel-mod3", params_of({{"n", n}}),
                      Rat(ctx.table.at(n)), target, 3, 1);
}

CongruenceReport check_gessel_mod8_even(long n, const Context& ctx) {
  require_at_least(n, 0, "check_gessel_mod8_even");
  return padic_report("gessel-mod8-even", params_of({{"n", n}}),
                      Rat(ctx.table.at(2 * n)), Rat(1), 2, 3);
}

CongruenceReport check_gessel_mod8_odd(long n, const Context& ctx) {
  require_at_least(n, 0, "check_gessel_mod8_odd");
  return padic_report("gessel-mod8-odd", params_of({{"n", n}}),
                      Rat(ctx.table.at(2 * n + 1)), Rat(5), 2, 3);
}

CongruenceReport check_lemma33_mod9(long n, const Context& ctx) {
  require_at_least(n, 1, "check_lemma33_mod9");
  if (n % 3 == 0) {
    throw std::invalid_argument("check_lemma33_mod9: n must not be divisible by 3");
  }
  Rat lhs(ctx.table.at(n) + ctx.table.at(n - 1));
  Rat target(n % 2 == 0 ? 3 * n : -3 * n);
  return padic_report("lemma33-mod9", params_of({{"n", n}}), lhs, target, 3, 2);
}

CongruenceReport check_lemma33_mod16(long n, const Context& ctx) {
  require_at_least(n, 1, "check_lemma33_mod16");
  if (n % 2 == 0) {
    throw std::invalid_argument("check_lemma33_mod16: n must be odd");
  }
  Rat lhs(ctx.table.at(n) - ctx.table.at(n - 1));
  Rat target(((n - 1) / 2) % 2 == 0 ? 4 : -4);
  return padic_report("lemma33-mod16", params_of({{"n", n}}), lhs, target, 2, 4);
}

CongruenceReport check_lemma32_s(long n, const Context&) {
  require_at_least(n, 1, "check_lemma32_s");
  Rat target(n % 2 == 1 ? n : -n);
  return padic_report("lemma32-s", params_of({{"n", n}}), Rat(s_double_sum(n)),
                      target, 3, 1);
}

CongruenceReport check_lemma32_b(long n, const Context&) {
  require_at_least(n, 0, "check_lemma32_b");
  Rat target(n % 2 == 0 ? 1 : -1);
  return padic_report("lemma32-b", params_of({{"n", n}}), Rat(b_double_sum(n)),
                      target, 3, 1);
}

CongruenceReport check_guo_zeng(long n, const Context& ctx) {
  require_at_least(n, 1, "check_guo_zeng");
  CongruenceReport rep;
  rep.check = "guo-zeng";
  rep.params = params_of({{"n", n}});
  rep.lhs = weighted_sum_thm1(1, n, ctx.table);
  rep.rhs = n * guo_zeng_rhs(n);
  rep.pass = rep.lhs == rep.rhs;
  rep.diff_valuation_infinite = rep.pass;
  return rep;
}

std::vector<CongruenceReport> BatchSummary::failures() const {
  std::vector<CongruenceReport> out;
  for (const auto& r : reports) {
    if (!r.pass) out.push_back(r);
  }
  return out;
}

long BatchSummary::failure_count() const {
  long n = 0;
  for (const auto& r : reports) n += r.pass ? 0 : 1;
  return n;
}

long BatchSummary::internal_error_count() const {
  long n = 0;
  for (const auto& r : reports) n += r.internal ? 1 : 0;
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "thm1",     "lemma21",  "thm2-int", "thm2-cong", "liu-wang",
      "ap-minus2", "ap-mod-p", "beukers",  "gessel",    "lemma33",
      "guo-zeng", "h-mod4",   "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

struct Task {
  std::string check;
  Params params;
  std::function<CongruenceReport(const Context&)> run;
};

struct Needs {
  long apery = 0;
  long eta = 0;
  long bernoulli = -1;
  std::vector<long> m_values;
};

struct Plan {
  std::vector<Task> tasks;
  Needs needs;

  void add(std::string check, Params params,
           std::function<CongruenceReport(const Context&)> fn) {
    tasks.push_back({std::move(check), std::move(params), std::move(fn)});
  }
};

std::vector<long> primes_in(long lo, long hi, long at_least) {
  std::vector<long> out;
  for (long p = std::max(lo, at_least); p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

void expand_suite(const std::string& suite, const Ranges& r, Plan& plan) {
  Needs& needs = plan.needs;
  if (suite == "thm1") {
    for (long m : r.m_list) {
      if (m < 1 || m % 2 == 0) continue;
      needs.m_values.push_back(m);
      for (long p : primes_in(r.prime_lo, r.prime_hi, 5)) {
        needs.apery = std::max(needs.apery, p - 1);
        plan.add("thm1", params_of({{"m", m}, {"p", p}}),
                 [m, p](const Context& c) { return check_thm1(m, p, c); });
      }
    }
  } else if (suite == "lemma21") {
    for (long m : r.m_list) {
      if (m < 3) continue;
      for (long p : primes_in(r.prime_lo, r.prime_hi, 5)) {
        needs.apery = std::max(needs.apery, p - 1);
        plan.add("lemma21", params_of({{"m", m}, {"p", p}}),
                 [m, p](const Context& c) { return check_lemma21(m, p, c); });
      }
    }
  } else if (suite == "thm2-int") {
    for (long n = std::max(r.n_lo, 1L); n <= r.n_hi; ++n) {
      needs.apery = std::max(needs.apery, n);
      plan.add("thm2-int", params_of({{"n", n}}),
               [n](const Context& c) { return check_thm2_integrality(n, c); });
    }
  } else if (suite == "thm2-cong") {
    for (long p : primes_in(r.prime_lo, r.prime_hi, 3)) {
      needs.apery = std::max(needs.apery, p);
      plan.add("thm2-cong", params_of({{"p", p}}),
               [p](const Context& c) { return check_thm2_congruence(p, c); });
    }
  } else if (suite == "liu-wang") {
    for (long p : primes_in(r.prime_lo, r.prime_hi, 7)) {
      needs.apery = std::max(needs.apery, p - 1);
      needs.bernoulli = std::max(needs.bernoulli, 2 * p - 4);
      plan.add("liu-wang", params_of({{"p", p}}),
               [p](const Context& c) { return check_liu_wang(p, c); });
    }
  } else if (suite == "ap-minus2") {
    for (long p : primes_in(r.prime_lo, r.prime_hi, 5)) {
      needs.apery = std::max(needs.apery, p - 2);
      plan.add("ap-minus2", params_of({{"p", p}}),
               [p](const Context& c) { return check_ap_minus2(p, c); });
    }
  } else if (suite == "ap-mod-p") {
    for (long p : primes_in(r.prime_lo, r.prime_hi, 3)) {
      needs.apery = std::max(needs.apery, p);
      plan.add("ap-mod-p", params_of({{"p", p}}),
               [p](const Context& c) { return check_ap_mod_p(p, c); });
    }
  } else if (suite == "beukers") {
    for (long p : primes_in(r.prime_lo, r.prime_hi, 3)) {
      needs.apery = std::max(needs.apery, (p - 1) / 2);
      needs.eta = std::max(needs.eta, p);
      plan.add("beukers", params_of({{"p", p}}),
               [p](const Context& c) { return check_beukers(p, c); });
    }
  } else if (suite == "gessel") {
    for (long n = std::max(r.n_lo, 0L); n <= r.n_hi; ++n) {
      needs.apery = std::max(needs.apery, 2 * n + 1);
      plan.add("gessel-mod3", params_of({{"n", n}}),
               [n](const Context& c) { return check_gessel_mod3(n, c); });
      plan.add("gessel-mod8-even", params_of({{"n", n}}),
               [n](const Context& c) { return check_gessel_mod8_even(n, c); });
      plan.add("gessel-mod8-odd", params_of({{"n", n}}),
               [n](const Context& c) { return check_gessel_mod8_odd(n, c); });
    }
  } else if (suite == "lemma33") {
    for (long n = std::max(r.n_lo, 1L); n <= r.n_hi; ++n) {
      needs.apery = std::max(needs.apery, n);
      if (n % 3 != 0) {
        plan.add("lemma33-mod9", params_of({{"n", n}}),
                 [n](const Context& c) { return check_lemma33_mod9(n, c); });
      }
      if (n % 2 == 1) {
        plan.add("lemma33-mod16", params_of({{"n", n}}),
                 [n](const Context& c) { return check_lemma33_mod16(n, c); });
      }
    }
  } else if (suite == "guo-zeng") {
    for (long n = std::max(r.n_lo, 1L); n <= r.n_hi; ++n) {
      needs.apery = std::max(needs.apery, n);
      plan.add("guo-zeng", params_of({{"n", n}}),
               [n](const Context& c) { return check_guo_zeng(n, c); });
    }
  } else if (suite == "h-mod4") {
    for (long n = std::max(r.n_lo, 1L); n <= r.n_hi; ++n) {
      needs.apery = std::max(needs.apery, n);
      plan.add("h-mod4", params_of({{"n", n}}),
               [n](const Context& c) { return check_h_mod4(n, c); });
    }
  } else {
    throw std::invalid_argument("run_batch: unknown suite '" + suite + "'");
  }
}

bool numeric_less(const std::string& a, const std::string& b) {
  // params are decimal integers; compare by value
  return Int(a) < Int(b);
}

bool report_less(const CongruenceReport& a, const CongruenceReport& b) {
  if (a.check != b.check) return a.check < b.check;
  const std::size_t n = std::min(a.params.size(), b.params.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.params[i].first != b.params[i].first) {
      return a.params[i].first < b.params[i].first;
    }
    if (a.params[i].second != b.params[i].second) {
      return numeric_less(a.params[i].second, b.params[i].second);
    }
  }
  return a.params.size() < b.params.size();
}

CongruenceReport run_guarded(const Task& task, const Context& ctx) {
  try {
    return task.run(ctx);
  } catch (const internal_error& e) {
    CongruenceReport rep;
    rep.check = task.check;
    rep.params = task.params;
    rep.error = e.what();
    rep.internal = true;
    return rep;
  } catch (const std::exception& e) {
    CongruenceReport rep;
    rep.check = task.check;
    rep.params = task.params;
    rep.error = e.what();
    return rep;
  }
}

}  // namespace

BatchSummary run_batch(const std::string& suite, const Ranges& ranges,
                       int jobs) {
  if (!is_suite(suite)) {
    throw std::invalid_argument("run_batch: unknown suite '" + suite + "'");
  }
  if (ranges.prime_lo > ranges.prime_hi || ranges.n_lo > ranges.n_hi) {
    throw std::invalid_argument("run_batch: empty range (lo > hi)");
  }
  if (jobs < 1) throw std::invalid_argument("run_batch: jobs must be >= 1");

  const auto start = std::chrono::steady_clock::now();

  Plan plan;
  if (suite == "all") {
    const auto& names = suite_names();
    for (const auto& name : names) {
      if (name != "all") expand_suite(name, ranges, plan);
    }
  } else {
    expand_suite(suite, ranges, plan);
  }

  const Context ctx(plan.needs.apery, plan.needs.eta, plan.needs.m_values,
                    plan.needs.bernoulli);

  std::vector<CongruenceReport> reports(plan.tasks.size());
  const int workers = static_cast<int>(
      std::min<long>(jobs, static_cast<long>(plan.tasks.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < plan.tasks.size(); ++i) {
      reports[i] = run_guarded(plan.tasks[i], ctx);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < plan.tasks.size();) {
        reports[i] = run_guarded(plan.tasks[i], ctx);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  std::stable_sort(reports.begin(), reports.end(), report_less);

  BatchSummary summary;
  summary.reports = std::move(reports);
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return summary;
}

}  // namespace apery
