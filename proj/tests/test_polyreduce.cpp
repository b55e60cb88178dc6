#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apery/polyreduce.hpp"

using namespace apery;

namespace {

RationalPolynomial from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(c);
  return RationalPolynomial(std::move(v));
}

// true iff q is 3^j for some j >= 0
bool is_power_of_3(const Int& q) {
  Int n = q;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

}  // namespace

TEST_CASE("p_poly definition") {
  CHECK(p_poly(1) == from_ints({1, 2}));
  CHECK(p_poly(3) == from_ints({6, 30, 54, 36}));
  CHECK(p_poly(4) == from_ints({-5, -21, -21, 18, 36}));
  CHECK_THROWS_AS(p_poly(2), std::invalid_argument);
  CHECK_THROWS_AS(p_poly(0), std::invalid_argument);
  CHECK_THROWS_AS(p_poly(-3), std::invalid_argument);
}

TEST_CASE("p_poly degree and leading coefficient") {
  for (long m = 3; m <= 30; ++m) {
    auto p = p_poly(m);
    CHECK(p.degree() == m);
    CHECK(p.leading() == 36);
    // coefficient of x^{m-1} is even, which is what makes Q_k integral
    CHECK(p.coeff(m - 1).get_den() == 1);
    CHECK(p.coeff(m - 1).get_num() % 2 == 0);
  }
}

TEST_CASE("q_poly") {
  CHECK(q_poly(3) == from_ints({12, 30, 27, 9}));
  CHECK(q_poly(4) == from_ints({-20, -42, -21, 9, 9}));
  CHECK_THROWS_AS(q_poly(2), std::invalid_argument);
  for (long k = 3; k <= 20; ++k) {
    auto q = q_poly(k);
    auto ints = q.integer_coefficients();
    REQUIRE(ints.has_value());
    CHECK(q.degree() == k);
    CHECK(q.leading() == 9);
    CHECK((*ints)[0] % 2 == 0);  // Q_k(0) is even
  }
}

TEST_CASE("g_poly parity") {
  RationalPolynomial g3({Rat(0), make_rat(Int(3), Int(2)), Rat(0), make_rat(Int(9), Int(2))});
  CHECK(g_poly(3) == g3);
  CHECK_THROWS_AS(g_poly(1), std::invalid_argument);
  for (long k = 3; k <= 25; ++k) {
    auto g = g_poly(k);
    CHECK(g.degree() == k);
    // G_k(-z) = (-1)^k G_k(z)
    auto mirrored = g.compose_linear(Rat(-1), Rat(0));
    auto expected = (k % 2 == 0) ? g : -g;
    CHECK(mirrored == expected);
    CHECK(g.coeff(k - 1) == 0);  // the opposite-parity term vanishes
  }
  CHECK(g_poly(5).coeff(4) == 0);
}

TEST_CASE("reduce_odd_power golden values") {
  CHECK(reduce_odd_power(1).c_m == 1);
  CHECK(reduce_odd_power(1).a.empty());

  auto r3 = reduce_odd_power(3);
  CHECK(r3.a.at(3) == make_rat(Int(2), Int(9)));
  CHECK(r3.c_m == make_rat(Int(-1), Int(3)));

  CHECK(reduce_odd_power(5).c_m == make_rat(Int(-13), Int(27)));
  CHECK(reduce_odd_power(7).c_m == make_rat(Int(5), Int(9)));
  CHECK(reduce_odd_power(9).c_m == make_rat(Int(2273), Int(81)));
  CHECK(reduce_odd_power(11).c_m == make_rat(Int(31133), Int(729)));
  CHECK(reduce_odd_power(13).c_m == make_rat(Int(-19856365), Int(2187)));

  CHECK_THROWS_AS(reduce_odd_power(2), std::invalid_argument);
  CHECK_THROWS_AS(reduce_odd_power(0), std::invalid_argument);
  CHECK_THROWS_AS(reduce_odd_power(-3), std::invalid_argument);
}

TEST_CASE("reduce_odd_power m = 5 coefficient map") {
  auto r = reduce_odd_power(5);
  REQUIRE(r.a.size() == 3);
  CHECK(r.a.at(3) == make_rat(Int(140), Int(81)));
  CHECK(r.a.at(4) == make_rat(Int(8), Int(3)));
  CHECK(r.a.at(5) == make_rat(Int(8), Int(9)));
}

TEST_CASE("reduction identity reconstructs (2x+1)^m") {
  for (long m = 1; m <= 21; m += 2) {
    auto r = reduce_odd_power(m);
    CHECK(r.reconstruct() == p_poly(1).pow(m));
  }
}

TEST_CASE("denominators are 3-powers and c_m numerators odd") {
  for (long m = 3; m <= 21; m += 2) {
    auto r = reduce_odd_power(m);
    CHECK(is_power_of_3(r.c_m.get_den()));
    CHECK(r.c_m.get_num() % 2 != 0);
    for (const auto& [k, ak] : r.a) CHECK(is_power_of_3(ak.get_den()));
  }
}

TEST_CASE("change of basis gives b_m = a_m / 2^{m-2} = 1/9") {
  const Rat ninth = make_rat(Int(1), Int(9));
  for (long m = 3; m <= 21; m += 2) {
    auto r = reduce_odd_power(m);
    Int two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(m - 2));
    CHECK(r.a.at(m) / Rat(two_pow) == ninth);
  }
}

TEST_CASE("the weight (9k^2+10k+3)k^2 decomposes in the P basis") {
  auto lhs = p_poly(4).scaled(make_rat(Int(1), Int(4))) +
             p_poly(3).scaled(make_rat(Int(11), Int(72))) +
             p_poly(1).scaled(make_rat(Int(1), Int(3)));
  CHECK(lhs == from_ints({0, 0, 3, 10, 9}));
}
