#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <random>

#include "rootbias/basefield.hpp"
#include "rootbias/error.hpp"
#include "rootbias/localweights.hpp"
#include "rootbias/zagier.hpp"

using namespace rootbias;
using Rat = boost::multiprecision::cpp_rational;

namespace {

Rat rpow(Rat x, int n) {
  Rat r = 1;
  if (n < 0) {
    x = 1 / x;
    n = -n;
  }
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// L_P(1, eta) wt / Vol in quotient form, exactly, for q = sq^2 and Z rational.
Rat displayed_exact(int64_t sq, int r, int eta, Rat Z) {
  const Rat q = sq * sq, qi = Rat(1) / q, rq = Rat(1) / Rat(sq);
  if (r == 0) return eta == -1 ? Rat(1) / (1 + qi) : eta == 0 ? Rat(1) : Rat(1) / (1 - qi);
  const Rat Zi = 1 / Z;
  Rat c1, c2;
  if (eta == -1) {
    c1 = Z - qi * Zi;
    c2 = Zi - qi * Z;
  } else if (eta == 0) {
    c1 = Z - rq;
    c2 = Zi - rq;
  } else {
    c1 = Z + qi * Zi - 2 * rq;
    c2 = Zi + qi * Z - 2 * rq;
  }
  return (c1 * rpow(Rat(sq) * Z, r) - c2 * rpow(Rat(sq) * Zi, r)) / (Z - Zi);
}

double to_double(const Rat& x) { return x.convert_to<double>(); }

}  // namespace

TEST_CASE("rs_weight at depth zero is one") {
  for (double q : {2.0, 3.0, 4.0, 9.0})
    for (int eta : {-1, 0, 1})
      for (cplx s : {cplx(0.5), cplx(0.1, 2.0), cplx(3.0)})
        CHECK(std::abs(rs_weight({q, 0, eta, s}) - 1.0) < 1e-15);
}

TEST_CASE("rs_weight examples with rational q^s") {
  // q = 4, split, s = 1/2: Z = 2.
  const Rat a = displayed_exact(2, 1, 1, 2);
  CHECK(a == Rat(3));
  CHECK(rs_weight_displayed({4.0, 1, 1, 0.5}).real() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(rs_weight({4.0, 1, 1, 0.5}).real() == doctest::Approx(9.0 / 4.0).epsilon(1e-14));
  // q = 9, ramified, s = 1/2: Z = 3.
  CHECK(displayed_exact(3, 1, 0, 3) == Rat(9));
  CHECK(rs_weight({9.0, 1, 0, 0.5}).real() == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("telescoped form matches the exact quotient form") {
  for (int64_t sq : {2, 3, 4, 5})
    for (int twice_s : {1, 2, 3, -1, -3})
      for (int r = 0; r <= 5; ++r)
        for (int eta : {-1, 0, 1}) {
          const Rat Z = rpow(Rat(sq), twice_s);  // q^s with q = sq^2
          const double q = double(sq * sq);
          const cplx v = rs_weight_displayed({q, r, eta, 0.5 * twice_s});
          const double e = to_double(displayed_exact(sq, r, eta, Z));
          CHECK(std::abs(v - e) <= 1e-11 * std::max(1.0, std::abs(e)));
        }
}

TEST_CASE("telescoped and quotient forms agree at random points") {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> re(-1.5, 1.5), im(-3.0, 3.0);
  std::uniform_int_distribution<int> qi(0, 5), ri(0, 6), ei(-1, 1);
  const double qs[] = {2.0, 3.0, 4.0, 5.0, 7.0, 9.0};
  for (int i = 0; i < 20; ++i) {
    const LocalWeightQuery w{qs[qi(rng)], ri(rng), ei(rng), cplx(re(rng), im(rng))};
    const cplx Z = std::pow(cplx(w.q), w.s);
    REQUIRE(std::abs(std::abs(Z) - 1.0) > 1e-3);
    const cplx a = rs_weight_displayed(w), b = rs_weight_quotient(w);
    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("quotient form refuses Z = 1") { CHECK_THROWS_AS(rs_weight_quotient({3.0, 2, 1, 0.0}), InvalidArgument); }

TEST_CASE("unramified local factor examples") {
  for (double q : {2.0, 3.0, 4.0})
    for (int eta : {-1, 0, 1})
      for (cplx s : {cplx(0.5), cplx(0.2, 1.0)}) CHECK(std::abs(unram_local_factor(q, 0, eta, s) - 1.0) < 1e-14);
  CHECK(unram_local_factor(2.0, 1, -1, 0.5).real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(unram_local_factor(2.0, 1, 1, 0.5).real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("unramified local factor equals the Zagier Euler correction") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(-4.0, 4.0);
  std::uniform_int_distribution<int> qi(0, 6), ai(0, 4), ei(-1, 1);
  const double qs[] = {2.0, 3.0, 4.0, 5.0, 9.0, 11.0, 25.0};
  for (int i = 0; i < 10; ++i) {
    const double q = qs[qi(rng)];
    const int a = ai(rng), eta = ei(rng);
    const cplx s(re(rng), im(rng));
    const cplx u = unram_local_factor(q, a, eta, s);
    const cplx z = euler_correction(q, a, eta, s);
    CHECK(std::abs(u - z) <= 1e-12 * std::abs(z));
  }
  // Near the removable singularity at q^s = 1.
  for (cplx s : {cplx(1e-9), cplx(0.0), cplx(0.0, 1e-8)})
    for (int a = 0; a <= 4; ++a) {
      const cplx u = unram_local_factor(3.0, a, -1, s);
      CHECK(std::abs(u - euler_correction(3.0, a, -1, s)) <= 1e-8 * std::abs(u));
    }
}

TEST_CASE("q^(a s) times the local factor is even in s") {
  // The local factor itself is not even for a > 0: the prefactor q^-as breaks the symmetry.
  for (double q : {2.0, 5.0})
    for (int a = 0; a <= 4; ++a)
      for (int eta : {-1, 0, 1})
        for (cplx s : {cplx(0.5), cplx(0.3, -1.2)}) {
          const cplx plus = std::pow(cplx(q), double(a) * s) * unram_local_factor(q, a, eta, s);
          const cplx minus = std::pow(cplx(q), -double(a) * s) * unram_local_factor(q, a, eta, -s);
          CHECK(std::abs(plus - minus) <= 1e-12 * std::abs(plus));
        }
  CHECK(std::abs(unram_local_factor(2.0, 1, -1, 0.5) - unram_local_factor(2.0, 1, -1, -0.5)) > 0.1);
}

TEST_CASE("ramified level constant") {
  CHECK(ramified_level_constant(3, true) == 2);
  CHECK(ramified_level_constant(3, false) == -1);
  CHECK(ramified_level_constant(9, true) == 8);
}

TEST_CASE("A factor examples") {
  CHECK(A_factor(FieldTag::Qsqrt2, {0, 0}, {3, 0}) == euler_phi_F(FieldTag::Qsqrt2, 3));
  CHECK(A_factor(FieldTag::Qsqrt2, {1, 0}, {3, 0}) == -1);
  CHECK(A_factor(FieldTag::Q, {5, 0}, {15, 0}) == -4);
  for (FieldTag F : {FieldTag::Q, FieldTag::Qsqrt2, FieldTag::Qsqrt5})
    for (int64_t N : {3, 7, 11, 21, 33})
      CHECK(A_factor(F, {0, 0}, {N, 0}) == euler_phi_F(F, N));
  CHECK_THROWS_AS(A_factor(FieldTag::Q, {1, 0}, {12, 0}), InvalidArgument);
}

TEST_CASE("A factor is multiplicative in coprime levels") {
  // Odd and prime to 5, so square-free in all three rings.
  const std::pair<int64_t, int64_t> pairs[] = {{3, 7}, {7, 11}, {13, 3}, {11, 17}, {21, 13}};
  for (FieldTag F : {FieldTag::Q, FieldTag::Qsqrt2, FieldTag::Qsqrt5})
    for (auto [N1, N2] : pairs)
      for (int64_t a = -12; a <= 12; ++a)
        for (int64_t b = -3; b <= 3; ++b) {
          const RingElement n{a, F == FieldTag::Q ? 0 : b};
          CHECK(A_factor(F, n, {N1 * N2, 0}) == A_factor(F, n, {N1, 0}) * A_factor(F, n, {N2, 0}));
        }
}
