#include "rootbias/numeric.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_gamma.h>

#include <array>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <limits>

#include "rootbias/error.hpp"

namespace rootbias::numeric {

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  if (n == 0) throw InvalidArgument("factorize: zero has no factorization");
  if (n == std::numeric_limits<int64_t>::min())
    throw InvalidArgument("factorize: value out of range");
  n = n < 0 ? -n : n;
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

bool is_squarefree(int64_t n) {
  if (n == 0) return false;
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

int64_t isqrt(int64_t n) {
  if (n < 0) throw InvalidArgument("isqrt: negative argument");
  auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(int64_t n) {
  if (n < 0) return false;
  int64_t r = isqrt(n);
  return r * r == n;
}

int valuation(int64_t n, int64_t p) {
  if (n == 0) throw InvalidArgument("valuation: zero has infinite valuation");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int64_t mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t m) {
  __int128 result = 1 % m;
  __int128 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<int64_t>(result);
}

int64_t inv_mod(int64_t a, int64_t m) {
  int64_t g = m, x = 0, x1 = 1, r = mod(a, m);
  while (r != 0) {
    int64_t q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw InvalidArgument("inv_mod: element is not invertible");
  return mod(x, m);
}

int64_t ipow(int64_t base, int exp) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int64_t divisor_count(int64_t n) {
  int64_t d = 1;
  for (auto [p, e] : factorize(n)) d *= (e + 1);
  return d;
}

std::vector<int> liouville_table(int64_t limit) {
  // Omega(n) via smallest-prime-factor sieve.
  std::vector<int64_t> spf(static_cast<size_t>(limit + 1), 0);
  std::vector<int> lambda(static_cast<size_t>(limit + 1), 1);
  for (int64_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      for (int64_t j = i; j <= limit; j += i)
        if (spf[j] == 0) spf[j] = i;
    }
    lambda[i] = -lambda[i / spf[i]];
  }
  return lambda;
}

namespace {

// B_{2j} / (2j)! for j = 1..15.
constexpr std::array<double, 15> kBernoulliOverFactorial = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -6.9113789467222299e-10,
    1.6534391534391534e-11,
    -3.9367606834735087e-13,
    9.3367342570950447e-15,
    -2.2052695796240350e-16,
    5.1997922759026553e-18,
    -1.2258087505050646e-19,
    2.8893667694393295e-21,
    -6.8100544386081246e-23,
    1.6050649141204169e-24,
};

}  // namespace

cplx hurwitz_zeta(cplx s, double a) {
  if (a <= 0.0) throw InvalidArgument("hurwitz_zeta: a must be positive");
  if (s == cplx(1.0, 0.0)) throw InvalidArgument("hurwitz_zeta: pole at s = 1");
  // Head sum to N, then the Euler-Maclaurin tail at x = a + N.
  const int head = 24 + static_cast<int>(std::abs(s.imag()));
  CompensatedSum<cplx> sum;
  for (int k = 0; k < head; ++k) sum.add(std::pow(cplx(a + k), -s));
  const double x = a + head;
  const cplx xs = std::pow(cplx(x), -s);
  sum.add(x * xs / (s - 1.0));
  sum.add(0.5 * xs);
  cplx rising = s;  // s (s+1) ... (s+2j-2)
  cplx xpow = xs / x;
  for (size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    cplx term = kBernoulliOverFactorial[j] * rising * xpow;
    sum.add(term);
    if (std::abs(term) < 1e-18 * std::abs(sum.value())) break;
    const double jj = static_cast<double>(2 * j + 2);
    rising *= (s + jj - 1.0) * (s + jj);
    xpow /= x * x;
  }
  return sum.value();
}

cplx log_gamma(cplx z) {
  gsl_sf_result lnr, arg;
  gsl_error_handler_t* old = gsl_set_error_handler_off();
  int status = gsl_sf_lngamma_complex_e(z.real(), z.imag(), &lnr, &arg);
  gsl_set_error_handler(old);
  if (status != GSL_SUCCESS) throw InvalidArgument("log_gamma: pole or domain error");
  return {lnr.val, arg.val};
}

double riemann_zeta(double s) {
  if (s == 1.0) throw InvalidArgument("riemann_zeta: pole at s = 1");
  return boost::math::zeta(s);
}

double expint_e1(double x) {
  if (x <= 0.0) throw InvalidArgument("expint_e1: x must be positive");
  return boost::math::expint(1, x);
}

}  // namespace rootbias::numeric
