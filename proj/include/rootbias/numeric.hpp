#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace rootbias {

using cplx = std::complex<double>;

namespace numeric {

// ---- integers ---------------------------------------------------------

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// increasing order. |n| must be nonzero; the sign is ignored.
std::vector<std::pair<int64_t, int>> factorize(int64_t n);

bool is_prime(int64_t n);
bool is_squarefree(int64_t n);

/// floor(sqrt(n)) for n >= 0, exact.
int64_t isqrt(int64_t n);
bool is_perfect_square(int64_t n);

/// p-adic valuation of a nonzero integer.
int valuation(int64_t n, int64_t p);

int64_t mod(int64_t a, int64_t m);
int64_t pow_mod(int64_t base, int64_t exp, int64_t m);
/// Inverse of a modulo m; throws InvalidArgument if gcd(a, m) != 1.
int64_t inv_mod(int64_t a, int64_t m);
int64_t ipow(int64_t base, int exp);

/// Number of divisors.
int64_t divisor_count(int64_t n);

/// Liouville function lambda(n) for 1 <= n <= limit (index 0 unused).
std::vector<int> liouville_table(int64_t limit);

// ---- summation --------------------------------------------------------

/// Neumaier compensated summation.
template <typename T>
class CompensatedSum {
 public:
  void add(T x) {
    T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

// ---- special functions ------------------------------------------------

/// Hurwitz zeta(s, a) for a > 0 and s != 1 by Euler-Maclaurin summation.
/// Valid on the whole plane minus s = 1 (analytic continuation included).
cplx hurwitz_zeta(cplx s, double a);

/// Principal branch of log Gamma(z).
cplx log_gamma(cplx z);

/// Riemann zeta for real s != 1.
double riemann_zeta(double s);

/// Exponential integral E1(x), x > 0.
double expint_e1(double x);

}  // namespace numeric
}  // namespace rootbias
