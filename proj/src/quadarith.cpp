#include "rootbias/quadarith.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "rootbias/error.hpp"

namespace rootbias {

using numeric::CompensatedSum;

bool is_discriminant(int64_t n) {
  if (n == 0) return false;
  int64_t r = numeric::mod(n, 4);
  return r == 0 || r == 1;
}

bool is_fundamental(int64_t D) {
  if (D == 1 || !is_discriminant(D)) return false;
  if (numeric::mod(D, 4) == 1) return numeric::is_squarefree(D);
  int64_t m = D / 4;
  int64_t r = numeric::mod(m, 4);
  return (r == 2 || r == 3) && numeric::is_squarefree(m);
}

FundamentalDecomposition fundamental_decompose(int64_t delta) {
  if (!is_discriminant(delta))
    throw InvalidArgument("fundamental_decompose: " + std::to_string(delta) +
                          " is not a nonzero discriminant");
  // Largest square l^2 | delta with delta / l^2 still a discriminant.
  int64_t sq = 1;
  for (auto [p, e] : numeric::factorize(delta)) sq *= numeric::ipow(p, e / 2);
  FundamentalDecomposition out{delta, delta, 1};
  for (int64_t l = sq; l >= 1; --l) {
    if (sq % l != 0) continue;
    int64_t D = delta / (l * l);
    if (D == 1 || is_fundamental(D)) {
      out.D = D;
      out.l = l;
      return out;
    }
  }
  throw Inconsistency("fundamental_decompose: no fundamental part found");
}

int kronecker(int64_t a, int64_t n) {
  if (n < 1) throw InvalidArgument("kronecker: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    int64_t r = numeric::mod(a, 8);
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol for odd n.
  int64_t x = numeric::mod(a, n);
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, n);
    if (x % 4 == 3 && n % 4 == 3) result = -result;
    x %= n;
  }
  return n == 1 ? result : 0;
}

int64_t class_number_imag(int64_t D) {
  if (D >= 0 || !is_fundamental(D))
    throw InvalidArgument("class_number_imag: need a negative fundamental discriminant");
  int64_t h = 0;
  const int64_t absD = -D;
  for (int64_t a = 1; 3 * a * a <= absD; ++a) {
    for (int64_t b = -a + 1; b <= a; ++b) {
      if (numeric::mod(b - D, 2) != 0) continue;
      int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      int64_t c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

int omega_units(int64_t D) {
  if (D >= 0 || !is_fundamental(D))
    throw InvalidArgument("omega_units: need a negative fundamental discriminant");
  if (D == -3) return 6;
  if (D == -4) return 4;
  return 2;
}

ImagQuadData imag_quad_data(int64_t D) {
  return {D, class_number_imag(D), omega_units(D)};
}

namespace {

void require_fundamental_nontrivial(int64_t D, const char* who) {
  if (!is_fundamental(D))
    throw InvalidArgument(std::string(who) + ": " + std::to_string(D) +
                          " is not a fundamental discriminant other than 1");
}

constexpr int64_t kLogSineLimit = 20000;

}  // namespace

double dirichlet_L1_logsine(int64_t D) {
  require_fundamental_nontrivial(D, "dirichlet_L1_logsine");
  if (D < 0) throw InvalidArgument("dirichlet_L1_logsine: needs D > 0");
  CompensatedSum<double> sum;
  const double pi = std::numbers::pi;
  for (int64_t a = 1; 2 * a < D; ++a) {
    int chi = kronecker(D, a);
    if (chi != 0) sum.add(chi * std::log(std::sin(pi * static_cast<double>(a) / D)));
  }
  // chi is even, so the half range counts twice.
  return -2.0 * sum.value() / std::sqrt(static_cast<double>(D));
}

double dirichlet_L1_smoothed(int64_t D) {
  require_fundamental_nontrivial(D, "dirichlet_L1_smoothed");
  if (D < 0) throw InvalidArgument("dirichlet_L1_smoothed: needs D > 0");
  // Theta-function splitting of the completed L-function at s = 1.
  const double dd = static_cast<double>(D);
  const double c = std::sqrt(std::numbers::pi / dd);
  CompensatedSum<double> sum;
  for (int64_t n = 1;; ++n) {
    const double x = c * static_cast<double>(n);
    if (x > 7.0) break;  // erfc(7)/n and E1(49)/sqrt(D) are far below 1e-20
    int chi = kronecker(D, n);
    if (chi == 0) continue;
    sum.add(chi * (std::erfc(x) / static_cast<double>(n) + numeric::expint_e1(x * x) / std::sqrt(dd)));
  }
  return sum.value();
}

double dirichlet_L1(int64_t D) {
  require_fundamental_nontrivial(D, "dirichlet_L1");
  if (D < 0) {
    return 2.0 * std::numbers::pi * static_cast<double>(class_number_imag(D)) /
           (omega_units(D) * std::sqrt(static_cast<double>(-D)));
  }
  return D <= kLogSineLimit ? dirichlet_L1_logsine(D) : dirichlet_L1_smoothed(D);
}

double dirichlet_L1_truncated(int64_t D, int64_t T, double* tail_bound) {
  require_fundamental_nontrivial(D, "dirichlet_L1_truncated");
  if (T < 1) throw InvalidArgument("dirichlet_L1_truncated: T must be positive");
  CompensatedSum<double> sum;
  for (int64_t n = 1; n <= T; ++n) {
    int chi = kronecker(D, n);
    if (chi != 0) sum.add(chi / static_cast<double>(n));
  }
  if (tail_bound) *tail_bound = 2.0 * std::abs(static_cast<double>(D)) / static_cast<double>(T);
  return sum.value();
}

cplx dirichlet_L(int64_t D, cplx s) {
  if (D != 1) require_fundamental_nontrivial(D, "dirichlet_L");
  if (s == cplx(1.0, 0.0)) {
    if (D == 1) throw InvalidArgument("dirichlet_L: zeta has a pole at s = 1");
    return dirichlet_L1(D);
  }
  const int64_t m = D < 0 ? -D : D;
  CompensatedSum<cplx> sum;
  for (int64_t a = 1; a <= m; ++a) {
    int chi = kronecker(D, a);
    if (chi != 0) sum.add(static_cast<double>(chi) * numeric::hurwitz_zeta(s, static_cast<double>(a) / m));
  }
  return std::pow(cplx(static_cast<double>(m)), -s) * sum.value();
}

double regulator(int64_t D) {
  require_fundamental_nontrivial(D, "regulator");
  if (D < 0) throw InvalidArgument("regulator: needs D > 0");
  // x = (P + sqrt(D)) / Q with Q | D - P^2.
  const double root = std::sqrt(static_cast<double>(D));
  const int64_t iroot = numeric::isqrt(D);
  int64_t P = (D % 4 == 0) ? 0 : 1;
  int64_t Q = 2;
  auto step = [&]() {
    int64_t a = (P + iroot) / Q;
    P = a * Q - P;
    Q = (D - P * P) / Q;
  };
  step();  // x_1 is reduced, so the expansion is purely periodic from here
  const int64_t P1 = P, Q1 = Q;
  CompensatedSum<double> sum;
  do {
    sum.add(std::log((static_cast<double>(P) + root) / static_cast<double>(Q)));
    step();
  } while (P != P1 || Q != Q1);
  return sum.value();
}

RealQuadData real_quad_data(int64_t D) {
  double reg = regulator(D);
  double L1 = dirichlet_L1(D);
  auto h = static_cast<int64_t>(std::llround(std::sqrt(static_cast<double>(D)) * L1 / (2.0 * reg)));
  return {D, h, reg};
}

}  // namespace rootbias
