#include "rootbias/bias.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rootbias/archimedean.hpp"
#include "rootbias/error.hpp"
#include "rootbias/localweights.hpp"
#include "rootbias/numeric.hpp"
#include "rootbias/quadarith.hpp"
#include "rootbias/zagier.hpp"

namespace rootbias {

LocalSquareClass unit_square_class_2adic(FieldTag F, const PrimeIdeal& P, const RingElement& u) {
  if (P.p != 2) throw InvalidArgument("unit_square_class_2adic: prime must lie above 2");
  if (in_prime(F, P, u)) throw InvalidArgument("unit_square_class_2adic: element is not a unit at P");
  constexpr int64_t kMod = 32;
  const RingElement ur{numeric::mod(u.a, kMod), numeric::mod(u.b, kMod)};
  const RingElement four{4, 0};
  const RingElement four_pi = mul(F, four, P.pi);
  const int64_t bmax = F == FieldTag::Q ? 1 : kMod;
  bool unramified = false;
  for (int64_t a = 0; a < kMod; ++a) {
    for (int64_t b = 0; b < bmax; ++b) {
      const RingElement x{a, b};
      const RingElement diff = sub(mul(F, x, x), ur);
      if (divides(F, four_pi, diff)) return LocalSquareClass::Square;
      if (divides(F, four, diff)) unramified = true;
    }
  }
  return unramified ? LocalSquareClass::UnramifiedNonSquare : LocalSquareClass::Ramified;
}

bool is_ramified_at(FieldTag F, const PrimeIdeal& P, const RingElement& delta) {
  if (delta.is_zero()) throw InvalidArgument("is_ramified_at: delta = 0");
  const int v = ord(F, P, delta);
  if (v % 2 == 1) return true;
  if (P.p != 2) return false;
  RingElement u = delta;
  for (int i = 0; i < v; ++i) u = divide_exact(F, u, P.pi);
  return unit_square_class_2adic(F, P, u) == LocalSquareClass::Ramified;
}

RingElement normalize_level(FieldTag F, const RingElement& N) {
  if (N.is_zero()) throw InvalidArgument("level must be nonzero");
  const int64_t nm = norm(F, N);
  if (nm == 1 || nm == -1) throw InvalidArgument("level " + format_element(F, N) + " is a unit");
  if (!is_squarefree_element(F, N))
    throw InvalidArgument("level " + format_element(F, N) + " is not square-free in o_F");
  return totally_positive_associate(F, N);
}

std::vector<RingElement> enumerate_n(FieldTag F, const RingElement& u, const RingElement& N) {
  const auto& d = descriptor(F);
  const RingElement uN = mul(F, u, N);
  if (!totally_positive(F, uN)) throw InvalidArgument("enumerate_n: uN must be totally positive");
  std::vector<double> c;
  for (int v = 0; v < d.degree; ++v) c.push_back(2.0 / std::sqrt(embed(F, uN, v)));
  // |n_v| < c_v at every place; the box below contains all such n with a
  // margin of one unit, and the exact test decides membership.
  const double cmax = *std::max_element(c.begin(), c.end());
  const int64_t bmax = d.degree == 1 ? 0 : static_cast<int64_t>((c[0] + c[1]) / std::sqrt(static_cast<double>(d.m))) + 1;
  const int64_t amax = static_cast<int64_t>(cmax + 2.0 * static_cast<double>(bmax)) + 1;
  const std::vector<PrimeIdeal> level_primes = prime_divisors(F, N);
  std::vector<RingElement> out;
  for (int64_t a = 0; a <= amax; ++a) {
    for (int64_t b = -bmax; b <= bmax; ++b) {
      if (a == 0 && b < 0) continue;  // n and -n
      const RingElement n{a, b};
      const RingElement nuN = mul(F, n, uN);
      const RingElement delta = sub(mul(F, nuN, nuN), mul(F, RingElement{4, 0}, uN));
      if (!totally_negative(F, delta)) continue;
      bool ok = true;
      for (const auto& P : level_primes)
        if (!is_ramified_at(F, P, delta)) {
          ok = false;
          break;
        }
      if (ok) out.push_back(n);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BiasReport bias_general(FieldTag F, const std::vector<int>& kvec, const RingElement& Nin) {
  const auto& d = descriptor(F);
  if (static_cast<int>(kvec.size()) != d.degree)
    throw InvalidArgument("weight vector must have " + std::to_string(d.degree) + " entries for " + d.name);
  for (int k : kvec)
    if (k < 1) throw InvalidArgument("weights must be >= 1");
  // All three fields have narrow class number one, so every level is a
  // square in the narrow class group and J = o_F.
  BiasReport rep;
  rep.field = F;
  rep.kvec = kvec;
  rep.N = normalize_level(F, Nin);
  const RingElement& N = rep.N;

  numeric::CompensatedSum<double> total;
  for (const RingElement& u : enumerate_units_U2(F)) {
    const RingElement uN = mul(F, u, N);
    for (const RingElement& n : enumerate_n(F, u, N)) {
      BiasTerm t;
      t.u = u;
      t.n = n;
      const RingElement nuN = mul(F, n, uN);
      t.delta = sub(mul(F, nuN, nuN), mul(F, RingElement{4, 0}, uN));
      if (F != FieldTag::Q && !t.delta.is_rational())
        throw UnsupportedExtension("non-biquadratic extension encountered: delta = " + format_element(F, t.delta) +
                                   " at n = " + format_element(F, n));
      t.arch = 1.0;
      for (int v = 0; v < d.degree; ++v)
        t.arch *= arch_limit_factor({kvec[v], embed(F, uN, v), embed(F, nuN, v), embed(F, t.delta, v)});
      t.lvalue = gen_zagier_L(1.0, t.delta, F, N).value.real();
      t.afactor = A_factor(F, n, N);
      t.contribution = (n.is_zero() ? 0.5 : 1.0) * t.arch * t.lvalue * static_cast<double>(t.afactor);
      total.add(t.contribution);
      rep.terms.push_back(t);
    }
  }
  rep.raw_total = total.value();
  rep.scaled_total = 2.0 * std::sqrt(static_cast<double>(d.disc)) * rep.raw_total;
  rep.B = std::llround(rep.scaled_total);
  if (std::abs(rep.scaled_total - static_cast<double>(rep.B)) >= kIntegralityTolerance)
    throw Inconsistency("bias total " + std::to_string(rep.scaled_total) + " is not an integer");
  return rep;
}

BiasReport bias_general(FieldTag F, const std::vector<int>& kvec, int64_t N) {
  return bias_general(F, kvec, RingElement{N, 0});
}

namespace {

// Class number of Q(sqrt(-n)) for a positive integer n.
int64_t h_minus(int64_t n) {
  int64_t k = 1;
  for (auto [p, e] : numeric::factorize(n))
    if (e % 2) k *= p;
  const int64_t D = numeric::mod(-k, 4) == 1 ? -k : -4 * k;
  return class_number_imag(D);
}

int64_t exact_div(int64_t num, int64_t den, const char* who) {
  if (num % den != 0) throw Inconsistency(std::string(who) + ": closed form is not an integer");
  return num / den;
}

void require_weights(const std::vector<int>& kvec, size_t n) {
  if (kvec.size() != n) throw InvalidArgument("weight vector has the wrong length");
  for (int k : kvec)
    if (k < 1) throw InvalidArgument("weights must be >= 1");
}

bool both_in(const std::vector<int>& kvec, int m, std::initializer_list<int> cls) {
  auto in = [&](int k) { return std::find(cls.begin(), cls.end(), k % m) != cls.end(); };
  return in(kvec[0]) && in(kvec[1]);
}

}  // namespace

int64_t bias_closed_Q(int k, int64_t N) {
  if (k < 1) throw InvalidArgument("weights must be >= 1");
  if (N < 2 || !numeric::is_squarefree(N)) throw InvalidArgument("bias_closed_Q: N must be square-free >= 2");
  if (N == 2) return (k % 4 == 2 || k % 4 == 3) ? 1 : 0;
  if (N == 3) return k % 3 == 2 ? 2 : 1;
  const int64_t phi = euler_phi_F(FieldTag::Q, N);
  if (N % 8 == 7) return h_minus(N) * phi;
  if (N % 8 == 3) return 2 * h_minus(N) * phi;
  return exact_div(h_minus(4 * N) * phi, 2, "bias_closed_Q");
}

int64_t bias_closed_sqrt2(const std::vector<int>& kvec, int64_t N) {
  require_weights(kvec, 2);
  if (N < 3 || N % 2 == 0 || !numeric::is_squarefree(N))
    throw InvalidArgument("bias_closed_sqrt2: N must be odd square-free >= 3");
  if (N == 3) {
    if (both_in(kvec, 3, {2})) return 12;
    if (both_in(kvec, 3, {0, 1})) return 13;
    return 14;
  }
  const int64_t base = euler_phi_F(FieldTag::Qsqrt2, N) * h_minus(N) * h_minus(2 * N);
  if (N % 8 == 3) return exact_div(5 * base, 2, "bias_closed_sqrt2");
  if (N % 8 == 7) return base;
  return exact_div(3 * base, 4, "bias_closed_sqrt2");
}

int64_t bias_closed_sqrt5(const std::vector<int>& kvec, int64_t N) {
  require_weights(kvec, 2);
  if (N < 2 || N % 5 == 0 || !numeric::is_squarefree(N))
    throw InvalidArgument("bias_closed_sqrt5: N must be square-free >= 2 and prime to 5");
  if (N == 2) return (both_in(kvec, 4, {0, 1}) || both_in(kvec, 4, {2, 3})) ? 1 : 2;
  if (N == 3) {
    if (both_in(kvec, 3, {2})) return 4;
    if (both_in(kvec, 3, {0, 1})) return 5;
    return 6;
  }
  const int64_t base = euler_phi_F(FieldTag::Qsqrt5, N) * h_minus(N) * h_minus(5 * N);
  if (N % 4 == 1 || N % 4 == 2) return exact_div(base, 4, "bias_closed_sqrt5");
  if (N % 8 == 3) return exact_div(3 * base, 2, "bias_closed_sqrt5");
  return base;
}

int64_t bias_closed(FieldTag F, const std::vector<int>& kvec, int64_t N) {
  switch (F) {
    case FieldTag::Q:
      require_weights(kvec, 1);
      return bias_closed_Q(kvec[0], N);
    case FieldTag::Qsqrt2:
      return bias_closed_sqrt2(kvec, N);
    case FieldTag::Qsqrt5:
      return bias_closed_sqrt5(kvec, N);
  }
  return 0;
}

DnSeriesResult dn_series_truncated(int64_t N, double s, int64_t T) {
  if (N < 2 || !numeric::is_squarefree(N)) throw InvalidArgument("dn_series: N must be square-free >= 2");
  if (!(s > 1.0)) throw InvalidArgument("dn_series: needs s > 1");
  if (T < 1) throw InvalidArgument("dn_series: T must be positive");
  const RingElement level{N, 0};
  DnSeriesResult out;
  numeric::CompensatedSum<double> sum;
  for (int64_t n = 1; n <= T; ++n) {
    const int64_t delta = n * N * n * N - 4 * N;
    if (numeric::is_perfect_square(delta)) {
      ++out.skipped;
      continue;
    }
    const double L = gen_zagier_L(1.0, RingElement{delta, 0}, FieldTag::Q, level).value.real();
    const auto A = static_cast<double>(A_factor(FieldTag::Q, RingElement{n, 0}, level));
    sum.add(std::pow(static_cast<double>(n), -s) * L * A);
    ++out.terms;
  }
  out.value = sum.value();
  return out;
}

}  // namespace rootbias
