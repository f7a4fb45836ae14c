#include "rootbias/zagier.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rootbias/error.hpp"
#include "rootbias/quadarith.hpp"

namespace rootbias {

using numeric::CompensatedSum;

int64_t rho_q(int64_t delta, int64_t q) {
  if (q <= 0) throw InvalidArgument("rho_q: q must be positive");
  if (!is_discriminant(delta) && delta != 0) throw InvalidArgument("rho_q: delta is not a discriminant");
  const int64_t mod4q = 4 * q;
  const int64_t target = numeric::mod(delta, mod4q);
  int64_t count = 0;
  for (int64_t x = 0; x < 2 * q; ++x) {
    auto sq = static_cast<int64_t>(static_cast<__int128>(x) * x % mod4q);
    if (sq == target) ++count;
  }
  return count;
}

std::vector<int64_t> rho_table(int64_t delta, int64_t Q) {
  if (!is_discriminant(delta)) throw InvalidArgument("rho_table: delta is not a nonzero discriminant");
  if (Q < 1) throw InvalidArgument("rho_table: Q must be positive");
  std::vector<int64_t> spf(static_cast<size_t>(Q + 1), 0);
  for (int64_t i = 2; i <= Q; ++i)
    if (spf[i] == 0)
      for (int64_t j = i; j <= Q; j += i)
        if (spf[j] == 0) spf[j] = i;
  std::vector<int64_t> rho(static_cast<size_t>(Q + 1), 0);
  rho[1] = 1;
  for (int64_t n = 2; n <= Q; ++n) {
    const int64_t p = spf[n];
    int64_t m = n, pk = 1;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    if (m != 1) {
      rho[n] = rho[pk] * rho[m];
    } else if (p != 2 && delta % p != 0) {
      rho[n] = 1 + kronecker(delta, p);
    } else {
      rho[n] = rho_q(delta, n);
    }
  }
  return rho;
}

TruncatedZagier zagier_L_truncated(double s, int64_t delta, int64_t Q) {
  if (!(s > 1.0)) throw InvalidArgument("zagier_L_truncated: needs s > 1");
  auto rho = rho_table(delta, Q);
  auto lambda = numeric::liouville_table(Q);
  std::vector<int64_t> conv(static_cast<size_t>(Q + 1), 0);
  for (int64_t d = 1; d <= Q; ++d)
    for (int64_t n = d, j = 1; n <= Q; n += d, ++j) conv[n] += lambda[d] * rho[j];

  CompensatedSum<double> plain, convolved;
  for (int64_t n = 1; n <= Q; ++n) {
    const double w = std::pow(static_cast<double>(n), -s);
    if (rho[n] != 0) plain.add(static_cast<double>(rho[n]) * w);
    if (conv[n] != 0) convolved.add(static_cast<double>(conv[n]) * w);
  }
  const double ratio = numeric::riemann_zeta(2.0 * s) / numeric::riemann_zeta(s);
  TruncatedZagier out;
  out.Q = Q;
  out.value = ratio * plain.value();
  out.convolved = convolved.value();
  // rho_q <= 2 tau(q) sqrt(q) and sum_{n<=x} tau(n) <= x (log x + 1) give
  // sum_{q>Q} tau(q) q^-sigma <= sigma Q^(1-sigma) [(log Q + 1)/(sigma-1) + 1/(sigma-1)^2].
  const double sigma = s - 0.5;
  if (sigma > 1.0) {
    const double lq = std::log(static_cast<double>(Q));
    out.tail_bound = ratio * 2.0 * sigma * std::pow(static_cast<double>(Q), 1.0 - sigma) *
                     ((lq + 1.0) / (sigma - 1.0) + 1.0 / ((sigma - 1.0) * (sigma - 1.0)));
  } else {
    out.tail_bound = std::numeric_limits<double>::infinity();
  }
  return out;
}

cplx euler_bracket(double q, int K, int eta, cplx s) {
  if (K < 0) throw InvalidArgument("euler_bracket: negative exponent");
  const cplx Z = std::pow(cplx(q), s);
  const cplx Zinv = 1.0 / Z;
  // U_m(Z) = Z^(m-1) + Z^(m-3) + ... + Z^(1-m)
  auto U = [&](int m) {
    cplx sum = 0.0;
    for (int j = 0; j < m; ++j) sum += std::pow(Z, m - 1 - j) * std::pow(Zinv, j);
    return sum;
  };
  return U(K + 1) - static_cast<double>(eta) / std::sqrt(q) * U(K);
}

cplx euler_correction(double q, int K, int eta, cplx s) {
  return std::pow(cplx(q), -static_cast<double>(K) * s) * euler_bracket(q, K, eta, s);
}

cplx zagier_L_factored(cplx s, int64_t delta) {
  FundamentalDecomposition fd = fundamental_decompose(delta);
  cplx value = dirichlet_L(fd.D, s);
  if (fd.l == 1) return value;
  const cplx shifted = s - 0.5;
  for (auto [p, k] : numeric::factorize(fd.l)) {
    int chi = fd.D == 1 ? 1 : kronecker(fd.D, p);
    value *= euler_correction(static_cast<double>(p), k, chi, shifted);
  }
  return value;
}

bool is_discriminant_F(FieldTag F, const RingElement& delta) {
  if (delta.is_zero()) return false;
  if (F == FieldTag::Q) return is_discriminant(delta.a);
  // b^2 mod 4 depends only on b mod 2.
  for (int64_t a = 0; a < 2; ++a)
    for (int64_t b = 0; b < 2; ++b) {
      RingElement x{a, b};
      RingElement d = sub(mul(F, x, x), delta);
      if (numeric::mod(d.a, 4) == 0 && numeric::mod(d.b, 4) == 0) return true;
    }
  return false;
}

namespace {

int64_t require_rational(FieldTag F, const RingElement& delta) {
  if (!delta.is_rational())
    throw UnsupportedExtension("delta = " + format_element(F, delta) +
                               " is irrational: F(sqrt delta) is not biquadratic over Q");
  return delta.a;
}

}  // namespace

int eta_at_prime(FieldTag F, const RingElement& delta, const PrimeIdeal& P) {
  return eta_at_prime(F, require_rational(F, delta), P);
}

GenZagierValue gen_zagier_L(cplx w, const RingElement& delta, FieldTag F,
                            const std::optional<RingElement>& strip) {
  if (F != FieldTag::Q) require_rational(F, delta);
  if (!is_discriminant_F(F, delta))
    throw InvalidArgument("gen_zagier_L: " + format_element(F, delta) + " is not a discriminant of o_F");
  const int64_t d = delta.a;
  ExtensionSubfields sub = extension_subfields(F, d);

  GenZagierValue out;
  if (w == cplx(1.0, 0.0)) {
    if (F == FieldTag::Q) {
      out.eta_part = dirichlet_L1(sub.D1);
    } else {
      const double product = L1_eta(F, d);
      if (d < 0) {
        int64_t kernel = 1;
        for (auto [p, e] : numeric::factorize(d))
          if (e % 2) kernel *= p;
        BiquadExtData bq = L1_eta_biquad(F, kernel);
        if (std::abs(bq.L1 - product) > 1e-9 * product)
          throw Inconsistency("gen_zagier_L: class number route " + std::to_string(bq.L1) +
                              " disagrees with L-value product " + std::to_string(product));
        out.eta_part = bq.L1;
      } else {
        out.eta_part = product;
      }
    }
  } else {
    out.eta_part = dirichlet_L(sub.D1, w);
    if (F != FieldTag::Q) out.eta_part *= dirichlet_L(sub.D2, w);
  }

  RelDiscriminant rd = rel_discriminant_delta(F, d);
  auto rel_ord = [&](const PrimeIdeal& P) {
    for (const auto& [Q, e] : rd.factors)
      if (Q.p == P.p && Q.root == P.root) return e;
    return 0;
  };
  std::vector<PrimeIdeal> strip_primes;
  if (strip) strip_primes = prime_divisors(F, *strip);
  auto stripped = [&](const PrimeIdeal& P) {
    for (const auto& S : strip_primes)
      if (S.p == P.p && S.root == P.root) return true;
    return false;
  };

  out.value = out.eta_part;
  const cplx shifted = w - 0.5;
  for (auto [p, vp] : numeric::factorize(d)) {
    for (const auto& P : primes_above(F, p)) {
      const int ord_delta = P.e * vp;
      const int twice_k = ord_delta - rel_ord(P);
      if (twice_k < 0 || twice_k % 2 != 0)
        throw Inconsistency("gen_zagier_L: odd conductor exponent at p = " + std::to_string(p));
      if (twice_k == 0) continue;
      QuadExtensionLocalData loc{P, P.q, eta_at_prime(F, d, P), twice_k / 2, stripped(P)};
      if (!loc.stripped) out.value *= euler_correction(static_cast<double>(P.q), loc.exponent, loc.eta, shifted);
      out.local.push_back(loc);
    }
  }
  return out;
}

}  // namespace rootbias
