#include "rootbias/supercuspidal.hpp"

#include <optional>
#include <string>
#include <vector>

#include "rootbias/error.hpp"
#include "rootbias/numeric.hpp"

namespace rootbias {

namespace {

constexpr int kPrec = TruncatedPAdic::kDefaultPrecision;

void check_q(int64_t q) {
  if (q < 3 || q > 13 || !numeric::is_prime(q))
    throw InvalidArgument("supercuspidal: q must be an odd prime <= 13, got " + std::to_string(q));
}

void check_matrix(const ProjMatrix& g, int64_t q) {
  check_q(q);
  if (g.p() != q) throw InvalidArgument("supercuspidal: matrix over the wrong prime");
}

TruncatedPAdic integer(int64_t p, int64_t n) { return TruncatedPAdic::from_integer(p, n, kPrec); }

// zeta_p^c as a zeta_{p^2} power.
Cyclotomic psi_on_o(int64_t p, int64_t c) { return Cyclotomic::root(p, 2, p * numeric::mod(c, p)); }

// The exponent c with f_b(g) = (q^2-1) zeta_p^c, or nothing off the support.
std::optional<int64_t> f_b_exponent(const ProjMatrix& g) {
  if (!g.in_support_coset()) return std::nullopt;
  const int64_t p = g.p();
  auto [x1, r1, r2] = support_coordinates(g);
  return numeric::mod(-(r1 + r2) * numeric::inv_mod(x1, p), p);
}

Cyclotomic from_histogram(int64_t p, const std::vector<int64_t>& hist, int64_t total) {
  Cyclotomic sum(p, 2);
  for (int64_t c = 0; c < p; ++c)
    if (hist[c] != 0) sum += Cyclotomic::root(p, 2, p * c) * hist[c];
  return (sum * (p * p - 1)).div(total);
}

Cyclotomic f0(const ProjMatrix& h, const SupercuspidalParams& params) {
  if (!h.in_H()) return Cyclotomic(params.q, 2);
  return affine_generic_char(params, h);
}

}  // namespace

void validate(const SupercuspidalParams& params) {
  check_q(params.q);
  if (params.t < 1 || params.t >= params.q) throw InvalidArgument("supercuspidal: t must lie in 1..q-1");
  if (params.zeta != 1 && params.zeta != -1) throw InvalidArgument("supercuspidal: zeta must be +1 or -1");
}

std::pair<int64_t, int64_t> formal_degree(int64_t q) {
  check_q(q);
  return {q * q - 1, 2};
}

Cyclotomic psi_tilde(const TruncatedPAdic& x) { return Cyclotomic::root(x.p(), 2, psi_tilde_exponent(x)); }

ProjMatrix g_chi(const SupercuspidalParams& params, int relprec) {
  validate(params);
  return ProjMatrix::from_integers(params.q, 0, params.t, params.q, 0, relprec);
}

ProjMatrix iwahori_point(int64_t q, int64_t x1, int64_t r1, int64_t r2, int64_t x2) {
  check_q(q);
  if (numeric::mod(x1, q) == 0 || numeric::mod(x2, q) == 0)
    throw InvalidArgument("iwahori_point: diagonal entries must be units");
  return ProjMatrix::from_integers(q, x1, r1, q * r2, x2, kPrec);
}

ProjMatrix support_point(int64_t q, int64_t x1, int64_t r1, int64_t r2, int64_t x2) {
  // (0 1; p 0)(x1 r1; p r2 x2) = (p r2, x2; p x1, p r1)
  iwahori_point(q, x1, r1, r2, x2);
  return ProjMatrix::from_integers(q, q * r2, x2, q * x1, q * r1, kPrec);
}

Cyclotomic affine_generic_char(const SupercuspidalParams& params, const ProjMatrix& g) {
  validate(params);
  check_matrix(g, params.q);
  auto [r1, r2] = H_coordinates(g);
  return psi_on_o(params.q, r1 + params.t * r2);
}

Cyclotomic matrix_coeff_C0(const ProjMatrix& g, const SupercuspidalParams& params) {
  validate(params);
  check_matrix(g, params.q);
  Cyclotomic value = f0(g, params);
  value += f0(g_chi(params) * g, params) * params.zeta;
  return value;
}

Cyclotomic f_b(const ProjMatrix& g, int64_t q) {
  check_matrix(g, q);
  auto c = f_b_exponent(g);
  if (!c) return Cyclotomic(q, 2);
  return psi_on_o(q, *c) * (q * q - 1);
}

Cyclotomic f_b_from_coefficients(const ProjMatrix& g, int64_t q) {
  check_matrix(g, q);
  auto [num, den] = formal_degree(q);
  Cyclotomic sum(q, 2);
  for (int64_t t = 1; t < q; ++t)
    for (int zeta : {1, -1}) sum += matrix_coeff_C0(g, {q, t, zeta}).conj() * zeta;
  return (sum * num).div(den);
}

int64_t f_b_tilde_closed(const ProjMatrix& g, int64_t q) {
  check_matrix(g, q);
  if (!g.in_support_coset()) return 0;
  auto [x1, r1, r2] = support_coordinates(g);
  return numeric::mod(r1 + r2, q) == 0 ? (q + 1) * (q - 1) : -(q + 1);
}

Cyclotomic f_b_tilde_bruteforce(const ProjMatrix& g, int64_t q) {
  check_matrix(g, q);
  const int64_t p = q, p2 = p * p, p3 = p2 * p;
  const ProjMatrix h = g.primitive();
  const int64_t G[4] = {h(0, 0).residue(3), h(0, 1).residue(3), h(1, 0).residue(3), h(1, 1).residue(3)};
  std::vector<int64_t> hist(static_cast<size_t>(p), 0);
  int64_t total = 0;
  for (int64_t d = 1; d < p2; ++d) {
    if (d % p == 0) continue;
    for (int64_t b = 0; b < p2; ++b) {
      for (int64_t c = 0; c < p2; c += p) {
        ++total;
        // M = adj(k) G k with k = (1 b; c d), adj(k) = (d -b; -c 1).
        const int64_t A0 = numeric::mod(d * G[0] - b * G[2], p3);
        const int64_t A1 = numeric::mod(d * G[1] - b * G[3], p3);
        const int64_t A2 = numeric::mod(-c * G[0] + G[2], p3);
        const int64_t A3 = numeric::mod(-c * G[1] + G[3], p3);
        const int64_t m11 = (A0 + A1 * c) % p3;
        const int64_t m12 = (A0 * b + A1 * d) % p3;
        const int64_t m21 = (A2 + A3 * c) % p3;
        const int64_t m22 = (A2 * b + A3 * d) % p3;
        if (m11 % p || m22 % p || m21 % p || m21 % p2 == 0 || m12 % p == 0) continue;
        const int64_t x1 = (m21 / p) % p, r1 = (m22 / p) % p, r2 = (m11 / p) % p;
        ++hist[numeric::mod(-(r1 + r2) * numeric::inv_mod(x1, p), p)];
      }
    }
  }
  return from_histogram(p, hist, total);
}

Cyclotomic f_b_tilde_bruteforce_full(const ProjMatrix& g, int64_t q) {
  check_matrix(g, q);
  const int64_t p = q, p2 = p * p;
  std::vector<int64_t> hist(static_cast<size_t>(p), 0);
  int64_t total = 0;
  for (int64_t a = 1; a < p2; ++a) {
    if (a % p == 0) continue;
    for (int64_t d = 1; d < p2; ++d) {
      if (d % p == 0) continue;
      for (int64_t b = 0; b < p2; ++b) {
        for (int64_t c = 0; c < p2; c += p) {
          ++total;
          const ProjMatrix k = ProjMatrix::from_integers(p, a, b, c, d, kPrec);
          if (auto e = f_b_exponent(k.adjugate() * g * k)) ++hist[*e];
        }
      }
    }
  }
  return from_histogram(p, hist, total);
}

Cyclotomic whittaker_closed(const TruncatedPAdic& a, WhittakerSide side, const SupercuspidalParams& params) {
  validate(params);
  if (a.p() != params.q) throw InvalidArgument("whittaker_closed: a over the wrong prime");
  if (a.is_exact_zero()) throw InvalidArgument("whittaker_closed: a must be nonzero");
  TruncatedPAdic y = a;
  if (side == WhittakerSide::Twisted) y = -(a * integer(params.q, params.t).inverse()).shift(1);
  const bool hit = y.is_unit() && y.residue(1) == 1;
  const int64_t value = hit ? (side == WhittakerSide::Twisted ? params.zeta : 1) : 0;
  return Cyclotomic::from_integer(params.q, 2, value);
}

Cyclotomic whittaker_bruteforce(const TruncatedPAdic& a, WhittakerSide side, const SupercuspidalParams& params) {
  validate(params);
  const int64_t p = params.q;
  if (a.p() != p) throw InvalidArgument("whittaker_bruteforce: a over the wrong prime");
  if (a.is_exact_zero()) throw InvalidArgument("whittaker_bruteforce: a must be nonzero");
  const TruncatedPAdic zero = TruncatedPAdic::zero(p), one = integer(p, 1);
  const ProjMatrix gchi_inv = g_chi(params).adjugate();
  Cyclotomic sum(p, 2);
  // The integrand is supported in o and constant on cosets of p, so the
  // window p^-1 o / p with mass 1/q per coset covers it.
  for (int64_t j = 0; j < p * p; ++j) {
    const TruncatedPAdic x = j == 0 ? zero : integer(p, j).shift(-1);
    ProjMatrix g(a, x, zero, one);
    if (side == WhittakerSide::Twisted) g = g * ProjMatrix(zero, one, -one, zero);
    Cyclotomic f = f0(g, params) + f0(gchi_inv * g, params) * params.zeta;
    if (!f.is_zero()) sum += f * psi_tilde(-x);
  }
  return sum.div(p);
}

HeckeIntegrals hecke_integrals(const SupercuspidalParams& params, UnitMeasure measure, int depth) {
  validate(params);
  const int64_t p = params.q;
  HeckeIntegrals out{Cyclotomic(p, 2), Cyclotomic(p, 2), 0};
  for (int j = -depth; j <= depth; ++j) {
    for (int64_t u = 1; u < p; ++u) {
      const TruncatedPAdic a = TruncatedPAdic::from_parts(p, j, u, kPrec);
      out.plain += whittaker_bruteforce(a, WhittakerSide::Plain, params);
      out.twisted += whittaker_bruteforce(a, WhittakerSide::Twisted, params);
    }
  }
  if (measure == UnitMeasure::Units) {
    out.plain = out.plain.div(p - 1);
    out.twisted = out.twisted.div(p - 1);
  }
  if (out.plain.is_zero()) throw Inconsistency("hecke_integrals: the untwisted integral vanishes");
  if (out.twisted == out.plain) {
    out.root_number = 1;
  } else if (out.twisted == out.plain * -1) {
    out.root_number = -1;
  } else {
    throw Inconsistency("hecke_integrals: ratio of " + out.twisted.to_string() + " and " +
                        out.plain.to_string() + " is not +-1");
  }
  return out;
}

int hecke_root_number(const SupercuspidalParams& params) { return hecke_integrals(params).root_number; }

Cyclotomic char_sum_check(int64_t q, int64_t c) {
  check_q(q);
  if (numeric::mod(c, q) == 0) throw InvalidArgument("char_sum_check: c must be nonzero mod q");
  Cyclotomic sum(q, 2);
  for (int64_t d = 1; d < q; ++d) sum += psi_on_o(q, c * numeric::inv_mod(d, q));
  return sum;
}

}  // namespace rootbias
