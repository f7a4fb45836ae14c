#include "rootbias/localweights.hpp"

#include <cmath>

#include "rootbias/error.hpp"

namespace rootbias {

namespace {

void check_query(const LocalWeightQuery& w) {
  if (w.q < 2.0) throw InvalidArgument("local weight: q must be >= 2");
  if (w.r < 0) throw InvalidArgument("local weight: r must be >= 0");
  if (w.eta < -1 || w.eta > 1) throw InvalidArgument("local weight: eta must be -1, 0 or 1");
}

// (Z^m - Z^-m) / (Z - Z^-1) as a Laurent polynomial; U(-m) = -U(m).
cplx U(cplx Z, int m) {
  if (m < 0) return -U(Z, -m);
  cplx sum = 0.0;
  const cplx Zinv = 1.0 / Z;
  for (int j = 0; j < m; ++j) sum += std::pow(Z, m - 1 - j) * std::pow(Zinv, j);
  return sum;
}

}  // namespace

double local_L1(double q, int eta) {
  if (eta == -1) return 1.0 / (1.0 + 1.0 / q);
  if (eta == 0) return 1.0;
  if (eta == 1) return 1.0 / (1.0 - 1.0 / q);
  throw InvalidArgument("local_L1: eta must be -1, 0 or 1");
}

cplx rs_weight_displayed(const LocalWeightQuery& w) {
  check_query(w);
  if (w.r == 0) return local_L1(w.q, w.eta);
  const cplx Z = std::pow(cplx(w.q), w.s);
  const double scale = std::pow(w.q, 0.5 * w.r);
  const double rq = 1.0 / std::sqrt(w.q);
  const int r = w.r;
  switch (w.eta) {
    case -1:
      return scale * (U(Z, r + 1) - U(Z, r - 1) / w.q);
    case 0:
      return scale * (U(Z, r + 1) - rq * U(Z, r));
    default:
      return scale * (U(Z, r + 1) + U(Z, r - 1) / w.q - 2.0 * rq * U(Z, r));
  }
}

cplx rs_weight_quotient(const LocalWeightQuery& w) {
  check_query(w);
  if (w.r == 0) return local_L1(w.q, w.eta);
  const cplx Z = std::pow(cplx(w.q), w.s);
  const cplx Zi = 1.0 / Z;
  const cplx den = Z - Zi;
  if (std::abs(den) == 0.0) throw InvalidArgument("rs_weight_quotient: Z = +-1");
  const double qi = 1.0 / w.q, rq = 1.0 / std::sqrt(w.q), sq = std::sqrt(w.q);
  cplx c1, c2;
  switch (w.eta) {
    case -1:
      c1 = Z - qi * Zi;
      c2 = Zi - qi * Z;
      break;
    case 0:
      c1 = Z - rq;
      c2 = Zi - rq;
      break;
    default:
      c1 = Z + qi * Zi - 2.0 * rq;
      c2 = Zi + qi * Z - 2.0 * rq;
      break;
  }
  return (c1 * std::pow(sq * Z, w.r) - c2 * std::pow(sq * Zi, w.r)) / den;
}

cplx rs_weight(const LocalWeightQuery& w) {
  if (w.r == 0) {
    check_query(w);
    return 1.0;
  }
  return rs_weight_displayed(w) / local_L1(w.q, w.eta);
}

cplx unram_local_factor(double q, int a, int eta, cplx s) {
  if (q < 2.0) throw InvalidArgument("unram_local_factor: q must be >= 2");
  if (a < 0) throw InvalidArgument("unram_local_factor: a must be >= 0");
  const cplx Z = std::pow(cplx(q), s);
  const cplx Zi = 1.0 / Z;
  const cplx den = Z - Zi;
  cplx bracket;
  if (std::abs(den) > 1e-3 * std::abs(Z)) {
    bracket = ((std::pow(Z, a + 1) - std::pow(Zi, a + 1)) -
               static_cast<double>(eta) / std::sqrt(q) * (std::pow(Z, a) - std::pow(Zi, a))) /
              den;
  } else {
    bracket = U(Z, a + 1) - static_cast<double>(eta) / std::sqrt(q) * U(Z, a);
  }
  return std::pow(Zi, a) * bracket;
}

int64_t ramified_level_constant(int64_t q, bool n_div) {
  if (q < 2) throw InvalidArgument("ramified_level_constant: q must be >= 2");
  return n_div ? q - 1 : -1;
}

int64_t A_factor(FieldTag F, const RingElement& n, const RingElement& N) {
  if (!is_squarefree_element(F, N))
    throw InvalidArgument("A_factor: level " + format_element(F, N) + " is not square-free");
  int64_t A = 1;
  for (const auto& P : prime_divisors(F, N)) A *= ramified_level_constant(P.q, in_prime(F, P, n));
  return A;
}

}  // namespace rootbias
