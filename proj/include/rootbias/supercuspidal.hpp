#pragma once

#include <cstdint>
#include <utility>

#include "rootbias/cyclotomic.hpp"
#include "rootbias/padic.hpp"

namespace rootbias {

/// Simple supercuspidal parameter (t, zeta) over a prime residue field F_q.
struct SupercuspidalParams {
  int64_t q = 3;
  int64_t t = 1;  // residue in 1..q-1
  int zeta = 1;   // +1 or -1
};

/// Throws InvalidArgument unless q is an odd prime <= 13, t in 1..q-1, zeta = +-1.
void validate(const SupercuspidalParams& params);

/// (q^2 - 1, 2): the formal degree as numerator and denominator.
std::pair<int64_t, int64_t> formal_degree(int64_t q);

/// psi~(x) = exp(2 pi i {x/p}) in Q(zeta_{p^2}); needs val(x) >= -1.
Cyclotomic psi_tilde(const TruncatedPAdic& x);

/// g_chi = (0 t; p 0).
ProjMatrix g_chi(const SupercuspidalParams& params, int relprec = TruncatedPAdic::kDefaultPrecision);
/// (x1 r1; p r2 x2).
ProjMatrix iwahori_point(int64_t q, int64_t x1, int64_t r1, int64_t r2, int64_t x2 = 1);
/// (0 1; p 0) (x1 r1; p r2 x2).
ProjMatrix support_point(int64_t q, int64_t x1, int64_t r1, int64_t r2, int64_t x2 = 1);

/// chi(z k) = psi~(r1 + t r2). Throws InvalidArgument if g is not in Z K'.
Cyclotomic affine_generic_char(const SupercuspidalParams& params, const ProjMatrix& g);

/// chi(g) 1_H(g) + zeta chi(g_chi g) 1_H(g_chi g).
Cyclotomic matrix_coeff_C0(const ProjMatrix& g, const SupercuspidalParams& params);

/// Closed form: (q^2-1) psi~(-(r1+r2)/x1) on (0 1; p 0) Z I, zero elsewhere.
Cyclotomic f_b(const ProjMatrix& g, int64_t q);
/// sum over (t, zeta) of zeta d conj(C0^{t,zeta}(g)).
Cyclotomic f_b_from_coefficients(const ProjMatrix& g, int64_t q);

/// Iwahori-conjugation average in closed form; 0 off the support.
int64_t f_b_tilde_closed(const ProjMatrix& g, int64_t q);
/// Exhaustive Iwahori average of f_b(k^-1 g k) over representatives mod p^2.
/// Scalars act trivially, so the sum runs over k = (1 b; c d), working with
/// integer matrices mod p^3.
Cyclotomic f_b_tilde_bruteforce(const ProjMatrix& g, int64_t q);
/// The same average over the full set of (a b; c d) mod p^2, through
/// ProjMatrix arithmetic and the closed f_b. Slow; meant as a cross-check.
Cyclotomic f_b_tilde_bruteforce_full(const ProjMatrix& g, int64_t q);

enum class WhittakerSide { Plain, Twisted };

/// W(diag(a,1)) = 1_{1+p}(a); W(diag(a,1) w) = zeta 1_{1+p}(-a t^-1 p),
/// w = (0 1; -1 0).
Cyclotomic whittaker_closed(const TruncatedPAdic& a, WhittakerSide side, const SupercuspidalParams& params);
/// The defining integral of f0^zeta(n(x) diag(a,1) [w]) psi~(-x) dx as a
/// finite sum over x in p^-1 o / p with vol(o) = 1.
Cyclotomic whittaker_bruteforce(const TruncatedPAdic& a, WhittakerSide side, const SupercuspidalParams& params);

/// Measure on F_p^x: vol(1+p) = 1, or vol(o^x) = 1.
enum class UnitMeasure { PrincipalUnits, Units };

struct HeckeIntegrals {
  Cyclotomic plain;
  Cyclotomic twisted;
  int root_number = 0;  // twisted / plain
};

/// Both Hecke integrals over a = p^j u, |j| <= depth, u in F_p^x, from the
/// brute-force Whittaker values. Throws Inconsistency if the ratio is not +-1.
HeckeIntegrals hecke_integrals(const SupercuspidalParams& params, UnitMeasure measure = UnitMeasure::PrincipalUnits,
                               int depth = 3);
int hecke_root_number(const SupercuspidalParams& params);

/// sum over d in F_q^x of psi~(c/d).
Cyclotomic char_sum_check(int64_t q, int64_t c);

}  // namespace rootbias
