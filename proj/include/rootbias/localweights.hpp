#pragma once

#include <cstdint>

#include "rootbias/basefield.hpp"
#include "rootbias/numeric.hpp"

namespace rootbias {

struct LocalWeightQuery {
  double q = 2.0;  // residue norm
  int r = 0;       // lattice depth
  int eta = -1;    // -1 unramified, 0 ramified, 1 split
  cplx s = 0.0;
};

/// L_P(1, eta): (1+1/q)^-1, 1, (1-1/q)^-1.
double local_L1(double q, int eta);

/// L_P(1, eta) wt(s; r) / Vol, the case formulas in telescoped form.
/// For r = 0 this is L_P(1, eta).
cplx rs_weight_displayed(const LocalWeightQuery& query);
/// The same case formulas evaluated as a quotient by Z - 1/Z.
/// Throws InvalidArgument when Z = +-1.
cplx rs_weight_quotient(const LocalWeightQuery& query);
/// wt(s; r) / Vol; equals 1 at r = 0.
cplx rs_weight(const LocalWeightQuery& query);

/// q^-as [(q^{(a+1)s} - q^{-(a+1)s}) - eta q^-1/2 (q^{as} - q^{-as})] / (q^s - q^-s).
/// Near q^s = +-1 the quotient is replaced by its polynomial form.
cplx unram_local_factor(double q, int a, int eta, cplx s);

/// q - 1 if n lies one step deeper than J at the prime, else -1.
int64_t ramified_level_constant(int64_t q, bool n_div);

/// prod over P | N of ramified_level_constant(Nr P, n in P).
int64_t A_factor(FieldTag F, const RingElement& n, const RingElement& N);

}  // namespace rootbias
