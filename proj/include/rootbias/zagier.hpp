#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rootbias/basefield.hpp"
#include "rootbias/numeric.hpp"

namespace rootbias {

/// Per-prime data of E = F(sqrt delta) entering the finite Euler product.
struct QuadExtensionLocalData {
  PrimeIdeal prime;
  int64_t q = 0;
  int eta = 0;       // -1 inert, 0 ramified, 1 split
  int exponent = 0;  // k + k_P
  bool stripped = false;
};

/// #{x mod 2q : x^2 = delta mod 4q}, by exhaustion.
int64_t rho_q(int64_t delta, int64_t q);

/// rho_1..rho_Q (index 0 unused), built multiplicatively from prime powers.
std::vector<int64_t> rho_table(int64_t delta, int64_t Q);

struct TruncatedZagier {
  double value = 0.0;       // zeta(2s)/zeta(s) * sum_{q<=Q} rho_q q^-s
  double convolved = 0.0;   // sum_{n<=Q} (lambda * rho)(n) n^-s
  double tail_bound = 0.0;  // bound on the omitted tail of `value`; +inf if unavailable
  int64_t Q = 0;
};

/// Truncated Dirichlet series for s > 1. `value` is the plain truncation;
/// `convolved` truncates the same series after multiplying out
/// zeta(2s)/zeta(s) = sum lambda(n) n^-s, whose coefficients oscillate and
/// give a much smaller tail.
TruncatedZagier zagier_L_truncated(double s, int64_t delta, int64_t Q);

/// q^-(K s) [U_{K+1}(q^s) - eta q^-1/2 U_K(q^s)] with U_m(Z) = sum_j Z^{m-1-2j}.
/// Here s is the shifted variable (argument minus 1/2); no division occurs.
cplx euler_correction(double q, int K, int eta, cplx s);
/// The same bracket without the q^-(K s) prefactor.
cplx euler_bracket(double q, int K, int eta, cplx s);

/// L(s, chi_D) times the finite product over p^k || l (delta = D l^2).
cplx zagier_L_factored(cplx s, int64_t delta);

/// True iff delta = b^2 - 4a for some a, b in o_F.
bool is_discriminant_F(FieldTag F, const RingElement& delta);

struct GenZagierValue {
  cplx value;
  cplx eta_part;
  std::vector<QuadExtensionLocalData> local;  // primes with exponent > 0
};

/// Generalized Zagier L at the displayed argument w, with the trivial ideal
/// J = o_F. Primes dividing `strip` are omitted from the Euler product.
/// At w = 1 over a quadratic field with totally negative delta, the
/// eta-part uses the class number formula of the biquadratic field and is
/// checked against the product of the two rational L-values.
GenZagierValue gen_zagier_L(cplx w, const RingElement& delta, FieldTag F,
                            const std::optional<RingElement>& strip = std::nullopt);

/// eta_{E/F}(P) for E = F(sqrt delta); delta must be rational.
int eta_at_prime(FieldTag F, const RingElement& delta, const PrimeIdeal& P);

}  // namespace rootbias
