#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rootbias {

enum class FieldTag { Q, Qsqrt2, Qsqrt5 };

struct BaseFieldDescriptor {
  FieldTag tag;
  int degree;             // 1 or 2
  int64_t disc;           // D_F: 1, 8 or 5
  int64_t m;              // F = Q(sqrt m); 1 for Q
  const char* name;
  const char* ring_generator;  // "none", "sqrt2" or "(1+sqrt5)/2"
  int fundamental_unit_norm;   // 1 for Q (unit -1), -1 otherwise
  int omega;                   // roots of unity in F
};

const BaseFieldDescriptor& descriptor(FieldTag tag);
/// Accepts "Q", "Qsqrt2", "Qsqrt5".
FieldTag parse_field_tag(const std::string& s);
std::string to_string(FieldTag tag);

/// a + b*g where g is the ring generator (b = 0 over Q).
struct RingElement {
  int64_t a = 0;
  int64_t b = 0;

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  bool operator==(const RingElement&) const = default;
  auto operator<=>(const RingElement&) const = default;
};

RingElement add(const RingElement& x, const RingElement& y);
RingElement sub(const RingElement& x, const RingElement& y);
RingElement neg(const RingElement& x);
RingElement mul(FieldTag F, const RingElement& x, const RingElement& y);
RingElement conj(FieldTag F, const RingElement& x);
int64_t norm(FieldTag F, const RingElement& x);
int64_t trace(FieldTag F, const RingElement& x);
/// Exact division; throws InvalidArgument unless y divides x in the ring.
RingElement divide_exact(FieldTag F, const RingElement& x, const RingElement& y);
bool divides(FieldTag F, const RingElement& y, const RingElement& x);

/// Real embedding v (0 or 1; only 0 over Q). For the quadratic fields,
/// v = 0 sends sqrt m to +sqrt m.
double embed(FieldTag F, const RingElement& x, int v);
/// Exact sign (-1, 0, 1) of the embedding.
int embed_sign(FieldTag F, const RingElement& x, int v);
bool totally_positive(FieldTag F, const RingElement& x);
bool totally_negative(FieldTag F, const RingElement& x);
bool is_square(FieldTag F, const RingElement& x);

/// Fundamental unit (-1 over Q).
RingElement fundamental_unit(FieldTag F);
/// Multiply by a unit so that the result is totally positive; throws if
/// the element is zero.
RingElement totally_positive_associate(FieldTag F, const RingElement& x);

std::string format_element(FieldTag F, const RingElement& x);
/// Parses "7", "-3", "3+sqrt2", "1-2*w" (w: the ring generator; the names
/// sqrt2 and phi are accepted for the matching field).
RingElement parse_element(FieldTag F, const std::string& s);

enum class SplitKind { Split, Inert, Ramified, Rational };

struct PrimeIdeal {
  int64_t p = 0;     // rational prime below
  int64_t q = 0;     // residue norm p^f
  int e = 1;
  int f = 1;
  int64_t root = 0;  // degree-one primes: g = root mod the prime; -1 when inert
  RingElement pi;    // a generator
};

SplitKind split_kind(FieldTag F, int64_t p);
std::vector<PrimeIdeal> primes_above(FieldTag F, int64_t p);
/// (residue norm, number of primes with that norm) for p*o_F.
std::vector<std::pair<int64_t, int>> split_type(FieldTag F, int64_t p);

bool in_prime(FieldTag F, const PrimeIdeal& P, const RingElement& x);
/// ord_P(x) for nonzero x.
int ord(FieldTag F, const PrimeIdeal& P, const RingElement& x);
/// Distinct primes dividing a nonzero element, sorted by (p, root).
std::vector<PrimeIdeal> prime_divisors(FieldTag F, const RingElement& x);
bool is_squarefree_element(FieldTag F, const RingElement& x);

/// prod over primes of o_F dividing N of (Nr(P) - 1).
int64_t euler_phi_F(FieldTag F, const RingElement& N);
int64_t euler_phi_F(FieldTag F, int64_t N);

// ---- quadratic extensions E = F(sqrt delta), delta rational ------------

/// The quadratic subfields of E = Q(sqrt m, sqrt delta) other than F,
/// as fundamental discriminants D1 = disc Q(sqrt delta), D2 = disc Q(sqrt(m delta)).
/// Over Q, D2 is unused and set to 0.
struct ExtensionSubfields {
  int64_t D1 = 0;
  int64_t D2 = 0;
};

/// Throws UnsupportedExtension when E is not a quadratic extension of F
/// (delta a square in F) and InvalidArgument when delta is zero.
ExtensionSubfields extension_subfields(FieldTag F, int64_t delta);

struct RelDiscriminant {
  int64_t norm = 0;                            // Nr(D_{E/F})
  std::vector<std::pair<PrimeIdeal, int>> factors;  // prime, exponent
  int64_t abs_disc_E = 0;                      // |D_E|
};

RelDiscriminant rel_discriminant_delta(FieldTag F, int64_t delta);
/// E = F(sqrt(-N)).
RelDiscriminant rel_discriminant(FieldTag F, int64_t N);

/// eta_{E/F}(P) for E = F(sqrt delta).
int eta_at_prime(FieldTag F, int64_t delta, const PrimeIdeal& P);

/// Roots of unity in E = F(sqrt delta).
int omega_E(FieldTag F, int64_t delta);

struct BiquadExtData {
  int64_t N = 0;
  int64_t rel_disc_norm = 0;
  int64_t h_ratio_num = 0;  // h_E/h_F = h_ratio_num / h_ratio_den
  int64_t h_ratio_den = 1;
  int omega_E = 2;
  double L1 = 0.0;          // class number formula route
  double L1_product = 0.0;  // L(1, chi_D1) L(1, chi_D2)
};

/// Unit index used in the class number relation h_E = h(D1) h(D2) / lambda0.
constexpr int kUnitIndexLambda0 = 2;

/// L(1, eta_{E/F}) for E = F(sqrt(-N)), F quadratic, by the class number
/// formula of the biquadratic field, with the product of the two
/// imaginary quadratic L-values kept alongside for comparison.
BiquadExtData L1_eta_biquad(FieldTag F, int64_t N);

/// L(1, eta_{E/F}) for E = F(sqrt delta), delta rational, through the
/// Artin factorization (one or two rational L-values).
double L1_eta(FieldTag F, int64_t delta);

/// Representatives of totally positive units modulo squares.
std::vector<RingElement> enumerate_units_U2(FieldTag F);

}  // namespace rootbias
