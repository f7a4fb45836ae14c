#include "rootbias/basefield.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <regex>

#include "rootbias/error.hpp"
#include "rootbias/numeric.hpp"
#include "rootbias/quadarith.hpp"

namespace rootbias {

namespace {

const std::array<BaseFieldDescriptor, 3> kFields = {{
    {FieldTag::Q, 1, 1, 1, "Q", "none", 1, 2},
    {FieldTag::Qsqrt2, 2, 8, 2, "Qsqrt2", "sqrt2", -1, 2},
    {FieldTag::Qsqrt5, 2, 5, 5, "Qsqrt5", "(1+sqrt5)/2", -1, 2},
}};

// x_v = (A + s*B*sqrt(m)) / 2 for Qsqrt5, (A + s*B*sqrt(m)) for Qsqrt2.
struct SurdForm {
  int64_t A;
  int64_t B;
};

SurdForm surd(FieldTag F, const RingElement& x) {
  if (F == FieldTag::Qsqrt5) return {2 * x.a + x.b, x.b};
  return {x.a, x.b};
}

int sign_of(int64_t v) { return (v > 0) - (v < 0); }

// Sign of A + B sqrt(m), m not a square.
int surd_sign(int64_t A, int64_t B, int64_t m) {
  int sa = sign_of(A), sb = sign_of(B);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  __int128 a2 = static_cast<__int128>(A) * A;
  __int128 mb2 = static_cast<__int128>(m) * B * B;
  return a2 > mb2 ? sa : sb;
}

int64_t fund_disc_of_squarefree(int64_t d) {
  return numeric::mod(d, 4) == 1 ? d : 4 * d;
}

int64_t squarefree_kernel(int64_t n) {
  int64_t k = n < 0 ? -1 : 1;
  for (auto [p, e] : numeric::factorize(n))
    if (e % 2) k *= p;
  return k;
}

// sqrt of a quadratic residue a mod an odd prime p.
int64_t sqrt_mod_prime(int64_t a, int64_t p) {
  a = numeric::mod(a, p);
  if (a == 0) return 0;
  if (numeric::pow_mod(a, (p - 1) / 2, p) != 1)
    throw Inconsistency("sqrt_mod_prime: not a residue");
  if (p % 4 == 3) return numeric::pow_mod(a, (p + 1) / 4, p);
  // Tonelli-Shanks
  int64_t Q = p - 1;
  int S = 0;
  while (Q % 2 == 0) {
    Q /= 2;
    ++S;
  }
  int64_t z = 2;
  while (numeric::pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  int64_t M = S, c = numeric::pow_mod(z, Q, p), t = numeric::pow_mod(a, Q, p),
          R = numeric::pow_mod(a, (Q + 1) / 2, p);
  auto mulm = [p](int64_t x, int64_t y) {
    return static_cast<int64_t>(static_cast<__int128>(x) * y % p);
  };
  while (t != 1) {
    int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulm(tt, tt);
      ++i;
    }
    int64_t b = c;
    for (int64_t j = 0; j < M - i - 1; ++j) b = mulm(b, b);
    M = i;
    c = mulm(b, b);
    t = mulm(t, c);
    R = mulm(R, b);
  }
  return R;
}

// A generator of norm +-p lying in the degree-one prime with the given root.
RingElement degree_one_generator(FieldTag F, int64_t p, int64_t root) {
  const int64_t m = descriptor(F).m;
  for (int64_t b = 0;; ++b) {
    for (int sgn : {1, -1}) {
      // Qsqrt2: a^2 = 2b^2 + sgn*p. Qsqrt5: t^2 = 5b^2 + 4 sgn p, a = (t - b)/2.
      int64_t rhs = (F == FieldTag::Qsqrt5) ? m * b * b + 4 * sgn * p : m * b * b + sgn * p;
      if (rhs < 0 || !numeric::is_perfect_square(rhs)) continue;
      int64_t r = numeric::isqrt(rhs);
      for (int64_t t : {r, -r}) {
        for (int64_t bb : {b, -b}) {
          RingElement x = (F == FieldTag::Qsqrt5) ? RingElement{(t - bb) / 2, bb} : RingElement{t, bb};
          if (numeric::mod(x.a + x.b * root, p) == 0) return x;
        }
      }
    }
    if (b > 4 * numeric::isqrt(p) + 8)
      throw Inconsistency("degree_one_generator: no generator found");
  }
}

}  // namespace

const BaseFieldDescriptor& descriptor(FieldTag tag) {
  return kFields[static_cast<size_t>(tag)];
}

FieldTag parse_field_tag(const std::string& s) {
  for (const auto& f : kFields)
    if (s == f.name) return f.tag;
  throw InvalidArgument("unknown field '" + s + "' (expected Q, Qsqrt2 or Qsqrt5)");
}

std::string to_string(FieldTag tag) { return descriptor(tag).name; }

RingElement add(const RingElement& x, const RingElement& y) { return {x.a + y.a, x.b + y.b}; }
RingElement sub(const RingElement& x, const RingElement& y) { return {x.a - y.a, x.b - y.b}; }
RingElement neg(const RingElement& x) { return {-x.a, -x.b}; }

RingElement mul(FieldTag F, const RingElement& x, const RingElement& y) {
  switch (F) {
    case FieldTag::Q:
      return {x.a * y.a, 0};
    case FieldTag::Qsqrt2:
      return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    case FieldTag::Qsqrt5:
      return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  return {};
}

RingElement conj(FieldTag F, const RingElement& x) {
  switch (F) {
    case FieldTag::Q:
      return x;
    case FieldTag::Qsqrt2:
      return {x.a, -x.b};
    case FieldTag::Qsqrt5:
      return {x.a + x.b, -x.b};
  }
  return {};
}

int64_t norm(FieldTag F, const RingElement& x) {
  switch (F) {
    case FieldTag::Q:
      return x.a;
    case FieldTag::Qsqrt2:
      return x.a * x.a - 2 * x.b * x.b;
    case FieldTag::Qsqrt5:
      return x.a * x.a + x.a * x.b - x.b * x.b;
  }
  return 0;
}

int64_t trace(FieldTag F, const RingElement& x) {
  switch (F) {
    case FieldTag::Q:
      return x.a;
    case FieldTag::Qsqrt2:
      return 2 * x.a;
    case FieldTag::Qsqrt5:
      return 2 * x.a + x.b;
  }
  return 0;
}

bool divides(FieldTag F, const RingElement& y, const RingElement& x) {
  if (y.is_zero()) return x.is_zero();
  if (F == FieldTag::Q) return x.b == 0 && y.b == 0 && x.a % y.a == 0;
  RingElement num = mul(F, x, conj(F, y));
  int64_t n = norm(F, y);
  return num.a % n == 0 && num.b % n == 0;
}

RingElement divide_exact(FieldTag F, const RingElement& x, const RingElement& y) {
  if (y.is_zero()) throw InvalidArgument("divide_exact: division by zero");
  RingElement num = F == FieldTag::Q ? x : mul(F, x, conj(F, y));
  int64_t n = norm(F, y);
  if (num.a % n != 0 || num.b % n != 0)
    throw InvalidArgument("divide_exact: " + format_element(F, y) + " does not divide " +
                          format_element(F, x));
  return {num.a / n, num.b / n};
}

double embed(FieldTag F, const RingElement& x, int v) {
  if (F == FieldTag::Q) {
    if (v != 0) throw InvalidArgument("embed: Q has one real place");
    return static_cast<double>(x.a);
  }
  if (v != 0 && v != 1) throw InvalidArgument("embed: place index out of range");
  const double r = std::sqrt(static_cast<double>(descriptor(F).m)) * (v == 0 ? 1.0 : -1.0);
  SurdForm s = surd(F, x);
  double val = static_cast<double>(s.A) + static_cast<double>(s.B) * r;
  return F == FieldTag::Qsqrt5 ? 0.5 * val : val;
}

int embed_sign(FieldTag F, const RingElement& x, int v) {
  if (F == FieldTag::Q) return sign_of(x.a);
  SurdForm s = surd(F, x);
  return surd_sign(s.A, v == 0 ? s.B : -s.B, descriptor(F).m);
}

bool totally_positive(FieldTag F, const RingElement& x) {
  for (int v = 0; v < descriptor(F).degree; ++v)
    if (embed_sign(F, x, v) <= 0) return false;
  return true;
}

bool totally_negative(FieldTag F, const RingElement& x) {
  for (int v = 0; v < descriptor(F).degree; ++v)
    if (embed_sign(F, x, v) >= 0) return false;
  return true;
}

bool is_square(FieldTag F, const RingElement& x) {
  if (x.is_zero()) return true;
  if (F == FieldTag::Q) return numeric::is_perfect_square(x.a);
  if (!totally_positive(F, x)) return false;
  const double y0 = std::sqrt(embed(F, x, 0));
  const double y1 = std::sqrt(embed(F, x, 1));
  const double rm = std::sqrt(static_cast<double>(descriptor(F).m));
  for (double s1 : {1.0, -1.0}) {
    double e0 = y0, e1 = s1 * y1;
    RingElement y;
    if (F == FieldTag::Qsqrt2) {
      y = {std::llround((e0 + e1) / 2.0), std::llround((e0 - e1) / (2.0 * rm))};
    } else {
      int64_t b = std::llround((e0 - e1) / rm);
      y = {std::llround(e0 - b * (1.0 + rm) / 2.0), b};
    }
    if (mul(F, y, y) == x) return true;
  }
  return false;
}

RingElement fundamental_unit(FieldTag F) {
  switch (F) {
    case FieldTag::Q:
      return {-1, 0};
    case FieldTag::Qsqrt2:
      return {1, 1};
    case FieldTag::Qsqrt5:
      return {0, 1};
  }
  return {};
}

RingElement totally_positive_associate(FieldTag F, const RingElement& x) {
  if (x.is_zero()) throw InvalidArgument("totally_positive_associate: zero");
  RingElement y = x;
  if (F != FieldTag::Q && embed_sign(F, y, 0) != embed_sign(F, y, 1))
    y = mul(F, y, fundamental_unit(F));
  if (embed_sign(F, y, 0) < 0) y = neg(y);
  return y;
}

std::string format_element(FieldTag F, const RingElement& x) {
  if (x.b == 0) return std::to_string(x.a);
  const char* g = F == FieldTag::Qsqrt2 ? "sqrt2" : "w";
  std::string out;
  if (x.a != 0) out = std::to_string(x.a);
  int64_t b = x.b;
  if (b < 0) {
    out += "-";
    b = -b;
  } else if (x.a != 0) {
    out += "+";
  }
  if (b != 1) out += std::to_string(b) + "*";
  return out + g;
}

RingElement parse_element(FieldTag F, const std::string& s) {
  static const std::regex re(R"(^\s*([+-]?\d+)?\s*(?:([+-]?)\s*(\d*)\s*\*?\s*(sqrt2|sqrt5|phi|w))?\s*$)");
  std::smatch mt;
  if (!std::regex_match(s, mt, re) || (!mt[1].matched && !mt[4].matched))
    throw InvalidArgument("cannot parse ring element '" + s + "'");
  RingElement x;
  try {
    if (mt[1].matched) x.a = std::stoll(mt[1].str());
    if (mt[4].matched) {
      const std::string g = mt[4].str();
      bool ok = (F == FieldTag::Qsqrt2 && (g == "sqrt2" || g == "w")) ||
                (F == FieldTag::Qsqrt5 && (g == "phi" || g == "w"));
      if (!ok) throw InvalidArgument("generator '" + g + "' does not belong to " + to_string(F));
      if (mt[1].matched && mt[2].str().empty()) {
        // "2*sqrt2": the leading integer was the coefficient.
        if (!mt[3].str().empty()) throw InvalidArgument("cannot parse ring element '" + s + "'");
        x.b = x.a;
        x.a = 0;
      } else {
        x.b = mt[3].str().empty() ? 1 : std::stoll(mt[3].str());
        if (mt[2].str() == "-") x.b = -x.b;
      }
    }
  } catch (const std::out_of_range&) {
    throw InvalidArgument("ring element '" + s + "' out of range");
  }
  return x;
}

SplitKind split_kind(FieldTag F, int64_t p) {
  if (!numeric::is_prime(p)) throw InvalidArgument("split_kind: " + std::to_string(p) + " is not prime");
  switch (F) {
    case FieldTag::Q:
      return SplitKind::Rational;
    case FieldTag::Qsqrt2: {
      if (p == 2) return SplitKind::Ramified;
      int64_t r = p % 8;
      return (r == 1 || r == 7) ? SplitKind::Split : SplitKind::Inert;
    }
    case FieldTag::Qsqrt5: {
      if (p == 5) return SplitKind::Ramified;
      int64_t r = p % 5;
      return (r == 1 || r == 4) ? SplitKind::Split : SplitKind::Inert;
    }
  }
  return SplitKind::Rational;
}

std::vector<PrimeIdeal> primes_above(FieldTag F, int64_t p) {
  SplitKind kind = split_kind(F, p);
  switch (kind) {
    case SplitKind::Rational:
      return {PrimeIdeal{p, p, 1, 1, 0, {p, 0}}};
    case SplitKind::Inert:
      return {PrimeIdeal{p, p * p, 1, 2, -1, {p, 0}}};
    case SplitKind::Ramified:
      if (F == FieldTag::Qsqrt2) return {PrimeIdeal{2, 2, 2, 1, 0, {0, 1}}};
      return {PrimeIdeal{5, 5, 2, 1, 3, {-1, 2}}};
    case SplitKind::Split: {
      // Roots of the minimal polynomial of the generator mod p.
      int64_t r1, r2;
      if (F == FieldTag::Qsqrt2) {
        r1 = sqrt_mod_prime(2, p);
        r2 = p - r1;
      } else {
        int64_t s5 = sqrt_mod_prime(5, p);
        int64_t inv2 = (p + 1) / 2;
        r1 = numeric::mod((1 + s5) * inv2, p);
        r2 = numeric::mod((1 - s5) * inv2, p);
      }
      if (r1 > r2) std::swap(r1, r2);
      std::vector<PrimeIdeal> out;
      for (int64_t r : {r1, r2}) out.push_back({p, p, 1, 1, r, degree_one_generator(F, p, r)});
      return out;
    }
  }
  return {};
}

std::vector<std::pair<int64_t, int>> split_type(FieldTag F, int64_t p) {
  auto ps = primes_above(F, p);
  std::vector<std::pair<int64_t, int>> out;
  for (const auto& P : ps) {
    if (!out.empty() && out.back().first == P.q)
      ++out.back().second;
    else
      out.emplace_back(P.q, 1);
  }
  return out;
}

bool in_prime(FieldTag F, const PrimeIdeal& P, const RingElement& x) {
  if (F == FieldTag::Q) return x.a % P.p == 0;
  if (P.root < 0) return x.a % P.p == 0 && x.b % P.p == 0;
  return numeric::mod(x.a + numeric::mod(x.b, P.p) * P.root, P.p) == 0;
}

int ord(FieldTag F, const PrimeIdeal& P, const RingElement& x) {
  if (x.is_zero()) throw InvalidArgument("ord: zero has infinite valuation");
  int v = 0;
  RingElement y = x;
  while (in_prime(F, P, y)) {
    y = divide_exact(F, y, P.pi);
    ++v;
  }
  return v;
}

std::vector<PrimeIdeal> prime_divisors(FieldTag F, const RingElement& x) {
  if (x.is_zero()) throw InvalidArgument("prime_divisors: zero");
  std::vector<PrimeIdeal> out;
  int64_t n = norm(F, x);
  if (n == 1 || n == -1) return out;
  for (auto [p, e] : numeric::factorize(n)) {
    (void)e;
    for (const auto& P : primes_above(F, p))
      if (in_prime(F, P, x)) out.push_back(P);
  }
  return out;
}

bool is_squarefree_element(FieldTag F, const RingElement& x) {
  for (const auto& P : prime_divisors(F, x))
    if (ord(F, P, x) > 1) return false;
  return true;
}

int64_t euler_phi_F(FieldTag F, const RingElement& N) {
  if (!is_squarefree_element(F, N))
    throw InvalidArgument("euler_phi_F: level " + format_element(F, N) + " is not square-free in o_F");
  int64_t phi = 1;
  for (const auto& P : prime_divisors(F, N)) phi *= P.q - 1;
  return phi;
}

int64_t euler_phi_F(FieldTag F, int64_t N) { return euler_phi_F(F, RingElement{N, 0}); }

ExtensionSubfields extension_subfields(FieldTag F, int64_t delta) {
  if (delta == 0) throw InvalidArgument("extension_subfields: delta = 0");
  const int64_t m = descriptor(F).m;
  int64_t k = squarefree_kernel(delta);
  if (k == 1 || (F != FieldTag::Q && k == m))
    throw UnsupportedExtension("delta = " + std::to_string(delta) + " is a square in " + to_string(F) +
                               "; F(sqrt delta) is not a field extension");
  ExtensionSubfields out;
  out.D1 = fund_disc_of_squarefree(k);
  if (F != FieldTag::Q) out.D2 = fund_disc_of_squarefree(squarefree_kernel(k * m));
  return out;
}

RelDiscriminant rel_discriminant_delta(FieldTag F, int64_t delta) {
  ExtensionSubfields sub = extension_subfields(F, delta);
  const auto& d = descriptor(F);
  RelDiscriminant out;
  if (F == FieldTag::Q) {
    out.abs_disc_E = std::abs(sub.D1);
    out.norm = out.abs_disc_E;
  } else {
    out.abs_disc_E = d.disc * std::abs(sub.D1) * std::abs(sub.D2);
    out.norm = out.abs_disc_E / (d.disc * d.disc);
    if (out.norm * d.disc * d.disc != out.abs_disc_E)
      throw Inconsistency("rel_discriminant: |D_E| not divisible by D_F^2");
  }
  if (out.norm == 1) return out;
  for (auto [p, e] : numeric::factorize(out.norm)) {
    auto ps = primes_above(F, p);
    const int gf = static_cast<int>(ps.size()) * ps.front().f;
    if (e % gf != 0) throw Inconsistency("rel_discriminant: exponent not Galois-stable");
    for (const auto& P : ps) out.factors.emplace_back(P, e / gf);
  }
  return out;
}

RelDiscriminant rel_discriminant(FieldTag F, int64_t N) {
  if (N <= 0) throw InvalidArgument("rel_discriminant: N must be positive");
  return rel_discriminant_delta(F, -N);
}

int eta_at_prime(FieldTag F, int64_t delta, const PrimeIdeal& P) {
  ExtensionSubfields sub = extension_subfields(F, delta);
  if (F == FieldTag::Q) return kronecker(sub.D1, P.p);
  const bool r1 = sub.D1 % P.p == 0, r2 = sub.D2 % P.p == 0;
  if (r1 && r2) return 0;
  int chi = kronecker(r1 ? sub.D2 : sub.D1, P.p);
  return P.f == 2 ? chi * chi : chi;
}

int omega_E(FieldTag F, int64_t delta) {
  ExtensionSubfields sub = extension_subfields(F, delta);
  std::vector<int64_t> discs = {sub.D1};
  if (F != FieldTag::Q) {
    discs.push_back(sub.D2);
    discs.push_back(descriptor(F).disc);
  }
  auto has = [&](int64_t D) { return std::find(discs.begin(), discs.end(), D) != discs.end(); };
  if (has(-4) && (has(8) || has(-8))) return 8;
  if (has(-4) && has(-3)) return 12;
  if (has(-4)) return 4;
  if (has(-3)) return 6;
  return 2;
}

BiquadExtData L1_eta_biquad(FieldTag F, int64_t N) {
  if (F == FieldTag::Q) throw InvalidArgument("L1_eta_biquad: needs a quadratic base field");
  if (N <= 0 || !numeric::is_squarefree(N)) throw InvalidArgument("L1_eta_biquad: N must be square-free positive");
  RelDiscriminant rd = rel_discriminant(F, N);
  ExtensionSubfields sub = extension_subfields(F, -N);
  const auto& d = descriptor(F);
  BiquadExtData out;
  out.N = N;
  out.rel_disc_norm = rd.norm;
  const int64_t h1 = class_number_imag(sub.D1);
  const int64_t h2 = class_number_imag(sub.D2);
  out.h_ratio_num = h1 * h2;
  out.h_ratio_den = kUnitIndexLambda0;
  out.omega_E = omega_E(F, -N);
  const double regulator_ratio = 2.0;
  const double pi2 = std::numbers::pi * std::numbers::pi;
  out.L1 = pi2 * (static_cast<double>(d.omega) / out.omega_E) * regulator_ratio *
           (static_cast<double>(out.h_ratio_num) / out.h_ratio_den) *
           std::sqrt(static_cast<double>(d.disc) / static_cast<double>(rd.abs_disc_E));
  out.L1_product = dirichlet_L1(sub.D1) * dirichlet_L1(sub.D2);
  return out;
}

double L1_eta(FieldTag F, int64_t delta) {
  ExtensionSubfields sub = extension_subfields(F, delta);
  if (F == FieldTag::Q) return dirichlet_L1(sub.D1);
  return dirichlet_L1(sub.D1) * dirichlet_L1(sub.D2);
}

std::vector<RingElement> enumerate_units_U2(FieldTag F) {
  // Q has no nontrivial totally positive units; both quadratic fields have
  // a fundamental unit of norm -1, so totally positive units are squares.
  if (F != FieldTag::Q && descriptor(F).fundamental_unit_norm != -1)
    throw Inconsistency("enumerate_units_U2: unexpected unit norm");
  return {RingElement{1, 0}};
}

}  // namespace rootbias
