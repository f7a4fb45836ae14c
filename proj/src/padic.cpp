#include "rootbias/padic.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "rootbias/error.hpp"
#include "rootbias/numeric.hpp"

namespace rootbias {

namespace {

int64_t mulmod(int64_t a, int64_t b, int64_t m) {
  return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
}

int64_t pw(int64_t p, int k) { return numeric::ipow(p, k); }

void check_prime(int64_t p) {
  if (p < 3 || p > 13 || !numeric::is_prime(p))
    throw InvalidArgument("TruncatedPAdic: p must be an odd prime <= 13");
}

void check_prec(int r) {
  if (r < 1 || r > 14) throw InvalidArgument("TruncatedPAdic: relative precision must be in 1..14");
}

}  // namespace

TruncatedPAdic TruncatedPAdic::zero(int64_t p) {
  check_prime(p);
  TruncatedPAdic z;
  z.p_ = p;
  return z;
}

TruncatedPAdic TruncatedPAdic::from_integer(int64_t p, int64_t n, int relprec) {
  check_prime(p);
  check_prec(relprec);
  if (n == 0) return zero(p);
  const int v = numeric::valuation(n, p);
  return from_parts(p, v, n / pw(p, v), relprec);
}

TruncatedPAdic TruncatedPAdic::from_parts(int64_t p, int val, int64_t u, int relprec) {
  check_prime(p);
  check_prec(relprec);
  if (numeric::mod(u, p) == 0) throw InvalidArgument("TruncatedPAdic: unit part divisible by p");
  TruncatedPAdic x;
  x.p_ = p;
  x.val_ = val;
  x.relprec_ = relprec;
  x.unit_ = numeric::mod(u, pw(p, relprec));
  x.exact_zero_ = false;
  return x;
}

TruncatedPAdic TruncatedPAdic::uniformizer_power(int64_t p, int k, int relprec) {
  return from_parts(p, k, 1, relprec);
}

int TruncatedPAdic::abs_prec() const { return exact_zero_ ? INT_MAX : val_ + relprec_; }

bool TruncatedPAdic::divisible_by(int k) const { return exact_zero_ || val_ >= k; }

bool TruncatedPAdic::is_unit() const {
  if (exact_zero_) return false;
  if (relprec_ > 0) return val_ == 0;
  if (val_ >= 1) return false;
  throw PrecisionLoss("TruncatedPAdic: unit test below the known precision");
}

int64_t TruncatedPAdic::residue(int k) const {
  if (exact_zero_ || val_ >= k) return 0;
  if (val_ < 0) {
    if (relprec_ > 0) throw InvalidArgument("TruncatedPAdic: residue of a non-integral element");
    throw PrecisionLoss("TruncatedPAdic: integrality not decidable");
  }
  if (abs_prec() < k) throw PrecisionLoss("TruncatedPAdic: residue needs more digits than carried");
  return mulmod(unit_ % pw(p_, k - val_), pw(p_, val_), pw(p_, k));
}

void TruncatedPAdic::check(const TruncatedPAdic& o) const {
  if (p_ != o.p_) throw InvalidArgument("TruncatedPAdic: mixed primes");
}

TruncatedPAdic TruncatedPAdic::operator+(const TruncatedPAdic& o) const {
  check(o);
  if (exact_zero_) return o;
  if (o.exact_zero_) return *this;
  const int v = std::min(val_, o.val_);
  const int A = std::min(abs_prec(), o.abs_prec());
  TruncatedPAdic r;
  r.p_ = p_;
  r.exact_zero_ = false;
  if (A <= v) {
    r.val_ = A;
    return r;
  }
  const int64_t m = pw(p_, A - v);
  int64_t s = 0;
  if (relprec_ > 0 && val_ < A) s += mulmod(unit_ % m, pw(p_, val_ - v), m);
  if (o.relprec_ > 0 && o.val_ < A) s += mulmod(o.unit_ % m, pw(p_, o.val_ - v), m);
  s %= m;
  if (s == 0) {
    r.val_ = A;
    return r;
  }
  const int w = numeric::valuation(s, p_);
  r.val_ = v + w;
  r.relprec_ = A - r.val_;
  r.unit_ = (s / pw(p_, w)) % pw(p_, r.relprec_);
  return r;
}

TruncatedPAdic TruncatedPAdic::operator-() const {
  if (exact_zero_ || relprec_ == 0) return *this;
  TruncatedPAdic r = *this;
  r.unit_ = numeric::mod(-unit_, pw(p_, relprec_));
  return r;
}

TruncatedPAdic TruncatedPAdic::operator-(const TruncatedPAdic& o) const { return *this + (-o); }

TruncatedPAdic TruncatedPAdic::operator*(const TruncatedPAdic& o) const {
  check(o);
  if (exact_zero_) return *this;
  if (o.exact_zero_) return o;
  TruncatedPAdic r;
  r.p_ = p_;
  r.exact_zero_ = false;
  r.val_ = val_ + o.val_;
  r.relprec_ = std::min(relprec_, o.relprec_);
  if (r.relprec_ > 0) {
    const int64_t m = pw(p_, r.relprec_);
    r.unit_ = mulmod(unit_ % m, o.unit_ % m, m);
  }
  return r;
}

TruncatedPAdic TruncatedPAdic::inverse() const {
  if (exact_zero_) throw InvalidArgument("TruncatedPAdic: inverse of zero");
  if (relprec_ == 0) throw PrecisionLoss("TruncatedPAdic: inverse of an element known only to be small");
  TruncatedPAdic r = *this;
  r.val_ = -val_;
  r.unit_ = numeric::inv_mod(unit_, pw(p_, relprec_));
  return r;
}

TruncatedPAdic TruncatedPAdic::shift(int k) const {
  if (exact_zero_) return *this;
  TruncatedPAdic r = *this;
  r.val_ += k;
  return r;
}

std::string TruncatedPAdic::to_string() const {
  std::ostringstream os;
  if (exact_zero_) return "0";
  if (relprec_ == 0) {
    os << "O(" << p_ << "^" << val_ << ")";
    return os.str();
  }
  os << p_ << "^" << val_ << "*" << unit_ << " + O(" << p_ << "^" << abs_prec() << ")";
  return os.str();
}

int64_t psi_tilde_exponent(const TruncatedPAdic& x) {
  if (x.divisible_by(1)) return 0;
  if (x.val() < -1) throw InvalidArgument("psi_tilde: argument below p^-1 needs a deeper root of unity");
  // {x/p} = ((p x) mod p^2) / p^2
  return x.shift(1).residue(2);
}

ProjMatrix::ProjMatrix(TruncatedPAdic a, TruncatedPAdic b, TruncatedPAdic c, TruncatedPAdic d)
    : e_{a, b, c, d} {
  for (const auto& x : e_)
    if (x.p() != a.p()) throw InvalidArgument("ProjMatrix: mixed primes");
}

ProjMatrix ProjMatrix::from_integers(int64_t p, int64_t a, int64_t b, int64_t c, int64_t d, int relprec) {
  return {TruncatedPAdic::from_integer(p, a, relprec), TruncatedPAdic::from_integer(p, b, relprec),
          TruncatedPAdic::from_integer(p, c, relprec), TruncatedPAdic::from_integer(p, d, relprec)};
}

ProjMatrix ProjMatrix::operator*(const ProjMatrix& o) const {
  const auto& a = e_;
  const auto& b = o.e_;
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

ProjMatrix ProjMatrix::adjugate() const { return {e_[3], -e_[1], -e_[2], e_[0]}; }

ProjMatrix ProjMatrix::primitive() const {
  int v = INT_MAX;
  for (const auto& x : e_)
    if (!x.is_exact_zero() && x.relprec() > 0) v = std::min(v, x.val());
  if (v == INT_MAX) throw PrecisionLoss("ProjMatrix: no entry is known to nonzero precision");
  for (const auto& x : e_)
    if (!x.is_exact_zero() && x.relprec() == 0 && x.val() < v)
      throw PrecisionLoss("ProjMatrix: cannot decide the minimal valuation");
  return {e_[0].shift(-v), e_[1].shift(-v), e_[2].shift(-v), e_[3].shift(-v)};
}

bool ProjMatrix::in_H() const {
  ProjMatrix g = primitive();
  if (!g(0, 0).is_unit() || !g(1, 1).is_unit() || !g(1, 0).divisible_by(1)) return false;
  return g(0, 0).residue(1) == g(1, 1).residue(1);
}

bool ProjMatrix::in_ZI() const {
  ProjMatrix g = primitive();
  return g(0, 0).is_unit() && g(1, 1).is_unit() && g(1, 0).divisible_by(1);
}

namespace {

// (0 1; p 0)^-1 g = (g21/p, g22/p; g11, g12)
ProjMatrix strip_antidiagonal(const ProjMatrix& g) {
  return {g(1, 0).shift(-1), g(1, 1).shift(-1), g(0, 0), g(0, 1)};
}

}  // namespace

bool ProjMatrix::in_support_coset() const { return strip_antidiagonal(*this).in_ZI(); }

std::string ProjMatrix::to_string() const {
  return "(" + e_[0].to_string() + ", " + e_[1].to_string() + "; " + e_[2].to_string() + ", " +
         e_[3].to_string() + ")";
}

std::array<int64_t, 2> H_coordinates(const ProjMatrix& g) {
  if (!g.in_H()) throw InvalidArgument("H_coordinates: matrix is not in Z K'");
  ProjMatrix h = g.primitive();
  const TruncatedPAdic inv = h(1, 1).inverse();
  return {(h(0, 1) * inv).residue(1), (h(1, 0) * inv).shift(-1).residue(1)};
}

std::array<int64_t, 3> support_coordinates(const ProjMatrix& g) {
  ProjMatrix k = strip_antidiagonal(g);
  if (!k.in_ZI()) throw InvalidArgument("support_coordinates: matrix is off the (0 1; p 0) Z I coset");
  k = k.primitive();
  const TruncatedPAdic inv = k(1, 1).inverse();
  return {(k(0, 0) * inv).residue(1), (k(0, 1) * inv).residue(1), (k(1, 0) * inv).shift(-1).residue(1)};
}

}  // namespace rootbias
