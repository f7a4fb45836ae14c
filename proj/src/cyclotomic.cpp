#include "rootbias/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "rootbias/error.hpp"

namespace rootbias {

Cyclotomic::Cyclotomic(int64_t p, int e) : p_(p), e_(e) {
  if (!numeric::is_prime(p) || e < 1) throw InvalidArgument("Cyclotomic: need a prime power order");
  n_ = numeric::ipow(p, e);
  phi_ = n_ / p * (p - 1);
  c_.assign(static_cast<size_t>(n_), 0);
}

Cyclotomic Cyclotomic::from_integer(int64_t p, int e, int64_t v) {
  Cyclotomic z(p, e);
  z.c_[0] = v;
  z.normalize();
  return z;
}

Cyclotomic Cyclotomic::root(int64_t p, int e, int64_t k) {
  Cyclotomic z(p, e);
  z.add_root(k, 1);
  z.normalize();
  return z;
}

void Cyclotomic::add_root(int64_t k, int64_t c) {
  if (static_cast<int64_t>(c_.size()) != n_) c_.resize(static_cast<size_t>(n_), 0);
  c_[static_cast<size_t>(numeric::mod(k, n_))] += c * den_;
}

void Cyclotomic::normalize() {
  c_.resize(static_cast<size_t>(n_), 0);
  // Phi_n(X) = sum_{j<p} X^{j n/p}: zeta^i = -sum_{j=1}^{p-1} zeta^{i - j n/p}.
  const int64_t step = n_ / p_;
  for (int64_t i = n_ - 1; i >= phi_; --i) {
    const int64_t v = c_[i];
    if (v == 0) continue;
    c_[i] = 0;
    for (int64_t j = 1; j < p_; ++j) c_[i - j * step] -= v;
  }
  c_.resize(static_cast<size_t>(phi_));
  int64_t g = den_;
  for (int64_t v : c_) g = std::gcd(g, v);
  if (g > 1) {
    for (auto& v : c_) v /= g;
    den_ /= g;
  }
  bool zero = true;
  for (int64_t v : c_) zero = zero && v == 0;
  if (zero) den_ = 1;
}

void Cyclotomic::check_compatible(const Cyclotomic& o) const {
  if (p_ != o.p_ || e_ != o.e_) throw InvalidArgument("Cyclotomic: mismatched fields");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_compatible(o);
  normalize();
  Cyclotomic other = o;
  other.normalize();
  const int64_t l = std::lcm(den_, other.den_);
  const int64_t a = l / den_, b = l / other.den_;
  for (int64_t i = 0; i < phi_; ++i) c_[i] = c_[i] * a + other.c_[i] * b;
  den_ = l;
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += o * -1; }

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  r += o;
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  Cyclotomic r = *this;
  r -= o;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_compatible(o);
  Cyclotomic a = *this, b = o;
  a.normalize();
  b.normalize();
  Cyclotomic r(p_, e_);
  for (int64_t i = 0; i < phi_; ++i) {
    if (a.c_[i] == 0) continue;
    for (int64_t j = 0; j < phi_; ++j) r.c_[(i + j) % n_] += a.c_[i] * b.c_[j];
  }
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::operator*(int64_t c) const {
  Cyclotomic r = *this;
  r.normalize();
  for (auto& v : r.c_) v *= c;
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::div(int64_t c) const {
  if (c == 0) throw InvalidArgument("Cyclotomic: division by zero");
  Cyclotomic r = *this;
  r.normalize();
  if (c < 0) {
    for (auto& v : r.c_) v = -v;
    c = -c;
  }
  r.den_ *= c;
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic a = *this;
  a.normalize();
  Cyclotomic r(p_, e_);
  for (int64_t i = 0; i < phi_; ++i) r.c_[static_cast<size_t>(numeric::mod(-i, n_))] += a.c_[i];
  r.den_ = a.den_;
  r.normalize();
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (p_ != o.p_ || e_ != o.e_) return false;
  Cyclotomic a = *this, b = o;
  a.normalize();
  b.normalize();
  return a.den_ == b.den_ && a.c_ == b.c_;
}

bool Cyclotomic::is_zero() const {
  Cyclotomic a = *this;
  a.normalize();
  for (int64_t v : a.c_)
    if (v != 0) return false;
  return true;
}

bool Cyclotomic::as_rational(int64_t* num, int64_t* den) const {
  Cyclotomic a = *this;
  a.normalize();
  for (int64_t i = 1; i < phi_; ++i)
    if (a.c_[i] != 0) return false;
  if (num) *num = a.c_[0];
  if (den) *den = a.den_;
  return true;
}

cplx Cyclotomic::to_complex() const {
  Cyclotomic a = *this;
  a.normalize();
  cplx sum = 0.0;
  for (int64_t i = 0; i < phi_; ++i)
    if (a.c_[i] != 0) sum += static_cast<double>(a.c_[i]) * std::polar(1.0, 2.0 * std::numbers::pi * i / n_);
  return sum / static_cast<double>(a.den_);
}

std::string Cyclotomic::to_string() const {
  Cyclotomic a = *this;
  a.normalize();
  std::ostringstream os;
  bool first = true;
  for (int64_t i = 0; i < phi_; ++i) {
    if (a.c_[i] == 0) continue;
    if (!first) os << (a.c_[i] > 0 ? " + " : " - ");
    else if (a.c_[i] < 0) os << "-";
    const int64_t m = a.c_[i] < 0 ? -a.c_[i] : a.c_[i];
    if (i == 0) os << m;
    else if (m == 1) os << "z^" << i;
    else os << m << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  std::string s = os.str();
  if (a.den_ != 1) s = "(" + s + ")/" + std::to_string(a.den_);
  return s;
}

}  // namespace rootbias
