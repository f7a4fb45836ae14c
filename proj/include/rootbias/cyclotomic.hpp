#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rootbias/numeric.hpp"

namespace rootbias {

/// Exact element of Q(zeta_n), n = p^e, in the power basis
/// 1, zeta, ..., zeta^{phi(n)-1}, with one positive integer denominator.
class Cyclotomic {
 public:
  Cyclotomic(int64_t p, int e);

  static Cyclotomic from_integer(int64_t p, int e, int64_t v);
  /// zeta_n^k
  static Cyclotomic root(int64_t p, int e, int64_t k);

  int64_t p() const { return p_; }
  int e() const { return e_; }
  int64_t order() const { return n_; }

  /// Adds c * zeta^k without renormalizing; call normalize() afterwards or
  /// rely on the comparison operators, which normalize copies.
  void add_root(int64_t k, int64_t c = 1);

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(int64_t c) const;
  /// Division by a nonzero integer, exact (kept as a denominator).
  Cyclotomic div(int64_t c) const;
  /// Complex conjugation zeta -> zeta^-1.
  Cyclotomic conj() const;

  bool operator==(const Cyclotomic& o) const;
  bool is_zero() const;
  /// If the value is a rational number num/den, writes it and returns true.
  bool as_rational(int64_t* num, int64_t* den) const;

  cplx to_complex() const;
  std::string to_string() const;

 private:
  void normalize();
  void check_compatible(const Cyclotomic& o) const;

  int64_t p_;
  int e_;
  int64_t n_;    // p^e
  int64_t phi_;  // (p-1) p^{e-1}
  std::vector<int64_t> c_;  // length n_ before normalize, phi_ after
  int64_t den_ = 1;
};

}  // namespace rootbias
