#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace rootbias {

/// x = p^val * u with u a unit known modulo p^relprec. relprec = 0 encodes
/// an element known only to lie in p^val o (a zero at that precision).
/// Exact zero is a separate state with infinite precision.
class TruncatedPAdic {
 public:
  static constexpr int kDefaultPrecision = 3;

  TruncatedPAdic() = default;
  /// The integer n, carried to `relprec` digits after its valuation.
  static TruncatedPAdic from_integer(int64_t p, int64_t n, int relprec = kDefaultPrecision);
  /// p^val * u.
  static TruncatedPAdic from_parts(int64_t p, int val, int64_t u, int relprec = kDefaultPrecision);
  static TruncatedPAdic zero(int64_t p);
  /// p^k.
  static TruncatedPAdic uniformizer_power(int64_t p, int k, int relprec = kDefaultPrecision);

  int64_t p() const { return p_; }
  bool is_exact_zero() const { return exact_zero_; }
  /// Lower bound on the valuation; the valuation itself when relprec() > 0.
  int val() const { return val_; }
  int relprec() const { return relprec_; }
  int64_t unit() const { return unit_; }
  /// The element is known modulo p^abs_prec(); INT32_MAX for exact zero.
  int abs_prec() const;

  /// True iff the valuation is provably >= k.
  bool divisible_by(int k) const;
  /// True iff the element is a unit. Throws PrecisionLoss if undecidable.
  bool is_unit() const;
  /// x mod p^k for integral x; throws PrecisionLoss if not known that far
  /// and InvalidArgument if x may be non-integral.
  int64_t residue(int k) const;

  TruncatedPAdic operator+(const TruncatedPAdic& o) const;
  TruncatedPAdic operator-(const TruncatedPAdic& o) const;
  TruncatedPAdic operator-() const;
  TruncatedPAdic operator*(const TruncatedPAdic& o) const;
  /// Inverse of a nonzero element with relprec > 0.
  TruncatedPAdic inverse() const;
  /// Multiply by p^k.
  TruncatedPAdic shift(int k) const;

  std::string to_string() const;

 private:
  void check(const TruncatedPAdic& o) const;

  int64_t p_ = 0;
  int val_ = 0;
  int64_t unit_ = 0;
  int relprec_ = 0;
  bool exact_zero_ = true;
};

/// exp(2 pi i {x/p}_p) as an exponent of zeta_{p^2}; needs val(x) >= -1.
int64_t psi_tilde_exponent(const TruncatedPAdic& x);

/// 2x2 matrix over the p-adic field, taken up to central scaling.
class ProjMatrix {
 public:
  ProjMatrix() = default;
  ProjMatrix(TruncatedPAdic a, TruncatedPAdic b, TruncatedPAdic c, TruncatedPAdic d);
  /// Integer entries, each carried to `relprec` digits.
  static ProjMatrix from_integers(int64_t p, int64_t a, int64_t b, int64_t c, int64_t d,
                                  int relprec = TruncatedPAdic::kDefaultPrecision);

  const TruncatedPAdic& operator()(int i, int j) const { return e_[2 * i + j]; }
  int64_t p() const { return e_[0].p(); }

  ProjMatrix operator*(const ProjMatrix& o) const;
  /// The adjugate, which is the inverse up to the centre.
  ProjMatrix adjugate() const;
  /// Scaled by a power of p so that all entries are integral and one is a unit.
  ProjMatrix primitive() const;

  /// Z K' with K' = (1+p, o; p, 1+p).
  bool in_H() const;
  /// Z I with I the Iwahori subgroup.
  bool in_ZI() const;
  /// (0 1; p 0) Z I.
  bool in_support_coset() const;

  std::string to_string() const;

 private:
  std::array<TruncatedPAdic, 4> e_{};
};

/// For g in Z K': the coordinates (r1, r2) mod p of k = z^-1 g = (x1 r1; p r2 x2)
/// normalized so x2 = 1. Throws InvalidArgument if g is not in Z K'.
std::array<int64_t, 2> H_coordinates(const ProjMatrix& g);

/// For g = (0 1; p 0) z (x1 r1; p r2 x2): (x1, r1, r2) mod p up to a common
/// unit multiple. Throws InvalidArgument off the coset.
std::array<int64_t, 3> support_coordinates(const ProjMatrix& g);

}  // namespace rootbias
