#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rootbias/basefield.hpp"

namespace rootbias {

struct BiasTerm {
  RingElement u;
  RingElement n;
  RingElement delta;  // (nuN)^2 - 4uN
  double arch = 0.0;
  double lvalue = 0.0;
  int64_t afactor = 0;
  double contribution = 0.0;
};

struct BiasReport {
  FieldTag field = FieldTag::Q;
  std::vector<int> kvec;
  RingElement N;  // totally positive generator of the level
  std::vector<BiasTerm> terms;
  double raw_total = 0.0;
  double scaled_total = 0.0;  // 2 D_F^{1/2} raw_total
  int64_t B = 0;
};

/// Tolerance on the distance of the scaled total to the nearest integer.
constexpr double kIntegralityTolerance = 1e-6;

enum class LocalSquareClass { Square, UnramifiedNonSquare, Ramified };

/// Square class of a unit of the completion at a prime above 2, decided by
/// exhaustion over o_F / 2^5: a square iff x^2 = u mod 4 pi has a solution,
/// unramified iff x^2 = u mod 4 has one.
LocalSquareClass unit_square_class_2adic(FieldTag F, const PrimeIdeal& P, const RingElement& u);

/// F_P(sqrt delta) / F_P ramified.
bool is_ramified_at(FieldTag F, const PrimeIdeal& P, const RingElement& delta);

/// Validates a level and returns its totally positive generator. Throws
/// InvalidArgument for zero, units and non-square-free elements.
RingElement normalize_level(FieldTag F, const RingElement& N);

/// n in o_F / {+-1} with 4uN - (nuN)^2 totally positive and F(sqrt delta)
/// ramified at every prime dividing N; sorted, n = 0 first.
std::vector<RingElement> enumerate_n(FieldTag F, const RingElement& u, const RingElement& N);

BiasReport bias_general(FieldTag F, const std::vector<int>& kvec, const RingElement& N);
BiasReport bias_general(FieldTag F, const std::vector<int>& kvec, int64_t N);

int64_t bias_closed_Q(int k, int64_t N);
int64_t bias_closed_sqrt2(const std::vector<int>& kvec, int64_t N);
int64_t bias_closed_sqrt5(const std::vector<int>& kvec, int64_t N);
/// Dispatches on the field.
int64_t bias_closed(FieldTag F, const std::vector<int>& kvec, int64_t N);

struct DnSeriesResult {
  double value = 0.0;
  int64_t terms = 0;    // summands used
  int64_t skipped = 0;  // n with square (nN)^2 - 4N
};

/// sum_{1<=n<=T} n^-s L^(N)(1, (nN)^2 - 4N) A(n, N) over Q.
DnSeriesResult dn_series_truncated(int64_t N, double s, int64_t T);

}  // namespace rootbias
