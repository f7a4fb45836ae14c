#pragma once

#include <cstdint>

#include "rootbias/numeric.hpp"

namespace rootbias {

// delta = D * l^2 with D fundamental.
struct FundamentalDecomposition {
  int64_t delta = 0;
  int64_t D = 0;
  int64_t l = 1;
};

struct ImagQuadData {
  int64_t D = 0;
  int64_t h = 0;
  int omega = 0;
};

struct RealQuadData {
  int64_t D = 0;
  int64_t h = 0;
  double reg = 0.0;  // log of the fundamental unit
};

/// True iff n = 0 or 1 mod 4 and n != 0.
bool is_discriminant(int64_t n);
bool is_fundamental(int64_t D);

FundamentalDecomposition fundamental_decompose(int64_t delta);

/// Kronecker symbol (a|n) for n >= 1.
int kronecker(int64_t a, int64_t n);

/// Number of reduced primitive forms of discriminant D < 0.
int64_t class_number_imag(int64_t D);
int omega_units(int64_t D);
ImagQuadData imag_quad_data(int64_t D);

/// L(1, chi_D) for a fundamental D != 1.
double dirichlet_L1(int64_t D);

/// Partial sum sum_{n <= T} chi_D(n)/n. If tail_bound is non-null it
/// receives the Abel-summation bound 2|D|/T on the omitted tail.
double dirichlet_L1_truncated(int64_t D, int64_t T, double* tail_bound = nullptr);

/// Real-quadratic L(1, chi_D) through the two internal routes; exposed so
/// both can be checked against the truncated sum.
double dirichlet_L1_logsine(int64_t D);
double dirichlet_L1_smoothed(int64_t D);

/// L(s, chi_D) for fundamental D (D = 1 gives zeta) and complex s != 1.
cplx dirichlet_L(int64_t D, cplx s);

/// log of the fundamental unit of the maximal order of discriminant D > 0,
/// from one period of the continued fraction of the standard generator.
double regulator(int64_t D);
RealQuadData real_quad_data(int64_t D);

}  // namespace rootbias
