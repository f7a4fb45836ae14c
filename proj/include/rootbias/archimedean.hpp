#pragma once

#include "rootbias/numeric.hpp"

namespace rootbias {

struct ArchFactorInput {
  int k = 1;
  double N_emb = 0.0;      // embedding of uN, > 0
  double t_emb = 0.0;      // embedding of nuN
  double delta_emb = 0.0;  // embedding of (nuN)^2 - 4uN, <= 0
};

/// sum_{j=0}^k (-1)^j C(2k,2j) Gamma(s+k+j-1/2) Gamma(k-j+1/2) / Gamma(s+2k).
cplx P_k(int k, cplx s);

/// (4N)^k / (2 pi) * Re((sqrt|delta| + i t)^-(2k-1)), evaluated in polar form.
double arch_limit_factor(const ArchFactorInput& in);

}  // namespace rootbias
