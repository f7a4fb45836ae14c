#include "rootbias/archimedean.hpp"

#include <cmath>
#include <numbers>

#include "rootbias/error.hpp"

namespace rootbias {

cplx P_k(int k, cplx s) {
  if (k < 1) throw InvalidArgument("P_k: k must be >= 1");
  // Poles of Gamma(s+k+j-1/2) for some j sit at s = 1/2-k-j-m.
  const cplx lg_den = numeric::log_gamma(s + 2.0 * k);
  numeric::CompensatedSum<cplx> sum;
  double log_binom = 0.0;  // log C(2k, 2j)
  for (int j = 0; j <= k; ++j) {
    if (j > 0) {
      log_binom += std::log(static_cast<double>(2 * k - 2 * j + 2) * (2 * k - 2 * j + 1)) -
                   std::log(static_cast<double>(2 * j) * (2 * j - 1));
    }
    const cplx lg = numeric::log_gamma(s + static_cast<double>(k + j) - 0.5) +
                    std::lgamma(static_cast<double>(k - j) + 0.5) - lg_den + log_binom;
    sum.add((j % 2 ? -1.0 : 1.0) * std::exp(lg));
  }
  return sum.value();
}

double arch_limit_factor(const ArchFactorInput& in) {
  if (in.k < 1) throw InvalidArgument("arch_limit_factor: k must be >= 1");
  if (!(in.N_emb > 0.0)) throw InvalidArgument("arch_limit_factor: N must be positive");
  if (in.delta_emb > 0.0) throw InvalidArgument("arch_limit_factor: needs delta <= 0");
  const double x = std::sqrt(-in.delta_emb);
  const double log_rho = 0.5 * std::log(x * x + in.t_emb * in.t_emb);
  const double theta = std::atan2(in.t_emb, x);
  const double two_k_minus_1 = 2.0 * in.k - 1.0;
  const double log_mag = in.k * std::log(4.0 * in.N_emb) - two_k_minus_1 * log_rho;
  return std::exp(log_mag) / (2.0 * std::numbers::pi) * std::cos(two_k_minus_1 * theta);
}

}  // namespace rootbias
