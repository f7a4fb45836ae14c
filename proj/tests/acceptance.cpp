// Acceptance gate: one PASS/FAIL line per criterion, tolerances fixed here.

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "rootbias/archimedean.hpp"
#include "rootbias/bias.hpp"
#include "rootbias/localweights.hpp"
#include "rootbias/supercuspidal.hpp"
#include "rootbias/zagier.hpp"

using namespace rootbias;

namespace {

constexpr double kZagierRelTol = 1e-3;
constexpr int64_t kZagierTruncation = 100000;
constexpr double kCrossIdentityRelTol = 1e-12;
constexpr double kPkZeroTol = 1e-12;
constexpr double kPkQuadratureTol = 1e-6;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    if (notes.size() < 8) notes.push_back(why);
  }
};

std::string weights_str(const std::vector<int>& k) {
  std::string s;
  for (size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s;
}

void expect_B(Outcome& o, FieldTag F, const std::vector<int>& k, int64_t N, int64_t expected) {
  try {
    const BiasReport r = bias_general(F, k, N);
    if (std::abs(r.scaled_total - double(r.B)) >= kIntegralityTolerance)
      o.fail(to_string(F) + " N=" + std::to_string(N) + ": total not integral");
    if (r.B != expected)
      o.fail(to_string(F) + " k=(" + weights_str(k) + ") N=" + std::to_string(N) + ": general " +
             std::to_string(r.B) + ", expected " + std::to_string(expected));
  } catch (const std::exception& e) {
    o.fail(to_string(F) + " N=" + std::to_string(N) + ": " + e.what());
  }
}

void general_vs_closed(Outcome& o, FieldTag F, const std::vector<int>& k, int64_t N) {
  int64_t closed = 0;
  try {
    closed = bias_closed(F, k, N);
  } catch (const std::exception& e) {
    o.fail(to_string(F) + " N=" + std::to_string(N) + ": closed form: " + e.what());
    return;
  }
  expect_B(o, F, k, N, closed);
}

// Expected case tables for the small levels.
int64_t q_level2(int k) { return (k % 4 == 2 || k % 4 == 3) ? 1 : 0; }
int64_t q_level3(int k) { return k % 3 == 2 ? 2 : 1; }

int64_t quadratic_level3(int k1, int k2, int64_t base) {
  const bool both2 = k1 % 3 == 2 && k2 % 3 == 2;
  const bool both01 = k1 % 3 != 2 && k2 % 3 != 2;
  return both2 ? base : both01 ? base + 1 : base + 2;
}

int64_t sqrt5_level2(int k1, int k2) {
  const bool lo1 = k1 % 4 <= 1, lo2 = k2 % 4 <= 1;
  return lo1 == lo2 ? 1 : 2;
}

Outcome criterion1() {
  Outcome o;
  for (int k = 1; k <= 8; ++k) expect_B(o, FieldTag::Q, {k}, 2, q_level2(k));
  for (int k = 1; k <= 9; ++k) expect_B(o, FieldTag::Q, {k}, 3, q_level3(k));
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (int64_t N = 5; N <= 50; ++N) {
    if (!numeric::is_squarefree(N)) continue;
    for (int k : {1, 3}) general_vs_closed(o, FieldTag::Q, {k}, N);
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int k1 = 1; k1 <= 3; ++k1)
    for (int k2 = 1; k2 <= 3; ++k2) expect_B(o, FieldTag::Qsqrt2, {k1, k2}, 3, quadratic_level3(k1, k2, 12));
  for (int64_t N : {3, 5, 7, 11, 13}) general_vs_closed(o, FieldTag::Qsqrt2, {1, 1}, N);
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int k1 = 1; k1 <= 4; ++k1)
    for (int k2 = 1; k2 <= 4; ++k2) expect_B(o, FieldTag::Qsqrt5, {k1, k2}, 2, sqrt5_level2(k1, k2));
  for (int k1 = 1; k1 <= 3; ++k1)
    for (int k2 = 1; k2 <= 3; ++k2) expect_B(o, FieldTag::Qsqrt5, {k1, k2}, 3, quadratic_level3(k1, k2, 4));
  for (int64_t N : {2, 3, 7, 11}) general_vs_closed(o, FieldTag::Qsqrt5, {1, 1}, N);
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int64_t delta : {5, 8, 12, 13, -3, -4, -8, -20, 45, -48})
    for (double s : {1.5, 2.0, 3.0}) {
      const cplx factored = zagier_L_factored(s, delta);
      const double truncated = zagier_L_truncated(s, delta, kZagierTruncation).convolved;
      const double err = std::abs(truncated - factored) / std::abs(factored);
      if (!(err < kZagierRelTol)) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "delta=%lld s=%g: relative error %.3g", static_cast<long long>(delta), s, err);
        o.fail(buf);
      }
    }
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(-5.0, 5.0);
  std::uniform_int_distribution<int> qi(0, 6), ai(0, 4), ei(-1, 1);
  const double qs[] = {2.0, 3.0, 4.0, 5.0, 7.0, 9.0, 25.0};
  for (int i = 0; i < 10; ++i) {
    const double q = qs[qi(rng)];
    const int a = ai(rng), eta = ei(rng);
    const cplx s(re(rng), im(rng));
    const cplx u = unram_local_factor(q, a, eta, s);
    const cplx z = euler_correction(q, a, eta, s);
    const double err = std::abs(u - z) / std::abs(z);
    if (!(err <= kCrossIdentityRelTol)) o.fail("tuple " + std::to_string(i) + ": relative error " + std::to_string(err));
  }
  return o;
}

struct PkIntegrand {
  int k;
  double s;
  bool imag;
};

double pk_integrand(double x, void* params) {
  const auto* p = static_cast<const PkIntegrand*>(params);
  const cplx v = std::pow(cplx(x, -1.0), -2.0 * p->k) * std::pow(x * x + 1.0, -p->s);
  return p->imag ? v.imag() : v.real();
}

Outcome criterion7() {
  Outcome o;
  for (int k = 1; k <= 10; ++k)
    if (!(std::abs(P_k(k, 0.0)) < kPkZeroTol)) o.fail("P_" + std::to_string(k) + "(0) != 0");
  gsl_set_error_handler_off();
  gsl_integration_workspace* ws = gsl_integration_workspace_alloc(2000);
  for (int k : {1, 2, 3})
    for (double s : {1.5, 2.0}) {
      double parts[2];
      for (int j = 0; j < 2; ++j) {
        PkIntegrand p{k, s, j == 1};
        gsl_function f{&pk_integrand, &p};
        double err = 0.0;
        gsl_integration_qagi(&f, 1e-13, 1e-12, 2000, ws, &parts[j], &err);
      }
      if (!(std::abs(P_k(k, s) - cplx(parts[0], parts[1])) < kPkQuadratureTol))
        o.fail("P_" + std::to_string(k) + "(" + std::to_string(s) + ") disagrees with quadrature");
    }
  gsl_integration_workspace_free(ws);
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (int64_t q : {3, 5, 7}) {
    for (int64_t x1 = 1; x1 < q; ++x1)
      for (int64_t r1 = 0; r1 < q; ++r1)
        for (int64_t r2 = 0; r2 < q; ++r2) {
          const ProjMatrix g = support_point(q, x1, r1, r2);
          if (!(f_b_tilde_bruteforce(g, q) == Cyclotomic::from_integer(q, 2, f_b_tilde_closed(g, q))))
            o.fail("q=" + std::to_string(q) + " (x1,r1,r2)=(" + std::to_string(x1) + "," + std::to_string(r1) + "," +
                   std::to_string(r2) + "): Iwahori average mismatch");
        }
    for (int64_t t = 1; t < q; ++t)
      for (int zeta : {1, -1}) {
        try {
          if (hecke_root_number({q, t, zeta}) != zeta) o.fail("q=" + std::to_string(q) + ": root number != zeta");
        } catch (const std::exception& e) {
          o.fail(e.what());
        }
      }
    for (int64_t c = 1; c < q; ++c)
      if (!(char_sum_check(q, c) == Cyclotomic::from_integer(q, 2, -1)))
        o.fail("q=" + std::to_string(q) + " c=" + std::to_string(c) + ": character sum != -1");
  }
  return o;
}

std::string json_battery() {
  const std::vector<std::vector<std::string>> commands = {
      {"bias", "--field", "Q", "--weights", "2", "--level", "2", "--json"},
      {"bias", "--field", "Qsqrt2", "--weights", "1,1", "--level", "3", "--json"},
      {"bias", "--field", "Qsqrt5", "--weights", "2,2", "--level", "3", "--json"},
      {"table", "--field", "Q", "--weights", "1..8", "--levels", "2..50", "--format", "json", "--threads", "4"},
      {"table", "--field", "Qsqrt2", "--weights", "(1,1)..(3,3)", "--levels", "3..13", "--format", "json"},
      {"table", "--field", "Qsqrt5", "--weights", "(1,1)..(4,4)", "--levels", "2,3,7", "--format", "json"},
      {"zagier", "--delta", "5", "--s", "2", "--truncate", "100000", "--compare-factored", "--json"},
      {"zagier", "--delta", "-44", "--s", "1", "--field", "Qsqrt2", "--strip", "11", "--json"},
      {"classnumber", "--disc", "-20", "--json"},
      {"classnumber", "--disc", "229", "--json"},
      {"weights", "--q", "4", "--r", "1", "--eta", "1", "--s", "0.5", "--json"},
      {"verify-supercuspidal", "--q", "3,5,7", "--json"},
      {"dn-series", "--level", "2", "--s", "3", "--terms", "1000", "--json"},
  };
  std::string all;
  for (const auto& c : commands) {
    std::ostringstream out, err;
    rootbias::cli::run_cli(c, out, err);
    all += out.str();
    all += err.str();
  }
  return all;
}

Outcome criterion9() {
  Outcome o;
  const std::string a = json_battery();
  const std::string b = json_battery();
  if (a.empty()) o.fail("empty output");
  if (a != b) o.fail("JSON outputs differ between runs");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "bias over Q at levels 8 and 27 matches the case tables", 1.0, criterion1},
      {2, "bias over Q equals the closed form for square-free 5 <= N <= 50, k in {1,3}", 10.0, criterion2},
      {3, "bias over Q(sqrt2): level 27 table and closed form for N in {3,5,7,11,13}", 10.0, criterion3},
      {4, "bias over Q(sqrt5): level 8 and 27 tables and closed form for N in {2,3,7,11}", 10.0, criterion4},
      {5, "Zagier L: factored vs truncated (Q = 1e5) within 1e-3 relative", 30.0, criterion5},
      {6, "unramified local factor equals the Zagier Euler correction to 1e-12", 1.0, criterion6},
      {7, "P_k(0) = 0 and P_k agrees with quadrature", 1.0, criterion7},
      {8, "supercuspidal: Iwahori average, root number, character sums", 30.0, criterion8},
      {9, "two JSON battery runs are byte-identical", 60.0, criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) o.fail("runtime " + std::to_string(secs) + " s over budget");
    if (!o.pass) ++failures;
    std::printf("criterion %d: %s  %s (%.3f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.what, secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
