#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <thread>

#include "rootbias/archimedean.hpp"
#include "rootbias/basefield.hpp"
#include "rootbias/bias.hpp"
#include "rootbias/error.hpp"
#include "rootbias/localweights.hpp"
#include "rootbias/numeric.hpp"
#include "rootbias/quadarith.hpp"
#include "rootbias/supercuspidal.hpp"
#include "rootbias/version.hpp"
#include "rootbias/zagier.hpp"

namespace rootbias::cli {

using nlohmann::ordered_json;

namespace {

constexpr int64_t kMaxDisc = 1000000;
constexpr size_t kMaxTableLevels = 200;

// Rounds to 15 significant digits so that the serialized form is stable.
double sig15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

ordered_json num(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  return sig15(x);
}

ordered_json num(cplx z) { return ordered_json{{"re", num(z.real())}, {"im", num(z.imag())}}; }

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string fmt(cplx z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

ordered_json provenance() {
  return {{"library", "rootbias"},
          {"version", kVersion},
          {"precision",
           {{"float", "binary64"},
            {"significant_digits", 15},
            {"integrality_tolerance", kIntegralityTolerance}}}};
}

ordered_json record(const std::string& command, ordered_json inputs, ordered_json result) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)},
          {"provenance", provenance()}};
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int64_t parse_int(const std::string& s) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::string strip_parens(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return s;
}

std::vector<int> parse_weight_vector(const std::string& s, int degree) {
  std::vector<int> k;
  for (const auto& part : split(strip_parens(s), ',')) k.push_back(static_cast<int>(parse_int(part)));
  if (static_cast<int>(k.size()) != degree)
    throw UsageError("weight vector '" + s + "' must have " + std::to_string(degree) + " entries");
  for (int x : k)
    if (x < 1) throw UsageError("weights must be >= 1");
  return k;
}

// "1..8", "1,3,5" or "4" for Q; "(1,1)..(3,3)", "(1,2)" or "1,2" otherwise.
std::vector<std::vector<int>> parse_weight_spec(const std::string& spec, int degree) {
  std::vector<std::vector<int>> out;
  const auto dots = spec.find("..");
  if (dots != std::string::npos) {
    auto lo = parse_weight_vector(spec.substr(0, dots), degree);
    auto hi = parse_weight_vector(spec.substr(dots + 2), degree);
    if (degree == 1) {
      for (int k = lo[0]; k <= hi[0]; ++k) out.push_back({k});
    } else {
      for (int a = lo[0]; a <= hi[0]; ++a)
        for (int b = lo[1]; b <= hi[1]; ++b) out.push_back({a, b});
    }
    return out;
  }
  if (degree == 1) {
    for (const auto& part : split(spec, ',')) out.push_back(parse_weight_vector(part, 1));
  } else {
    out.push_back(parse_weight_vector(spec, degree));
  }
  return out;
}

std::vector<int64_t> parse_levels(const std::string& spec) {
  std::vector<int64_t> out;
  const auto dots = spec.find("..");
  if (dots != std::string::npos) {
    const int64_t lo = parse_int(spec.substr(0, dots));
    const int64_t hi = parse_int(spec.substr(dots + 2));
    if (hi >= lo && static_cast<uint64_t>(hi - lo) >= kMaxTableLevels)
      throw UsageError("level range has more than " + std::to_string(kMaxTableLevels) + " levels");
    for (int64_t n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  for (const auto& part : split(spec, ',')) out.push_back(parse_int(part));
  if (out.size() > kMaxTableLevels)
    throw UsageError("more than " + std::to_string(kMaxTableLevels) + " levels");
  return out;
}

std::string join_weights(const std::vector<int>& k, const char* sep) {
  std::string s;
  for (size_t i = 0; i < k.size(); ++i) s += (i ? sep : "") + std::to_string(k[i]);
  return s;
}

ordered_json weights_json(const std::vector<int>& k) {
  ordered_json a = ordered_json::array();
  for (int x : k) a.push_back(x);
  return a;
}

// ---- bias -------------------------------------------------------------------

struct BiasOutcome {
  std::string status = "ok";  // ok, invalid, excluded, inconsistent
  std::string message;
  std::optional<BiasReport> report;
  std::optional<int64_t> closed;
  std::string verdict;  // MATCH, MISMATCH, NO_CLOSED_FORM, or empty
};

BiasOutcome evaluate_bias(FieldTag F, const std::vector<int>& kvec, const RingElement& N) {
  BiasOutcome o;
  try {
    o.report = bias_general(F, kvec, N);
  } catch (const InvalidArgument& e) {
    o.status = "invalid";
    o.message = e.what();
    return o;
  } catch (const UnsupportedExtension& e) {
    o.status = "excluded";
    o.message = e.what();
    return o;
  } catch (const Inconsistency& e) {
    o.status = "inconsistent";
    o.message = e.what();
    return o;
  }
  o.verdict = "NO_CLOSED_FORM";
  if (o.report->N.is_rational()) {
    try {
      o.closed = bias_closed(F, kvec, o.report->N.a);
      o.verdict = *o.closed == o.report->B ? "MATCH" : "MISMATCH";
    } catch (const InvalidArgument&) {
      // Outside the closed forms' range.
    }
  }
  return o;
}

int outcome_exit(const BiasOutcome& o) {
  if (o.status == "invalid") return kUsage;
  if (o.status == "excluded") return kExcluded;
  if (o.status == "inconsistent" || o.verdict == "MISMATCH") return kMismatch;
  return kOk;
}

ordered_json report_json(FieldTag F, const BiasOutcome& o) {
  ordered_json r;
  r["status"] = o.status;
  if (!o.message.empty()) r["message"] = o.message;
  if (!o.report) return r;
  const BiasReport& rep = *o.report;
  r["level"] = format_element(F, rep.N);
  r["B"] = rep.B;
  r["closed"] = o.closed ? ordered_json(*o.closed) : ordered_json(nullptr);
  r["verdict"] = o.verdict;
  r["raw_total"] = num(rep.raw_total);
  r["scaled_total"] = num(rep.scaled_total);
  ordered_json terms = ordered_json::array();
  for (const auto& t : rep.terms)
    terms.push_back({{"u", format_element(F, t.u)},
                     {"n", format_element(F, t.n)},
                     {"delta", format_element(F, t.delta)},
                     {"arch", num(t.arch)},
                     {"lvalue", num(t.lvalue)},
                     {"afactor", t.afactor},
                     {"contribution", num(t.contribution)}});
  r["terms"] = terms;
  return r;
}

void print_bias_text(std::ostream& out, FieldTag F, const std::vector<int>& kvec, const BiasOutcome& o) {
  out << "field: " << to_string(F) << "\nweights: " << join_weights(kvec, ",") << "\n";
  if (!o.report) {
    out << "status: " << o.status << "\n" << o.message << "\n";
    return;
  }
  const BiasReport& rep = *o.report;
  out << "level: " << format_element(F, rep.N) << "\nterms: " << rep.terms.size() << "\n";
  for (const auto& t : rep.terms)
    out << "  n=" << format_element(F, t.n) << " delta=" << format_element(F, t.delta) << " arch=" << fmt(t.arch)
        << " L=" << fmt(t.lvalue) << " A=" << t.afactor << " contribution=" << fmt(t.contribution) << "\n";
  out << "scaled total: " << fmt(rep.scaled_total) << "\nB = " << rep.B << "\n";
  if (o.closed) out << "closed = " << *o.closed << "\n";
  out << o.verdict << "\n";
}

// ---- verify-supercuspidal -------------------------------------------------------

struct CheckLine {
  std::string name;
  int64_t passed = 0;
  int64_t total = 0;
  bool ok() const { return passed == total; }
};

std::vector<CheckLine> supercuspidal_checks(int64_t q) {
  std::vector<CheckLine> lines;

  CheckLine avg{"iwahori_average_bruteforce_vs_closed"};
  CheckLine coeff{"f_b_closed_vs_matrix_coefficients"};
  for (int64_t x1 = 1; x1 < q; ++x1)
    for (int64_t r1 = 0; r1 < q; ++r1)
      for (int64_t r2 = 0; r2 < q; ++r2) {
        const ProjMatrix g = support_point(q, x1, r1, r2);
        ++avg.total;
        if (f_b_tilde_bruteforce(g, q) == Cyclotomic::from_integer(q, 2, f_b_tilde_closed(g, q))) ++avg.passed;
        ++coeff.total;
        if (f_b(g, q) == f_b_from_coefficients(g, q)) ++coeff.passed;
      }
  for (const ProjMatrix& g : {ProjMatrix::from_integers(q, 1, 0, 0, 1), ProjMatrix::from_integers(q, 1, 1, 0, q),
                              ProjMatrix::from_integers(q, 0, 1, 1, 0)}) {
    ++coeff.total;
    if (f_b(g, q) == f_b_from_coefficients(g, q)) ++coeff.passed;
  }
  lines.push_back(avg);
  lines.push_back(coeff);

  CheckLine hecke{"hecke_root_number_equals_zeta"};
  CheckLine whit{"whittaker_bruteforce_vs_closed"};
  for (int64_t t = 1; t < q; ++t)
    for (int zeta : {1, -1}) {
      const SupercuspidalParams params{q, t, zeta};
      ++hecke.total;
      try {
        if (hecke_root_number(params) == zeta) ++hecke.passed;
      } catch (const Inconsistency&) {
      }
      for (int v = -2; v <= 2; ++v)
        for (int64_t u = 1; u < q; ++u)
          for (auto side : {WhittakerSide::Plain, WhittakerSide::Twisted}) {
            const TruncatedPAdic a = TruncatedPAdic::from_parts(q, v, u);
            ++whit.total;
            if (whittaker_bruteforce(a, side, params) == whittaker_closed(a, side, params)) ++whit.passed;
          }
    }
  lines.push_back(hecke);
  lines.push_back(whit);

  CheckLine chars{"character_sums_equal_minus_one"};
  for (int64_t c = 1; c < q; ++c) {
    ++chars.total;
    if (char_sum_check(q, c) == Cyclotomic::from_integer(q, 2, -1)) ++chars.passed;
  }
  lines.push_back(chars);
  return lines;
}

// ---- command runners ----------------------------------------------------------------

struct Options {
  bool json = false;
  int threads = 1;

  std::string field = "Q";
  std::string weights;
  std::string level;
  std::string levels;
  std::string format = "csv";

  int64_t delta = 0;
  double s = 1.0;
  int64_t truncate = 0;
  bool compare = false;
  std::string strip;

  int64_t disc = 0;

  double q = 2.0;
  int r = 0;
  int eta = -1;
  int a = -1;

  std::string qlist = "3,5,7";

  int64_t dn_level = 2;
  int64_t terms = 1000;
};

int cmd_bias(const Options& opt, std::ostream& out) {
  const FieldTag F = parse_field_tag(opt.field);
  const auto kvec = parse_weight_vector(opt.weights, descriptor(F).degree);
  RingElement N;
  try {
    N = parse_element(F, opt.level);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  BiasOutcome o = evaluate_bias(F, kvec, N);
  if (opt.json) {
    ordered_json inputs{{"field", to_string(F)}, {"weights", weights_json(kvec)}, {"level", opt.level}};
    out << record("bias", inputs, report_json(F, o)).dump(2) << "\n";
  } else {
    print_bias_text(out, F, kvec, o);
  }
  return outcome_exit(o);
}

int cmd_table(const Options& opt, std::ostream& out) {
  const FieldTag F = parse_field_tag(opt.field);
  if (opt.format != "csv" && opt.format != "json") throw UsageError("--format must be csv or json");
  const auto weights = parse_weight_spec(opt.weights, descriptor(F).degree);
  const auto levels = parse_levels(opt.levels);

  struct Row {
    int64_t level;
    std::vector<int> kvec;
    BiasOutcome outcome;
  };
  std::vector<Row> rows;
  for (int64_t N : levels)
    for (const auto& k : weights) rows.push_back({N, k, {}});

  const int nthreads = std::max(1, std::min<int>(opt.threads, static_cast<int>(rows.size())));
  auto work = [&](int id) {
    for (size_t i = static_cast<size_t>(id); i < rows.size(); i += static_cast<size_t>(nthreads))
      rows[i].outcome = evaluate_bias(F, rows[i].kvec, RingElement{rows[i].level, 0});
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  int code = kOk;
  for (const auto& row : rows)
    if (row.outcome.status == "inconsistent" || row.outcome.verdict == "MISMATCH") code = kMismatch;

  if (opt.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json r{{"level", row.level}, {"weights", weights_json(row.kvec)}, {"status", row.outcome.status}};
      if (row.outcome.report) {
        r["B"] = row.outcome.report->B;
        r["closed"] = row.outcome.closed ? ordered_json(*row.outcome.closed) : ordered_json(nullptr);
        r["verdict"] = row.outcome.verdict;
        r["terms"] = row.outcome.report->terms.size();
      }
      arr.push_back(r);
    }
    ordered_json inputs{{"field", to_string(F)}, {"weights", opt.weights}, {"levels", opt.levels}};
    out << record("table", inputs, {{"rows", arr}}).dump(2) << "\n";
  } else {
    out << "field,level,weights,B,closed,verdict,terms,status\n";
    for (const auto& row : rows) {
      const auto& o = row.outcome;
      out << to_string(F) << "," << row.level << "," << join_weights(row.kvec, ";") << ",";
      if (o.report) {
        out << o.report->B << "," << (o.closed ? std::to_string(*o.closed) : "") << "," << o.verdict << ","
            << o.report->terms.size();
      } else {
        out << ",,,";
      }
      out << "," << o.status << "\n";
    }
  }
  return code;
}

int cmd_zagier(const Options& opt, std::ostream& out) {
  const FieldTag F = parse_field_tag(opt.field);
  ordered_json inputs{{"field", to_string(F)}, {"delta", opt.delta}, {"s", num(opt.s)}};
  ordered_json result;
  int code = kOk;
  std::ostringstream text;

  if (F == FieldTag::Q && opt.strip.empty()) {
    if (!is_discriminant(opt.delta)) throw UsageError("delta must be a nonzero discriminant");
    const cplx factored = zagier_L_factored(opt.s, opt.delta);
    result["factored"] = num(factored);
    text << "factored: " << fmt(factored) << "\n";
    if (opt.truncate > 0) {
      if (opt.truncate > 10000000) throw UsageError("--truncate is limited to 10^7");
      inputs["truncate"] = opt.truncate;
      const TruncatedZagier tz = zagier_L_truncated(opt.s, opt.delta, opt.truncate);
      result["truncated"] = num(tz.value);
      result["truncated_convolved"] = num(tz.convolved);
      result["tail_bound"] = num(tz.tail_bound);
      text << "truncated: " << fmt(tz.value) << "\ntruncated (convolved): " << fmt(tz.convolved)
           << "\ntail bound: " << fmt(tz.tail_bound) << "\n";
      if (opt.compare) {
        const double ref = std::abs(factored);
        const double err_plain = std::abs(tz.value - factored) / ref;
        const double err_conv = std::abs(tz.convolved - factored) / ref;
        const bool ok = err_conv < 1e-3;
        result["relative_error"] = num(err_conv);
        result["relative_error_plain"] = num(err_plain);
        result["verdict"] = ok ? "MATCH" : "MISMATCH";
        text << "relative error: " << fmt(err_conv) << "\nrelative error (plain): " << fmt(err_plain) << "\n"
             << (ok ? "MATCH" : "MISMATCH") << "\n";
        if (!ok) code = kMismatch;
      }
    }
  } else {
    std::optional<RingElement> strip;
    if (!opt.strip.empty()) {
      strip = parse_element(F, opt.strip);
      inputs["strip"] = opt.strip;
    }
    const GenZagierValue v = gen_zagier_L(opt.s, RingElement{opt.delta, 0}, F, strip);
    result["value"] = num(v.value);
    result["eta_part"] = num(v.eta_part);
    ordered_json local = ordered_json::array();
    text << "value: " << fmt(v.value) << "\neta part: " << fmt(v.eta_part) << "\n";
    for (const auto& l : v.local) {
      local.push_back({{"p", l.prime.p}, {"q", l.q}, {"eta", l.eta}, {"exponent", l.exponent},
                       {"stripped", l.stripped}});
      text << "  prime above " << l.prime.p << ": q=" << l.q << " eta=" << l.eta << " exponent=" << l.exponent
           << (l.stripped ? " (stripped)" : "") << "\n";
    }
    result["local"] = local;
  }
  if (opt.json)
    out << record("zagier", inputs, result).dump(2) << "\n";
  else
    out << text.str();
  return code;
}

int cmd_classnumber(const Options& opt, std::ostream& out) {
  const int64_t D = opt.disc;
  if (D > kMaxDisc || D < -kMaxDisc) throw UsageError("|D| is limited to 10^6");
  if (!is_fundamental(D)) throw UsageError(std::to_string(D) + " is not a fundamental discriminant other than 1");
  ordered_json result;
  std::ostringstream text;
  if (D < 0) {
    const ImagQuadData d = imag_quad_data(D);
    result = {{"h", d.h}, {"omega", d.omega}, {"L1", num(dirichlet_L1(D))}};
    text << d.h << "\n";
  } else {
    const RealQuadData d = real_quad_data(D);
    result = {{"h", d.h}, {"regulator", num(d.reg)}, {"L1", num(dirichlet_L1(D))}};
    text << d.h << "\nregulator: " << fmt(d.reg) << "\n";
  }
  if (opt.json)
    out << record("classnumber", {{"disc", D}}, result).dump(2) << "\n";
  else
    out << text.str();
  return kOk;
}

int cmd_weights(const Options& opt, std::ostream& out) {
  if (opt.q < 2) throw UsageError("--q must be >= 2");
  if (opt.r < 0) throw UsageError("--r must be >= 0");
  if (opt.eta < -1 || opt.eta > 1) throw UsageError("--eta must be -1, 0 or 1");
  const int a = opt.a >= 0 ? opt.a : opt.r;
  const LocalWeightQuery query{opt.q, opt.r, opt.eta, opt.s};
  const cplx wt = rs_weight(query);
  const cplx displayed = rs_weight_displayed(query);
  const cplx unram = unram_local_factor(opt.q, a, opt.eta, opt.s);
  if (opt.json) {
    ordered_json inputs{{"q", num(opt.q)}, {"r", opt.r}, {"eta", opt.eta}, {"s", num(opt.s)}, {"a", a}};
    ordered_json result{{"rs_weight", num(wt)}, {"rs_weight_displayed", num(displayed)},
                        {"local_L1", num(local_L1(opt.q, opt.eta))}, {"unram_local_factor", num(unram)}};
    out << record("weights", inputs, result).dump(2) << "\n";
  } else {
    out << "rs_weight: " << fmt(wt) << "\nrs_weight (times local L): " << fmt(displayed)
        << "\nunram_local_factor (a=" << a << "): " << fmt(unram) << "\n";
  }
  return kOk;
}

int cmd_verify_supercuspidal(const Options& opt, std::ostream& out) {
  std::vector<int64_t> qs;
  for (const auto& part : split(opt.qlist, ',')) {
    const int64_t q = parse_int(part);
    if (q < 3 || q > 13 || !numeric::is_prime(q)) throw UsageError("q must be an odd prime <= 13");
    qs.push_back(q);
  }
  bool all = true;
  ordered_json result = ordered_json::array();
  std::ostringstream text;
  for (int64_t q : qs) {
    for (const auto& line : supercuspidal_checks(q)) {
      all = all && line.ok();
      result.push_back({{"q", q}, {"check", line.name}, {"passed", line.passed}, {"total", line.total},
                        {"verdict", line.ok() ? "PASS" : "FAIL"}});
      text << "q=" << q << " " << line.name << " " << (line.ok() ? "PASS" : "FAIL") << " (" << line.passed << "/"
           << line.total << ")\n";
    }
  }
  if (opt.json)
    out << record("verify-supercuspidal", {{"q", opt.qlist}}, {{"checks", result}, {"all_pass", all}}).dump(2)
        << "\n";
  else
    out << text.str() << (all ? "ALL PASS" : "SOME CHECKS FAILED") << "\n";
  return all ? kOk : kMismatch;
}

int cmd_dn_series(const Options& opt, std::ostream& out) {
  if (opt.terms > 100000) throw UsageError("--terms is limited to 10^5");
  const DnSeriesResult r = dn_series_truncated(opt.dn_level, opt.s, opt.terms);
  if (opt.json) {
    ordered_json inputs{{"level", opt.dn_level}, {"s", num(opt.s)}, {"terms", opt.terms}};
    out << record("dn-series", inputs, {{"value", num(r.value)}, {"summands", r.terms}, {"skipped", r.skipped}})
               .dump(2)
        << "\n";
  } else {
    out << "value: " << fmt(r.value) << "\nsummands: " << r.terms << "\nskipped (square delta): " << r.skipped
        << "\n";
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bias of root numbers for newforms of cubic level, with local verification tools", "rootbias"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Options opt;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Emit a JSON record"); };

  auto* bias = app.add_subcommand("bias", "Bias B(k, N^3) from the general formula, checked against the closed form");
  bias->add_option("--field", opt.field, "Q, Qsqrt2 or Qsqrt5")->required();
  bias->add_option("--weights", opt.weights, "Comma-separated weights, one per real place")->required();
  bias->add_option("--level", opt.level, "Level generator, e.g. 3 or 3+sqrt2")->required();
  add_json(bias);

  auto* table = app.add_subcommand("table", "Bias table over weight classes and levels");
  table->add_option("--field", opt.field, "Q, Qsqrt2 or Qsqrt5")->required();
  table->add_option("--weights", opt.weights, "e.g. 1..8, 1,3,5 or (1,1)..(3,3)")->required();
  table->add_option("--levels", opt.levels, "e.g. 2..50 or 5,7,11 (at most 200 levels)")->required();
  table->add_option("--format", opt.format, "csv or json");
  table->add_option("--threads", opt.threads, "Worker threads; output order is fixed")->check(CLI::Range(1, 64));

  auto* zagier = app.add_subcommand("zagier", "Zagier L-function values and the truncated-series comparison");
  zagier->add_option("--delta", opt.delta, "Discriminant (rational integer)")->required();
  zagier->add_option("--s", opt.s, "Evaluation point")->required();
  zagier->add_option("--truncate", opt.truncate, "Truncation bound Q for the Dirichlet series");
  zagier->add_flag("--compare-factored", opt.compare, "Report the relative error against the factored form");
  zagier->add_option("--field", opt.field, "Base field for the generalized L-function");
  zagier->add_option("--strip", opt.strip, "Omit the Euler factors at primes dividing this level");
  add_json(zagier);

  auto* classnumber = app.add_subcommand("classnumber", "Class number of a quadratic field");
  classnumber->add_option("--disc", opt.disc, "Fundamental discriminant, |D| <= 10^6")->required();
  add_json(classnumber);

  auto* weights = app.add_subcommand("weights", "Local Rankin-Selberg weights and the unramified local factor");
  weights->add_option("--q", opt.q, "Residue norm")->required();
  weights->add_option("--r", opt.r, "Lattice depth")->required();
  weights->add_option("--eta", opt.eta, "-1 inert, 0 ramified, 1 split")->required();
  weights->add_option("--s", opt.s, "Evaluation point")->required();
  weights->add_option("--a", opt.a, "Conductor exponent for the unramified factor (default: r)");
  add_json(weights);

  auto* verify = app.add_subcommand("verify-supercuspidal", "Finite checks of the simple supercuspidal identities");
  verify->add_option("--q", opt.qlist, "Comma-separated odd primes <= 13");
  add_json(verify);

  auto* dn = app.add_subcommand("dn-series", "Truncated D_N(s) series over Q");
  dn->add_option("--level", opt.dn_level, "Square-free N >= 2")->required();
  dn->add_option("--s", opt.s, "Real s > 1")->required();
  dn->add_option("--terms", opt.terms, "Number of terms T");
  add_json(dn);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*bias) return cmd_bias(opt, out);
    if (*table) return cmd_table(opt, out);
    if (*zagier) return cmd_zagier(opt, out);
    if (*classnumber) return cmd_classnumber(opt, out);
    if (*weights) return cmd_weights(opt, out);
    if (*verify) return cmd_verify_supercuspidal(opt, out);
    if (*dn) return cmd_dn_series(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedExtension& e) {
    err << "excluded: " << e.what() << "\n";
    return kExcluded;
  } catch (const Inconsistency& e) {
    err << "inconsistency: " << e.what() << "\n";
    return kMismatch;
  } catch (const PrecisionLoss& e) {
    err << "precision loss: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

}  // namespace rootbias::cli
