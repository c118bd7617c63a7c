#pragma once

// Command-line front end. run() is separate from main() so tests can drive
// the CLI in-process and capture its streams.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetalab/zetalab.hpp"

namespace zetalab::cli {

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::uint64_t sieve_limit = kDefaultSieveLimit;
  double tol = 1e-10;
  std::optional<std::string> out_path;
  Format format = Format::Text;
  std::uint64_t seed = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kSieveLimitEnv = "ZETALAB_SIEVE_LIMIT";

/// Parse "a", "a+bi", "a-bi", "bi", "i" (decimal or exponent notation).
inline complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw usage_error("empty complex number");
  const auto parse_part = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw usage_error("cannot parse complex number '" + text + "'");
    }
    if (used != part.size()) throw usage_error("cannot parse complex number '" + text + "'");
    return v;
  };
  if (s.back() != 'i') return {parse_part(s), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading sign or part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_part(body)};
  return {parse_part(body.substr(0, split)), parse_part(body.substr(split))};
}

namespace detail {

inline std::string fmt(double x) { return format_double(x); }

inline std::string fmt(complex z) {
  return format_double(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
}

// Uniform double in [0, 1) from a 64-bit engine, fixed across standard libraries.
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Five points in 0.6 <= sigma < 2, -10 <= t < 10 for the split audit.
inline std::vector<EvalPoint> seeded_split_points(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<EvalPoint> out;
  for (int i = 0; i < 5; ++i) {
    const double sigma = 0.6 + 1.4 * unit_draw(rng);
    const double t = -10.0 + 20.0 * unit_draw(rng);
    out.emplace_back(sigma, t);
  }
  return out;
}

inline std::string with_suffix(const std::string& path, const std::string& suffix) {
  std::filesystem::path p(path);
  const std::string stem = p.stem().string();
  const std::string ext = p.extension().string();
  return (p.parent_path() / (stem + "." + suffix + ext)).string();
}

// Output goes to --out when given, otherwise to the provided stream.
class Sink {
 public:
  Sink(const RunConfig& cfg, std::ostream& fallback) {
    if (cfg.out_path) {
      file_.open(*cfg.out_path, std::ios::binary);
      if (!file_) throw usage_error("cannot open output file " + *cfg.out_path);
      os_ = &file_;
    } else {
      os_ = &fallback;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

inline FactorSieve sieve_for(const RunConfig& cfg, std::uint64_t needed) {
  if (needed > cfg.sieve_limit)
    throw bounds_error("request needs n up to " + std::to_string(needed) + " but --sieve-limit is " +
                       std::to_string(cfg.sieve_limit));
  return FactorSieve(std::max<std::uint64_t>(2, needed));
}

inline ordered_json config_json(const RunConfig& cfg) {
  ordered_json j;
  j["sieve_limit"] = cfg.sieve_limit;
  j["tol"] = cfg.tol;
  j["seed"] = cfg.seed;
  return j;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subcommands

inline int cmd_sieve(const RunConfig& cfg, const std::vector<std::uint64_t>& show, std::ostream& out) {
  const FactorSieve sieve(cfg.sieve_limit);
  detail::Sink sink(cfg, out);
  std::ostream& os = sink.stream();
  if (cfg.format == Format::Json) {
    ordered_json j;
    j["limit"] = sieve.limit();
    j["prime_count"] = sieve.primes().size();
    j["largest_prime"] = sieve.primes().back();
    ordered_json rows = ordered_json::array();
    for (std::uint64_t n : show) {
      ordered_json r;
      r["n"] = n;
      r["spf"] = n >= 2 ? sieve.spf(n) : 1;
      r["omega"] = big_omega(sieve, n);
      r["liouville"] = liouville(sieve, n);
      r["divisors"] = divisors(sieve, n);
      rows.push_back(r);
    }
    j["numbers"] = rows;
    os << j.dump(2) << '\n';
  } else if (cfg.format == Format::Csv) {
    write_csv_row(os, {"n", "spf", "omega", "liouville", "divisor_count"});
    for (std::uint64_t n : show)
      write_csv_row(os, {std::to_string(n), std::to_string(n >= 2 ? sieve.spf(n) : 1),
                         std::to_string(big_omega(sieve, n)), std::to_string(liouville(sieve, n)),
                         std::to_string(divisors(sieve, n).size())});
  } else {
    os << "limit " << sieve.limit() << ", primes " << sieve.primes().size() << ", largest prime "
       << sieve.primes().back() << '\n';
    for (std::uint64_t n : show) {
      os << n << ": spf " << (n >= 2 ? sieve.spf(n) : 1) << ", Omega " << big_omega(sieve, n) << ", lambda "
         << liouville(sieve, n) << ", divisors";
      for (std::uint64_t d : divisors(sieve, n)) os << ' ' << d;
      os << '\n';
    }
  }
  return kExitOk;
}

/// "n" or "lo..hi".
inline std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto parse_n = [&](const std::string& part) -> std::uint64_t {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw usage_error("bad range '" + text + "'");
    return std::stoull(part);
  };
  const auto dots = text.find("..");
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_n(text);
  } else {
    lo = parse_n(text.substr(0, dots));
    hi = parse_n(text.substr(dots + 2));
  }
  if (lo < 1 || hi < lo) throw usage_error("range must satisfy 1 <= lo <= hi");
  return {lo, hi};
}

inline int cmd_beta(const RunConfig& cfg, const std::string& range, std::ostream& out) {
  const auto [lo, hi] = parse_range(range);
  const FactorSieve sieve = detail::sieve_for(cfg, hi);
  detail::Sink sink(cfg, out);
  std::ostream& os = sink.stream();
  bool agree = true;
  ordered_json rows = ordered_json::array();
  if (cfg.format == Format::Csv) write_csv_row(os, {"n", "beta_brute", "beta_closed", "class"});
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const int brute = beta_bruteforce(sieve, n);
    const int closed = beta_closed(n);
    const std::string cls = classify(n).to_string();
    agree = agree && brute == closed;
    switch (cfg.format) {
      case Format::Csv:
        write_csv_row(os, {std::to_string(n), std::to_string(brute), std::to_string(closed), cls});
        break;
      case Format::Json: {
        ordered_json r;
        r["n"] = n;
        r["beta_brute"] = brute;
        r["beta_closed"] = closed;
        r["class"] = cls;
        rows.push_back(r);
        break;
      }
      case Format::Text:
        os << n << ", " << brute << ", " << closed << ", " << cls << '\n';
        break;
    }
  }
  if (cfg.format == Format::Json) {
    ordered_json j;
    j["rows"] = rows;
    j["all_agree"] = agree;
    os << j.dump(2) << '\n';
  }
  return agree ? kExitOk : kExitFail;
}

inline void print_series_value(const RunConfig& cfg, std::ostream& os, const std::string& what, complex s,
                               const SeriesValue& v) {
  switch (cfg.format) {
    case Format::Json: {
      ordered_json j;
      j["function"] = what;
      j["s"] = to_json(Scalar(s));
      j["value"] = to_json(Scalar(v.value));
      j["abs_err_est"] = zetalab::detail::number_to_json(v.abs_err_est);
      j["bounded"] = v.bounded;
      j["terms_used"] = v.terms_used;
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      write_csv_row(os, {"function", "s_re", "s_im", "value_re", "value_im", "abs_err_est", "terms_used"});
      write_csv_row(os, {what, detail::fmt(s.real()), detail::fmt(s.imag()), detail::fmt(v.value.real()),
                         detail::fmt(v.value.imag()), detail::fmt(v.abs_err_est), std::to_string(v.terms_used)});
      break;
    case Format::Text:
      os << what << "(" << detail::fmt(s) << ") = " << detail::fmt(v.value) << '\n'
         << "  abs_err_est = " << (v.bounded ? detail::fmt(v.abs_err_est) : std::string("unbounded")) << '\n'
         << "  terms_used = " << v.terms_used << '\n';
      break;
  }
}

inline int cmd_eta(const RunConfig& cfg, const std::string& s_text, std::optional<std::uint64_t> partial,
                   std::ostream& out) {
  const complex s = parse_complex(s_text);
  const SeriesValue v = partial ? eta_partial(EvalPoint(s), *partial) : eta(EvalPoint(s), cfg.tol);
  detail::Sink sink(cfg, out);
  print_series_value(cfg, sink.stream(), partial ? "eta_partial" : "eta", s, v);
  return kExitOk;
}

inline int cmd_zeta(const RunConfig& cfg, const std::string& s_text, const std::string& method, std::ostream& out) {
  const complex s = parse_complex(s_text);
  SeriesValue v;
  if (method == "eta") {
    v = zeta_eta(EvalPoint(s), cfg.tol);
  } else if (method == "em") {
    v = zeta_em(EvalPoint(s), cfg.tol);
  } else if (method == "global") {
    v = zeta_global(EvalPoint(s), cfg.tol);
  } else {
    throw usage_error("unknown method '" + method + "' (eta, em, global)");
  }
  detail::Sink sink(cfg, out);
  print_series_value(cfg, sink.stream(), "zeta_" + method, s, v);
  return kExitOk;
}

inline int cmd_zeros(const RunConfig& cfg, std::int64_t k, std::ostream& out, std::ostream& err) {
  if (k < 1 || k > 20) throw usage_error("zeros needs 1 <= k <= 20");
  err << "scanning Hardy Z for " << k << " zeros\n";
  const auto zeros = first_zeros(static_cast<std::size_t>(k), std::max(cfg.tol, 1e-10));
  detail::Sink sink(cfg, out);
  std::ostream& os = sink.stream();
  switch (cfg.format) {
    case Format::Csv:
      write_csv_row(os, {"index", "t", "residual"});
      for (std::size_t i = 0; i < zeros.size(); ++i)
        write_csv_row(os, {std::to_string(i + 1), detail::fmt(zeros[i].t), detail::fmt(zeros[i].residual)});
      break;
    case Format::Json: {
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < zeros.size(); ++i) {
        ordered_json r;
        r["index"] = i + 1;
        r["t"] = zeros[i].t;
        r["residual"] = zeros[i].residual;
        r["iterations"] = zeros[i].iterations;
        r["bracket"] = {zeros[i].bracket.t_lo, zeros[i].bracket.t_hi};
        rows.push_back(r);
      }
      ordered_json j;
      j["zeros"] = rows;
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Text:
      for (std::size_t i = 0; i < zeros.size(); ++i) {
        char line[96];
        std::snprintf(line, sizeof line, "%2zu  t = %.10f  |eta| = %.3e\n", i + 1, zeros[i].t, zeros[i].residual);
        os << line;
      }
      break;
  }
  return kExitOk;
}

/// Per-claim parameters from the command line; unset fields take defaults.
struct AuditOptions {
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> J;
  std::size_t zero = 1;
  std::vector<std::string> s;
  std::optional<double> margin;
};

inline std::uint64_t audit_sieve_need(ClaimId id, const AuditOptions& o) {
  switch (id) {
    case ClaimId::Beta33: return o.n.value_or(1'000'000);
    case ClaimId::Mult33: return o.n.value_or(100'000);
    case ClaimId::SplitIdentity36: return o.J.value_or(100'000);
    case ClaimId::Identity36: return o.J.value_or(1'000'000);
    case ClaimId::Interchange35: return o.J.value_or(1'000'000);
    case ClaimId::TrivialZeros25:
    case ClaimId::ZeroFree24:
    case ClaimId::TailSup35: return 2;
  }
  return 2;
}

inline std::vector<std::uint64_t> decade_grid(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = lo; x <= hi; x *= 10) out.push_back(x);
  return out;
}

inline AuditReport run_claim(ClaimId id, const RunConfig& cfg, const AuditOptions& o, const FactorSieve& sieve,
                             std::ostream& err) {
  AuditConfig acfg;
  err << "running " << claim_cli_name(id) << "\n";
  const auto points = [&](std::vector<EvalPoint> fallback) {
    if (o.s.empty()) return fallback;
    std::vector<EvalPoint> out;
    for (const auto& text : o.s) out.emplace_back(parse_complex(text));
    return out;
  };
  const auto zero = [&]() {
    if (o.zero < 1 || o.zero > 20) throw usage_error("--zero must be in 1..20");
    return first_zeros(o.zero, 1e-10).back();
  };
  switch (id) {
    case ClaimId::Beta33: return check_beta_theorem(sieve, o.n.value_or(1'000'000));
    case ClaimId::Mult33: return check_multiplicative_identity(sieve, o.n.value_or(100'000));
    case ClaimId::SplitIdentity36:
      return check_split_identity(sieve, points(detail::seeded_split_points(cfg.seed)), o.J.value_or(100'000), acfg);
    case ClaimId::Identity36: {
      const std::uint64_t J = o.J.value_or(1'000'000);
      if (J < 10'000) throw usage_error("identity36 needs --J >= 10000");
      return check_identity(sieve, points({EvalPoint(0.75), EvalPoint(0.9, 5.0)}), decade_grid(1000, J), std::nullopt,
                            acfg);
    }
    case ClaimId::TrivialZeros25: return check_trivial_zeros(5, acfg);
    case ClaimId::ZeroFree24:
      return check_zero_free_region(default_zero_free_sigmas(), default_zero_free_ts(), o.margin, acfg);
    case ClaimId::TailSup35: return check_tail_sup(zero(), {100, 1000, 10000}, acfg);
    case ClaimId::Interchange35: {
      const std::uint64_t J = o.J.value_or(1'000'000);
      if (J < 100'000) throw usage_error("interchange35 needs --J >= 100000");
      return interchange_probe(sieve, zero(), o.zero, {100, 1000, 10000, 100000}, decade_grid(10000, J), acfg);
    }
  }
  throw usage_error("unknown claim");
}

inline int cmd_audit(const RunConfig& cfg, const std::string& claim, const AuditOptions& opts, std::ostream& out,
                     std::ostream& err) {
  std::vector<ClaimId> claims;
  if (claim == "all") {
    claims.assign(kAllClaims.begin(), kAllClaims.end());
  } else if (auto id = parse_claim(claim)) {
    claims.push_back(*id);
  } else {
    throw usage_error("unknown claim '" + claim + "'");
  }
  if (cfg.format == Format::Csv && claims.size() > 1 && !cfg.out_path)
    throw usage_error("csv output for several claims needs --out (one file per claim)");

  std::uint64_t need = 2;
  for (ClaimId id : claims) need = std::max(need, audit_sieve_need(id, opts));
  const FactorSieve sieve = detail::sieve_for(cfg, need);

  std::vector<AuditReport> reports;
  for (ClaimId id : claims) reports.push_back(run_claim(id, cfg, opts, sieve, err));

  bool any_fail = false;
  for (const auto& r : reports) any_fail = any_fail || r.verdict == Verdict::Fail;

  if (cfg.format == Format::Csv) {
    for (const auto& r : reports) {
      if (claims.size() > 1) {
        const std::string path = detail::with_suffix(*cfg.out_path, std::string(claim_cli_name(r.claim_id)));
        std::ofstream f(path, std::ios::binary);
        if (!f) throw usage_error("cannot open output file " + path);
        write_csv(f, r.series);
      } else {
        detail::Sink sink(cfg, out);
        write_csv(sink.stream(), r.series);
      }
    }
  } else {
    detail::Sink sink(cfg, out);
    std::ostream& os = sink.stream();
    if (cfg.format == Format::Json) {
      ordered_json j;
      j["config"] = detail::config_json(cfg);
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      j["reports"] = arr;
      j["any_fail"] = any_fail;
      os << j.dump(2) << '\n';
    } else {
      for (const auto& r : reports) write_text(os, r);
    }
  }
  return any_fail ? kExitFail : kExitOk;
}

// ---------------------------------------------------------------------------

inline constexpr const char* kAuditFooter = R"(Claims:
  beta33        divisor-sum beta(n) against its closed form, n <= --n (default 1e6)
  mult33        beta(p^a m) = beta(p^a) beta(m), p^a m <= --n (default 1e5)
  split36       sum beta(j) j^-s = squares + twice squares, J <= --J (default 1e5), 5 seeded s or --s
  identity36    sum beta(j) j^-s against (1 - 2^(1-s)) zeta(2s), s = 0.75, 0.9+5i or --s
  trivial25     zeta(-2k) = 0 for k = 1..5, zeta(-3) != 0
  zerofree24    min |zeta| off the critical line, sigma in {0.10..0.45, 0.55..0.90}, t in [2, 30]
  tails35       row-tail supremum at zero --zero, n1 in {1e2, 1e3, 1e4} (diagnostic)
  interchange35 row order against column order at zero --zero (diagnostic)
  all           every claim above

CSV columns (first column is the swept variable):
  beta33        n,mismatches
  mult33        a,triples,failures
  split36       J,s_index,rearrangement_gap,b_residual,c_residual
  identity36    J,s_index,gap,tail_bound
  trivial25     s,abs_zeta_global,abs_zeta_em
  zerofree24    sigma,min_abs_zeta,argmin_t
  tails35       n1,sup_tail,argmax_m,eta_bound_M,inv_sqrt_n1
  interchange35 x,order,abs_value,abs_minus_reference   (order 0 = rows up to M, 1 = columns up to J)

Exit codes: 0 all pass or diagnostic, 1 at least one fail, 2 usage or domain error.)";

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv(kSieveLimitEnv)) {
    try {
      cfg.sieve_limit = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: " << kSieveLimitEnv << " is not a number\n";
      return kExitUsage;
    }
  }

  CLI::App app{"zetalab: zeta evaluators, zero finder and divisor-sum audits"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::string out_path;
  app.add_option("--tol", cfg.tol, "evaluation tolerance, >= 1e-14")->capture_default_str();
  app.add_option("--sieve-limit", cfg.sieve_limit,
                 std::string("largest n the sieve may cover, <= 1e8 (env ") + kSieveLimitEnv + ")")
      ->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  app.add_option("--out", out_path, "write output to PATH instead of standard output");
  app.add_option("--seed", cfg.seed, "seed for randomized test points")->capture_default_str();

  auto* sieve_cmd = app.add_subcommand("sieve", "build the smallest-prime-factor sieve; show factor data for N...");
  std::vector<std::uint64_t> show;
  sieve_cmd->add_option("numbers", show, "numbers to describe");

  auto* beta_cmd = app.add_subcommand("beta", "beta(n) by definition and closed form for n or lo..hi");
  std::string range;
  beta_cmd->add_option("range", range, "n or lo..hi")->required();

  auto* eta_cmd = app.add_subcommand("eta", "accelerated eta(s), or a partial sum with --partial N");
  std::string eta_s;
  std::optional<std::uint64_t> partial;
  eta_cmd->add_option("s", eta_s, "complex point a+bi")->required();
  eta_cmd->add_option("--partial", partial, "sum only the first N terms");

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta(s)");
  std::string zeta_s;
  std::string method = "global";
  zeta_cmd->add_option("s", zeta_s, "complex point a+bi")->required();
  zeta_cmd->add_option("--method", method, "eta | em | global")
      ->check(CLI::IsMember({"eta", "em", "global"}))
      ->capture_default_str();

  auto* zeros_cmd = app.add_subcommand("zeros", "first k zeros on the critical line (k <= 20)");
  std::int64_t k = 0;
  zeros_cmd->add_option("k", k, "number of zeros")->required();

  auto* audit_cmd = app.add_subcommand("audit", "run one claim audit or all of them");
  audit_cmd->footer(kAuditFooter);
  std::string claim;
  AuditOptions opts;
  audit_cmd->add_option("claim", claim, "claim name or 'all'")->required();
  audit_cmd->add_option("--n", opts.n, "upper bound for beta33 / mult33");
  audit_cmd->add_option("--J", opts.J, "largest J for split36 / identity36 / interchange35");
  audit_cmd->add_option("--zero", opts.zero, "zero index for tails35 / interchange35")->capture_default_str();
  audit_cmd->add_option("--s", opts.s, "evaluation point(s) a+bi for split36 / identity36");
  audit_cmd->add_option("--margin", opts.margin, "override the zerofree24 margin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help requests surface as CallForHelp from the subcommand.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  if (!out_path.empty()) cfg.out_path = out_path;

  try {
    if (!(cfg.tol >= kMinTolerance)) throw usage_error("--tol must be >= 1e-14");
    if (cfg.sieve_limit < 2 || cfg.sieve_limit > kMaxSieveLimit) throw usage_error("--sieve-limit must be in [2, 1e8]");
    if (*sieve_cmd) return cmd_sieve(cfg, show, out);
    if (*beta_cmd) return cmd_beta(cfg, range, out);
    if (*eta_cmd) return cmd_eta(cfg, eta_s, partial, out);
    if (*zeta_cmd) return cmd_zeta(cfg, zeta_s, method, out);
    if (*zeros_cmd) return cmd_zeros(cfg, k, out, err);
    if (*audit_cmd) return cmd_audit(cfg, claim, opts, out, err);
  } catch (const pole_error& e) {
    err << "error: pole: " << e.what() << '\n';
    return kExitUsage;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zetalab::cli
