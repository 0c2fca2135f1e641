#pragma once

// Command-line front end. run_cli() is kept separate from main() so the test
// suite can drive every subcommand in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "jacobsthal/jacobsthal.hpp"

namespace jacobsthal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Csv, Json, Bfile };

struct CliConfig {
  std::string command;
  std::string a = "0", b = "1", c = "1";
  std::string format = "csv";
  std::string output;  // empty: standard output

  std::int64_t from = 0;
  std::int64_t to = 20;

  std::string identity;
  std::optional<std::int64_t> n_max;
  std::optional<std::int64_t> r_max;

  std::int64_t terms = 10;

  std::string mode;
  std::string x = "1";
  std::optional<std::int64_t> n;
  std::int64_t m = 1;
  std::optional<std::int64_t> r;
};

// Default sweep bounds for `verify` without --n-max and for `selftest`.
inline std::int64_t default_n_max(IdentityId id) {
  switch (id) {
    case IdentityId::CatalanJ:
    case IdentityId::CassiniJ:
    case IdentityId::GelinCesaroJ:
    case IdentityId::CatalanGen:
    case IdentityId::CassiniGen:
    case IdentityId::GelinCesaroGen:
    case IdentityId::GelinCesaroCases:
      return 64;
    default:
      return 100;
  }
}

// Seed triples exercised by `selftest` for identities with free parameters.
inline std::vector<SequenceParams> selftest_params() {
  return {SequenceParams::jacobsthal(), SequenceParams::jacobsthal_lucas(), SequenceParams(1, 2, 3),
          SequenceParams(5, -1, 2), SequenceParams(Rational(1, 2), Rational(-3, 7), 4)};
}

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "bfile") return Format::Bfile;
  throw UsageError("unknown format '" + s + "' (expected csv, json or bfile)");
}

inline Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const DomainError& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

inline SequenceParams parse_params(const CliConfig& cfg) {
  return {parse_rational("a", cfg.a), parse_rational("b", cfg.b), parse_rational("c", cfg.c)};
}

// Writes an indexed table. bfile refuses non-integer values.
inline void write_table(std::ostream& os, Format fmt, std::int64_t first, const std::vector<Rational>& values) {
  switch (fmt) {
    case Format::Csv:
      os << "n,value\n";
      for (std::size_t i = 0; i < values.size(); ++i) {
        os << first + static_cast<std::int64_t>(i) << ',' << values[i] << '\n';
      }
      break;
    case Format::Bfile:
      for (const auto& v : values) {
        if (!v.is_integer()) throw UsageError("bfile format requires integer values; got " + v.to_string());
      }
      for (std::size_t i = 0; i < values.size(); ++i) {
        os << first + static_cast<std::int64_t>(i) << ' ' << values[i] << '\n';
      }
      break;
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t i = 0; i < values.size(); ++i) {
        arr.push_back({{"n", first + static_cast<std::int64_t>(i)}, {"value", values[i].to_string()}});
      }
      os << arr.dump(2) << '\n';
      break;
    }
  }
}

inline int cmd_gen(const CliConfig& cfg, std::ostream& os) {
  const auto params = parse_params(cfg);
  const auto fmt = parse_format(cfg.format);
  if (cfg.from < 0 || cfg.from > cfg.to) {
    throw UsageError("gen: need 0 <= from <= to, got " + std::to_string(cfg.from) + ".." + std::to_string(cfg.to));
  }
  // Render fully before writing so a bfile refusal leaves no partial output.
  std::ostringstream buf;
  write_table(buf, fmt, cfg.from, range(params, cfg.from, cfg.to));
  os << buf.str();
  return kExitOk;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& os) {
  const auto params = parse_params(cfg);
  std::vector<IdentityId> ids;
  if (cfg.identity == "all") {
    for (const auto& info : kIdentityCatalog) ids.push_back(info.id);
  } else if (auto id = identity_from_name(cfg.identity)) {
    ids.push_back(*id);
  } else {
    throw UsageError("unknown identity '" + cfg.identity + "'; valid names: all, " + identity_names_joined());
  }
  bool all_ok = true;
  for (auto id : ids) {
    const std::int64_t n_max = cfg.n_max.value_or(default_n_max(id));
    Report rep;
    try {
      rep = verify_range(id, params, n_max, cfg.r_max);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    all_ok = all_ok && rep.ok();
    os << to_json(rep).dump() << '\n';
  }
  return all_ok ? kExitOk : kExitFailure;
}

inline int cmd_gf(const CliConfig& cfg, std::ostream& os) {
  const auto params = parse_params(cfg);
  const auto fmt = parse_format(cfg.format);
  if (cfg.terms < 1) throw UsageError("gf: --terms must be at least 1");
  const auto count = static_cast<std::size_t>(cfg.terms);
  const auto coeffs = gf_coefficients(params, count);
  const bool matches = coeffs == range(params, 0, cfg.terms - 1);
  std::ostringstream buf;
  if (fmt == Format::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : coeffs) arr.push_back(v.to_string());
    buf << nlohmann::json{{"coefficients", arr}, {"matches_recurrence", matches}}.dump(2) << '\n';
  } else {
    write_table(buf, fmt, 0, coeffs);
    buf << "# matches recurrence: " << (matches ? "true" : "false") << '\n';
  }
  os << buf.str();
  return matches ? kExitOk : kExitFailure;
}

inline int cmd_sum(const CliConfig& cfg, std::ostream& os) {
  auto params = parse_params(cfg);
  if (!cfg.n) throw UsageError("sum: --n is required");
  const std::int64_t n = *cfg.n;
  nlohmann::json out = {{"mode", cfg.mode}, {"n", n}};
  std::optional<Rational> closed;
  Rational oracle;
  try {
    if (cfg.mode == "prefix") {
      params = SequenceParams::jacobsthal();
      if (n < 0) throw DomainError("prefix: negative n");
      std::vector<std::int64_t> idx(static_cast<std::size_t>(n + 1));
      for (std::int64_t k = 0; k <= n; ++k) idx[static_cast<std::size_t>(k)] = k;
      closed = prefix_sum_closed(n);
      oracle = sum_oracle(params, idx);
    } else if (cfg.mode == "weighted") {
      const Rational x = parse_rational("x", cfg.x);
      out["x"] = x.to_string();
      closed = weighted_sum_closed(params, x, n);
      oracle = weighted_sum_oracle(params, x, n);
    } else if (cfg.mode == "strided") {
      if (!cfg.r) throw UsageError("sum --mode strided: --r is required");
      out["m"] = cfg.m;
      out["r"] = *cfg.r;
      try {
        closed = strided_sum_closed(params, cfg.m, *cfg.r, n);
      } catch (const DegenerateStrideError&) {
        closed.reset();
        out["warning"] = "sigma=0 for m divisible by 3; closed form undefined, oracle only";
      }
      if (*cfg.r < 0) throw DomainError("strided: negative r");
      oracle = strided_sum_oracle(params, cfg.m, *cfg.r, n);
    } else {
      throw UsageError("sum: unknown --mode '" + cfg.mode + "' (expected prefix, weighted or strided)");
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const auto p = params.to_strings();
  out["params"] = {p[0], p[1], p[2]};
  out["closed_form"] = closed ? nlohmann::json(closed->to_string()) : nlohmann::json(nullptr);
  out["oracle"] = oracle.to_string();
  const bool agree = !closed || *closed == oracle;
  out["agree"] = closed ? nlohmann::json(agree) : nlohmann::json(nullptr);
  os << out.dump(2) << '\n';
  return agree ? kExitOk : kExitFailure;
}

inline int cmd_selftest(std::ostream& os) {
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  auto line = [&](bool ok, const std::string& label) {
    os << (ok ? "PASS " : "FAIL ") << label << '\n';
    if (!ok) ++failures;
  };
  auto label_of = [](const SequenceParams& p) {
    const auto s = p.to_strings();
    return "(" + s[0] + "," + s[1] + "," + s[2] + ")";
  };

  for (const auto& info : kIdentityCatalog) {
    const auto param_set = info.fixed_params ? std::vector<SequenceParams>{SequenceParams::jacobsthal()}
                                             : selftest_params();
    for (const auto& p : param_set) {
      const auto rep = verify_range(info.id, p, default_n_max(info.id));
      line(rep.ok(), std::string(info.name) + " " + label_of(p) + " " + std::to_string(rep.passed) + "/" +
                         std::to_string(rep.total));
    }
  }
  for (const auto& p : selftest_params()) {
    const auto terms = range(p, 0, 200);
    const auto k = binet_coefficients(p);
    bool ok = true;
    for (std::int64_t n = 0; n <= 200 && ok; ++n) {
      const auto& t = terms[static_cast<std::size_t>(n)];
      ok = t == binet_term(k, n) && t == decomposed_term(p, n);
    }
    line(ok, "closed-forms " + label_of(p) + " n<=200");
    line(gf_coefficients(p, 128) == range(p, 0, 127), "gf " + label_of(p) + " 128 terms");

    bool sums_ok = true;
    for (const auto& x : {Rational(1), Rational(-1), Rational(3), Rational(1, 2), Rational(-2, 3), Rational(5)}) {
      for (std::int64_t n = 0; n <= 32; ++n) {
        sums_ok = sums_ok && weighted_sum_closed(p, x, n) == weighted_sum_oracle(p, x, n);
      }
    }
    line(sums_ok, "weighted-sum " + label_of(p));
    sums_ok = true;
    for (std::int64_t m : {1, 2, 4, 5}) {
      for (std::int64_t r = m; r <= m + 6; ++r) {
        for (std::int64_t n = 0; n <= 24; ++n) {
          sums_ok = sums_ok && strided_sum_closed(p, m, r, n) == strided_sum_oracle(p, m, r, n);
        }
      }
    }
    line(sums_ok, "strided-sum " + label_of(p));
  }
  bool prefix_ok = true;
  for (std::int64_t n = 0; n <= 100; ++n) {
    std::vector<std::int64_t> idx;
    for (std::int64_t k = 0; k <= n; ++k) idx.push_back(k);
    prefix_ok = prefix_ok && prefix_sum_closed(n) == sum_oracle(SequenceParams::jacobsthal(), idx);
  }
  line(prefix_ok, "prefix-sum n<=100");

  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  os << (failures == 0 ? "selftest: all checks passed" : "selftest: " + std::to_string(failures) + " failed")
     << " (" << ms.count() << " ms)\n";
  return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace detail

// args excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact third-order Jacobsthal sequences: generation, identity verification, sums"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--a", cfg.a, "J(0), integer or p/q")->capture_default_str();
    sub->add_option("--b", cfg.b, "J(1), integer or p/q")->capture_default_str();
    sub->add_option("--c", cfg.c, "J(2), integer or p/q")->capture_default_str();
    sub->add_option("--output,-o", cfg.output, "output file (default: standard output)");
  };

  auto* gen = app.add_subcommand("gen", "emit terms from..to");
  add_params(gen);
  gen->add_option("--from", cfg.from)->capture_default_str();
  gen->add_option("--to", cfg.to)->capture_default_str();
  gen->add_option("--format", cfg.format, "csv, json or bfile")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "sweep an identity against the recurrence oracle");
  add_params(verify);
  verify->add_option("--identity", cfg.identity, "identity name or 'all'")->required();
  verify->add_option("--n-max", cfg.n_max);
  verify->add_option("--r-max", cfg.r_max);

  auto* gf = app.add_subcommand("gf", "expand the generating function");
  add_params(gf);
  gf->add_option("--terms", cfg.terms)->capture_default_str();
  gf->add_option("--format", cfg.format, "csv, json or bfile")->capture_default_str();

  auto* sum = app.add_subcommand("sum", "closed-form sums vs. oracle");
  add_params(sum);
  sum->add_option("--mode", cfg.mode, "prefix, weighted or strided")->required();
  sum->add_option("--n", cfg.n);
  sum->add_option("--x", cfg.x, "weight base for --mode weighted")->capture_default_str();
  sum->add_option("--m", cfg.m, "stride for --mode strided")->capture_default_str();
  sum->add_option("--r", cfg.r, "offset for --mode strided");

  auto* selftest = app.add_subcommand("selftest", "run the full identity catalog at default bounds");
  selftest->add_option("--output,-o", cfg.output, "output file (default: standard output)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open output file " << cfg.output << '\n';
      return kExitUsage;
    }
  }
  std::ostream& os = cfg.output.empty() ? out : file;

  try {
    if (*gen) return detail::cmd_gen(cfg, os);
    if (*verify) return detail::cmd_verify(cfg, os);
    if (*gf) return detail::cmd_gf(cfg, os);
    if (*sum) return detail::cmd_sum(cfg, os);
    if (*selftest) return detail::cmd_selftest(os);
  } catch (const detail::UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace jacobsthal::cli
