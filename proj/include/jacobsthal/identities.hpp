#pragma once

/**
 * @file identities.hpp
 * @brief Catalog of third-order Jacobsthal identities and an instance checker.
 *
 * Every check evaluates the left-hand side with the recurrence oracle only and
 * the right-hand side with closed forms only (powers of two, period-3 tables,
 * rho and the quartic form), then compares the two exactly. A shared bug in
 * one path therefore cannot hide a failure in the other.
 *
 * Identities stated for J (seeds 0, 1, 1) and j (seeds 2, 1, 5) ignore the
 * params argument.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "jacobsthal/closed_forms.hpp"
#include "jacobsthal/errors.hpp"
#include "jacobsthal/rational.hpp"
#include "jacobsthal/sequence.hpp"

namespace jacobsthal {

enum class IdentityId {
  E4,                // 3 J(n) + j(n) = 2^(n+1)
  E5,                // j(n) - 3 J(n) = 2 j(n-3), n >= 3
  EC5,               // J(n+2) - 4 J(n) = -2 if n = 1 (mod 3), else 1
  E6,                // j(n) - 4 J(n) = 2, -3, 1
  E7,                // j(n+1) + j(n) = 3 J(n+2)
  E8,                // j(n) - J(n+2) = 1, -1, 0
  E9,                // j(n-3)^2 + 3 J(n) j(n) = 4^n, n >= 3
  E10,               // sum_{k<=n} J(k) = J(n+1) - [n = 0 (mod 3)]
  E12,               // j(n)^2 - 9 J(n)^2 = 2^(n+2) j(n-3), n >= 3
  CatalanJ,          // J(n)^2 - J(n-r) J(n+r)
  CassiniJ,          // CatalanJ at r = 1
  GelinCesaroJ,      // J(n)^4 - J(n-2) J(n-1) J(n+1) J(n+2), residue-case form
  CatalanGen,        // Catalan for arbitrary seeds
  CassiniGen,        // CatalanGen at r = 1
  GelinCesaroGen,    // Gelin-Cesaro for arbitrary seeds, W form
  GelinCesaroCases,  // Gelin-Cesaro for arbitrary seeds, residue-case constants
};

struct IdentityInfo {
  IdentityId id;
  std::string_view name;  // command-line spelling
  std::int64_t min_n;
  bool uses_r;
  bool fixed_params;  // stated only for J / j
  std::string_view statement;
};

inline constexpr std::array<IdentityInfo, 16> kIdentityCatalog{{
    {IdentityId::E4, "e4", 0, false, true, "3J(n) + j(n) = 2^(n+1)"},
    {IdentityId::E5, "e5", 3, false, true, "j(n) - 3J(n) = 2j(n-3)"},
    {IdentityId::EC5, "ec5", 0, false, true, "J(n+2) - 4J(n) = -2 if n=1 (mod 3) else 1"},
    {IdentityId::E6, "e6", 0, false, true, "j(n) - 4J(n) = 2, -3, 1 by n mod 3"},
    {IdentityId::E7, "e7", 0, false, true, "j(n+1) + j(n) = 3J(n+2)"},
    {IdentityId::E8, "e8", 0, false, true, "j(n) - J(n+2) = 1, -1, 0 by n mod 3"},
    {IdentityId::E9, "e9", 3, false, true, "j(n-3)^2 + 3J(n)j(n) = 4^n"},
    {IdentityId::E10, "e10", 0, false, true, "sum J(k), k<=n = J(n+1) - [n=0 (mod 3)]"},
    {IdentityId::E12, "e12", 3, false, true, "j(n)^2 - 9J(n)^2 = 2^(n+2) j(n-3)"},
    {IdentityId::CatalanJ, "catalan-j", 0, true, true, "J(n)^2 - J(n-r)J(n+r)"},
    {IdentityId::CassiniJ, "cassini-j", 1, false, true, "J(n)^2 - J(n-1)J(n+1)"},
    {IdentityId::GelinCesaroJ, "gelin-cesaro-j", 2, false, true, "J(n)^4 - J(n-2)J(n-1)J(n+1)J(n+2)"},
    {IdentityId::CatalanGen, "catalan-gen", 0, true, false, "G(n)^2 - G(n-r)G(n+r)"},
    {IdentityId::CassiniGen, "cassini-gen", 1, false, false, "G(n)^2 - G(n-1)G(n+1)"},
    {IdentityId::GelinCesaroGen, "gelin-cesaro-gen", 2, false, false, "G(n)^4 - G(n-2)G(n-1)G(n+1)G(n+2)"},
    {IdentityId::GelinCesaroCases, "gelin-cesaro-cases", 2, false, false,
     "G(n)^4 - G(n-2)G(n-1)G(n+1)G(n+2), residue cases"},
}};

inline const IdentityInfo& identity_info(IdentityId id) {
  return kIdentityCatalog[static_cast<std::size_t>(id)];
}

inline std::string_view identity_name(IdentityId id) { return identity_info(id).name; }

inline std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (const auto& info : kIdentityCatalog) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

inline std::string identity_names_joined(std::string_view sep = ", ") {
  std::string out;
  for (const auto& info : kIdentityCatalog) {
    if (!out.empty()) out += sep;
    out += info.name;
  }
  return out;
}

struct CheckResult {
  IdentityId id{};
  SequenceParams params;
  std::int64_t n = 0;
  std::optional<std::int64_t> r;
  Rational lhs;
  Rational rhs;
  bool equal = false;
  std::map<std::string, Rational> witness;
};

// ---------------------------------------------------------------------------
// Right-hand sides

// Catalan for arbitrary seeds:
// (1/49) { 2^n rho (2^r Vgen(n-r) - 2 Vgen(n) + 2^-r Vgen(n+r)) + 7 quartic U(r)^2 }
inline Rational catalan_rhs(const SequenceParams& params, std::int64_t n, std::int64_t r) {
  if (r < 0) throw DomainError("catalan: r must be non-negative");
  if (r > n) throw DomainError("catalan: requires r <= n (J(n-r) would have a negative index)");
  const CompanionSet cs = companions(params);
  const Rational u = cs.U.at(r);
  const Rational bracket = Rational::pow2(r) * cs.Vgen.at(n - r) - Rational(2) * cs.Vgen.at(n) +
                           Rational::pow2(-r) * cs.Vgen.at(n + r);
  return (Rational::pow2(n) * params.rho * bracket + Rational(7) * params.quartic * u * u) / Rational(49);
}

enum class GelinCesaroMode { General, Cases };

namespace detail {

// Residue-split constants 3 Wgen(n+2) - 2 Wgen(n+1) for n = 0, 1, 2 (mod 3).
inline Rational gelin_cesaro_case_constant(const SequenceParams& p, std::int64_t n) {
  const Rational &a = p.a, &b = p.b, &c = p.c;
  switch (mod3(n)) {
    case 0: return -c - Rational(10) * b + Rational(24) * a;
    case 1: return Rational(-11) * c + Rational(23) * b - Rational(2) * a;
    default: return Rational(12) * c - Rational(13) * b - Rational(22) * a;
  }
}

}  // namespace detail

// Closed form of G(n)^4 - G(n-2)G(n-1)G(n+1)G(n+2), n >= 2. G(n)^2 is taken
// from the 2^n + periodic decomposition, never from the recurrence.
inline Rational gelin_cesaro_rhs(const SequenceParams& params, std::int64_t n, GelinCesaroMode mode) {
  if (n < 2) throw DomainError("gelin-cesaro: requires n >= 2");
  const CompanionSet cs = companions(params);
  const Rational& q = params.quartic;
  const Rational& rho = params.rho;
  const Rational g = decomposed_term(params, n);
  const Rational g2 = g * g;

  Rational k;        // 3 W(n+2) - 2 W(n+1)
  Rational product;  // W(n+1) W(n+2)
  if (mode == GelinCesaroMode::General) {
    k = Rational(3) * cs.Wgen.at(n + 2) - Rational(2) * cs.Wgen.at(n + 1);
    product = cs.Wgen.at(n + 1) * cs.Wgen.at(n + 2);
  } else {
    k = detail::gelin_cesaro_case_constant(params, n);
    product = cs.T.at(n);
  }
  const Rational scale = Rational::pow2(n - 2) * rho;
  const Rational first = g2 * (Rational(2) * q + scale * k);
  const Rational second = q * q + scale * q * k - Rational(3) * Rational::pow2(2 * n - 3) * rho * rho * product;
  return (first - second / Rational(7)) / Rational(7);
}

namespace detail {

// J(n) = (2^(n+1) - V(n)) / 7 and j(n) = (2^(n+3) + 3 V(n)) / 7.
inline Rational jacobsthal_closed(std::int64_t n) {
  const PeriodicTriple v = companions(SequenceParams::jacobsthal()).V;
  return (Rational::pow2(n + 1) - v.at(n)) / Rational(7);
}
inline Rational lucas_closed(std::int64_t n) {
  const PeriodicTriple v = companions(SequenceParams::jacobsthal()).V;
  return (Rational::pow2(n + 3) + Rational(3) * v.at(n)) / Rational(7);
}

// Specialized form for J: (1/49){ 2^(n+1) (2^r V(n-r) - 2V(n) + 2^-r V(n+r)) + 7 U(r)^2 }
inline Rational catalan_j_rhs(std::int64_t n, std::int64_t r, std::map<std::string, Rational>& witness) {
  const CompanionSet cs = companions(SequenceParams::jacobsthal());
  const Rational u = cs.U.at(r);
  witness["V(n-r)"] = cs.V.at(n - r);
  witness["V(n)"] = cs.V.at(n);
  witness["V(n+r)"] = cs.V.at(n + r);
  witness["U(r)"] = u;
  const Rational bracket = Rational::pow2(r) * cs.V.at(n - r) - Rational(2) * cs.V.at(n) +
                           Rational::pow2(-r) * cs.V.at(n + r);
  return (Rational::pow2(n + 1) * bracket + Rational(7) * u * u) / Rational(49);
}

// Case table for J:
// (1/7){ J(n)^2 (2 + k 2^(n-1)) - (1/7)(1 + k 2^(n-1) + l 2^(2n-1)) }
// with (k, l) = (-11, 9), (12, 18), (-1, -6) for n = 0, 1, 2 (mod 3).
inline Rational gelin_cesaro_j_rhs(std::int64_t n, std::map<std::string, Rational>& witness) {
  static constexpr std::array<std::array<int, 2>, 3> kCases{{{-11, 9}, {12, 18}, {-1, -6}}};
  const auto [k, l] = kCases[static_cast<std::size_t>(mod3(n))];
  const Rational j = jacobsthal_closed(n);
  const Rational half = Rational::pow2(n - 1);
  witness["J(n) closed"] = j;
  witness["case k"] = k;
  witness["case l"] = l;
  const Rational first = j * j * (Rational(2) + Rational(k) * half);
  const Rational second = Rational(1) + Rational(k) * half + Rational(l) * Rational::pow2(2 * n - 1);
  return (first - second / Rational(7)) / Rational(7);
}

inline void require(bool ok, IdentityId id, const std::string& what) {
  if (!ok) throw DomainError(std::string(identity_name(id)) + ": " + what);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Instance checker

inline CheckResult check(IdentityId id, const SequenceParams& params, std::int64_t n,
                         std::optional<std::int64_t> r = std::nullopt) {
  const IdentityInfo& info = identity_info(id);
  detail::require(n >= info.min_n, id, "requires n >= " + std::to_string(info.min_n));

  CheckResult res;
  res.id = id;
  res.params = info.fixed_params ? SequenceParams::jacobsthal() : params;
  res.n = n;

  if (id == IdentityId::CassiniJ || id == IdentityId::CassiniGen) {
    detail::require(!r || *r == 1, id, "Cassini is fixed at r = 1");
    r = 1;
  }
  if (info.uses_r || id == IdentityId::CassiniJ || id == IdentityId::CassiniGen) {
    detail::require(r.has_value(), id, "requires r");
    detail::require(*r >= 0, id, "requires r >= 0");
    detail::require(*r <= n, id, "requires r <= n");
    res.r = r;
  }

  // Oracle values.
  const std::int64_t top = n + std::max<std::int64_t>(res.r.value_or(0), 3) + 1;
  const auto J = range(SequenceParams::jacobsthal(), 0, top);
  const auto jl = range(SequenceParams::jacobsthal_lucas(), 0, top);
  const auto G = info.fixed_params ? std::vector<Rational>{} : range(params, 0, top);
  auto at = [](const std::vector<Rational>& s, std::int64_t i) -> const Rational& {
    return s[static_cast<std::size_t>(i)];
  };

  const CompanionSet jc = companions(SequenceParams::jacobsthal());
  auto& w = res.witness;

  switch (id) {
    case IdentityId::E4:
      res.lhs = Rational(3) * at(J, n) + at(jl, n);
      res.rhs = Rational::pow2(n + 1);
      break;
    case IdentityId::E5:
      res.lhs = at(jl, n) - Rational(3) * at(J, n);
      res.rhs = Rational(2) * detail::lucas_closed(n - 3);
      w["j(n-3) closed"] = detail::lucas_closed(n - 3);
      break;
    case IdentityId::EC5:
      res.lhs = at(J, n + 2) - Rational(4) * at(J, n);
      res.rhs = detail::mod3(n) == 1 ? Rational(-2) : Rational(1);
      break;
    case IdentityId::E6:
      res.lhs = at(jl, n) - Rational(4) * at(J, n);
      res.rhs = jc.V.at(n);
      w["V(n)"] = res.rhs;
      break;
    case IdentityId::E7:
      res.lhs = at(jl, n + 1) + at(jl, n);
      res.rhs = Rational(3) * detail::jacobsthal_closed(n + 2);
      w["J(n+2) closed"] = detail::jacobsthal_closed(n + 2);
      break;
    case IdentityId::E8:
      res.lhs = at(jl, n) - at(J, n + 2);
      res.rhs = jc.U.at(n + 1);
      w["U(n+1)"] = res.rhs;
      break;
    case IdentityId::E9:
      res.lhs = at(jl, n - 3) * at(jl, n - 3) + Rational(3) * at(J, n) * at(jl, n);
      res.rhs = Rational::pow2(2 * n);
      break;
    case IdentityId::E10: {
      Rational s;
      for (std::int64_t k = 0; k <= n; ++k) s += at(J, k);
      res.lhs = s;
      res.rhs = detail::jacobsthal_closed(n + 1) - (detail::mod3(n) == 0 ? Rational(1) : Rational(0));
      w["J(n+1) closed"] = detail::jacobsthal_closed(n + 1);
      break;
    }
    case IdentityId::E12:
      res.lhs = at(jl, n) * at(jl, n) - Rational(9) * at(J, n) * at(J, n);
      res.rhs = Rational::pow2(n + 2) * detail::lucas_closed(n - 3);
      w["j(n-3) closed"] = detail::lucas_closed(n - 3);
      break;
    case IdentityId::CatalanJ:
    case IdentityId::CassiniJ:
      res.lhs = at(J, n) * at(J, n) - at(J, n - *res.r) * at(J, n + *res.r);
      res.rhs = detail::catalan_j_rhs(n, *res.r, w);
      break;
    case IdentityId::GelinCesaroJ:
      res.lhs = at(J, n).pow(4) - at(J, n - 2) * at(J, n - 1) * at(J, n + 1) * at(J, n + 2);
      res.rhs = detail::gelin_cesaro_j_rhs(n, w);
      break;
    case IdentityId::CatalanGen:
    case IdentityId::CassiniGen: {
      const CompanionSet cs = companions(params);
      res.lhs = at(G, n) * at(G, n) - at(G, n - *res.r) * at(G, n + *res.r);
      res.rhs = catalan_rhs(params, n, *res.r);
      w["Vgen(n-r)"] = cs.Vgen.at(n - *res.r);
      w["Vgen(n)"] = cs.Vgen.at(n);
      w["Vgen(n+r)"] = cs.Vgen.at(n + *res.r);
      w["U(r)"] = cs.U.at(*res.r);
      w["quartic"] = params.quartic;
      break;
    }
    case IdentityId::GelinCesaroGen:
    case IdentityId::GelinCesaroCases: {
      const CompanionSet cs = companions(params);
      res.lhs = at(G, n).pow(4) - at(G, n - 2) * at(G, n - 1) * at(G, n + 1) * at(G, n + 2);
      const auto mode = id == IdentityId::GelinCesaroGen ? GelinCesaroMode::General : GelinCesaroMode::Cases;
      res.rhs = gelin_cesaro_rhs(params, n, mode);
      w["Wgen(n+1)"] = cs.Wgen.at(n + 1);
      w["Wgen(n+2)"] = cs.Wgen.at(n + 2);
      w["T(n)"] = cs.T.at(n);
      w["quartic"] = params.quartic;
      w["rho"] = params.rho;
      break;
    }
  }
  res.equal = res.lhs == res.rhs;
  return res;
}

// ---------------------------------------------------------------------------
// Sweeps

struct Report {
  static constexpr std::size_t kMaxListedFailures = 16;

  IdentityId id{};
  SequenceParams params;
  std::int64_t total = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::vector<CheckResult> failures;  // first kMaxListedFailures, ordered by (n, r)

  bool ok() const { return failed == 0; }
  std::int64_t omitted_failures() const {
    return failed - static_cast<std::int64_t>(failures.size());
  }
};

// Runs check() over every legal n in [min_n, n_max] and, for Catalan, every
// r in [0, min(n, r_max)]. r_max defaults to n_max.
inline Report verify_range(IdentityId id, const SequenceParams& params, std::int64_t n_max,
                           std::optional<std::int64_t> r_max = std::nullopt) {
  const IdentityInfo& info = identity_info(id);
  if (n_max < info.min_n) {
    throw DomainError(std::string(info.name) + ": n-max must be >= " + std::to_string(info.min_n));
  }
  Report rep;
  rep.id = id;
  rep.params = info.fixed_params ? SequenceParams::jacobsthal() : params;

  auto record = [&](CheckResult res) {
    ++rep.total;
    if (res.equal) {
      ++rep.passed;
      return;
    }
    ++rep.failed;
    if (rep.failures.size() < Report::kMaxListedFailures) rep.failures.push_back(std::move(res));
  };

  for (std::int64_t n = info.min_n; n <= n_max; ++n) {
    if (info.uses_r) {
      const std::int64_t top = std::min(n, r_max.value_or(n_max));
      for (std::int64_t r = 0; r <= top; ++r) record(check(id, params, n, r));
    } else {
      record(check(id, params, n));
    }
  }
  return rep;
}

inline nlohmann::json to_json(const Report& rep) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : rep.failures) {
    failures.push_back({{"n", f.n},
                        {"r", f.r ? nlohmann::json(*f.r) : nlohmann::json(nullptr)},
                        {"lhs", f.lhs.to_string()},
                        {"rhs", f.rhs.to_string()}});
  }
  const auto p = rep.params.to_strings();
  nlohmann::json j = {{"identity", std::string(identity_name(rep.id))},
                      {"params", {p[0], p[1], p[2]}},
                      {"total", rep.total},
                      {"passed", rep.passed},
                      {"failed", rep.failed},
                      {"failures", std::move(failures)}};
  if (rep.omitted_failures() > 0) j["omitted_failures"] = rep.omitted_failures();
  return j;
}

}  // namespace jacobsthal
