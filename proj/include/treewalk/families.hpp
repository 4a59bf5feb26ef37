#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treewalk/error.hpp"
#include "treewalk/exact.hpp"
#include "treewalk/tree.hpp"

namespace treewalk {

enum class Family { path, star, lever, broom, double_broom };

constexpr std::string_view family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::star: return "star";
    case Family::lever: return "lever";
    case Family::broom: return "broom";
    case Family::double_broom: return "double-broom";
  }
  return "?";
}

/// Parametric family instance. `k` is the lever fulcrum index; `left`/`right`
/// are the double-broom end-cluster sizes, each counting its geodesic endpoint.
struct FamilySpec {
  Family family = Family::path;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t k = 0;
  std::size_t left = 0;
  std::size_t right = 0;
};

namespace detail {

[[noreturn]] inline void bad_family(const FamilySpec& s, const std::string& why) {
  throw Error(ErrorCode::InvalidFamilyParameters,
              std::string(family_name(s.family)) + " n=" + std::to_string(s.n) + " d=" +
                  std::to_string(s.d) + ": " + why);
}

/// Geodesic 0..d, then `count` extra leaves at each attachment point in turn.
inline Tree geodesic_with_pendants(std::size_t n, std::size_t d,
                                   std::initializer_list<std::pair<VertexId, std::size_t>> pendants) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < d; ++i) edges.emplace_back(i, i + 1);
  VertexId next = static_cast<VertexId>(d + 1);
  for (auto [at, count] : pendants)
    for (std::size_t j = 0; j < count; ++j) edges.emplace_back(at, next++);
  return Tree::from_edges(n, edges);
}

}  // namespace detail

inline void validate(const FamilySpec& s) {
  switch (s.family) {
    case Family::path:
      if (s.n < 1) detail::bad_family(s, "need n >= 1");
      if (s.d + 1 != s.n) detail::bad_family(s, "a path has d = n-1");
      return;
    case Family::star:
      if (s.n < 3) detail::bad_family(s, "need n >= 3");
      if (s.d != 2) detail::bad_family(s, "a star has d = 2");
      return;
    case Family::lever:
      if (s.d < 2 || s.d + 1 > s.n) detail::bad_family(s, "need 2 <= d <= n-1");
      if (s.k < 1 || s.k + 1 > s.d) detail::bad_family(s, "need 1 <= k <= d-1");
      return;
    case Family::broom:
      if (s.d < 2 || s.d >= s.n) detail::bad_family(s, "need 2 <= d < n");
      return;
    case Family::double_broom:
      if (s.d < 2 || s.d + 1 > s.n) detail::bad_family(s, "need 2 <= d <= n-1");
      if (s.left < 1 || s.right < 1) detail::bad_family(s, "both end clusters need at least one leaf");
      if (s.left + s.right != s.n - s.d + 1) detail::bad_family(s, "need left + right = n - d + 1");
      return;
  }
}

/// Canonical labeled realization: geodesic v0..vd gets ids 0..d, extra leaves
/// get ids d+1..n-1 grouped by attachment point.
inline Tree generate(const FamilySpec& s) {
  validate(s);
  const VertexId d = static_cast<VertexId>(s.d);
  switch (s.family) {
    case Family::path: return detail::geodesic_with_pendants(s.n, s.n - 1, {});
    case Family::star: return detail::geodesic_with_pendants(s.n, 2, {{1, s.n - 3}});
    case Family::lever:
      return detail::geodesic_with_pendants(s.n, s.d, {{static_cast<VertexId>(s.k), s.n - s.d - 1}});
    case Family::broom:
      // Handle v1..vd, bristles at v1 (v0 is the first bristle).
      return detail::geodesic_with_pendants(s.n, s.d, {{1, s.n - s.d - 1}});
    case Family::double_broom:
      return detail::geodesic_with_pendants(s.n, s.d, {{1, s.left - 1}, {d - 1, s.right - 1}});
  }
  return detail::geodesic_with_pendants(1, 0, {});
}

inline FamilySpec path_spec(std::size_t n) { return {Family::path, n, n - 1, 0, 0, 0}; }
inline FamilySpec star_spec(std::size_t n) { return {Family::star, n, 2, 0, 0, 0}; }
inline FamilySpec lever_spec(std::size_t n, std::size_t d, std::size_t k) { return {Family::lever, n, d, k, 0, 0}; }
inline FamilySpec broom_spec(std::size_t n, std::size_t d) { return {Family::broom, n, d, 0, 0, 0}; }
inline FamilySpec double_broom_spec(std::size_t n, std::size_t d, std::size_t left, std::size_t right) {
  return {Family::double_broom, n, d, 0, left, right};
}

inline FamilySpec balanced_lever_spec(std::size_t n, std::size_t d) {
  FamilySpec s = lever_spec(n, d, d / 2);
  validate(s);
  return s;
}

inline FamilySpec balanced_double_broom_spec(std::size_t n, std::size_t d) {
  if (d < 2 || d + 1 > n) detail::bad_family(double_broom_spec(n, d, 0, 0), "need 2 <= d <= n-1");
  std::size_t extra = n - d - 1;
  return double_broom_spec(n, d, extra / 2 + 1, (extra + 1) / 2 + 1);
}

inline Tree path_graph(std::size_t n) { return generate(path_spec(n)); }
inline Tree star_graph(std::size_t n) { return generate(star_spec(n)); }
inline Tree broom_graph(std::size_t n, std::size_t d) { return generate(broom_spec(n, d)); }
inline Tree balanced_lever(std::size_t n, std::size_t d) { return generate(balanced_lever_spec(n, d)); }
inline Tree balanced_double_broom(std::size_t n, std::size_t d) {
  return generate(balanced_double_broom_spec(n, d));
}

/// Non-leaf vertices form a path and every leaf hangs off one of its ends.
inline bool is_double_broom(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 3) return true;
  std::vector<VertexId> ends;
  std::size_t internal = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (t.is_leaf(v)) continue;
    ++internal;
    std::size_t internal_nbrs = 0;
    for (VertexId w : t.neighbors(v)) internal_nbrs += t.is_leaf(w) ? 0 : 1;
    if (internal_nbrs > 2) return false;
    if (internal_nbrs <= 1) ends.push_back(v);
  }
  if (internal == 1) return true;
  for (VertexId v = 0; v < n; ++v) {
    if (!t.is_leaf(v)) continue;
    VertexId hub = t.neighbors(v)[0];
    if (std::find(ends.begin(), ends.end(), hub) == ends.end()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Closed-form ledger. Printed entries reproduce the published displays
// verbatim, including the ones the audit finds wrong; *_corrected entries are
// the re-derived versions.

enum class FormulaId {
  jmax_path,
  jmax_path_expanded_printed,
  tmeet_path,
  tmeet_star,
  jmax_star_printed,
  jmax_star_corrected,
  jmin_path_odd,
  jmin_path_even,
  jmin_lever_odd,
  jmin_lever_even,
  bestmeet_lever,
  jmax_broom,
  jmin_dbroom_oo,
  jmin_dbroom_oe,
  jmin_dbroom_eo,
  jmin_dbroom_ee,
  bestmeet_dbroom_oo,
  bestmeet_dbroom_oe,
  bestmeet_dbroom_eo,
  bestmeet_dbroom_ee,
  bestmeet_dbroom_oe_corrected,
  jmin_dnd_max,
  jmin_dnd_max_corrected,
  bestmeet_pn,
  bestmeet_bn_printed,
  bestmeet_bn_corrected,
  big_delta_plus,
  delta_plus,
  delta_minus_broom,
  delta_minus_path,
};

enum class Parity { any, odd, even };

struct FormulaInfo {
  FormulaId id;
  std::string_view name;
  bool uses_d;
  Parity n_parity;
  Parity d_parity;
  std::size_t min_n;
  std::string_view statement;  // what the value is, in words
  std::optional<FormulaId> corrected;
};

inline std::span<const FormulaInfo> formula_ledger() {
  using F = FormulaId;
  using P = Parity;
  static const std::array<FormulaInfo, 30> ledger{{
      {F::jmax_path, "jmax_path", false, P::any, P::any, 2, "J_max(P_n) = 4/3 (n-1)^3 - 1/3 (n-1)", {}},
      {F::jmax_path_expanded_printed, "jmax_path_expanded_printed", false, P::any, P::any, 2,
       "J_max(P_n) as printed in expanded form, (4n^3 - 4n^2 + 11n)/3 - 1", F::jmax_path},
      {F::tmeet_path, "tmeet_path", false, P::any, P::any, 2, "T_meet(P_n) = (4n^2 - 8n + 3)/6", {}},
      {F::tmeet_star, "tmeet_star", false, P::any, P::any, 3, "T_meet(S_n) = 2n - 7/2", {}},
      {F::jmax_star_printed, "jmax_star_printed", false, P::any, P::any, 3,
       "J_max(S_n) as printed, 2n^2 - 11n/2 + 7/2", F::jmax_star_corrected},
      {F::jmax_star_corrected, "jmax_star_corrected", false, P::any, P::any, 3,
       "J_max(S_n) = 2(n-1) T_meet(S_n) = 4n^2 - 11n + 7", {}},
      {F::jmin_path_odd, "jmin_path_odd", false, P::odd, P::any, 3, "J_min(P_n) = (n^3 - 3n^2 + 2n)/3, n odd", {}},
      {F::jmin_path_even, "jmin_path_even", false, P::even, P::any, 2,
       "J_min(P_n) = (n^3 - 3n^2 + 5n)/3 - 1, n even", {}},
      {F::jmin_lever_odd, "jmin_lever_odd", true, P::any, P::odd, 3,
       "min over levers of J(fulcrum) = n - 1 + (d^3 - d)/3, d odd", {}},
      {F::jmin_lever_even, "jmin_lever_even", true, P::any, P::even, 3,
       "min over levers of J(fulcrum) = n - 1 + (d^3 - 4d)/3, d even", {}},
      {F::bestmeet_lever, "bestmeet_lever", true, P::any, P::any, 3,
       "T_bestmeet(L_{n,d}) = (d^3 - d)/(6(n-1)) + 1/2 (d odd), (d^3 - 4d)/(6(n-1)) + 1/2 (d even)", {}},
      {F::jmax_broom, "jmax_broom", true, P::any, P::any, 3,
       "J_max(B_{n,d}) = J(v_d) = 4(d-1)n^2 + (5 - 4d^2)n + (4d^3 - 4d - 3)/3", {}},
      {F::jmin_dbroom_oo, "jmin_dbroom_oo", true, P::odd, P::odd, 3, "J_min(D_{n,d}), n odd, d odd", {}},
      {F::jmin_dbroom_oe, "jmin_dbroom_oe", true, P::odd, P::even, 3, "J_min(D_{n,d}), n odd, d even", {}},
      {F::jmin_dbroom_eo, "jmin_dbroom_eo", true, P::even, P::odd, 3, "J_min(D_{n,d}), n even, d odd", {}},
      {F::jmin_dbroom_ee, "jmin_dbroom_ee", true, P::even, P::even, 3, "J_min(D_{n,d}), n even, d even", {}},
      {F::bestmeet_dbroom_oo, "bestmeet_dbroom_oo", true, P::odd, P::odd, 3, "T_bestmeet(D_{n,d}), n odd, d odd", {}},
      {F::bestmeet_dbroom_oe, "bestmeet_dbroom_oe", true, P::odd, P::even, 3,
       "T_bestmeet(D_{n,d}), n odd, d even, as printed with denominator 2(n-1)",
       F::bestmeet_dbroom_oe_corrected},
      {F::bestmeet_dbroom_eo, "bestmeet_dbroom_eo", true, P::even, P::odd, 3, "T_bestmeet(D_{n,d}), n even, d odd", {}},
      {F::bestmeet_dbroom_ee, "bestmeet_dbroom_ee", true, P::even, P::even, 3,
       "T_bestmeet(D_{n,d}), n even, d even", {}},
      {F::bestmeet_dbroom_oe_corrected, "bestmeet_dbroom_oe_corrected", true, P::odd, P::even, 3,
       "T_bestmeet(D_{n,d}), n odd, d even, with denominator 6(n-1)", {}},
      {F::jmin_dnd_max, "jmin_dnd_max", false, P::any, P::any, 3,
       "max over d of J_min(D_{n,d}) as printed (B_{n,n-2} branch for odd n >= 9)", F::jmin_dnd_max_corrected},
      {F::jmin_dnd_max_corrected, "jmin_dnd_max_corrected", false, P::any, P::any, 3,
       "max over d of J_min(D_{n,d}) = J_min(P_n) for every n", {}},
      {F::bestmeet_pn, "bestmeet_pn", false, P::any, P::any, 2,
       "T_bestmeet(P_n) = (n^2 - 2n + 3)/6 (n even), (n^2 - 2n)/6 (n odd)", {}},
      {F::bestmeet_bn_printed, "bestmeet_bn_printed", false, P::odd, P::any, 9,
       "T_bestmeet(B_{n,n-2}) as printed, (n^2 - 2n + 3)/6 - 4/(n-1), n odd >= 9", F::bestmeet_bn_corrected},
      {F::bestmeet_bn_corrected, "bestmeet_bn_corrected", false, P::odd, P::any, 5,
       "T_bestmeet(B_{n,n-2}) = (n^2 - 2n)/6 - 4/(n-1), n odd", {}},
      {F::big_delta_plus, "big_delta_plus", true, P::any, P::any, 3,
       "J_max(B_{n+1,d+1}) - J_max(B_{n,d}) = 4n^2 - 4n + 1", {}},
      {F::delta_plus, "delta_plus", true, P::any, P::any, 3,
       "J_max(B_{n+1,d}) - J_max(B_{n,d}) = 4(d-1)(2n-d) + 1", {}},
      {F::delta_minus_broom, "delta_minus_broom", true, P::any, P::any, 4,
       "J_max(B_{n-1,d}) - J_max(B_{n,d}) = -4(d-1)(2(n-1)-d) - 1, 2 <= d <= n-2", {}},
      {F::delta_minus_path, "delta_minus_path", false, P::any, P::any, 3,
       "J_max(P_{n-1}) - J_max(P_n) = -(2n-3)^2", {}},
  }};
  return ledger;
}

inline const FormulaInfo& formula_info(FormulaId id) {
  for (const auto& info : formula_ledger())
    if (info.id == id) return info;
  throw Error(ErrorCode::UnknownClaim, "formula id");
}

inline std::optional<FormulaId> parse_formula_id(std::string_view name) {
  for (const auto& info : formula_ledger())
    if (info.name == name) return info.id;
  return std::nullopt;
}

namespace detail {

inline bool parity_ok(Parity p, long long v) {
  return p == Parity::any || (p == Parity::odd) == (v % 2 != 0);
}

}  // namespace detail

/// Whether (n, d) lies in the display's stated range and parity case.
inline bool formula_applies(FormulaId id, long long n, long long d = 0) {
  const FormulaInfo& info = formula_info(id);
  if (n < static_cast<long long>(info.min_n)) return false;
  if (!detail::parity_ok(info.n_parity, n)) return false;
  if (!info.uses_d) return true;
  if (!detail::parity_ok(info.d_parity, d)) return false;
  long long max_d = id == FormulaId::delta_minus_broom ? n - 2 : n - 1;
  return 2 <= d && d <= max_d;
}

/// Exact value of a ledger entry; `d` is ignored by entries that depend on n only.
inline ExactRational closed_form(FormulaId id, long long n, long long d = 0) {
  const FormulaInfo& info = formula_info(id);
  if (!detail::parity_ok(info.n_parity, n) || (info.uses_d && !detail::parity_ok(info.d_parity, d)))
    throw Error(ErrorCode::ParityMismatch, std::string(info.name) + " at n=" + std::to_string(n) +
                                               (info.uses_d ? " d=" + std::to_string(d) : ""));
  if (!formula_applies(id, n, d))
    throw Error(ErrorCode::OutOfStatedRange, std::string(info.name) + " at n=" + std::to_string(n) +
                                                 (info.uses_d ? " d=" + std::to_string(d) : ""));
  using Q = ExactRational;
  const Q N(n), D(d);
  const Q N2 = N * N, N3 = N2 * N, D2 = D * D, D3 = D2 * D;
  switch (id) {
    case FormulaId::jmax_path: return Q(4, 3) * (N - 1) * (N - 1) * (N - 1) - (N - 1) / 3;
    case FormulaId::jmax_path_expanded_printed: return (4 * N3 - 4 * N2 + 11 * N) / 3 - 1;
    case FormulaId::tmeet_path: return (4 * N2 - 8 * N + 3) / 6;
    case FormulaId::tmeet_star: return 2 * N - Q(7, 2);
    case FormulaId::jmax_star_printed: return 2 * N2 - Q(11, 2) * N + Q(7, 2);
    case FormulaId::jmax_star_corrected: return 4 * N2 - 11 * N + 7;
    case FormulaId::jmin_path_odd: return (N3 - 3 * N2 + 2 * N) / 3;
    case FormulaId::jmin_path_even: return (N3 - 3 * N2 + 5 * N) / 3 - 1;
    case FormulaId::jmin_lever_odd: return N - 1 + (D3 - D) / 3;
    case FormulaId::jmin_lever_even: return N - 1 + (D3 - 4 * D) / 3;
    case FormulaId::bestmeet_lever:
      return (d % 2 ? D3 - D : D3 - 4 * D) / (6 * (N - 1)) + Q(1, 2);
    case FormulaId::jmax_broom: return 4 * (D - 1) * N2 + (5 - 4 * D2) * N + (4 * D3 - 4 * D - 3) / 3;
    case FormulaId::jmin_dbroom_oo: return (D - 2) * N2 - (D2 - 2 * D) * N + (D3 - 3 * D2 + 2 * D) / 3;
    case FormulaId::jmin_dbroom_oe: return (D - 2) * N2 - (D2 - 2 * D - 1) * N + (D3 - 3 * D2 - D) / 3 + 1;
    case FormulaId::jmin_dbroom_eo: return (D - 2) * N2 - (D2 - 2 * D - 2) * N + (D3 - 3 * D2 - D) / 3;
    case FormulaId::jmin_dbroom_ee: return (D - 2) * N2 - (D2 - 2 * D - 1) * N + (D3 - 3 * D2 + 2 * D) / 3 - 1;
    case FormulaId::bestmeet_dbroom_oo:
      return ((D - 2) * N - D2 + 3 * D - 2) / 2 + (D3 - 6 * D2 + 11 * D - 6) / (6 * (N - 1));
    case FormulaId::bestmeet_dbroom_oe:
      return ((D - 2) * N - D2 + 3 * D - 1) / 2 + (D3 - 6 * D2 + 8 * D) / (2 * (N - 1));
    case FormulaId::bestmeet_dbroom_oe_corrected:
      return ((D - 2) * N - D2 + 3 * D - 1) / 2 + (D3 - 6 * D2 + 8 * D) / (6 * (N - 1));
    case FormulaId::bestmeet_dbroom_eo:
      return ((D - 2) * N - D2 + 3 * D) / 2 + (D3 - 6 * D2 + 8 * D) / (6 * (N - 1));
    case FormulaId::bestmeet_dbroom_ee:
      return ((D - 2) * N - D2 + 3 * D - 1) / 2 + (D3 - 6 * D2 + 11 * D - 6) / (6 * (N - 1));
    case FormulaId::jmin_dnd_max:
      if (n % 2 == 0) return (N3 - 3 * N2 + 5 * N - 3) / 3;
      if (n <= 7) return (N3 - 3 * N2 + 2 * N) / 3;
      return (N3 - 3 * N2 + 5 * N - 24) / 3;
    case FormulaId::jmin_dnd_max_corrected:
      return n % 2 == 0 ? (N3 - 3 * N2 + 5 * N - 3) / 3 : (N3 - 3 * N2 + 2 * N) / 3;
    case FormulaId::bestmeet_pn: return n % 2 == 0 ? (N2 - 2 * N + 3) / 6 : (N2 - 2 * N) / 6;
    case FormulaId::bestmeet_bn_printed: return (N2 - 2 * N + 3) / 6 - Q(4) / (N - 1);
    case FormulaId::bestmeet_bn_corrected: return (N2 - 2 * N) / 6 - Q(4) / (N - 1);
    case FormulaId::big_delta_plus: return 4 * N2 - 4 * N + 1;
    case FormulaId::delta_plus: return 4 * (D - 1) * (2 * N - D) + 1;
    case FormulaId::delta_minus_broom: return -4 * (D - 1) * (2 * (N - 1) - D) - 1;
    case FormulaId::delta_minus_path: return -(2 * N - 3) * (2 * N - 3);
  }
  return 0;
}

/// J at the handle tip of B_{m,r}, valid down to the one-vertex handle r = 1
/// (a star seen from its center), where it counts the leaves.
inline ExactInt broom_tip_joining(long long m, long long r) {
  const ExactInt M(m), R(r);
  ExactInt cubic = 4 * R * R * R - 4 * R - 3;
  return 4 * (R - 1) * M * M + (5 - 4 * R * R) * M + cubic / 3;
}

/// The broom ordering facts used by the maximizing argument, read off the ledger.
inline bool delta_inequalities_hold(long long n, long long d) {
  if (n < 4 || d < 2 || d > n - 1)
    throw Error(ErrorCode::OutOfStatedRange,
                "delta inequalities need n >= 4 and 2 <= d <= n-1, got n=" + std::to_string(n) +
                    " d=" + std::to_string(d));
  auto dplus = [](long long nn, long long dd) { return closed_form(FormulaId::delta_plus, nn, dd); };
  ExactRational minus = d <= n - 2 ? closed_form(FormulaId::delta_minus_broom, n, d)
                                   : closed_form(FormulaId::delta_minus_path, n);
  ExactRational big = closed_form(FormulaId::big_delta_plus, n, d);
  return dplus(n + 1, d) > dplus(n, d) && dplus(n, n - 1) > dplus(n - 1, n - 2) && big > dplus(n, d) &&
         dplus(n, d) > -minus;
}

}  // namespace treewalk
