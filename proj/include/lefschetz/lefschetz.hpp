#pragma once

// Maximal rank of ×L^j on R/(L_1^k, ..., L_r^k): the closed forms (critical
// degrees, C1 - C2, peaks, predicted failures) and the degree-by-degree scans
// that check them.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lefschetz/duality.hpp"
#include "lefschetz/fatpoints.hpp"
#include "lefschetz/quotient.hpp"

namespace lefschetz {

/// dim [I_X^m]_d for X four general points, read off the resolution
/// 0 -> R(-2m-2)^m -> R(-2m)^{m+1} -> I_X^m -> 0.
constexpr std::int64_t four_point_power_dim(int m, int d) {
  return (m + 1) * ring_dim(d - 2 * m) - m * ring_dim(d - 2 * m - 2);
}

/// Hilbert function of R/(L_1^k, ..., L_4^k) in closed form.
inline HilbertFunction closed_form_hilbert_r4(int k) {
  if (k < 2) throw PreconditionViolation("closed_form_hilbert_r4 needs k >= 2");
  HilbertFunction hf;
  for (int d = 0; d <= 2 * k - 2; ++d) hf.values.push_back(d < k ? ring_dim(d) : four_point_power_dim(d - k + 1, d));
  return hf;
}

/// Hilbert function of the complete intersection R/(x^k, y^k, z^k): coefficients of (1 + t + ... + t^{k-1})^3.
inline HilbertFunction closed_form_hilbert_ci(int k) {
  std::vector<std::int64_t> poly{1};
  for (int f = 0; f < 3; ++f) {
    std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(k) - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (int t = 0; t < k; ++t) next[i + static_cast<std::size_t>(t)] += poly[i];
    poly = std::move(next);
  }
  return {poly};
}

struct CriticalDegrees {
  int a = 0;  // max δ with h(δ-j) <= h(δ)
  int b = 0;  // min δ with h(δ-j) >= h(δ)
  friend bool operator==(const CriticalDegrees&, const CriticalDegrees&) = default;
};

/// a and b for r = 4 from the linear form of C1 - C2, keyed on k mod 3 and the parity of j.
inline CriticalDegrees critical_degrees_closed_form(int k, int j) {
  if (k < 3 || j < 2) throw PreconditionViolation("critical_degrees_closed_form needs k >= 3 and j >= 2");
  const int k0 = k / 3;
  const int residue = k % 3;
  CriticalDegrees cd;
  if (j % 2 == 1) {
    const int base = 4 * k0 + (j - 1) / 2;
    static constexpr int da[3] = {-1, 0, 1};
    static constexpr int db[3] = {-1, 1, 2};
    cd = {base + da[residue], base + db[residue]};
  } else {
    const int base = 4 * k0 + j / 2;
    static constexpr int da[3] = {-2, -1, 1};
    static constexpr int db[3] = {-1, 0, 2};
    cd = {base + da[residue], base + db[residue]};
  }
  if (cd.a < j + k - 1) {
    throw OutOfRange("closed form for a, b needs a >= j + k - 1 (k=" + std::to_string(k) + ", j=" +
                     std::to_string(j) + ", a=" + std::to_string(cd.a) + ")");
  }
  return cd;
}

/// a and b read directly off a Hilbert function, with δ ranging up to the
/// socle degree for a. When j exceeds the socle degree this gives (D, D+1).
inline CriticalDegrees critical_degrees_scan(const HilbertFunction& h, int j) {
  const int top = h.socle_degree();
  CriticalDegrees cd{-1, -1};
  for (int d = 0; d <= top; ++d)
    if (h(d - j) <= h(d)) cd.a = d;
  for (int d = 0; d <= top + j + 1; ++d) {
    if (h(d - j) >= h(d)) {
      cd.b = d;
      break;
    }
  }
  return cd;
}

enum class C1C2Case { LargeDegree = 1, SmallDegree = 2 };

struct C1C2 {
  int delta = 0;
  int j = 0;
  int k = 0;
  std::int64_t c1 = 0;  // dim [R/I]_{δ-j}
  std::int64_t c2 = 0;  // dim [R/I]_δ
  std::int64_t difference = 0;
  C1C2Case which = C1C2Case::LargeDegree;
};

/// C1 - C2 for r = 4 and k <= δ <= 2k-2: the linear formula when δ >= j+k-1,
/// the quadratic one when δ <= j+k-2. c1 and c2 come from the four-point resolution.
inline C1C2 c1c2(int k, int j, int delta) {
  if (k < 2 || j < 1) throw PreconditionViolation("c1c2 needs k >= 2 and j >= 1");
  if (delta < k || delta > 2 * k - 2) {
    throw OutOfRange("c1c2 holds for k <= δ <= 2k-2 (k=" + std::to_string(k) + ", δ=" + std::to_string(delta) + ")");
  }
  C1C2 out{delta, j, k, 0, 0, 0, C1C2Case::LargeDegree};
  const std::int64_t d = delta;
  if (delta >= j + k - 1) {
    out.which = C1C2Case::LargeDegree;
    out.difference = 3 * std::int64_t{j} * d - 4 * std::int64_t{k} * j - 3 * choose2(j - 1) + 3;
    out.c1 = four_point_power_dim(delta - j - k + 1, delta - j);
  } else {
    out.which = C1C2Case::SmallDegree;
    out.difference = choose2(d - j + 2) - choose2(2 * std::int64_t{k} - d) + (2 * d - 4 * k + 3) * (d - k + 1);
    out.c1 = ring_dim(delta - j);
  }
  out.c2 = four_point_power_dim(delta - k + 1, delta);
  return out;
}

struct PeakProfile {
  int r = 0;
  int k = 0;
  int k0 = 0;
  int e = 0;
  int peak_case = 0;  // 1, 2 or 3
  std::vector<int> peaks;
};

/// Peak degrees of the Hilbert function of R/(L_1^k, ..., L_r^k), r >= 5, with k = (r-1)k0 + e.
inline PeakProfile peaks(int r, int k) {
  if (r < 5 || k < 2) throw PreconditionViolation("peaks needs r >= 5 and k >= 2");
  PeakProfile p{r, k, k / (r - 1), k % (r - 1), 0, {}};
  if (k <= r - 2) {
    p.peak_case = 1;
    p.peaks = {k - 1};
  } else if (p.e >= 1) {
    p.peak_case = 2;
    p.peaks = {r * p.k0 + p.e - 1};
  } else {
    p.peak_case = 3;
    p.peaks = {r * p.k0 - 2, r * p.k0 - 1};
  }
  return p;
}

/// Degrees where a Hilbert function attains its maximum.
inline std::vector<int> argmax_degrees(const HilbertFunction& h) {
  std::vector<int> out;
  auto top = *std::max_element(h.values.begin(), h.values.end());
  for (int d = 0; d <= h.socle_degree(); ++d)
    if (h(d) == top) out.push_back(d);
  return out;
}

struct Failure {
  int degree = 0;
  std::int64_t deficiency = 0;
  friend bool operator==(const Failure&, const Failure&) = default;
};

inline bool prediction_in_scope(int k, int r, int j) {
  if (j == 2) return r >= 3 && k >= 2;
  return r == 4 && j >= 3 && j <= 5 && k >= 3 && (j != 5 || k >= 4);
}

/// Failures of maximal rank for ×L^j on R/(L_1^k, ..., L_r^k) where a closed form
/// is known: j = 2 for any r, and r = 4 with j = 3, 4, 5.
inline std::vector<Failure> predict(int k, int r, int j) {
  if (!prediction_in_scope(k, r, j)) {
    throw UnsupportedParameters("no closed-form prediction for k=" + std::to_string(k) + ", r=" + std::to_string(r) +
                                ", j=" + std::to_string(j));
  }
  if (j == 2) return {};
  const int k0 = k / 3;
  switch (j * 3 + k % 3) {
    case 9:  // j = 3, k = 3k0
      return {{4 * k0, 1}};
    case 13:  // j = 4, k = 3k0+1
      return {{4 * k0 + 2, 1}};
    case 14:  // j = 4, k = 3k0+2
      return {{4 * k0 + 3, 1}};
    case 15:  // j = 5, k = 3k0
      return {{4 * k0 + 1, 3}};
    case 16:  // j = 5, k = 3k0+1
      return {{4 * k0 + 2, 1}};
    case 17:  // j = 5, k = 3k0+2
      return {{4 * k0 + 4, 1}};
    default:
      return {};
  }
}

enum class ScanMode { Full, TwoDegree };
enum class Engine { Algebra, Points };

struct ScanOptions {
  QuotientOptions quotient;
  ScanMode mode = ScanMode::Full;
  Engine engine = Engine::Algebra;
};

struct LefschetzReport {
  QuotientSpec spec;
  int power = 0;
  ScanMode mode = ScanMode::Full;
  Provenance provenance = Provenance::Oracle;
  HilbertFunction hilbert;
  CriticalDegrees critical;
  std::vector<RankVerdict> verdicts;
  std::vector<Failure> failures;
  std::optional<std::vector<Failure>> prediction;
  std::optional<bool> agreement;
  bool monotone_surjectivity = true;
  // Two-degree mode: injective at a and surjective at b, so maximal rank everywhere.
  std::optional<bool> two_degree_certificate;
};

namespace detail {

inline OracleOptions oracle_options_for(const QuotientSpec& spec, const QuotientOptions& q) {
  return {spec.seed, spec.prime, q.retries};
}

inline std::vector<RankVerdict> verdicts_by_points(const QuotientSpec& spec, int j, const HilbertFunction& h,
                                                   const std::vector<int>& degrees, const OracleOptions& fopt,
                                                   Provenance& provenance) {
  const int k = spec.exponents.front();
  const int r = spec.forms();
  std::vector<RankVerdict> out;
  for (int delta : degrees) {
    RankVerdict v{delta, j, h(delta - j), h(delta), 0};
    std::int64_t coker;
    if (v.dim_target == 0) {
      coker = 0;
    } else if (delta < k) {
      coker = ring_dim(delta) - ring_dim(delta - j);
    } else if (delta < j) {
      coker = v.dim_target;
    } else {
      auto res = coker_dim_with_extra_power(k, r, j, delta, fopt);
      if (res.provenance == Provenance::Oracle) provenance = Provenance::Oracle;
      coker = res.value;
    }
    v.rank = v.dim_target - coker;
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// Scans ×L^j for every j in `powers`, sharing one Hilbert function.
inline std::vector<LefschetzReport> scan_powers(const QuotientSpec& spec, const std::vector<int>& powers,
                                                const ScanOptions& options = {}) {
  spec.validate();
  for (int j : powers)
    if (j < 1) throw PreconditionViolation("scan needs j >= 1");
  const bool uniform = spec.is_uniform();
  const int k = spec.exponents.front();
  const int r = spec.forms();
  if (options.mode == ScanMode::TwoDegree && !(uniform && r == 4)) {
    throw UnsupportedParameters("two-degree mode is only justified for four uniform powers");
  }
  if (options.engine == Engine::Points && !uniform) {
    throw UnsupportedParameters("the points engine handles uniform exponents only");
  }
  const auto fopt = detail::oracle_options_for(spec, options.quotient);

  HilbertFunction h;
  Provenance provenance = Provenance::Oracle;
  if (options.engine == Engine::Points) {
    auto ph = hilbert_function_via_points(spec, options.quotient, fopt);
    h = ph.hf;
    provenance = ph.provenance;
  } else {
    h = hilbert_function(spec, options.quotient);
  }
  const int top = h.socle_degree();

  std::vector<LefschetzReport> reports;
  std::vector<std::pair<int, int>> wanted;  // nontrivial (j, δ) for the algebra engine
  for (int j : powers) {
    LefschetzReport rep;
    rep.spec = spec;
    rep.power = j;
    rep.mode = options.mode;
    rep.hilbert = h;
    rep.critical = critical_degrees_scan(h, j);
    std::vector<int> degrees;
    if (options.mode == ScanMode::Full) {
      for (int d = 0; d <= top + j; ++d) degrees.push_back(d);
    } else {
      degrees.push_back(rep.critical.a);
      if (rep.critical.b != rep.critical.a) degrees.push_back(rep.critical.b);
    }
    if (options.engine == Engine::Points) {
      rep.verdicts = detail::verdicts_by_points(spec, j, h, degrees, fopt, provenance);
    } else {
      for (int d : degrees) {
        rep.verdicts.push_back({d, j, h(d - j), h(d), 0});
        if (h(d - j) > 0 && h(d) > 0) wanted.emplace_back(j, d);
      }
    }
    reports.push_back(std::move(rep));
  }

  if (options.engine == Engine::Algebra && !wanted.empty()) {
    auto computed = mult_map_ranks(spec, wanted, options.quotient);
    for (auto& rep : reports) {
      for (auto& v : rep.verdicts) {
        auto it = std::find_if(computed.begin(), computed.end(),
                               [&](const RankVerdict& c) { return c.power == v.power && c.degree == v.degree; });
        if (it == computed.end()) continue;
        // Dimensions stay those of the generic Hilbert function.
        v.rank = std::min(it->rank, std::min(v.dim_source, v.dim_target));
      }
    }
  }

  for (auto& rep : reports) {
    rep.provenance = provenance;
    bool surjective_seen = false;
    for (const auto& v : rep.verdicts) {
      if (v.deficiency() != 0) rep.failures.push_back({v.degree, v.deficiency()});
      if (options.mode == ScanMode::Full) {
        if (surjective_seen && v.rank != v.dim_target) rep.monotone_surjectivity = false;
        if (v.maximal_rank() && v.dim_source >= v.dim_target) surjective_seen = true;
      }
    }
    if (options.mode == ScanMode::TwoDegree) {
      bool injective_at_a = false;
      bool surjective_at_b = false;
      for (const auto& v : rep.verdicts) {
        if (v.degree == rep.critical.a && v.rank == v.dim_source) injective_at_a = true;
        if (v.degree == rep.critical.b && v.rank == v.dim_target) surjective_at_b = true;
      }
      rep.two_degree_certificate = injective_at_a && surjective_at_b;
    }
    if (uniform && prediction_in_scope(k, r, rep.power)) {
      rep.prediction = predict(k, r, rep.power);
      rep.agreement = *rep.prediction == rep.failures;
    }
  }
  return reports;
}

inline LefschetzReport scan(const QuotientSpec& spec, int j, const ScanOptions& options = {}) {
  return scan_powers(spec, {j}, options).front();
}

struct TableRow {
  int j = 0;
  std::vector<int> k_values;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// For each j in [j_min, j_max], the k in [k_min, k_max] for which ×L^j fails
/// maximal rank in some degree on R/(L_1^k, ..., L_r^k).
inline std::vector<TableRow> experiment_table(int r, int j_min, int j_max, int k_min, int k_max,
                                              std::uint64_t seed = 0, Prime prime = Prime{},
                                              const ScanOptions& options = {}) {
  if (j_min < 1 || j_min > j_max || k_min < 1 || k_min > k_max || r < 3) {
    throw PreconditionViolation("experiment_table: empty or invalid range");
  }
  std::vector<int> powers;
  for (int j = j_min; j <= j_max; ++j) powers.push_back(j);
  std::vector<TableRow> rows;
  for (int j : powers) rows.push_back({j, {}});
  for (int k = k_min; k <= k_max; ++k) {
    auto reports = scan_powers(QuotientSpec::uniform(k, r, seed, prime), powers, options);
    for (std::size_t i = 0; i < reports.size(); ++i)
      if (!reports[i].failures.empty()) rows[i].k_values.push_back(k);
  }
  return rows;
}

}  // namespace lefschetz
