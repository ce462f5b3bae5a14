#pragma once

// Planar fat-point linear systems L(j; b_1, ..., b_n): degree-j plane curves
// with multiplicity >= b_i at n general points, measured as vector spaces.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lefschetz/polyspace.hpp"
#include "lefschetz/primefield.hpp"

namespace lefschetz {

struct LinearSystemSpec {
  int degree = 0;
  std::vector<int> multiplicities;

  /// Multiplicities sorted descending with zeros removed.
  LinearSystemSpec canonical() const {
    LinearSystemSpec s{degree, {}};
    for (int b : multiplicities) {
      if (b < 0) throw PreconditionViolation("multiplicities must be non-negative");
      if (b > 0) s.multiplicities.push_back(b);
    }
    std::sort(s.multiplicities.begin(), s.multiplicities.end(), std::greater<>());
    return s;
  }

  /// i-th multiplicity (0-based) with missing entries read as 0.
  int b(std::size_t i) const { return i < multiplicities.size() ? multiplicities[i] : 0; }

  std::string str() const {
    std::ostringstream os;
    os << "L(" << degree << ";";
    for (std::size_t i = 0; i < multiplicities.size(); ++i) os << (i ? "," : " ") << multiplicities[i];
    if (multiplicities.empty()) os << " -";
    os << ")";
    return os.str();
  }

  friend bool operator==(const LinearSystemSpec&, const LinearSystemSpec&) = default;
};

/// max{0, C(j+2,2) - Σ C(b_i+1,2)}, and 0 for j < 0.
inline std::int64_t expected_dim(const LinearSystemSpec& s) {
  if (s.degree < 0) return 0;
  std::int64_t v = ring_dim(s.degree);
  for (int b : s.multiplicities) v -= choose2(std::int64_t{b} + 1);
  return std::max<std::int64_t>(0, v);
}

/// Standard form in the plane: j >= b_1 + b_2 + b_3 for sorted b_i >= 0.
inline bool is_standard_form(const LinearSystemSpec& s) {
  auto c = s.canonical();
  return c.degree >= c.b(0) + c.b(1) + c.b(2);
}

/// Quadratic Cremona transformation based at the three largest multiplicities.
/// Applies when m = j - (b_1+b_2+b_3) < 0 and b_i + m >= 0 for i = 1,2,3.
inline std::optional<LinearSystemSpec> cremona_step(const LinearSystemSpec& s) {
  auto c = s.canonical();
  int m = c.degree - (c.b(0) + c.b(1) + c.b(2));
  if (m >= 0) return std::nullopt;
  if (c.b(2) + m < 0) return std::nullopt;  // b_3 is the smallest of the three
  c.multiplicities.resize(std::max<std::size_t>(c.multiplicities.size(), 3), 0);
  for (std::size_t i = 0; i < 3; ++i) c.multiplicities[i] += m;
  c.degree += m;
  return c.canonical();
}

/// Splits off the conic through the five largest points when 2j < b_1+...+b_5.
inline std::optional<LinearSystemSpec> bezout_conic_step(const LinearSystemSpec& s) {
  auto c = s.canonical();
  if (c.multiplicities.size() < 5) return std::nullopt;  // b_5 >= 1 after canonicalization
  int sum = 0;
  for (std::size_t i = 0; i < 5; ++i) sum += c.multiplicities[i];
  if (2 * c.degree >= sum) return std::nullopt;
  for (std::size_t i = 0; i < 5; ++i) c.multiplicities[i] -= 1;
  c.degree -= 2;
  return c.canonical();
}

/// Splits off the line through the two largest points when j < b_1 + b_2.
inline std::optional<LinearSystemSpec> bezout_line_step(const LinearSystemSpec& s) {
  auto c = s.canonical();
  if (c.multiplicities.size() < 2) return std::nullopt;
  if (c.degree >= c.multiplicities[0] + c.multiplicities[1]) return std::nullopt;
  c.multiplicities[0] -= 1;
  c.multiplicities[1] -= 1;
  c.degree -= 1;
  return c.canonical();
}

struct OracleOptions {
  std::uint64_t seed = 0;
  Prime prime{};
  int retries = 3;
};

/// Builds the interpolation conditions at random points and returns the kernel
/// dimension, minimized over `retries` draws of the points.
///
/// A point of multiplicity b contributes the C(b+1,2) partial derivatives of
/// order b-1; by Euler's relation these force all lower orders to vanish too
/// whenever b <= j. A multiplicity above j leaves only the zero curve.
inline std::int64_t oracle_dimension(const LinearSystemSpec& s, const OracleOptions& options = {}) {
  if (options.retries < 1) throw PreconditionViolation("retries must be >= 1");
  auto c = s.canonical();
  const int j = c.degree;
  if (j < 0) return 0;
  if (c.b(0) > j) return 0;
  if (c.multiplicities.empty()) return ring_dim(j);
  const Prime& p = options.prime;
  const auto lower_bound = expected_dim(c);
  const auto basis = graded_basis(j);

  // falling[e][a] = e (e-1) ... (e-a+1)
  std::vector<std::vector<Residue>> falling(static_cast<std::size_t>(j) + 1);
  for (int e = 0; e <= j; ++e) {
    auto& row = falling[static_cast<std::size_t>(e)];
    row.assign(static_cast<std::size_t>(e) + 1, 1);
    for (int a = 1; a <= e; ++a) row[static_cast<std::size_t>(a)] = p.mul(row[static_cast<std::size_t>(a) - 1], p.reduce(e - a + 1));
  }

  std::int64_t best = INT64_MAX;
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    auto points = draw_general_forms(c.multiplicities.size(), derive_seed(options.seed, static_cast<std::uint64_t>(attempt)), p);
    RowEchelon conditions(p, basis.size());
    for (std::size_t i = 0; i < points.size() && !conditions.full(); ++i) {
      std::array<std::vector<Residue>, 3> pw;
      for (int v = 0; v < 3; ++v) {
        pw[static_cast<std::size_t>(v)].assign(static_cast<std::size_t>(j) + 1, 1);
        for (int e = 1; e <= j; ++e) pw[static_cast<std::size_t>(v)][static_cast<std::size_t>(e)] = p.mul(pw[static_cast<std::size_t>(v)][static_cast<std::size_t>(e) - 1], points[i].c[static_cast<std::size_t>(v)]);
      }
      for (const auto& alpha : graded_basis(c.multiplicities[i] - 1)) {
        std::vector<Residue> row(basis.size(), 0);
        for (std::size_t col = 0; col < basis.size(); ++col) {
          const auto& m = basis[col];
          if (m.x < alpha.x || m.y < alpha.y || m.z < alpha.z) continue;
          Residue v = p.mul(falling[static_cast<std::size_t>(m.x)][static_cast<std::size_t>(alpha.x)], pw[0][static_cast<std::size_t>(m.x - alpha.x)]);
          v = p.mul(v, p.mul(falling[static_cast<std::size_t>(m.y)][static_cast<std::size_t>(alpha.y)], pw[1][static_cast<std::size_t>(m.y - alpha.y)]));
          v = p.mul(v, p.mul(falling[static_cast<std::size_t>(m.z)][static_cast<std::size_t>(alpha.z)], pw[2][static_cast<std::size_t>(m.z - alpha.z)]));
          row[col] = v;
        }
        conditions.insert(std::move(row));
        if (conditions.full()) break;
      }
    }
    best = std::min(best, static_cast<std::int64_t>(basis.size() - conditions.rank()));
    if (best == lower_bound) break;  // cannot go lower than the expected dimension
  }
  return best;
}

struct ReductionStep {
  std::string rule;  // "cremona", "bezout-conic", "bezout-line", "excess-multiplicity", "standard-form", "oracle"
  LinearSystemSpec result;
};

struct DimensionResult {
  std::int64_t value = 0;
  Provenance provenance = Provenance::Reduction;
  std::vector<ReductionStep> trace;
};

/// Largest number of general points for which standard form is known to imply non-speciality.
inline constexpr std::size_t kNonSpecialPointLimit = 9;

/// Dimension by Cremona and Bezout reductions down to standard form, where it
/// equals the expected dimension. Falls back to the interpolation oracle (and
/// says so in the provenance) when the reduction stalls.
inline DimensionResult dimension(const LinearSystemSpec& s, const OracleOptions& options = {}) {
  DimensionResult out;
  auto cur = s.canonical();
  while (true) {
    if (cur.degree < 0 || cur.b(0) > cur.degree) {
      out.trace.push_back({"excess-multiplicity", cur});
      out.value = 0;
      return out;
    }
    if (is_standard_form(cur)) {
      if (cur.multiplicities.size() > kNonSpecialPointLimit) break;
      out.trace.push_back({"standard-form", cur});
      out.value = expected_dim(cur);
      return out;
    }
    if (auto next = cremona_step(cur)) {
      out.trace.push_back({"cremona", *next});
      cur = *next;
    } else if (auto next2 = bezout_conic_step(cur)) {
      out.trace.push_back({"bezout-conic", *next2});
      cur = *next2;
    } else if (auto next3 = bezout_line_step(cur)) {
      out.trace.push_back({"bezout-line", *next3});
      cur = *next3;
    } else {
      break;
    }
  }
  out.trace.push_back({"oracle", cur});
  out.value = oracle_dimension(cur, options);
  out.provenance = Provenance::Oracle;
  return out;
}

}  // namespace lefschetz
