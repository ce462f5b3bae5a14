#pragma once

// Inverse-system duality between quotients by powers of general linear forms
// and fat-point systems at the dual points:
//   dim [R/(L_1^{a_1},...,L_n^{a_n})]_j = dim L(j; j-a_1+1, ..., j-a_n+1)   for j >= max a_i.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/fatpoints.hpp"
#include "lefschetz/quotient.hpp"

namespace lefschetz {

struct DualitySpec {
  std::vector<int> exponents;
  int degree = 0;
};

/// The fat-point system dual to degree `degree` of R/(L_i^{a_i}).
inline LinearSystemSpec dual_system(const DualitySpec& d) {
  if (d.exponents.empty()) throw PreconditionViolation("dual_system: no exponents");
  int top = *std::max_element(d.exponents.begin(), d.exponents.end());
  if (d.degree < top) {
    throw PreconditionViolation("duality needs degree >= max exponent (" + std::to_string(d.degree) + " < " +
                                std::to_string(top) + ")");
  }
  LinearSystemSpec s{d.degree, {}};
  for (int a : d.exponents) s.multiplicities.push_back(std::max(0, d.degree - a + 1));
  return s;
}

inline DimensionResult quotient_dim_via_points(const DualitySpec& d, const OracleOptions& options = {}) {
  return dimension(dual_system(d), options);
}

/// dim [R/(L_1^k, ..., L_r^k, L^j)]_δ, the cokernel of ×L^j into degree δ.
inline DimensionResult coker_dim_with_extra_power(int k, int r, int j, int delta, const OracleOptions& options = {}) {
  if (k < 1 || r < 1 || j < 1) throw PreconditionViolation("coker_dim_with_extra_power: k, r, j must be positive");
  if (delta < std::max(k, j)) {
    throw PreconditionViolation("coker_dim_with_extra_power needs δ >= max(k, j)");
  }
  std::vector<int> exps(static_cast<std::size_t>(r), k);
  exps.push_back(j);
  return quotient_dim_via_points({exps, delta}, options);
}

/// Hilbert function of R/(L_1^{a_1},...,L_r^{a_r}) with every degree >= max a_i
/// answered by fat points. Degrees below min a_i are ring dimensions; the
/// degrees in between (mixed exponents only) come from `spec` by linear algebra.
struct PointsHilbert {
  HilbertFunction hf;
  Provenance provenance = Provenance::Reduction;
};

inline PointsHilbert hilbert_function_via_points(const QuotientSpec& spec, const QuotientOptions& qopt = {},
                                                 const OracleOptions& fopt = {}) {
  spec.validate();
  if (spec.forms() < 3) throw DegreeCapExceeded("Hilbert function never vanishes for fewer than three forms");
  const int lo = spec.min_exponent();
  const int hi = spec.max_exponent();
  const int cap = qopt.cap_for(spec);
  PointsHilbert out;
  std::optional<HilbertFunction> middle;
  if (hi > lo) middle = hilbert_function(spec, qopt);
  for (int d = 0;; ++d) {
    std::int64_t h;
    if (d < lo) {
      h = ring_dim(d);
    } else if (d < hi) {
      h = (*middle)(d);
      out.provenance = Provenance::Oracle;
    } else {
      auto r = quotient_dim_via_points({spec.exponents, d}, fopt);
      if (r.provenance == Provenance::Oracle) out.provenance = Provenance::Oracle;
      h = r.value;
    }
    if (h == 0) break;
    if (d > cap) throw DegreeCapExceeded("Hilbert function still positive beyond cap " + std::to_string(cap));
    out.hf.values.push_back(h);
  }
  return out;
}

}  // namespace lefschetz
