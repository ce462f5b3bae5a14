#pragma once

// Artinian quotients R/(L_1^{a_1}, ..., L_r^{a_r}) by powers of random general
// linear forms: Hilbert functions, socle dimensions and ranks of ×L^j.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/polyspace.hpp"
#include "lefschetz/primefield.hpp"

namespace lefschetz {

struct QuotientSpec {
  std::vector<int> exponents;
  std::uint64_t seed = 0;
  Prime prime{};

  static QuotientSpec uniform(int k, int r, std::uint64_t seed = 0, Prime prime = Prime{}) {
    return {std::vector<int>(static_cast<std::size_t>(r), k), seed, prime};
  }

  int forms() const noexcept { return static_cast<int>(exponents.size()); }
  bool is_uniform() const noexcept {
    return !exponents.empty() &&
           std::all_of(exponents.begin(), exponents.end(), [&](int a) { return a == exponents.front(); });
  }
  int max_exponent() const { return *std::max_element(exponents.begin(), exponents.end()); }
  int min_exponent() const { return *std::min_element(exponents.begin(), exponents.end()); }

  void validate() const {
    if (exponents.empty()) throw PreconditionViolation("quotient needs at least one generator");
    for (int a : exponents)
      if (a < 1) throw PreconditionViolation("generator exponents must be >= 1");
  }
};

struct QuotientOptions {
  int retries = 3;
  std::optional<int> degree_cap;  // default 4·max(a_i) + 16

  int cap_for(const QuotientSpec& spec) const { return degree_cap.value_or(4 * spec.max_exponent() + 16); }
};

/// h(0), ..., h(D) with h(D) the last nonzero value; zero outside.
struct HilbertFunction {
  std::vector<std::int64_t> values;

  std::int64_t operator()(int d) const {
    if (d < 0 || d >= static_cast<int>(values.size())) return 0;
    return values[static_cast<std::size_t>(d)];
  }
  int socle_degree() const noexcept { return static_cast<int>(values.size()) - 1; }
  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

/// Outcome of ×L^j : [R/I]_{δ-j} -> [R/I]_δ.
struct RankVerdict {
  int degree = 0;
  int power = 0;
  std::int64_t dim_source = 0;
  std::int64_t dim_target = 0;
  std::int64_t rank = 0;

  std::int64_t deficiency() const noexcept { return std::min(dim_source, dim_target) - rank; }
  bool maximal_rank() const noexcept { return deficiency() == 0; }
  friend bool operator==(const RankVerdict&, const RankVerdict&) = default;
};

/// Spanning rows of [I]_d in the original coordinates: every L_i^{a_i}·m with
/// deg m = d - a_i. Uses the forms of the first draw of `spec`.
inline PrimeFieldMatrix ideal_degree_piece(const QuotientSpec& spec, int d) {
  spec.validate();
  if (d < 0) throw PreconditionViolation("ideal_degree_piece: negative degree");
  const Prime& p = spec.prime;
  auto forms = draw_general_forms(spec.exponents.size() + 1, derive_seed(spec.seed, 0), p);
  std::vector<std::vector<Residue>> rows;
  const auto width = static_cast<std::size_t>(ring_dim(d));
  for (std::size_t i = 0; i < spec.exponents.size(); ++i) {
    int a = spec.exponents[i];
    if (a > d) continue;
    auto g = expand_power(forms[i], a, p);
    auto terms = graded_basis(a);
    for (const auto& m : graded_basis(d - a)) {
      std::vector<Residue> row(width, 0);
      for (std::size_t t = 0; t < terms.size(); ++t) row[monomial_index(terms[t] * m)] = g.coeffs[t];
      rows.push_back(std::move(row));
    }
  }
  PrimeFieldMatrix out(p, rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < width; ++c) out.set(r, c, rows[r][c]);
  return out;
}

/// One concrete draw of the forms L_1..L_r and of the multiplier L.
///
/// The first three forms are moved to x, y, z by a linear change of
/// coordinates, so their powers become monomials and only the remaining
/// generators need elimination. This is an isomorphism of graded algebras that
/// carries L along, so all dimensions and ranks are those of the drawn forms.
class QuotientInstance {
 public:
  QuotientInstance(const QuotientSpec& spec, int attempt)
      : prime_(spec.prime), exponents_(spec.exponents) {
    spec.validate();
    const std::size_t r = exponents_.size();
    forms_ = draw_general_forms(r + 1, derive_seed(spec.seed, static_cast<std::uint64_t>(attempt)), prime_);
    if (r >= 3) {
      normalize();
      caps_ = {exponents_[0], exponents_[1], exponents_[2]};
      first_general_ = 3;
    }
    for (std::size_t i = first_general_; i < r; ++i) generators_.push_back(expand_power(forms_[i], exponents_[i], prime_));
  }

  /// Forms in the working coordinates; the last one is the multiplier L.
  const std::vector<LinearForm>& forms() const noexcept { return forms_; }
  const LinearForm& multiplier() const noexcept { return forms_.back(); }

  /// True when R/I has nonzero z^d in every degree, i.e. the forms do not span.
  bool obviously_infinite() const noexcept { return exponents_.size() < 3; }

  std::int64_t hilbert(int d) {
    if (d < 0) return 0;
    const auto& pc = piece(d);
    return static_cast<std::int64_t>(pc.local_size() - pc.echelon.rank());
  }

  /// Rank of ×L^j : [R/I]_{δ-j} -> [R/I]_δ.
  std::int64_t mult_rank(int j, int delta) {
    if (j < 0) throw PreconditionViolation("mult_rank: negative power");
    if (delta < j || delta < 0) return 0;
    const auto& src = piece(delta - j);
    if (src.standard.empty()) return 0;
    const auto& dst = piece(delta);
    if (dst.standard.empty()) return 0;
    auto& power = multiplier_power(j);
    auto terms = graded_basis(j);
    RowEchelon image(prime_, dst.local_size());
    for (const auto& m : src.standard) {
      std::vector<Residue> row(dst.local_size(), 0);
      for (std::size_t t = 0; t < terms.size(); ++t) {
        if (power.coeffs[t] == 0) continue;
        int loc = dst.local[monomial_index(terms[t] * m)];
        if (loc >= 0) row[static_cast<std::size_t>(loc)] = prime_.add(row[static_cast<std::size_t>(loc)], power.coeffs[t]);
      }
      dst.echelon.reduce(row);
      image.insert(std::move(row));
      if (image.rank() == dst.standard.size()) break;
    }
    return static_cast<std::int64_t>(image.rank());
  }

  /// dim {f in [R/I]_d : x f = y f = z f = 0}.
  std::int64_t socle_dimension(int d) {
    if (d < 0) return 0;
    const auto& src = piece(d);
    if (src.standard.empty()) return 0;
    const auto& dst = piece(d + 1);
    const std::size_t w = dst.local_size();
    RowEchelon image(prime_, 3 * w);
    const Monomial shifts[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const auto& m : src.standard) {
      std::vector<Residue> row(3 * w, 0);
      for (int v = 0; v < 3; ++v) {
        int loc = dst.local[monomial_index(m * shifts[v])];
        if (loc < 0) continue;
        std::vector<Residue> seg(w, 0);
        seg[static_cast<std::size_t>(loc)] = 1;
        dst.echelon.reduce(seg);
        std::copy(seg.begin(), seg.end(), row.begin() + static_cast<std::ptrdiff_t>(v * w));
      }
      image.insert(std::move(row));
    }
    return static_cast<std::int64_t>(src.standard.size() - image.rank());
  }

 private:
  struct Piece {
    // local[i] = column of global monomial i, or -1 when it lies in the monomial part of I
    std::vector<int> local;
    std::vector<Monomial> local_monomials;
    RowEchelon echelon;
    std::vector<Monomial> standard;  // monomials at non-pivot columns: a basis of [R/I]_d

    std::size_t local_size() const noexcept { return local_monomials.size(); }
  };

  void normalize() {
    // Rows of A are L_1, L_2, L_3; new coordinates w = A v, so L_i = c_i A^{-1} w.
    const Prime& p = prime_;
    const auto& a = forms_;
    Residue det = determinant(a[0], a[1], a[2], p);
    Residue inv_det = p.inv(det);
    std::array<std::array<Residue, 3>, 3> adj{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        // adjugate(A)[i][j] = cofactor(A)[j][i]
        int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        Residue cof = p.sub(p.mul(a[static_cast<std::size_t>(r0)].c[static_cast<std::size_t>(c0)], a[static_cast<std::size_t>(r1)].c[static_cast<std::size_t>(c1)]),
                            p.mul(a[static_cast<std::size_t>(r0)].c[static_cast<std::size_t>(c1)], a[static_cast<std::size_t>(r1)].c[static_cast<std::size_t>(c0)]));
        adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p.mul(cof, inv_det);
      }
    }
    for (auto& f : forms_) {
      LinearForm g;
      for (int col = 0; col < 3; ++col) {
        Residue s = 0;
        for (int l = 0; l < 3; ++l) s = p.add(s, p.mul(f.c[static_cast<std::size_t>(l)], adj[static_cast<std::size_t>(l)][static_cast<std::size_t>(col)]));
        g.c[static_cast<std::size_t>(col)] = s;
      }
      f = g;
    }
  }

  const HomogeneousPoly& multiplier_power(int j) {
    auto it = powers_.find(j);
    if (it == powers_.end()) it = powers_.emplace(j, expand_power(multiplier(), j, prime_)).first;
    return it->second;
  }

  const Piece& piece(int d) {
    auto it = pieces_.find(d);
    if (it != pieces_.end()) return *it->second;
    auto basis = graded_basis(d);
    std::vector<int> local(basis.size(), -1);
    std::vector<Monomial> local_monomials;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& m = basis[i];
      if (m.x < caps_[0] && m.y < caps_[1] && m.z < caps_[2]) {
        local[i] = static_cast<int>(local_monomials.size());
        local_monomials.push_back(m);
      }
    }
    auto pc = std::make_unique<Piece>(Piece{std::move(local), std::move(local_monomials),
                                            RowEchelon(prime_, 0), {}});
    pc->echelon = RowEchelon(prime_, pc->local_size());
    for (std::size_t g = 0; g < generators_.size() && !pc->echelon.full(); ++g) {
      const auto& gen = generators_[g];
      if (gen.degree > d) continue;
      auto terms = graded_basis(gen.degree);
      for (const auto& m : graded_basis(d - gen.degree)) {
        std::vector<Residue> row(pc->local_size(), 0);
        bool any = false;
        for (std::size_t t = 0; t < terms.size(); ++t) {
          if (gen.coeffs[t] == 0) continue;
          int loc = pc->local[monomial_index(terms[t] * m)];
          if (loc < 0) continue;
          row[static_cast<std::size_t>(loc)] = gen.coeffs[t];
          any = true;
        }
        if (any) pc->echelon.insert(std::move(row));
        if (pc->echelon.full()) break;
      }
    }
    for (auto c : pc->echelon.free_columns()) pc->standard.push_back(pc->local_monomials[c]);
    return *pieces_.emplace(d, std::move(pc)).first->second;
  }

  Prime prime_;
  std::vector<int> exponents_;
  std::vector<LinearForm> forms_;
  std::array<int, 3> caps_{INT_MAX, INT_MAX, INT_MAX};
  std::size_t first_general_ = 0;
  std::vector<HomogeneousPoly> generators_;
  std::map<int, HomogeneousPoly> powers_;
  std::map<int, std::unique_ptr<Piece>> pieces_;
};

namespace detail {

inline HilbertFunction instance_hilbert(QuotientInstance& inst, const QuotientSpec& spec, int cap) {
  if (inst.obviously_infinite()) {
    throw DegreeCapExceeded("Hilbert function never vanishes: " + std::to_string(spec.forms()) +
                            " linear form(s) cannot span R_1 (degree cap " + std::to_string(cap) + ")");
  }
  HilbertFunction hf;
  for (int d = 0;; ++d) {
    auto h = inst.hilbert(d);
    if (h == 0) break;
    if (d > cap) {
      throw DegreeCapExceeded("Hilbert function still positive in degree " + std::to_string(d) +
                              " beyond cap " + std::to_string(cap));
    }
    hf.values.push_back(h);
  }
  return hf;
}

inline void check_retries(const QuotientOptions& o) {
  if (o.retries < 1) throw PreconditionViolation("retries must be >= 1");
}

inline HilbertFunction pointwise_min(const HilbertFunction& a, const HilbertFunction& b) {
  HilbertFunction out;
  for (int d = 0; d < std::max(a.socle_degree(), b.socle_degree()) + 1; ++d) out.values.push_back(std::min(a(d), b(d)));
  while (!out.values.empty() && out.values.back() == 0) out.values.pop_back();
  return out;
}

}  // namespace detail

/// Generic Hilbert function: the pointwise minimum over `retries` independent draws.
inline HilbertFunction hilbert_function(const QuotientSpec& spec, const QuotientOptions& options = {}) {
  spec.validate();
  detail::check_retries(options);
  std::optional<HilbertFunction> best;
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    QuotientInstance inst(spec, attempt);
    auto hf = detail::instance_hilbert(inst, spec, options.cap_for(spec));
    best = best ? detail::pointwise_min(*best, hf) : hf;
  }
  return *best;
}

/// Ranks of ×L^j for every requested (j, δ), maximized over draws, with
/// dimensions minimized over draws.
inline std::vector<RankVerdict> mult_map_ranks(const QuotientSpec& spec,
                                               const std::vector<std::pair<int, int>>& power_degree,
                                               const QuotientOptions& options = {}) {
  spec.validate();
  detail::check_retries(options);
  std::vector<RankVerdict> out(power_degree.size());
  for (std::size_t i = 0; i < power_degree.size(); ++i) {
    auto [j, delta] = power_degree[i];
    if (j < 1 || delta < 0) throw PreconditionViolation("mult_map_rank needs j >= 1 and δ >= 0");
    out[i] = {delta, j, INT64_MAX, INT64_MAX, 0};
  }
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    QuotientInstance inst(spec, attempt);
    for (auto& v : out) {
      v.dim_source = std::min(v.dim_source, inst.hilbert(v.degree - v.power));
      v.dim_target = std::min(v.dim_target, inst.hilbert(v.degree));
      v.rank = std::max(v.rank, inst.mult_rank(v.power, v.degree));
    }
  }
  return out;
}

inline RankVerdict mult_map_rank(const QuotientSpec& spec, int j, int delta, const QuotientOptions& options = {}) {
  return mult_map_ranks(spec, {{j, delta}}, options).front();
}

/// Generic socle dimension in degree d: the minimum over draws.
inline std::int64_t socle_dimension(const QuotientSpec& spec, int d, const QuotientOptions& options = {}) {
  spec.validate();
  detail::check_retries(options);
  if (d < 0) throw PreconditionViolation("socle_dimension: negative degree");
  std::int64_t best = INT64_MAX;
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    QuotientInstance inst(spec, attempt);
    best = std::min(best, inst.socle_dimension(d));
  }
  return best;
}

/// Socle dimensions in degrees 0..socle degree.
inline std::vector<std::int64_t> socle_vector(const QuotientSpec& spec, const QuotientOptions& options = {}) {
  auto hf = hilbert_function(spec, options);
  std::vector<std::int64_t> out(hf.values.size(), INT64_MAX);
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    QuotientInstance inst(spec, attempt);
    for (int d = 0; d <= hf.socle_degree(); ++d)
      out[static_cast<std::size_t>(d)] = std::min(out[static_cast<std::size_t>(d)], inst.socle_dimension(d));
  }
  return out;
}

}  // namespace lefschetz
