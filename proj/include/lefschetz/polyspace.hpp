#pragma once

// Graded pieces of R = k[x,y,z]: monomial bases in graded-lex order with
// x > y > z, powers of linear forms, and multiplication maps between pieces.

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "lefschetz/primefield.hpp"

namespace lefschetz {

struct Monomial {
  int x = 0;
  int y = 0;
  int z = 0;

  int degree() const noexcept { return x + y + z; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
};

/// dim R_d = C(d+2, 2), and 0 for negative d.
constexpr std::int64_t ring_dim(int d) { return d < 0 ? 0 : std::int64_t{d + 2} * (d + 1) / 2; }

/// Position of m inside the degree-|m| basis.
///
/// Monomials with larger x-exponent come first, then larger y-exponent, so
/// with s = deg - x the block of x-exponent x starts at s(s+1)/2.
constexpr std::size_t monomial_index(const Monomial& m) {
  auto s = static_cast<std::size_t>(m.y + m.z);
  return s * (s + 1) / 2 + static_cast<std::size_t>(m.z);
}

inline std::vector<Monomial> graded_basis(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  out.reserve(static_cast<std::size_t>(ring_dim(d)));
  for (int x = d; x >= 0; --x)
    for (int y = d - x; y >= 0; --y) out.push_back({x, y, d - x - y});
  return out;
}

struct LinearForm {
  std::array<Residue, 3> c{};

  bool is_zero() const noexcept { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// A homogeneous polynomial as a dense coefficient vector over graded_basis(degree).
struct HomogeneousPoly {
  int degree = 0;
  std::vector<Residue> coeffs;

  Residue at(const Monomial& m) const { return coeffs[monomial_index(m)]; }
};

/// f^k with multinomial coefficients C(k,a)·C(k-a,b) taken from Pascal's triangle mod p.
inline HomogeneousPoly expand_power(const LinearForm& f, int k, const Prime& prime) {
  if (k < 0) throw PreconditionViolation("expand_power: negative exponent");
  std::vector<std::vector<Residue>> pascal(static_cast<std::size_t>(k) + 1);
  for (int n = 0; n <= k; ++n) {
    auto& row = pascal[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 1; i < n; ++i) {
      row[static_cast<std::size_t>(i)] = prime.add(pascal[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(i) - 1],
                                                   pascal[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(i)]);
    }
  }
  std::array<std::vector<Residue>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    powers[v].assign(static_cast<std::size_t>(k) + 1, 1);
    for (int e = 1; e <= k; ++e) {
      powers[v][static_cast<std::size_t>(e)] =
          prime.mul(powers[v][static_cast<std::size_t>(e) - 1], prime.reduce_u(f.c[v]));
    }
  }
  HomogeneousPoly out{k, std::vector<Residue>(static_cast<std::size_t>(ring_dim(k)), 0)};
  for (const auto& m : graded_basis(k)) {
    Residue coef = prime.mul(pascal[static_cast<std::size_t>(k)][static_cast<std::size_t>(m.x)],
                             pascal[static_cast<std::size_t>(k - m.x)][static_cast<std::size_t>(m.y)]);
    coef = prime.mul(coef, powers[0][static_cast<std::size_t>(m.x)]);
    coef = prime.mul(coef, powers[1][static_cast<std::size_t>(m.y)]);
    coef = prime.mul(coef, powers[2][static_cast<std::size_t>(m.z)]);
    out.coeffs[monomial_index(m)] = coef;
  }
  return out;
}

/// Matrix of h -> g·h from R_d to R_{d+deg g}; rows index the target basis.
inline PrimeFieldMatrix multiplication_matrix(const HomogeneousPoly& g, int d, const Prime& prime) {
  if (d < 0 || g.degree < 0) throw PreconditionViolation("multiplication_matrix: negative degree");
  const auto source = graded_basis(d);
  const auto terms = graded_basis(g.degree);
  PrimeFieldMatrix m(prime, static_cast<std::size_t>(ring_dim(d + g.degree)), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    for (std::size_t t = 0; t < terms.size(); ++t) {
      if (g.coeffs[t] == 0) continue;
      m.set(monomial_index(terms[t] * source[col]), col, g.coeffs[t]);
    }
  }
  return m;
}

inline HomogeneousPoly multiply(const HomogeneousPoly& a, const HomogeneousPoly& b, const Prime& prime) {
  HomogeneousPoly out{a.degree + b.degree,
                      std::vector<Residue>(static_cast<std::size_t>(ring_dim(a.degree + b.degree)), 0)};
  const auto ta = graded_basis(a.degree);
  const auto tb = graded_basis(b.degree);
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t l = 0; l < tb.size(); ++l) {
      if (b.coeffs[l] == 0) continue;
      auto& slot = out.coeffs[monomial_index(ta[i] * tb[l])];
      slot = prime.add(slot, prime.mul(a.coeffs[i], b.coeffs[l]));
    }
  }
  return out;
}

/// SplitMix64 mix of (seed, attempt); the per-attempt seed used for retries.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t attempt) {
  std::uint64_t z = seed + (attempt + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// 3x3 determinant of the coefficient triples.
inline Residue determinant(const LinearForm& a, const LinearForm& b, const LinearForm& c, const Prime& p) {
  auto minor = [&](int i, int j) { return p.sub(p.mul(b.c[i], c.c[j]), p.mul(b.c[j], c.c[i])); };
  Residue d = p.mul(a.c[0], minor(1, 2));
  d = p.sub(d, p.mul(a.c[1], minor(0, 2)));
  return p.add(d, p.mul(a.c[2], minor(0, 1)));
}

inline bool proportional(const LinearForm& a, const LinearForm& b, const Prime& p) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p.mul(a.c[i], b.c[j]) != p.mul(a.c[j], b.c[i])) return false;
  return true;
}

/// `count` random linear forms (equivalently, points of P^2) in general position:
/// no form is zero, no two are proportional, no three are linearly dependent.
/// Deterministic in (count, seed, prime).
inline std::vector<LinearForm> draw_general_forms(std::size_t count, std::uint64_t seed, const Prime& prime) {
  std::mt19937_64 rng(seed);
  std::vector<LinearForm> forms;
  forms.reserve(count);
  while (forms.size() < count) {
    LinearForm f;
    for (auto& c : f.c) c = prime.reduce_u(rng());
    bool ok = !f.is_zero();
    for (std::size_t i = 0; ok && i < forms.size(); ++i) {
      if (proportional(f, forms[i], prime)) ok = false;
      for (std::size_t j = i + 1; ok && j < forms.size(); ++j) {
        if (determinant(forms[i], forms[j], f, prime) == 0) ok = false;
      }
    }
    if (ok) forms.push_back(f);
  }
  return forms;
}

}  // namespace lefschetz
