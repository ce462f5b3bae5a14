#pragma once

// Arithmetic in F_p for a 62-bit prime p, and the dense linear algebra
// (rank, kernel dimension, stacked rank, semi-echelon bases) used by every
// dimension computation in the library.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/common.hpp"

namespace lefschetz {

using Residue = std::uint64_t;

/// 2^61 - 1, the default modulus.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

namespace detail {

inline std::uint64_t mulmod_generic(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_generic(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = mulmod_generic(r, b, m);
    b = mulmod_generic(b, b, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : bases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = powmod_generic(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_generic(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

/// A prime modulus 10^6 < p < 2^62 together with the field operations.
class Prime {
 public:
  explicit Prime(std::uint64_t p = kDefaultPrime) : p_(p) {
    if (p <= 1'000'000) {
      throw PreconditionViolation("prime modulus must exceed 10^6, got " + std::to_string(p));
    }
    if (p >= (std::uint64_t{1} << 62)) {
      throw PreconditionViolation("prime modulus must fit in 62 bits, got " + std::to_string(p));
    }
    if (!detail::is_prime_u64(p)) {
      throw PreconditionViolation("modulus " + std::to_string(p) + " is not prime");
    }
  }

  std::uint64_t value() const noexcept { return p_; }

  Residue reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  Residue reduce_u(std::uint64_t v) const noexcept { return v % p_; }

  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }

  Residue mul(Residue a, Residue b) const noexcept {
    if (p_ == kDefaultPrime) {
      auto prod = static_cast<unsigned __int128>(a) * b;
      std::uint64_t lo = static_cast<std::uint64_t>(prod) & kDefaultPrime;
      std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
      std::uint64_t s = lo + hi;
      return s >= kDefaultPrime ? s - kDefaultPrime : s;
    }
    return detail::mulmod_generic(a, b, p_);
  }

  Residue pow(Residue b, std::uint64_t e) const noexcept {
    Residue r = 1;
    while (e != 0) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  Residue inv(Residue a) const {
    if (a % p_ == 0) throw PreconditionViolation("inverse of zero in F_p");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint64_t p_;
};

/// Dense row-major matrix over F_p.
class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix(Prime prime, std::size_t rows, std::size_t cols)
      : prime_(prime), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static PrimeFieldMatrix from_rows(Prime prime,
                                    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::size_t ncols = rows.size() == 0 ? 0 : rows.begin()->size();
    PrimeFieldMatrix m(prime, rows.size(), ncols);
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != ncols) throw DimensionMismatch("ragged row list");
      std::size_t c = 0;
      for (auto v : row) m.set(r, c++, prime.reduce(v));
      ++r;
    }
    return m;
  }

  const Prime& prime() const noexcept { return prime_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Residue v) { data_[r * cols_ + c] = prime_.reduce_u(v); }

  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  PrimeFieldMatrix transpose() const {
    PrimeFieldMatrix t(prime_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
  }

  friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
    if (a.cols_ != b.rows_ || !(a.prime_ == b.prime_)) {
      throw DimensionMismatch("matrix product shape mismatch");
    }
    const Prime& p = a.prime_;
    PrimeFieldMatrix out(p, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        Residue f = a(i, l);
        if (f == 0) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          out.data_[i * out.cols_ + c] = p.add(out.data_[i * out.cols_ + c], p.mul(f, b(l, c)));
        }
      }
    }
    return out;
  }

  friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

 private:
  Prime prime_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Incrementally built semi-echelon basis of a row space.
///
/// Stored rows are normalized to 1 at their pivot and vanish at the pivot
/// columns of all earlier rows, so reducing a vector against the rows in
/// insertion order clears every pivot column.
class RowEchelon {
 public:
  RowEchelon(Prime prime, std::size_t cols) : prime_(prime), cols_(cols), is_pivot_(cols, false) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return pivots_.size(); }
  bool full() const noexcept { return pivots_.size() == cols_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool is_pivot(std::size_t c) const { return is_pivot_[c]; }

  /// Columns that carry no pivot, ascending.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    out.reserve(cols_ - pivots_.size());
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_pivot_[c]) out.push_back(c);
    return out;
  }

  /// Replace v by its normal form modulo the row space; zero at every pivot.
  void reduce(std::span<Residue> v) const {
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      Residue f = v[pivots_[i]];
      if (f == 0) continue;
      const Residue* row = rows_.data() + i * cols_;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (row[c] != 0) v[c] = prime_.sub(v[c], prime_.mul(f, row[c]));
      }
    }
  }

  /// Adds v to the row space. Returns true when the rank grew.
  bool insert(std::vector<Residue> v) {
    if (v.size() != cols_) throw DimensionMismatch("row length does not match echelon width");
    if (full()) return false;
    reduce(v);
    std::size_t pc = cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] != 0) {
        pc = c;
        break;
      }
    }
    if (pc == cols_) return false;
    Residue scale = prime_.inv(v[pc]);
    for (auto& x : v) x = prime_.mul(x, scale);
    rows_.insert(rows_.end(), v.begin(), v.end());
    pivots_.push_back(pc);
    is_pivot_[pc] = true;
    return true;
  }

 private:
  Prime prime_;
  std::size_t cols_;
  std::vector<Residue> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<bool> is_pivot_;
};

inline std::size_t rank(const PrimeFieldMatrix& m) {
  RowEchelon e(m.prime(), m.cols());
  for (std::size_t r = 0; r < m.rows() && !e.full(); ++r) {
    auto row = m.row(r);
    e.insert({row.begin(), row.end()});
  }
  return e.rank();
}

inline std::size_t kernel_dim(const PrimeFieldMatrix& m) { return m.cols() - rank(m); }

/// Rank of the vertical concatenation [a; b].
inline std::size_t stacked_rank(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  if (a.cols() != b.cols()) {
    throw DimensionMismatch("stacked_rank: column counts differ (" + std::to_string(a.cols()) +
                            " vs " + std::to_string(b.cols()) + ")");
  }
  if (!(a.prime() == b.prime())) throw DimensionMismatch("stacked_rank: moduli differ");
  RowEchelon e(a.prime(), a.cols());
  for (const auto* m : {&a, &b}) {
    for (std::size_t r = 0; r < m->rows() && !e.full(); ++r) {
      auto row = m->row(r);
      e.insert({row.begin(), row.end()});
    }
  }
  return e.rank();
}

}  // namespace lefschetz
