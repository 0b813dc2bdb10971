#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace grpwild {

using Residue = std::uint32_t;

/// Arithmetic in GF(p), p prime below 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint32_t p() const { return p_; }
  Residue add(Residue a, Residue b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(std::uint64_t{a} * b % p_);
  }
  Residue inv(Residue a) const;
  Residue from_int(std::int64_t v) const;

 private:
  std::uint32_t p_;
};

/// Vector over GF(p). Stored densely or as sorted (coordinate, residue)
/// pairs without zeros; both compare equal when semantically equal.
class GfpVector {
 public:
  enum class Rep { kDense, kSparse };
  static constexpr std::uint64_t kSparseThreshold = 4096;
  using Term = std::pair<std::uint64_t, Residue>;

  GfpVector() = default;
  /// Zero vector; sparse above kSparseThreshold.
  GfpVector(std::uint32_t p, std::uint64_t dim);
  GfpVector(std::uint32_t p, std::uint64_t dim, Rep rep);

  /// Sums the terms (duplicates allowed, coefficients reduced mod p).
  static GfpVector from_terms(std::uint32_t p, std::uint64_t dim, Rep rep,
                              std::vector<Term> terms);
  static GfpVector from_dense(std::uint32_t p, std::span<const Residue> coords,
                              Rep rep);
  static GfpVector unit(std::uint32_t p, std::uint64_t dim, std::uint64_t index,
                        Residue coeff = 1);

  std::uint32_t p() const { return p_; }
  std::uint64_t dim() const { return dim_; }
  Rep rep() const { return rep_; }

  Residue get(std::uint64_t i) const;
  void set(std::uint64_t i, Residue value);
  bool is_zero() const;
  std::size_t nonzero_count() const;

  GfpVector& operator+=(const GfpVector& other);
  GfpVector& operator-=(const GfpVector& other);
  GfpVector& scale(Residue c);
  GfpVector operator-() const;
  friend GfpVector operator+(GfpVector a, const GfpVector& b) { return a += b; }
  friend GfpVector operator-(GfpVector a, const GfpVector& b) { return a -= b; }
  friend bool operator==(const GfpVector& a, const GfpVector& b);

  GfpVector with_rep(Rep rep) const;
  /// Nonzero entries in increasing coordinate order.
  std::vector<Term> terms() const;
  std::vector<Residue> to_dense() const;

  template <class Fn>
  void for_each_nonzero(Fn&& fn) const {
    if (rep_ == Rep::kDense) {
      for (std::uint64_t i = 0; i < dense_.size(); ++i) {
        if (dense_[i] != 0) fn(i, dense_[i]);
      }
    } else {
      for (const auto& [i, c] : sparse_) fn(i, c);
    }
  }

 private:
  void check_compatible(const GfpVector& other) const;

  std::uint32_t p_ = 2;
  std::uint64_t dim_ = 0;
  Rep rep_ = Rep::kDense;
  std::vector<Residue> dense_;
  std::vector<Term> sparse_;
};

/// Dense row-major matrix over GF(p).
class GfpMatrix {
 public:
  GfpMatrix() = default;
  GfpMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static GfpMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::vector<Residue> apply(std::uint32_t p, std::span<const Residue> x) const;

  friend bool operator==(const GfpMatrix&, const GfpMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

struct LinearSolution {
  /// Some x with Mx = b, free variables set to zero; nullopt if none.
  std::optional<std::vector<Residue>> solution;
  std::vector<std::vector<Residue>> kernel_basis;
  /// Pivot columns of M: a basis of its column space.
  std::vector<std::vector<Residue>> image_basis;
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination, pivoting on the lowest-index nonzero row.
LinearSolution solve_linear(std::uint32_t p, const GfpMatrix& m,
                            std::span<const Residue> b);
LinearSolution solve_linear(std::uint32_t p, const GfpMatrix& m,
                            const GfpVector& b);

/// Reduced row echelon basis of the span of `rows`.
std::vector<std::vector<Residue>> row_reduced_basis(
    std::uint32_t p, std::vector<std::vector<Residue>> rows,
    std::size_t width);

std::optional<GfpMatrix> invert(std::uint32_t p, const GfpMatrix& m);

}  // namespace grpwild
