#include "grpwild/gfp.hpp"

#include <algorithm>
#include <string>

#include "grpwild/error.hpp"
#include "grpwild/group_ops.hpp"

namespace grpwild {

PrimeField::PrimeField(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(std::to_string(p) + " is not a supported prime");
  }
}

Residue PrimeField::inv(Residue a) const {
  if (a == 0) throw Error("zero has no inverse");
  Residue result = 1, base = a;
  for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

Residue PrimeField::from_int(std::int64_t v) const {
  const std::int64_t r = v % static_cast<std::int64_t>(p_);
  return static_cast<Residue>(r < 0 ? r + p_ : r);
}

// ---- GfpVector --------------------------------------------------------------

GfpVector::GfpVector(std::uint32_t p, std::uint64_t dim)
    : GfpVector(p, dim, dim > kSparseThreshold ? Rep::kSparse : Rep::kDense) {}

GfpVector::GfpVector(std::uint32_t p, std::uint64_t dim, Rep rep)
    : p_(p), dim_(dim), rep_(rep) {
  if (rep_ == Rep::kDense) dense_.assign(dim, 0);
}

GfpVector GfpVector::from_terms(std::uint32_t p, std::uint64_t dim, Rep rep,
                                std::vector<Term> terms) {
  GfpVector v(p, dim, rep);
  for (const auto& [i, c] : terms) {
    if (i >= dim) throw Error("coordinate out of range");
  }
  if (rep == Rep::kDense) {
    for (const auto& [i, c] : terms) {
      v.dense_[i] = static_cast<Residue>((std::uint64_t{v.dense_[i]} + c) % p);
    }
    return v;
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  for (std::size_t k = 0; k < terms.size();) {
    std::uint64_t sum = 0;
    std::size_t j = k;
    for (; j < terms.size() && terms[j].first == terms[k].first; ++j) {
      sum = (sum + terms[j].second) % p;
    }
    if (sum != 0) v.sparse_.emplace_back(terms[k].first, static_cast<Residue>(sum));
    k = j;
  }
  return v;
}

GfpVector GfpVector::from_dense(std::uint32_t p, std::span<const Residue> coords,
                                Rep rep) {
  std::vector<Term> terms;
  for (std::uint64_t i = 0; i < coords.size(); ++i) {
    if (coords[i] % p != 0) terms.emplace_back(i, coords[i] % p);
  }
  return from_terms(p, coords.size(), rep, std::move(terms));
}

GfpVector GfpVector::unit(std::uint32_t p, std::uint64_t dim,
                          std::uint64_t index, Residue coeff) {
  GfpVector v(p, dim);
  v.set(index, coeff % p);
  return v;
}

Residue GfpVector::get(std::uint64_t i) const {
  if (i >= dim_) throw Error("coordinate out of range");
  if (rep_ == Rep::kDense) return dense_[i];
  auto it = std::lower_bound(sparse_.begin(), sparse_.end(), i,
                             [](const Term& t, std::uint64_t k) { return t.first < k; });
  return it != sparse_.end() && it->first == i ? it->second : 0;
}

void GfpVector::set(std::uint64_t i, Residue value) {
  if (i >= dim_) throw Error("coordinate out of range");
  value %= p_;
  if (rep_ == Rep::kDense) {
    dense_[i] = value;
    return;
  }
  auto it = std::lower_bound(sparse_.begin(), sparse_.end(), i,
                             [](const Term& t, std::uint64_t k) { return t.first < k; });
  const bool present = it != sparse_.end() && it->first == i;
  if (value == 0) {
    if (present) sparse_.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    sparse_.insert(it, Term{i, value});
  }
}

bool GfpVector::is_zero() const { return nonzero_count() == 0; }

std::size_t GfpVector::nonzero_count() const {
  if (rep_ == Rep::kSparse) return sparse_.size();
  return static_cast<std::size_t>(
      std::count_if(dense_.begin(), dense_.end(), [](Residue c) { return c != 0; }));
}

void GfpVector::check_compatible(const GfpVector& other) const {
  if (p_ != other.p_ || dim_ != other.dim_) {
    throw Error("vector dimension or field mismatch");
  }
}

GfpVector& GfpVector::operator+=(const GfpVector& other) {
  check_compatible(other);
  const PrimeField f(p_);
  if (rep_ == Rep::kDense) {
    other.for_each_nonzero(
        [&](std::uint64_t i, Residue c) { dense_[i] = f.add(dense_[i], c); });
    return *this;
  }
  std::vector<Term> merged;
  std::vector<Term> rhs = other.terms();
  merged.reserve(sparse_.size() + rhs.size());
  std::size_t a = 0, b = 0;
  while (a < sparse_.size() || b < rhs.size()) {
    if (b == rhs.size() || (a < sparse_.size() && sparse_[a].first < rhs[b].first)) {
      merged.push_back(sparse_[a++]);
    } else if (a == sparse_.size() || rhs[b].first < sparse_[a].first) {
      merged.push_back(rhs[b++]);
    } else {
      const Residue s = f.add(sparse_[a].second, rhs[b].second);
      if (s != 0) merged.emplace_back(sparse_[a].first, s);
      ++a;
      ++b;
    }
  }
  sparse_ = std::move(merged);
  return *this;
}

GfpVector& GfpVector::operator-=(const GfpVector& other) {
  return *this += -other;
}

GfpVector& GfpVector::scale(Residue c) {
  const PrimeField f(p_);
  c %= p_;
  if (rep_ == Rep::kDense) {
    for (Residue& x : dense_) x = f.mul(x, c);
  } else if (c == 0) {
    sparse_.clear();
  } else {
    for (auto& t : sparse_) t.second = f.mul(t.second, c);
  }
  return *this;
}

GfpVector GfpVector::operator-() const {
  GfpVector out = *this;
  return out.scale(p_ - 1);
}

bool operator==(const GfpVector& a, const GfpVector& b) {
  if (a.p_ != b.p_ || a.dim_ != b.dim_) return false;
  if (a.rep_ == GfpVector::Rep::kDense && b.rep_ == GfpVector::Rep::kDense) {
    return a.dense_ == b.dense_;
  }
  return a.terms() == b.terms();
}

GfpVector GfpVector::with_rep(Rep rep) const {
  if (rep == rep_) return *this;
  return from_terms(p_, dim_, rep, terms());
}

std::vector<GfpVector::Term> GfpVector::terms() const {
  if (rep_ == Rep::kSparse) return sparse_;
  std::vector<Term> out;
  for_each_nonzero([&](std::uint64_t i, Residue c) { out.emplace_back(i, c); });
  return out;
}

std::vector<Residue> GfpVector::to_dense() const {
  if (rep_ == Rep::kDense) return dense_;
  std::vector<Residue> out(dim_, 0);
  for (const auto& [i, c] : sparse_) out[i] = c;
  return out;
}

// ---- matrices ---------------------------------------------------------------

GfpMatrix GfpMatrix::identity(std::size_t n) {
  GfpMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Residue> GfpMatrix::apply(std::uint32_t p,
                                      std::span<const Residue> x) const {
  if (x.size() != cols_) throw Error("matrix/vector dimension mismatch");
  std::vector<Residue> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc = (acc + std::uint64_t{at(r, c)} * x[c]) % p;
    }
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

namespace {

struct Echelon {
  std::vector<std::vector<Residue>> rows;  // augmented, reduced
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan on `rows` over the first `width` columns.
Echelon reduce(const PrimeField& f, std::vector<std::vector<Residue>> rows,
               std::size_t width) {
  Echelon e;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < width && pivot_row < rows.size(); ++c) {
    std::size_t r = pivot_row;
    while (r < rows.size() && rows[r][c] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[pivot_row]);
    auto& pr = rows[pivot_row];
    const Residue inv = f.inv(pr[c]);
    for (Residue& x : pr) x = f.mul(x, inv);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == pivot_row || rows[k][c] == 0) continue;
      const Residue factor = rows[k][c];
      for (std::size_t j = 0; j < pr.size(); ++j) {
        rows[k][j] = f.sub(rows[k][j], f.mul(factor, pr[j]));
      }
    }
    e.pivot_cols.push_back(c);
    ++pivot_row;
  }
  e.rows = std::move(rows);
  return e;
}

}  // namespace

LinearSolution solve_linear(std::uint32_t p, const GfpMatrix& m,
                            std::span<const Residue> b) {
  if (b.size() != m.rows()) throw Error("matrix/vector dimension mismatch");
  const PrimeField f(p);
  std::vector<std::vector<Residue>> aug(m.rows(),
                                        std::vector<Residue>(m.cols() + 1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug[r][c] = m.at(r, c) % p;
    aug[r][m.cols()] = b[r] % p;
  }
  Echelon e = reduce(f, std::move(aug), m.cols());

  LinearSolution out;
  out.rank = e.pivot_cols.size();
  bool consistent = true;
  for (std::size_t r = out.rank; r < e.rows.size(); ++r) {
    if (e.rows[r][m.cols()] != 0) consistent = false;
  }
  if (consistent) {
    std::vector<Residue> x(m.cols(), 0);
    for (std::size_t i = 0; i < out.rank; ++i) {
      x[e.pivot_cols[i]] = e.rows[i][m.cols()];
    }
    out.solution = std::move(x);
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> k(m.cols(), 0);
    k[free] = 1;
    for (std::size_t i = 0; i < out.rank; ++i) {
      k[e.pivot_cols[i]] = f.neg(e.rows[i][free]);
    }
    out.kernel_basis.push_back(std::move(k));
  }
  for (std::size_t c : e.pivot_cols) {
    std::vector<Residue> col(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m.at(r, c) % p;
    out.image_basis.push_back(std::move(col));
  }
  return out;
}

LinearSolution solve_linear(std::uint32_t p, const GfpMatrix& m,
                            const GfpVector& b) {
  if (b.p() != p) throw Error("field mismatch");
  const std::vector<Residue> dense = b.to_dense();
  return solve_linear(p, m, dense);
}

std::vector<std::vector<Residue>> row_reduced_basis(
    std::uint32_t p, std::vector<std::vector<Residue>> rows, std::size_t width) {
  for (const auto& r : rows) {
    if (r.size() != width) throw Error("row width mismatch");
  }
  Echelon e = reduce(PrimeField(p), std::move(rows), width);
  e.rows.resize(e.pivot_cols.size());
  return std::move(e.rows);
}

std::optional<GfpMatrix> invert(std::uint32_t p, const GfpMatrix& m) {
  if (m.rows() != m.cols()) throw Error("only square matrices are invertible");
  const std::size_t n = m.rows();
  std::vector<std::vector<Residue>> aug(n, std::vector<Residue>(2 * n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = m.at(r, c) % p;
    aug[r][n + r] = 1;
  }
  Echelon e = reduce(PrimeField(p), std::move(aug), n);
  if (e.pivot_cols.size() != n) return std::nullopt;
  GfpMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = e.rows[r][n + c];
  }
  return out;
}

}  // namespace grpwild
