#include "grpwild/module_b.hpp"

#include <string>

#include "grpwild/error.hpp"

namespace grpwild {

namespace {

// Block-local dense work (commutator images, conjugator systems) is capped here.
constexpr std::uint64_t kMaxDenseBlock = 4096;

}  // namespace

ModuleB::ModuleB(std::shared_ptr<const Group> base, std::uint32_t p,
                 std::uint32_t r)
    : base_(std::move(base)), field_(p), r_(r) {
  if (!base_) throw Error("module needs a base group");
  n_ = base_->order();
  if (n_ < 2) throw Error("the acting group must be nontrivial");
  if (r_ < 1) throw Error("block count must be positive");
  if ((n_ - 1) > UINT64_MAX / r_) throw LimitError("module dimension overflows");
  dim_ = std::uint64_t{r_} * (n_ - 1);
  rep_ = dim_ > GfpVector::kSparseThreshold ? GfpVector::Rep::kSparse
                                            : GfpVector::Rep::kDense;
}

void ModuleB::check_block(std::uint32_t block) const {
  if (block < 1 || block > r_) {
    throw Error("block " + std::to_string(block) + " outside 1.." +
                std::to_string(r_));
  }
}

std::uint64_t ModuleB::coord_of(std::uint32_t block, Elem g) const {
  check_block(block);
  if (g == kIdentity || g >= n_) throw Error("basis index needs g in A^#");
  return std::uint64_t{block - 1} * (n_ - 1) + (g - 1);
}

std::pair<std::uint32_t, Elem> ModuleB::basis_label(std::uint64_t coord) const {
  if (coord >= dim_) throw Error("coordinate out of range");
  return {static_cast<std::uint32_t>(coord / (n_ - 1) + 1), coord % (n_ - 1) + 1};
}

GfpVector ModuleB::basis(std::uint32_t block, Elem g, Residue coeff) const {
  check_block(block);
  GfpVector v = zero();
  if (g != kIdentity) v.set(coord_of(block, g), coeff);
  return v;
}

GfpVector ModuleB::act(const GfpVector& v, Elem g) const {
  if (v.dim() != dim_ || v.p() != p()) throw Error("vector is not in B");
  if (g >= n_) throw Error("acting element outside A");
  if (g == kIdentity) return v;
  const std::uint64_t bd = n_ - 1;
  if (v.rep() == GfpVector::Rep::kDense) {
    GfpVector out(p(), dim_, GfpVector::Rep::kDense);
    std::vector<Residue> res(dim_, 0);
    v.for_each_nonzero([&](std::uint64_t c, Residue coef) {
      const std::uint64_t offset = c / bd * bd;
      const Elem h = c % bd + 1;
      const Elem hg = base_->mul(h, g);
      if (hg != kIdentity) res[offset + hg - 1] = field_.add(res[offset + hg - 1], coef);
      res[offset + g - 1] = field_.sub(res[offset + g - 1], coef);
    });
    return GfpVector::from_dense(p(), res, GfpVector::Rep::kDense);
  }
  std::vector<GfpVector::Term> terms;
  terms.reserve(2 * v.nonzero_count());
  v.for_each_nonzero([&](std::uint64_t c, Residue coef) {
    const std::uint64_t offset = c / bd * bd;
    const Elem h = c % bd + 1;
    const Elem hg = base_->mul(h, g);
    if (hg != kIdentity) terms.emplace_back(offset + hg - 1, coef);
    terms.emplace_back(offset + g - 1, field_.neg(coef));
  });
  return GfpVector::from_terms(p(), dim_, v.rep(), std::move(terms));
}

GfpVector ModuleB::block_part(const GfpVector& v, std::uint32_t block) const {
  check_block(block);
  const std::uint64_t lo = std::uint64_t{block - 1} * (n_ - 1);
  const std::uint64_t hi = lo + (n_ - 1);
  std::vector<GfpVector::Term> terms;
  v.for_each_nonzero([&](std::uint64_t c, Residue coef) {
    if (c >= lo && c < hi) terms.emplace_back(c, coef);
  });
  return GfpVector::from_terms(p(), dim_, v.rep(), std::move(terms));
}

void ModuleB::check_dense_block() const {
  if (n_ - 1 > kMaxDenseBlock) {
    throw LimitError("block dimension " + std::to_string(n_ - 1) +
                     " too large for dense elimination");
  }
}

GfpMatrix ModuleB::block_commutator_matrix(Elem g) const {
  check_dense_block();
  if (g >= n_) throw Error("acting element outside A");
  const std::size_t bd = n_ - 1;
  GfpMatrix m(bd, bd);
  if (g == kIdentity) return m;
  for (Elem h = 1; h < n_; ++h) {
    // v_h^g - v_h = v_{hg} - v_g - v_h
    const std::size_t col = h - 1;
    const Elem hg = base_->mul(h, g);
    if (hg != kIdentity) m.at(hg - 1, col) = field_.add(m.at(hg - 1, col), 1);
    m.at(g - 1, col) = field_.sub(m.at(g - 1, col), 1);
    m.at(h - 1, col) = field_.sub(m.at(h - 1, col), 1);
  }
  return m;
}

std::vector<GfpVector> ModuleB::commutator_image(Elem g,
                                                 std::uint32_t block) const {
  check_block(block);
  const GfpMatrix m = block_commutator_matrix(g);
  std::vector<std::vector<Residue>> rows;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<Residue> col(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m.at(r, c);
    rows.push_back(std::move(col));
  }
  std::vector<GfpVector> out;
  for (const auto& row : row_reduced_basis(p(), std::move(rows), m.rows())) {
    out.push_back(from_block(block, row));
  }
  return out;
}

GfpVector ModuleB::from_block(std::uint32_t block,
                              std::span<const Residue> local) const {
  check_block(block);
  if (local.size() != n_ - 1) throw Error("block vector has wrong size");
  const std::uint64_t offset = std::uint64_t{block - 1} * (n_ - 1);
  std::vector<GfpVector::Term> terms;
  for (std::uint64_t k = 0; k < local.size(); ++k) {
    if (local[k] % p() != 0) terms.emplace_back(offset + k, local[k] % p());
  }
  return GfpVector::from_terms(p(), dim_, rep_, std::move(terms));
}

std::vector<Residue> ModuleB::to_block(const GfpVector& v,
                                       std::uint32_t block) const {
  check_block(block);
  check_dense_block();
  const std::uint64_t lo = std::uint64_t{block - 1} * (n_ - 1);
  std::vector<Residue> out(n_ - 1, 0);
  v.for_each_nonzero([&](std::uint64_t c, Residue coef) {
    if (c >= lo && c < lo + (n_ - 1)) out[c - lo] = coef;
  });
  return out;
}

}  // namespace grpwild
