#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "grpwild/gfp.hpp"
#include "grpwild/group.hpp"

namespace grpwild {

/// The GF(p)[A]-module B = B_1 + ... + B_r. Each block B_i has basis
/// v_g^i for the non-identity g in A, and A acts on the right by
///   (v_h^i)^g = v_{hg}^i - v_g^i,   with v_0^i = 0.
///
/// Basis vector v_g^i sits at coordinate (i-1)(|A|-1) + (g-1); blocks are
/// numbered from 1.
class ModuleB {
 public:
  ModuleB(std::shared_ptr<const Group> base, std::uint32_t p, std::uint32_t r);

  std::uint32_t p() const { return field_.p(); }
  const PrimeField& field() const { return field_; }
  std::uint32_t r() const { return r_; }
  const Group& base() const { return *base_; }
  const std::shared_ptr<const Group>& base_ptr() const { return base_; }
  std::uint64_t base_order() const { return n_; }
  std::uint64_t block_dim() const { return n_ - 1; }
  std::uint64_t dim() const { return dim_; }
  GfpVector::Rep rep() const { return rep_; }

  std::uint64_t coord_of(std::uint32_t block, Elem g) const;
  /// Inverse of coord_of: (block, g).
  std::pair<std::uint32_t, Elem> basis_label(std::uint64_t coord) const;

  GfpVector zero() const { return GfpVector(p(), dim_, rep_); }
  /// v_g^i; the zero vector when g is the identity.
  GfpVector basis(std::uint32_t block, Elem g, Residue coeff = 1) const;

  /// v^g, the right action extended linearly.
  GfpVector act(const GfpVector& v, Elem g) const;

  /// Component of v in block i.
  GfpVector block_part(const GfpVector& v, std::uint32_t block) const;

  /// Matrix of v -> v^g - v on one block in block-local coordinates
  /// (column h-1 is the image of v_h). Identical for every block.
  GfpMatrix block_commutator_matrix(Elem g) const;

  /// Row-reduced basis of [g, B_i] = { v^g - v : v in B_i }.
  std::vector<GfpVector> commutator_image(Elem g, std::uint32_t block) const;

  /// Embeds block-local coordinates into B.
  GfpVector from_block(std::uint32_t block, std::span<const Residue> local) const;
  std::vector<Residue> to_block(const GfpVector& v, std::uint32_t block) const;

 private:
  void check_block(std::uint32_t block) const;
  void check_dense_block() const;

  std::shared_ptr<const Group> base_;
  PrimeField field_;
  std::uint32_t r_;
  std::uint64_t n_;
  std::uint64_t dim_;
  GfpVector::Rep rep_;
};

}  // namespace grpwild
