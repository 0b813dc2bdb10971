#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "grpwild/gfp.hpp"
#include "grpwild/group.hpp"
#include "grpwild/perm.hpp"
#include "grpwild/semidirect.hpp"

namespace grpwild {

namespace prim {

/// v_g^i -> v_g^{i+e} (block indices mod r); fixes A.
struct Psi {
  std::uint32_t exponent = 1;
};
/// v_g^r -> v_g^r - e v_g^1, other blocks fixed; fixes A.
struct Phi {
  Residue exponent = 1;
};
/// (g, v) -> (g, v + e v_g^i).
struct PsiBlock {
  std::uint32_t block = 1;
  Residue exponent = 1;
};
/// Induced by F in Aut(A): g -> F(g), v_g^i -> v_{F(g)}^i.
struct Lift {
  std::shared_ptr<const Perm> images;
  std::shared_ptr<const Perm> inverse_images;
};
/// x -> by^-1 x by.
struct Inner {
  SdElement by;
};
/// A-equivariant linear map on B extended by the identity on A.
struct Linear {
  std::shared_ptr<const GfpMatrix> matrix;
  std::shared_ptr<const GfpMatrix> inverse;
};
/// Automorphism of an enumerated group given by element images.
struct TablePerm {
  std::shared_ptr<const Perm> perm;
  std::shared_ptr<const Perm> inverse;
};
/// x -> by^-1 x by in an enumerated group.
struct TableInner {
  Elem by = kIdentity;
};

}  // namespace prim

using Primitive = std::variant<prim::Psi, prim::Phi, prim::PsiBlock, prim::Lift,
                               prim::Inner, prim::Linear, prim::TablePerm,
                               prim::TableInner>;

/// An automorphism as a word over primitives, applied left to right
/// (word()[0] acts first). Works on groups too large to enumerate.
class AutMap {
 public:
  /// The identity map.
  explicit AutMap(std::shared_ptr<const Group> parent);
  AutMap(std::shared_ptr<const Group> parent, Primitive p);

  const Group& parent() const { return *parent_; }
  const std::shared_ptr<const Group>& parent_ptr() const { return parent_; }
  /// Non-null iff the parent is a semidirect group.
  const SdGroup* sd() const { return sd_; }
  std::span<const Primitive> word() const { return word_; }

  SdElement apply(const SdElement& x) const;
  Elem apply(Elem x) const;

  /// One descriptor per primitive, in application order.
  std::vector<std::string> serialize() const;
  std::string render() const;

  /// x -> f(g(x)).
  friend AutMap compose(const AutMap& f, const AutMap& g);
  friend AutMap invert(const AutMap& f);

 private:
  std::shared_ptr<const Group> parent_;
  const SdGroup* sd_ = nullptr;
  std::vector<Primitive> word_;
};

std::string render_primitive(const Primitive& p, const Group& parent);
Primitive inverse_primitive(const Primitive& p, const Group& parent);

// ---- primitives on G_p(A) --------------------------------------------------

AutMap make_psi(std::shared_ptr<const SdGroup> g);
AutMap make_phi(std::shared_ptr<const SdGroup> g);
AutMap make_psi_block(std::shared_ptr<const SdGroup> g, std::uint32_t block,
                      Residue exponent = 1);
/// Throws unless `f` is an automorphism of A.
AutMap make_lift(std::shared_ptr<const SdGroup> g, const Perm& f);
AutMap make_inner(std::shared_ptr<const SdGroup> g, const SdElement& by);

// ---- enumerated groups -----------------------------------------------------

/// Throws unless `perm` is an automorphism (exhaustive check).
AutMap make_table_aut(std::shared_ptr<const Group> g, const Perm& perm);
AutMap make_table_inner(std::shared_ptr<const Group> g, Elem by);

/// Extends an invertible A-equivariant linear map on B by the identity on A.
/// Throws EquivarianceError naming the first failing basis vector and
/// generator of A.
AutMap extend_linear(std::shared_ptr<const SdGroup> g, const GfpMatrix& l);

/// The psi matrix: block shift on B.
GfpMatrix psi_matrix(const SdGroup& g);

/// Exhaustive f(xy) = f(x) f(y) plus bijectivity on an indexable parent.
bool is_multiplicative_exhaustive(const AutMap& f);
/// f(xy) = f(x) f(y) on all pairs of generators (A-generators and the basis
/// of B) and on `samples` random pairs.
bool is_multiplicative_sampled(const AutMap& f, std::size_t samples,
                               std::mt19937_64& rng);
/// Uniform random element of G_p(A).
SdElement random_element(const SdGroup& g, std::mt19937_64& rng);

/// Two automorphisms agree iff they agree on a generating set.
bool equal_on_generators(const AutMap& f, const AutMap& g);

// ---- normalising conjugator ----------------------------------------------------------------

struct Lemma5Result {
  GfpVector u;
  /// exponents[i-1] = -a_i where g t z = (g, sum a_i v_g^i), a_i in [0, p).
  std::vector<std::int64_t> exponents;
  /// inner(u) followed by prod psi_i^{exponents}.
  AutMap map;
};

/// For x = (g, t) with g != 1 and ord(x) = ord(g) (in particular x of
/// order p), finds an automorphism sending x to (g, 0) and checks it before
/// returning.
Lemma5Result lemma5_conjugator(std::shared_ptr<const SdGroup> g,
                               const SdElement& x);

}  // namespace grpwild
