#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "grpwild/gfp.hpp"
#include "grpwild/group.hpp"
#include "grpwild/limits.hpp"
#include "grpwild/module_b.hpp"
#include "grpwild/order.hpp"
#include "grpwild/table_group.hpp"

namespace grpwild {

/// Element a.v of B x| A in base-left normal form.
struct SdElement {
  Elem a = kIdentity;
  GfpVector v;

  friend bool operator==(const SdElement&, const SdElement&) = default;
};

/// Smallest prime dividing neither |A| nor p - 1.
std::uint64_t minimal_wild_prime(std::uint64_t base_order, std::uint64_t p);
/// Same, given the prime divisors of |A|.
std::uint64_t minimal_wild_prime(std::span<const std::uint64_t> base_primes,
                                 std::uint64_t p);

/// G_p(A) = B x| A with B = GF(p)^(r(|A|-1)) and r = minimal_wild_prime.
///
/// Multiplication: (a1, v1)(a2, v2) = (a1 a2, v1^a2 + v2).
///
/// When p^dim |A| fits in 63 bits the group is also indexable: element
/// (a, v) has index a + |A| * sum_j v_j p^j, so A occupies indices 0..|A|-1.
class SdGroup final : public Group {
 public:
  static std::shared_ptr<const SdGroup> build(std::shared_ptr<const Group> base,
                                              std::uint64_t p);

  std::uint32_t p() const { return module_.p(); }
  std::uint32_t r() const { return module_.r(); }
  const ModuleB& module() const { return module_; }
  const Group& base() const { return module_.base(); }
  const std::shared_ptr<const Group>& base_ptr() const { return module_.base_ptr(); }
  const Order& exact_order() const { return order_; }
  bool indexable() const { return indexable_; }

  SdElement identity_element() const { return {kIdentity, module_.zero()}; }
  SdElement from_base(Elem a) const;
  SdElement from_vector(GfpVector v) const;
  SdElement make(Elem a, GfpVector v) const;

  SdElement multiply(const SdElement& x, const SdElement& y) const;
  SdElement inverse(const SdElement& x) const;
  SdElement power(const SdElement& x, std::uint64_t k) const;
  /// by^-1 x by.
  SdElement conjugate(const SdElement& x, const SdElement& by) const;

  /// sum_{k<count} t^(g^k).
  GfpVector orbit_sum(const GfpVector& t, Elem g, std::uint64_t count) const;
  /// Order via (g,t)^m = (g^m, orbit_sum(t, g, m)) with m = ord(g).
  std::uint64_t element_order(const SdElement& x) const;
  /// Order by repeated multiplication.
  std::uint64_t element_order_naive(const SdElement& x) const;

  Elem index_of(const SdElement& x) const;
  SdElement element_at(Elem index) const;

  // Group interface; throws LimitError unless indexable().
  std::uint64_t order() const override;
  Elem mul(Elem x, Elem y) const override;
  Elem inv(Elem x) const override;
  std::span<const Elem> generators() const override;
  std::string name() const override { return name_; }
  std::string element_label(Elem x) const override;
  std::string label(const SdElement& x) const;

 private:
  SdGroup(std::shared_ptr<const Group> base, std::uint32_t p, std::uint32_t r);
  void require_indexable() const;
  void check(const SdElement& x) const;

  ModuleB module_;
  Order order_;
  std::string name_;
  bool indexable_ = false;
  std::uint64_t base_order_ = 0;
  std::uint64_t vector_count_ = 0;  // |B| when indexable
  std::vector<Elem> gens_;
};

/// Copies an indexable SdGroup into a dense table; element indices are
/// preserved, so element_at() is the bijection.
std::shared_ptr<const TableGroup> enumerate(const SdGroup& g,
                                            const Limits& limits = {});

/// One level G_p(A) of the iterated construction.
struct SakLevel {
  std::uint64_t p = 0;
  std::uint64_t r = 0;
  /// r(|A|-1), decimal or symbolic.
  std::string dimension;
  Order order;
  /// Null when the level's base cannot be indexed.
  std::shared_ptr<const SdGroup> group;
};

/// G_{p1}(G_{p2}(...G_{pn}(A)...)) over pi(A) = {p1 < ... < pn}; levels are
/// stored innermost (G_{pn}) first.
struct SakDescriptor {
  std::string base_name;
  Order base_order;
  /// Primes in construction order (innermost first).
  std::vector<std::uint64_t> prime_chain;
  std::vector<SakLevel> levels;

  const Order& order() const { return levels.back().order; }
  std::shared_ptr<const SdGroup> outermost() const { return levels.back().group; }
};

SakDescriptor build_saksonov(std::shared_ptr<const Group> base);

/// Order of an arbitrary group, symbolic for nested semidirect products.
Order group_order(const Group& g);

}  // namespace grpwild
