#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "grpwild/limits.hpp"

namespace grpwild {

/// Permutation of {0..degree-1} as an image vector.
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::size_t degree);
/// (f * g)(x) = f(g(x)).
Perm compose(const Perm& f, const Perm& g);
Perm inverse(const Perm& f);
bool is_identity(const Perm& f);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// A group of permutations stored as an explicit element list.
class PermSubgroup {
 public:
  /// Closure of `gens`. Throws LimitError past `limits.max_perm_closure`.
  static PermSubgroup closure(std::size_t degree, std::vector<Perm> gens,
                              const Limits& limits = {});
  /// Adopts an element list already known to be a group; `gens` must
  /// generate it.
  static PermSubgroup from_elements(std::size_t degree,
                                    std::vector<Perm> elements,
                                    std::vector<Perm> gens);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  std::span<const Perm> elements() const { return elements_; }
  std::span<const Perm> generators() const { return gens_; }
  bool contains(const Perm& p) const { return index_.count(p) != 0; }
  /// Position in elements(); size() if absent.
  std::size_t index_of(const Perm& p) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> gens_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

/// Greedy small generating set drawn from `group`'s elements.
std::vector<Perm> small_generating_set(const PermSubgroup& group,
                                       const Limits& limits = {});

}  // namespace grpwild
