#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grpwild/group.hpp"
#include "grpwild/limits.hpp"
#include "grpwild/perm.hpp"
#include "grpwild/table_group.hpp"

namespace grpwild {

// ---- integers ---------------------------------------------------------------

bool is_prime(std::uint64_t n);
/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// ---- elements and classes ---------------------------------------------------

/// Least n >= 1 with x^n = identity.
std::uint64_t element_order(const Group& g, Elem x);

/// Conjugacy classes. Class ids are assigned in order of each class's
/// smallest element, so class 0 is {identity}.
struct ConjPartition {
  std::vector<std::uint32_t> class_of;
  std::vector<std::vector<Elem>> classes;

  std::size_t class_count() const { return classes.size(); }
};

/// Orbits of conjugation by the group's generators. The result does not
/// depend on `threads`.
ConjPartition conjugacy_classes(const Group& g, unsigned threads = 1,
                                const Limits& limits = {});

// ---- subgroups --------------------------------------------------------------

struct Subgroup {
  std::vector<Elem> elements;  // ascending
  std::vector<Elem> generators;
  std::vector<bool> member;    // indexed by element of the ambient group

  std::size_t size() const { return elements.size(); }
  bool contains(Elem x) const { return x < member.size() && member[x]; }
};

/// Smallest subgroup containing `gens`. Asserts Lagrange.
Subgroup subgroup_closure(const Group& g, std::span<const Elem> gens,
                          const Limits& limits = {});
Subgroup whole_group(const Group& g, const Limits& limits = {});
/// Commutator subgroup [H, H].
Subgroup derived_subgroup(const Group& g, const Subgroup& h,
                          const Limits& limits = {});
bool is_solvable(const Group& g, const Limits& limits = {});
bool is_normal(const Group& g, const Subgroup& n);

struct NormalComplement {
  bool exists = false;
  /// Subgroup generated by the odd-order elements.
  Subgroup odd_part;
};
NormalComplement has_normal_2_complement(const Group& g,
                                         const Limits& limits = {});

struct Quotient {
  std::shared_ptr<const TableGroup> group;
  /// Natural projection: element of G -> coset index.
  std::vector<std::uint32_t> projection;
};
/// G/N on cosets. `normal` is any element set; it is checked to be a
/// normal subgroup.
Quotient quotient(const Group& g, std::span<const Elem> normal,
                  const Limits& limits = {});

// ---- automorphisms ----------------------------------------------------------

/// Greedy generating set, preferring elements of high order.
std::vector<Elem> min_generating_set(const Group& g, const Limits& limits = {});

/// Extends gens[k] -> images[k] to a map on G. Returns nullopt unless the
/// extension is a well-defined bijective homomorphism.
std::optional<Perm> extend_to_automorphism(const Group& g,
                                           std::span<const Elem> gens,
                                           std::span<const Elem> images);

/// Exhaustive check f(xy) = f(x) f(y) over all pairs.
bool is_automorphism(const Group& g, const Perm& f);

/// x -> by^-1 x by.
Perm conjugation_perm(const Group& g, Elem by);

/// Full automorphism group as permutations of element indices, sorted, so
/// the identity comes first.
PermSubgroup brute_force_aut(const Group& g, const Limits& limits = {});

/// The inner automorphisms, closure of conjugation by the generators.
PermSubgroup inner_automorphisms(const Group& g, const Limits& limits = {});

}  // namespace grpwild
