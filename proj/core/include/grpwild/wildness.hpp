#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grpwild/autos.hpp"
#include "grpwild/group.hpp"
#include "grpwild/group_ops.hpp"
#include "grpwild/limits.hpp"
#include "grpwild/perm.hpp"

namespace grpwild {

// ---- <p>-wildness -----------------------------------------------------------

inline constexpr std::uint32_t kNoClass = UINT32_MAX;

/// Conjugacy classes of cyclic subgroups of order p.
///
/// The id of <x> is the smallest conjugacy-class id among x, x^2, ..,
/// x^(p-1); two subgroups share an id iff they are conjugate.
struct PCyclicClasses {
  std::uint64_t p = 0;
  std::vector<Elem> elements;                 // order-p elements, ascending
  std::vector<std::uint32_t> subgroup_id_of;  // per element, kNoClass if not order p
  std::vector<std::uint32_t> class_ids;       // distinct ids, ascending
  std::vector<Elem> reps;                     // smallest element per id

  std::size_t class_count() const { return class_ids.size(); }
};

PCyclicClasses p_cyclic_classes(const Group& g, std::uint64_t p,
                                const ConjPartition& conj, unsigned threads = 1);
PCyclicClasses p_cyclic_classes(const Group& g, std::uint64_t p,
                                unsigned threads = 1, const Limits& limits = {});

enum class WildStatus { kWildExact, kWildWitnessed, kNotWildExact, kInconclusive };
enum class WildMode { kWitness, kExact };

const char* to_string(WildStatus s);
const char* to_string(WildMode m);
inline bool is_wild(WildStatus s) {
  return s == WildStatus::kWildExact || s == WildStatus::kWildWitnessed;
}

/// An automorphism moving one class of cyclic subgroups.
struct Witness {
  std::uint32_t class_id = 0;
  Elem rep = 0;
  AutMap map;
  Elem image = 0;
  std::uint32_t image_class = 0;
};

struct WildReport {
  WildStatus status = WildStatus::kInconclusive;
  std::uint64_t p = 0;
  WildMode mode = WildMode::kWitness;
  unsigned depth = 0;
  std::size_t order_p_elements = 0;
  std::size_t class_count = 0;
  std::vector<Witness> witnesses;
  std::optional<std::uint32_t> fixed_class;
  std::optional<Elem> fixed_rep;
  std::vector<std::uint32_t> unresolved_classes;
  std::string note;
};

struct WildOptions {
  WildMode mode = WildMode::kWitness;
  unsigned depth = 3;
  unsigned threads = 1;
  Limits limits;
  /// Witness-mode generators; defaults to default_witness_generators().
  std::optional<std::vector<AutMap>> generators;
  /// Precomputed conjugacy classes (e.g. from a cache).
  const ConjPartition* conj = nullptr;
};

/// psi, phi, psi_1..psi_r, inner(generators of G), lift(generators of
/// Aut(A)) for G_p(A); inner(generators) for any other group.
std::vector<AutMap> default_witness_generators(std::shared_ptr<const Group> g,
                                               const Limits& limits = {});

/// Decides whether G has no order-p element whose cyclic subgroup has an
/// Aut(G)-invariant conjugacy class.
///
/// Witness mode searches words over the generators breadth-first up to
/// `depth` and reports kInconclusive when some class is not moved; a single
/// class is reported kNotWildExact directly. Exact mode uses the full
/// brute-force automorphism group.
WildReport verify_p_wild(std::shared_ptr<const Group> g, std::uint64_t p,
                         const WildOptions& options = {});

struct XiReport {
  std::vector<std::uint64_t> pi;
  std::vector<std::uint64_t> xi;
  std::map<std::uint64_t, WildReport> per_prime;
};

XiReport xi(std::shared_ptr<const Group> g, const WildOptions& options = {});

// ---- triplets ---------------------------------------------------------------

/// (G, D0, D1) with D0, D1 groups of automorphisms of G given as
/// permutations of element indices.
struct TripletSpec {
  std::shared_ptr<const Group> g;
  PermSubgroup d0;
  PermSubgroup d1;
  std::string label;
};

struct TripletReport {
  bool ordinary = false;
  /// No D0-orbit of involutions is fixed by all of D1.
  bool wild = false;
  /// C_{D1}(a) D0 < D1 for every involution a.
  bool wild_centralizer_form = false;
  bool forms_agree = false;
  bool d1_mod_d0_n2c = false;
  bool solvable = false;
  std::size_t involutions = 0;
  std::size_t d0_orbits = 0;
  std::size_t d0_size = 0;
  std::size_t d1_size = 0;
  std::size_t quotient_order = 0;
  /// An involution whose D0-orbit is D1-invariant, when not wild.
  std::optional<Elem> fixed_involution;
};

/// Validates the triplet (automorphisms, D0 <= D1, D0 normal, D0 ordinary)
/// and evaluates both forms of wildness.
TripletReport check_triplet(const TripletSpec& t, const Limits& limits = {});

/// Closure of `d0_gens` and of `d0_gens` + `d1_gens`.
TripletSpec make_triplet(std::shared_ptr<const Group> g, std::vector<Perm> d0_gens,
                         std::vector<Perm> d1_gens, std::string label,
                         const Limits& limits = {});

/// D1 = <D0, k random elements of `aut`> with k in {1, 2}.
PermSubgroup sample_intermediate(const PermSubgroup& d0, const PermSubgroup& aut,
                                 std::mt19937_64& rng, const Limits& limits = {});

struct Theorem1Entry {
  std::string label;
  std::optional<TripletReport> report;
  std::string error;
};

struct Theorem1Result {
  std::vector<Theorem1Entry> entries;
  /// Labels of triplets that are wild with N2C quotient yet G nonsolvable.
  std::vector<std::string> violations;
};

Theorem1Result theorem1_harness(const std::vector<TripletSpec>& catalog,
                                const Limits& limits = {}, unsigned threads = 1);

/// For |G| = 2k with k odd: triplets (G, Inn, D1) with D1 ranging over
/// Inn, Aut and `samples` random intermediates. Throws on other orders.
std::vector<TripletReport> proposition3_harness(std::shared_ptr<const Group> g,
                                                std::size_t samples,
                                                std::mt19937_64& rng,
                                                const Limits& limits = {});

struct Corollary1Result {
  enum class Status { kWitness, kRefuted, kPreconditionUnmet };
  Status status = Status::kPreconditionUnmet;
  std::optional<Elem> involution;
  std::string message;
};

/// Looks for an involution a in N with C_G(a) N = G.
Corollary1Result corollary1_check(const Group& g, const Subgroup& n,
                                  const Limits& limits = {});

}  // namespace grpwild
