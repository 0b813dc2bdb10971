#pragma once

#include <cstdint>

namespace grpwild {

/// Hard size limits. Operations that would exceed one throw LimitError
/// instead of sampling.
struct Limits {
  /// Elements that may be enumerated by index (orbits, closures, classes).
  std::uint64_t max_enum = std::uint64_t{1} << 21;
  /// Largest group stored as a dense order x order multiplication table.
  std::uint64_t max_table = 4096;
  /// Largest group whose automorphism group is computed by brute force.
  std::uint64_t max_brute_aut = 256;
  /// Ceiling on permutation-group closures (D0, D1, Aut).
  std::uint64_t max_perm_closure = 1'000'000;
};

}  // namespace grpwild
