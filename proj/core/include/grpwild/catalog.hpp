#pragma once

#include <cstdint>
#include <memory>
#include <string_view>

#include "grpwild/limits.hpp"
#include "grpwild/table_group.hpp"

namespace grpwild {

inline constexpr std::uint64_t kMaxPermDegree = 6;

std::shared_ptr<const TableGroup> cyclic(std::uint64_t n,
                                         const Limits& limits = {});
/// Dihedral group of order 2n.
std::shared_ptr<const TableGroup> dihedral(std::uint64_t n,
                                           const Limits& limits = {});
std::shared_ptr<const TableGroup> symmetric(std::uint64_t n,
                                            const Limits& limits = {});
std::shared_ptr<const TableGroup> alternating(std::uint64_t n,
                                              const Limits& limits = {});
std::shared_ptr<const TableGroup> quaternion8();

/// G x H, element (g, h) at index g + |G| h.
std::shared_ptr<const TableGroup> direct_product(const Group& g,
                                                 const Group& h,
                                                 const Limits& limits = {});

/// Parses "atom ( x atom )*" with atoms Cn, Dn, Sn, An, Q8.
std::shared_ptr<const TableGroup> catalog_group(std::string_view spec,
                                                const Limits& limits = {});

}  // namespace grpwild
