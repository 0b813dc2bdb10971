#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "grpwild/group.hpp"
#include "grpwild/limits.hpp"

namespace grpwild {

/// A fully enumerated finite group with a dense multiplication table.
class TableGroup final : public Group {
 public:
  using MulFn = std::function<Elem(Elem, Elem)>;

  /// Builds the table by calling `mul` on every pair. Validates identity,
  /// inverses, associativity and that `generators` generate the group.
  static std::shared_ptr<const TableGroup> from_function(
      std::string name, std::uint64_t order, const MulFn& mul,
      std::vector<Elem> generators, std::vector<std::string> labels = {},
      const Limits& limits = {});

  static std::shared_ptr<const TableGroup> from_table(
      std::string name, std::uint64_t order, std::vector<std::uint32_t> table,
      std::vector<Elem> generators, std::vector<std::string> labels = {},
      const Limits& limits = {});

  std::uint64_t order() const override { return n_; }
  Elem mul(Elem x, Elem y) const override {
    return table_[static_cast<std::size_t>(x) * n_ + y];
  }
  Elem inv(Elem x) const override { return inv_[x]; }
  std::span<const Elem> generators() const override { return gens_; }
  std::string name() const override { return name_; }
  std::string element_label(Elem x) const override;

  std::span<const std::uint32_t> table() const { return table_; }

 private:
  TableGroup() = default;
  void validate();

  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
  std::vector<Elem> gens_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Copies any indexable group into a dense table (index-preserving).
std::shared_ptr<const TableGroup> to_table(const Group& g,
                                           const Limits& limits = {});

}  // namespace grpwild
