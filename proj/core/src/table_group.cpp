#include "grpwild/table_group.hpp"

#include <algorithm>

#include "grpwild/error.hpp"

namespace grpwild {

Elem Group::pow(Elem x, std::uint64_t n) const {
  Elem result = kIdentity;
  Elem base = x;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

namespace {

void check_table_size(std::uint64_t order, const Limits& limits) {
  if (order == 0) throw Error("group order must be positive");
  if (order > limits.max_table) {
    throw LimitError("order " + std::to_string(order) +
                     " exceeds the table limit " +
                     std::to_string(limits.max_table));
  }
}

}  // namespace

std::shared_ptr<const TableGroup> TableGroup::from_function(
    std::string name, std::uint64_t order, const MulFn& mul,
    std::vector<Elem> generators, std::vector<std::string> labels,
    const Limits& limits) {
  check_table_size(order, limits);
  std::vector<std::uint32_t> table(order * order);
  for (Elem x = 0; x < order; ++x) {
    for (Elem y = 0; y < order; ++y) {
      Elem z = mul(x, y);
      if (z >= order) throw Error("multiplication leaves the element range");
      table[x * order + y] = static_cast<std::uint32_t>(z);
    }
  }
  return from_table(std::move(name), order, std::move(table),
                    std::move(generators), std::move(labels), limits);
}

std::shared_ptr<const TableGroup> TableGroup::from_table(
    std::string name, std::uint64_t order, std::vector<std::uint32_t> table,
    std::vector<Elem> generators, std::vector<std::string> labels,
    const Limits& limits) {
  check_table_size(order, limits);
  if (table.size() != order * order) throw Error("table has wrong size");
  if (!labels.empty() && labels.size() != order) {
    throw Error("label count differs from order");
  }
  std::shared_ptr<TableGroup> g(new TableGroup());
  g->n_ = static_cast<std::uint32_t>(order);
  g->table_ = std::move(table);
  g->gens_ = std::move(generators);
  g->labels_ = std::move(labels);
  g->name_ = std::move(name);
  g->validate();
  return g;
}

void TableGroup::validate() {
  const std::uint32_t n = n_;
  if (gens_.empty()) throw Error("generator list must be nonempty");
  for (Elem s : gens_) {
    if (s >= n) throw Error("generator out of range");
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (table_[x] != x || table_[std::size_t{x} * n] != x) {
      throw Error("index 0 is not a two-sided identity");
    }
  }
  // Latin rows give right inverses; check they are two-sided.
  inv_.assign(n, n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (table_[std::size_t{x} * n + y] == 0) {
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] == n || table_[std::size_t{inv_[x]} * n + x] != 0) {
      throw Error("element " + std::to_string(x) + " has no two-sided inverse");
    }
  }
  // Light's test: associativity on a generating set implies associativity.
  for (Elem s : gens_) {
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        std::uint32_t xy = table_[std::size_t{x} * n + y];
        std::uint32_t ys = table_[std::size_t{y} * n + s];
        if (table_[std::size_t{xy} * n + s] != table_[std::size_t{x} * n + ys]) {
          throw Error("multiplication is not associative");
        }
      }
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Elem s : gens_) {
      std::uint32_t z = table_[std::size_t{queue[head]} * n + s];
      if (!seen[z]) {
        seen[z] = true;
        queue.push_back(z);
      }
    }
  }
  if (queue.size() != n) throw Error("generators do not generate the group");
}

std::string TableGroup::element_label(Elem x) const {
  if (!labels_.empty()) return labels_[x];
  return std::to_string(x);
}

std::shared_ptr<const TableGroup> to_table(const Group& g,
                                           const Limits& limits) {
  const std::uint64_t n = g.order();
  check_table_size(n, limits);
  std::vector<Elem> gens(g.generators().begin(), g.generators().end());
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Elem x = 0; x < n; ++x) labels.push_back(g.element_label(x));
  return TableGroup::from_function(
      g.name(), n, [&g](Elem x, Elem y) { return g.mul(x, y); },
      std::move(gens), std::move(labels), limits);
}

}  // namespace grpwild
