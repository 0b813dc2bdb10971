#include "grpwild/perm.hpp"

#include <numeric>
#include <string>

#include "grpwild/error.hpp"

namespace grpwild {

Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm compose(const Perm& f, const Perm& g) {
  Perm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

Perm inverse(const Perm& f) {
  Perm out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[f[i]] = static_cast<std::uint32_t>(i);
  return out;
}

bool is_identity(const Perm& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != i) return false;
  }
  return true;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t v : p) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

PermSubgroup PermSubgroup::closure(std::size_t degree, std::vector<Perm> gens,
                                   const Limits& limits) {
  PermSubgroup g;
  g.degree_ = degree;
  for (const Perm& s : gens) {
    if (s.size() != degree) throw Error("generator has wrong degree");
  }
  g.gens_ = std::move(gens);
  g.elements_.push_back(identity_perm(degree));
  g.index_.emplace(g.elements_.back(), 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const Perm& s : g.gens_) {
      Perm next = compose(s, g.elements_[head]);
      if (g.index_.count(next)) continue;
      if (g.elements_.size() >= limits.max_perm_closure) {
        throw LimitError("permutation closure exceeds " +
                         std::to_string(limits.max_perm_closure));
      }
      g.index_.emplace(next, g.elements_.size());
      g.elements_.push_back(std::move(next));
    }
  }
  return g;
}

PermSubgroup PermSubgroup::from_elements(std::size_t degree,
                                         std::vector<Perm> elements,
                                         std::vector<Perm> gens) {
  PermSubgroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  g.gens_ = std::move(gens);
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    g.index_.emplace(g.elements_[i], i);
  }
  return g;
}

std::size_t PermSubgroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? elements_.size() : it->second;
}

std::vector<Perm> small_generating_set(const PermSubgroup& group,
                                       const Limits& limits) {
  std::vector<Perm> gens;
  PermSubgroup current = PermSubgroup::closure(group.degree(), {}, limits);
  for (const Perm& p : group.elements()) {
    if (current.size() == group.size()) break;
    if (current.contains(p)) continue;
    gens.push_back(p);
    current = PermSubgroup::closure(group.degree(), gens, limits);
  }
  return gens;
}

}  // namespace grpwild
