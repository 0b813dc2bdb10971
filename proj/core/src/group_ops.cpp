#include "grpwild/group_ops.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "grpwild/error.hpp"
#include "grpwild/parallel.hpp"

namespace grpwild {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::uint64_t element_order(const Group& g, Elem x) {
  std::uint64_t n = 1;
  for (Elem y = x; y != kIdentity; y = g.mul(y, x)) ++n;
  return n;
}

namespace {

void check_enum(const Group& g, const Limits& limits) {
  if (g.order() > limits.max_enum) {
    throw LimitError("order " + std::to_string(g.order()) +
                     " exceeds the enumeration limit " +
                     std::to_string(limits.max_enum));
  }
}

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

ConjPartition conjugacy_classes(const Group& g, unsigned threads,
                                const Limits& limits) {
  check_enum(g, limits);
  const std::uint64_t n = g.order();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  std::vector<std::uint32_t> image(n);
  for (Elem s : g.generators()) {
    const Elem s_inv = g.inv(s);
    parallel_for(n, threads, [&](std::size_t x) {
      image[x] = static_cast<std::uint32_t>(g.mul(g.mul(s_inv, x), s));
    });
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint32_t a = find_root(parent, x), b = find_root(parent, image[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  ConjPartition out;
  out.class_of.assign(n, 0);
  std::vector<std::uint32_t> id_of_root(n, UINT32_MAX);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t root = find_root(parent, x);
    if (id_of_root[root] == UINT32_MAX) {
      id_of_root[root] = static_cast<std::uint32_t>(out.classes.size());
      out.classes.emplace_back();
    }
    out.class_of[x] = id_of_root[root];
    out.classes[id_of_root[root]].push_back(x);
  }
  return out;
}

Subgroup subgroup_closure(const Group& g, std::span<const Elem> gens,
                          const Limits& limits) {
  check_enum(g, limits);
  const std::uint64_t n = g.order();
  Subgroup h;
  h.member.assign(n, false);
  for (Elem s : gens) {
    if (s >= n) throw Error("generator out of range");
    if (s != kIdentity &&
        std::find(h.generators.begin(), h.generators.end(), s) ==
            h.generators.end()) {
      h.generators.push_back(s);
    }
  }
  h.member[kIdentity] = true;
  h.elements.push_back(kIdentity);
  for (std::size_t head = 0; head < h.elements.size(); ++head) {
    const Elem x = h.elements[head];
    for (Elem s : h.generators) {
      const Elem y = g.mul(x, s);
      if (!h.member[y]) {
        h.member[y] = true;
        h.elements.push_back(y);
      }
    }
  }
  std::sort(h.elements.begin(), h.elements.end());
  if (n % h.size() != 0) {
    throw InternalError("closure of size " + std::to_string(h.size()) +
                        " does not divide " + std::to_string(n));
  }
  return h;
}

Subgroup whole_group(const Group& g, const Limits& limits) {
  return subgroup_closure(g, g.generators(), limits);
}

namespace {

constexpr std::size_t kAllPairsCommutatorLimit = 4096;

Subgroup normal_closure_in(const Group& g, const Subgroup& ambient,
                           std::vector<Elem> gens, const Limits& limits) {
  Subgroup n = subgroup_closure(g, gens, limits);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < n.generators.size() && !grew; ++i) {
      for (Elem h : ambient.generators) {
        const Elem c = g.conj(n.generators[i], h);
        if (!n.contains(c)) {
          gens = n.generators;
          gens.push_back(c);
          n = subgroup_closure(g, gens, limits);
          grew = true;
          break;
        }
      }
    }
  }
  return n;
}

}  // namespace

Subgroup derived_subgroup(const Group& g, const Subgroup& h,
                          const Limits& limits) {
  std::vector<Elem> gens;
  if (h.size() <= kAllPairsCommutatorLimit) {
    std::vector<bool> seen(g.order(), false);
    for (Elem x : h.elements) {
      for (Elem y : h.elements) {
        const Elem c = g.commutator(x, y);
        if (!seen[c]) {
          seen[c] = true;
          gens.push_back(c);
        }
      }
    }
    // Commutators of a subgroup already generate a normal subgroup.
    return subgroup_closure(g, gens, limits);
  }
  for (Elem x : h.generators) {
    for (Elem y : h.generators) gens.push_back(g.commutator(x, y));
  }
  return normal_closure_in(g, h, std::move(gens), limits);
}

bool is_solvable(const Group& g, const Limits& limits) {
  Subgroup h = whole_group(g, limits);
  while (h.size() > 1) {
    Subgroup d = derived_subgroup(g, h, limits);
    if (d.size() == h.size()) return false;
    h = std::move(d);
  }
  return true;
}

bool is_normal(const Group& g, const Subgroup& n) {
  for (Elem x : n.generators) {
    for (Elem s : g.generators()) {
      if (!n.contains(g.conj(x, s))) return false;
    }
  }
  return true;
}

NormalComplement has_normal_2_complement(const Group& g, const Limits& limits) {
  check_enum(g, limits);
  std::vector<Elem> odd;
  for (Elem x = 1; x < g.order(); ++x) {
    if (element_order(g, x) % 2 == 1) odd.push_back(x);
  }
  NormalComplement out;
  out.odd_part = subgroup_closure(g, odd, limits);
  out.exists = out.odd_part.size() % 2 == 1;
  if (out.exists) {
    std::uint64_t index = g.order() / out.odd_part.size();
    if ((index & (index - 1)) != 0) {
      throw InternalError("normal 2-complement has index " +
                          std::to_string(index) + ", not a power of 2");
    }
  }
  return out;
}

Quotient quotient(const Group& g, std::span<const Elem> normal,
                  const Limits& limits) {
  check_enum(g, limits);
  const std::uint64_t n = g.order();
  std::vector<Elem> members(normal.begin(), normal.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup sub = subgroup_closure(g, members, limits);
  if (members.empty() || members.front() != kIdentity) {
    members.insert(members.begin(), kIdentity);
  }
  if (sub.elements != members) throw Error("element set is not a subgroup");
  if (!is_normal(g, sub)) throw Error("subgroup is not normal");

  const std::uint64_t m = n / sub.size();
  if (m > limits.max_table) throw LimitError("quotient exceeds the table limit");
  Quotient q;
  q.projection.assign(n, UINT32_MAX);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (q.projection[x] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Elem y : sub.elements) q.projection[g.mul(x, y)] = id;
  }
  std::vector<Elem> gens;
  for (Elem s : g.generators()) {
    const Elem c = q.projection[s];
    if (c != kIdentity && std::find(gens.begin(), gens.end(), c) == gens.end()) {
      gens.push_back(c);
    }
  }
  if (gens.empty()) gens.push_back(kIdentity);
  std::vector<std::string> labels;
  for (Elem r : reps) labels.push_back(g.element_label(r) + "N");
  q.group = TableGroup::from_function(
      g.name() + "/N", m,
      [&](Elem a, Elem b) { return Elem{q.projection[g.mul(reps[a], reps[b])]}; },
      std::move(gens), std::move(labels), limits);
  return q;
}

std::vector<Elem> min_generating_set(const Group& g, const Limits& limits) {
  check_enum(g, limits);
  const std::uint64_t n = g.order();
  std::vector<std::pair<std::uint64_t, Elem>> by_order;
  for (Elem x = 1; x < n; ++x) by_order.emplace_back(element_order(g, x), x);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Elem> gens;
  Subgroup current = subgroup_closure(g, gens, limits);
  for (auto [ord, x] : by_order) {
    if (current.size() == n) break;
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = subgroup_closure(g, gens, limits);
  }
  if (gens.empty()) gens.push_back(kIdentity);
  return gens;
}

namespace {

// Defines f on <gens> by walking the Cayley graph; checks every edge and
// injectivity. `f` has size |G| with UINT32_MAX for undefined points.
bool extend_partial(const Group& g, std::span<const Elem> gens,
                    std::span<const Elem> images, std::vector<std::uint32_t>& f,
                    std::vector<bool>& used) {
  const std::uint64_t n = g.order();
  f.assign(n, UINT32_MAX);
  used.assign(n, false);
  f[kIdentity] = kIdentity;
  used[kIdentity] = true;
  std::vector<Elem> queue{kIdentity};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem y = g.mul(x, gens[k]);
      const auto fy = static_cast<std::uint32_t>(g.mul(f[x], images[k]));
      if (f[y] == UINT32_MAX) {
        if (used[fy]) return false;
        f[y] = fy;
        used[fy] = true;
        queue.push_back(y);
      } else if (f[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<Perm> extend_to_automorphism(const Group& g,
                                           std::span<const Elem> gens,
                                           std::span<const Elem> images) {
  if (gens.size() != images.size()) throw Error("generator/image count mismatch");
  const std::uint64_t n = g.order();
  for (Elem c : images) {
    if (c >= n) throw Error("image out of range");
  }
  std::vector<std::uint32_t> f;
  std::vector<bool> used;
  if (!extend_partial(g, gens, images, f, used)) return std::nullopt;
  for (std::uint32_t v : f) {
    if (v == UINT32_MAX) return std::nullopt;  // gens do not generate G
  }
  return f;
}

bool is_automorphism(const Group& g, const Perm& f) {
  const std::uint64_t n = g.order();
  if (f.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::uint32_t v : f) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (f[g.mul(x, y)] != g.mul(f[x], f[y])) return false;
    }
  }
  return true;
}

Perm conjugation_perm(const Group& g, Elem by) {
  const std::uint64_t n = g.order();
  Perm p(n);
  for (Elem x = 0; x < n; ++x) p[x] = static_cast<std::uint32_t>(g.conj(x, by));
  return p;
}

PermSubgroup brute_force_aut(const Group& g, const Limits& limits) {
  const std::uint64_t n = g.order();
  if (n > limits.max_brute_aut) {
    throw LimitError("order " + std::to_string(n) +
                     " exceeds the brute-force Aut limit " +
                     std::to_string(limits.max_brute_aut));
  }
  const std::vector<Elem> gens = min_generating_set(g, limits);
  std::vector<std::uint64_t> order_of(n);
  for (Elem x = 0; x < n; ++x) order_of[x] = element_order(g, x);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (Elem c = 0; c < n; ++c) {
      if (order_of[c] == order_of[gens[k]]) candidates[k].push_back(c);
    }
  }

  std::vector<Perm> autos;
  std::vector<Elem> images(gens.size());
  std::vector<std::uint32_t> f;
  std::vector<bool> used;
  // Depth-first over generator images; each prefix must extend consistently
  // and injectively to the subgroup it generates.
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      autos.emplace_back(f.begin(), f.end());
      if (autos.size() > limits.max_perm_closure) {
        throw LimitError("automorphism group exceeds the closure ceiling");
      }
      return;
    }
    for (Elem c : candidates[k]) {
      images[k] = c;
      if (!extend_partial(g, std::span(gens).first(k + 1),
                          std::span(images).first(k + 1), f, used)) {
        continue;
      }
      self(self, k + 1);
    }
  };
  search(search, 0);
  for (const Perm& a : autos) {
    if (std::find(a.begin(), a.end(), UINT32_MAX) != a.end()) {
      throw InternalError("generating set does not generate the group");
    }
  }
  std::sort(autos.begin(), autos.end());
  PermSubgroup all = PermSubgroup::from_elements(n, autos, {});
  std::vector<Perm> aut_gens = small_generating_set(all, limits);
  return PermSubgroup::from_elements(n, std::move(autos), std::move(aut_gens));
}

PermSubgroup inner_automorphisms(const Group& g, const Limits& limits) {
  std::vector<Perm> gens;
  for (Elem s : g.generators()) gens.push_back(conjugation_perm(g, s));
  return PermSubgroup::closure(g.order(), std::move(gens), limits);
}

}  // namespace grpwild
