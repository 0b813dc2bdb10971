#include "grpwild/wildness.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "grpwild/error.hpp"
#include "grpwild/parallel.hpp"
#include "grpwild/semidirect.hpp"
#include "grpwild/table_group.hpp"

namespace grpwild {

const char* to_string(WildStatus s) {
  switch (s) {
    case WildStatus::kWildExact: return "wild-exact";
    case WildStatus::kWildWitnessed: return "wild-witnessed";
    case WildStatus::kNotWildExact: return "not-wild-exact";
    case WildStatus::kInconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(WildMode m) {
  return m == WildMode::kExact ? "exact" : "witness";
}

PCyclicClasses p_cyclic_classes(const Group& g, std::uint64_t p,
                                const ConjPartition& conj, unsigned threads) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  const std::uint64_t n = g.order();
  if (conj.class_of.size() != n) throw Error("conjugacy partition does not match the group");

  PCyclicClasses out;
  out.p = p;
  out.subgroup_id_of.assign(n, kNoClass);

  constexpr std::size_t kChunk = 1024;
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  parallel_for(chunks, threads, [&](std::size_t c) {
    const Elem lo = c * kChunk;
    const Elem hi = std::min<Elem>(n, lo + kChunk);
    for (Elem x = std::max<Elem>(lo, 1); x < hi; ++x) {
      std::uint32_t id = conj.class_of[x];
      Elem y = x;
      bool early = false;
      for (std::uint64_t k = 1; k < p; ++k) {
        y = g.mul(y, x);
        if (k + 1 == p) break;
        if (y == kIdentity) {
          early = true;
          break;
        }
        id = std::min(id, conj.class_of[y]);
      }
      if (early || y != kIdentity) continue;
      out.subgroup_id_of[x] = id;
    }
  });

  std::vector<bool> seen(conj.class_count(), false);
  for (Elem x = 1; x < n; ++x) {
    const std::uint32_t id = out.subgroup_id_of[x];
    if (id == kNoClass) continue;
    out.elements.push_back(x);
    if (!seen[id]) {
      seen[id] = true;
      out.class_ids.push_back(id);
      out.reps.push_back(x);
    }
  }
  // Ascending ids, reps kept parallel.
  std::vector<std::size_t> order(out.class_ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return out.class_ids[a] < out.class_ids[b];
  });
  std::vector<std::uint32_t> ids;
  std::vector<Elem> reps;
  for (std::size_t i : order) {
    ids.push_back(out.class_ids[i]);
    reps.push_back(out.reps[i]);
  }
  out.class_ids = std::move(ids);
  out.reps = std::move(reps);
  return out;
}

PCyclicClasses p_cyclic_classes(const Group& g, std::uint64_t p, unsigned threads,
                                const Limits& limits) {
  if (g.order() > limits.max_enum) {
    throw LimitError(g.name() + " exceeds the enumeration limit " +
                     std::to_string(limits.max_enum));
  }
  const ConjPartition conj = conjugacy_classes(g, threads, limits);
  return p_cyclic_classes(g, p, conj, threads);
}

std::vector<AutMap> default_witness_generators(std::shared_ptr<const Group> g,
                                               const Limits& limits) {
  std::vector<AutMap> gens;
  if (auto sd = std::dynamic_pointer_cast<const SdGroup>(g)) {
    gens.push_back(make_psi(sd));
    gens.push_back(make_phi(sd));
    for (std::uint32_t i = 1; i <= sd->r(); ++i) gens.push_back(make_psi_block(sd, i));
    for (Elem s : sd->generators()) gens.push_back(make_inner(sd, sd->element_at(s)));
    const Group& base = sd->base();
    if (base.order() <= limits.max_brute_aut) {
      const PermSubgroup aut = brute_force_aut(base, limits);
      for (const Perm& f : aut.generators()) {
        if (!is_identity(f)) gens.push_back(make_lift(sd, f));
      }
    }
    return gens;
  }
  for (Elem s : g->generators()) gens.push_back(make_table_inner(g, s));
  return gens;
}

namespace {

struct Node {
  std::vector<std::uint32_t> word;
  Elem image;
};

struct Found {
  std::vector<std::uint32_t> word;
  Elem image = 0;
};

std::optional<Found> bfs_witness(const std::vector<AutMap>& gens, Elem rep,
                                 std::uint32_t cls, unsigned depth,
                                 const std::vector<std::uint32_t>& sid) {
  std::unordered_set<Elem> visited{rep};
  std::vector<Node> frontier{{{}, rep}};
  for (unsigned d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      for (std::uint32_t k = 0; k < gens.size(); ++k) {
        const Elem y = gens[k].apply(node.image);
        if (!visited.insert(y).second) continue;
        std::vector<std::uint32_t> word = node.word;
        word.push_back(k);
        if (y >= sid.size() || sid[y] == kNoClass) {
          throw InternalError("generator " + gens[k].render() +
                              " does not preserve element orders");
        }
        if (sid[y] != cls) return Found{std::move(word), y};
        next.push_back({std::move(word), y});
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

AutMap word_map(std::shared_ptr<const Group> g, const std::vector<AutMap>& gens,
                const std::vector<std::uint32_t>& word) {
  AutMap m(std::move(g));
  for (std::uint32_t k : word) m = compose(gens[k], m);
  return m;
}

}  // namespace

WildReport verify_p_wild(std::shared_ptr<const Group> g, std::uint64_t p,
                         const WildOptions& options) {
  if (!g) throw Error("null group");
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  const Limits& limits = options.limits;
  const std::uint64_t n = g->order();
  if (n > limits.max_enum) {
    throw LimitError(g->name() + " of order " + std::to_string(n) +
                     " exceeds the enumeration limit " + std::to_string(limits.max_enum));
  }
  std::shared_ptr<const Group> work = g;
  if (n <= limits.max_table && !dynamic_cast<const TableGroup*>(g.get())) {
    work = to_table(*g, limits);
  }

  ConjPartition local;
  const ConjPartition* conj = options.conj;
  if (!conj) {
    local = conjugacy_classes(*work, options.threads, limits);
    conj = &local;
  }
  const PCyclicClasses classes = p_cyclic_classes(*work, p, *conj, options.threads);

  WildReport report;
  report.p = p;
  report.mode = options.mode;
  report.order_p_elements = classes.elements.size();
  report.class_count = classes.class_count();

  if (classes.class_count() == 0) {
    report.status = WildStatus::kWildExact;
    report.note = "no elements of order " + std::to_string(p);
    return report;
  }

  if (options.mode == WildMode::kExact) {
    if (n > limits.max_brute_aut) {
      throw LimitError(g->name() + " of order " + std::to_string(n) +
                       " exceeds the brute-force automorphism limit " +
                       std::to_string(limits.max_brute_aut));
    }
    const PermSubgroup aut = brute_force_aut(*work, limits);
    std::vector<Perm> gens(aut.generators().begin(), aut.generators().end());
    report.depth = 1;
    for (std::size_t i = 0; i < classes.class_count(); ++i) {
      const std::uint32_t cls = classes.class_ids[i];
      const Elem rep = classes.reps[i];
      bool moved = false;
      for (const Perm& f : gens) {
        const Elem y = f[rep];
        if (classes.subgroup_id_of[y] == cls) continue;
        auto fp = std::make_shared<const Perm>(f);
        auto fi = std::make_shared<const Perm>(inverse(f));
        report.witnesses.push_back(
            {cls, rep, AutMap(g, prim::TablePerm{fp, fi}), y, classes.subgroup_id_of[y]});
        moved = true;
        break;
      }
      if (!moved) {
        report.status = WildStatus::kNotWildExact;
        report.fixed_class = cls;
        report.fixed_rep = rep;
        report.witnesses.clear();
        report.note = "class fixed by all " + std::to_string(aut.size()) +
                      " automorphisms";
        return report;
      }
    }
    report.status = WildStatus::kWildExact;
    report.note = "every class moved by a generator of Aut (order " +
                  std::to_string(aut.size()) + ")";
    return report;
  }

  // Witness mode.
  report.depth = options.depth;
  if (classes.class_count() == 1) {
    report.status = WildStatus::kNotWildExact;
    report.fixed_class = classes.class_ids.front();
    report.fixed_rep = classes.reps.front();
    report.note = "single class of subgroups of order " + std::to_string(p);
    return report;
  }

  if (const auto* sd = dynamic_cast<const SdGroup*>(g.get())) {
    // Order-p elements project to 1 or to order-p elements of A.
    const Group& base = sd->base();
    const std::uint64_t an = base.order();
    for (Elem x : classes.elements) {
      const Elem a = x % an;
      if (a != kIdentity && element_order(base, a) != p) {
        throw InternalError("order-" + std::to_string(p) + " element " +
                            g->element_label(x) + " has a base part of another order");
      }
    }
  }

  const std::vector<AutMap> gens =
      options.generators ? *options.generators : default_witness_generators(g, limits);
  for (const AutMap& m : gens) {
    if (m.parent_ptr() != g) throw Error("witness generator belongs to another group");
  }

  std::vector<std::optional<Found>> found(classes.class_count());
  parallel_for(classes.class_count(), options.threads, [&](std::size_t i) {
    found[i] = bfs_witness(gens, classes.reps[i], classes.class_ids[i], options.depth,
                           classes.subgroup_id_of);
  });

  for (std::size_t i = 0; i < found.size(); ++i) {
    const std::uint32_t cls = classes.class_ids[i];
    const Elem rep = classes.reps[i];
    if (!found[i]) {
      report.unresolved_classes.push_back(cls);
      continue;
    }
    AutMap map = word_map(g, gens, found[i]->word);
    const Elem y = map.apply(rep);
    if (y != found[i]->image || classes.subgroup_id_of[y] == cls) {
      throw InternalError("witness word failed re-evaluation");
    }
    report.witnesses.push_back({cls, rep, std::move(map), y, classes.subgroup_id_of[y]});
  }
  if (report.unresolved_classes.empty()) {
    report.status = WildStatus::kWildWitnessed;
  } else {
    report.status = WildStatus::kInconclusive;
    report.witnesses.clear();
    report.note = std::to_string(report.unresolved_classes.size()) +
                  " class(es) not moved within depth " + std::to_string(options.depth);
  }
  return report;
}

XiReport xi(std::shared_ptr<const Group> g, const WildOptions& options) {
  XiReport out;
  out.pi = group_order(*g).primes();
  for (std::uint64_t p : out.pi) {
    WildReport r = verify_p_wild(g, p, options);
    if (is_wild(r.status)) out.xi.push_back(p);
    out.per_prime.emplace(p, std::move(r));
  }
  return out;
}

// ---- triplets ---------------------------------------------------------------

TripletSpec make_triplet(std::shared_ptr<const Group> g, std::vector<Perm> d0_gens,
                         std::vector<Perm> d1_gens, std::string label,
                         const Limits& limits) {
  const std::size_t n = g->order();
  std::vector<Perm> all = d0_gens;
  all.insert(all.end(), d1_gens.begin(), d1_gens.end());
  PermSubgroup d0 = PermSubgroup::closure(n, std::move(d0_gens), limits);
  PermSubgroup d1 = PermSubgroup::closure(n, std::move(all), limits);
  return {std::move(g), std::move(d0), std::move(d1), std::move(label)};
}

PermSubgroup sample_intermediate(const PermSubgroup& d0, const PermSubgroup& aut,
                                 std::mt19937_64& rng, const Limits& limits) {
  std::vector<Perm> gens(d0.generators().begin(), d0.generators().end());
  const std::size_t k = 1 + rng() % 2;
  for (std::size_t i = 0; i < k; ++i) {
    gens.push_back(aut.elements()[rng() % aut.size()]);
  }
  return PermSubgroup::closure(aut.degree(), std::move(gens), limits);
}

namespace {

std::shared_ptr<const TableGroup> coset_quotient(const PermSubgroup& d1,
                                                 const PermSubgroup& d0,
                                                 const Limits& limits) {
  const std::size_t m = d1.size() / d0.size();
  if (m > limits.max_table) {
    throw LimitError("D1/D0 of order " + std::to_string(m) + " exceeds the table limit");
  }
  std::vector<std::uint32_t> coset(d1.size(), kNoClass);
  std::vector<std::size_t> reps;
  const std::size_t id = d1.index_of(identity_perm(d1.degree()));
  std::vector<std::size_t> visit_order{id};
  for (std::size_t i = 0; i < d1.size(); ++i) {
    if (i != id) visit_order.push_back(i);
  }
  for (std::size_t i : visit_order) {
    if (coset[i] != kNoClass) continue;
    const auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(i);
    for (const Perm& e : d0.elements()) {
      coset[d1.index_of(compose(d1.elements()[i], e))] = c;
    }
  }
  if (reps.size() != m) throw InternalError("coset count mismatch");
  std::vector<Elem> gens;
  for (const Perm& s : d1.generators()) {
    const Elem c = coset[d1.index_of(s)];
    if (c != kIdentity && std::find(gens.begin(), gens.end(), c) == gens.end()) {
      gens.push_back(c);
    }
  }
  if (gens.empty()) gens.push_back(kIdentity);
  return TableGroup::from_function(
      "D1/D0", m,
      [&](Elem a, Elem b) {
        return Elem{coset[d1.index_of(
            compose(d1.elements()[reps[a]], d1.elements()[reps[b]]))]};
      },
      std::move(gens), {}, limits);
}

}  // namespace

TripletReport check_triplet(const TripletSpec& t, const Limits& limits) {
  if (!t.g) throw Error("null group");
  const Group& g = *t.g;
  const std::uint64_t n = g.order();
  if (t.d0.degree() != n || t.d1.degree() != n) {
    throw Error("D0/D1 do not act on the elements of " + g.name());
  }
  for (const PermSubgroup* d : {&t.d0, &t.d1}) {
    for (const Perm& f : d->generators()) {
      if (!is_automorphism(g, f)) throw Error("a generator of D0/D1 is not an automorphism");
    }
  }
  for (const Perm& h : t.d0.generators()) {
    if (!t.d1.contains(h)) throw Error("D0 is not contained in D1");
  }
  for (const Perm& s : t.d1.generators()) {
    const Perm s_inv = inverse(s);
    for (const Perm& h : t.d0.generators()) {
      if (!t.d0.contains(compose(s_inv, compose(h, s)))) {
        throw Error("D0 is not normal in D1");
      }
    }
  }
  for (Elem x : g.generators()) {
    if (!t.d0.contains(conjugation_perm(g, x))) {
      throw Error("D0 is not ordinary: conjugation by " + g.element_label(x) +
                  " is missing");
    }
  }

  TripletReport r;
  r.ordinary = true;
  r.d0_size = t.d0.size();
  r.d1_size = t.d1.size();

  std::vector<Elem> involutions;
  for (Elem x = 1; x < n; ++x) {
    if (g.mul(x, x) == kIdentity) involutions.push_back(x);
  }
  r.involutions = involutions.size();

  // D0-orbits of involutions.
  std::vector<std::uint32_t> orbit(n, kNoClass);
  std::vector<Elem> orbit_rep;
  for (Elem a : involutions) {
    if (orbit[a] != kNoClass) continue;
    const auto id = static_cast<std::uint32_t>(orbit_rep.size());
    orbit_rep.push_back(a);
    std::deque<Elem> queue{a};
    orbit[a] = id;
    while (!queue.empty()) {
      const Elem x = queue.front();
      queue.pop_front();
      for (const Perm& h : t.d0.generators()) {
        const Elem y = h[x];
        if (orbit[y] == kNoClass) {
          orbit[y] = id;
          queue.push_back(y);
        }
      }
    }
  }
  r.d0_orbits = orbit_rep.size();
  r.wild = true;
  for (std::uint32_t o = 0; o < orbit_rep.size() && r.wild; ++o) {
    bool fixed = true;
    for (const Perm& s : t.d1.generators()) {
      if (orbit[s[orbit_rep[o]]] != o) {
        fixed = false;
        break;
      }
    }
    if (fixed) {
      r.wild = false;
      r.fixed_involution = orbit_rep[o];
    }
  }

  // C_{D1}(a) D0 < D1 for every involution a.
  r.wild_centralizer_form = true;
  for (Elem a : involutions) {
    std::size_t c = 0;
    std::size_t c0 = 0;
    for (const Perm& d : t.d1.elements()) {
      if (d[a] != a) continue;
      ++c;
      if (t.d0.contains(d)) ++c0;
    }
    if (c * t.d0.size() / c0 == t.d1.size()) {
      r.wild_centralizer_form = false;
      break;
    }
  }
  r.forms_agree = r.wild == r.wild_centralizer_form;

  const auto q = coset_quotient(t.d1, t.d0, limits);
  r.quotient_order = q->order();
  r.d1_mod_d0_n2c = has_normal_2_complement(*q, limits).exists;
  r.solvable = is_solvable(g, limits);
  return r;
}

Theorem1Result theorem1_harness(const std::vector<TripletSpec>& catalog,
                                const Limits& limits, unsigned threads) {
  Theorem1Result out;
  out.entries.resize(catalog.size());
  parallel_for(catalog.size(), threads, [&](std::size_t i) {
    Theorem1Entry& e = out.entries[i];
    e.label = catalog[i].label;
    try {
      e.report = check_triplet(catalog[i], limits);
    } catch (const Error& ex) {
      e.error = ex.what();
    }
  });
  for (const Theorem1Entry& e : out.entries) {
    if (e.report && e.report->wild && e.report->d1_mod_d0_n2c && !e.report->solvable) {
      out.violations.push_back(e.label);
    }
  }
  return out;
}

std::vector<TripletReport> proposition3_harness(std::shared_ptr<const Group> g,
                                                std::size_t samples,
                                                std::mt19937_64& rng,
                                                const Limits& limits) {
  const std::uint64_t n = g->order();
  if (n % 2 != 0 || (n / 2) % 2 != 1) {
    throw Error(g->name() + " does not have order 2k with k odd");
  }
  const PermSubgroup inn = inner_automorphisms(*g, limits);
  const PermSubgroup aut = brute_force_aut(*g, limits);
  std::vector<TripletReport> out;
  out.push_back(check_triplet({g, inn, inn, "inn/inn"}, limits));
  out.push_back(check_triplet({g, inn, aut, "inn/aut"}, limits));
  for (std::size_t i = 0; i < samples; ++i) {
    out.push_back(
        check_triplet({g, inn, sample_intermediate(inn, aut, rng, limits), "sample"}, limits));
  }
  return out;
}

Corollary1Result corollary1_check(const Group& g, const Subgroup& n,
                                  const Limits& limits) {
  Corollary1Result out;
  if (is_solvable(g, limits)) {
    out.message = g.name() + " is solvable";
    return out;
  }
  if (!is_normal(g, n)) {
    out.message = "N is not normal";
    return out;
  }
  const Quotient q = quotient(g, n.elements, limits);
  if (!has_normal_2_complement(*q.group, limits).exists) {
    out.message = "G/N has no normal 2-complement";
    return out;
  }
  const std::uint64_t order = g.order();
  for (Elem a : n.elements) {
    if (a == kIdentity || g.mul(a, a) != kIdentity) continue;
    std::uint64_t c = 0;
    std::uint64_t cn = 0;
    for (Elem x = 0; x < order; ++x) {
      if (g.mul(x, a) != g.mul(a, x)) continue;
      ++c;
      if (n.contains(x)) ++cn;
    }
    if (c * n.size() / cn == order) {
      out.status = Corollary1Result::Status::kWitness;
      out.involution = a;
      out.message = "C_G(a)N = G for a = " + g.element_label(a);
      return out;
    }
  }
  out.status = Corollary1Result::Status::kRefuted;
  out.message = "no involution a in N with C_G(a)N = G";
  return out;
}

}  // namespace grpwild
