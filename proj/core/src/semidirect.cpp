#include "grpwild/semidirect.hpp"

#include <algorithm>
#include <string>

#include "grpwild/error.hpp"
#include "grpwild/group_ops.hpp"

namespace grpwild {

std::uint64_t minimal_wild_prime(std::span<const std::uint64_t> base_primes,
                                 std::uint64_t p) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  for (std::uint64_t q = 2;; ++q) {
    if (!is_prime(q)) continue;
    if (std::find(base_primes.begin(), base_primes.end(), q) != base_primes.end()) {
      continue;
    }
    if ((p - 1) % q == 0) continue;
    return q;
  }
}

std::uint64_t minimal_wild_prime(std::uint64_t base_order, std::uint64_t p) {
  if (base_order < 2) throw Error("A must be nontrivial");
  const std::vector<std::uint64_t> primes = prime_divisors(base_order);
  return minimal_wild_prime(primes, p);
}

Order group_order(const Group& g) {
  if (const auto* sd = dynamic_cast<const SdGroup*>(&g)) return sd->exact_order();
  return Order::from_u64(g.order());
}

std::shared_ptr<const SdGroup> SdGroup::build(std::shared_ptr<const Group> base,
                                              std::uint64_t p) {
  if (!base) throw Error("null base group");
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    throw Error(std::to_string(p) + " is not a supported prime");
  }
  const std::uint64_t n = base->order();
  if (n < 2) throw Error("G_p(A) needs a nontrivial A");
  const Order base_order = group_order(*base);
  const std::vector<std::uint64_t> primes = base_order.primes();
  const std::uint64_t r = minimal_wild_prime(primes, p);
  return std::shared_ptr<const SdGroup>(
      new SdGroup(std::move(base), static_cast<std::uint32_t>(p),
                  static_cast<std::uint32_t>(r)));
}

SdGroup::SdGroup(std::shared_ptr<const Group> base, std::uint32_t p,
                 std::uint32_t r)
    : module_(base, p, r) {
  base_order_ = module_.base_order();
  const bool nested = dynamic_cast<const SdGroup*>(base.get()) != nullptr;
  order_ = Order::semidirect(p, r, group_order(*base), nested);
  name_ = "G(" + std::to_string(p) + ", " + base->name() + ")";

  // Indexable iff p^dim * |A| < 2^63.
  const std::uint64_t cap = std::uint64_t{1} << 63;
  std::uint64_t count = 1;
  indexable_ = true;
  for (std::uint64_t j = 0; j < module_.dim(); ++j) {
    if (count > cap / p / base_order_) {
      indexable_ = false;
      break;
    }
    count *= p;
  }
  if (indexable_) {
    vector_count_ = count;
    for (Elem s : base->generators()) {
      if (s != kIdentity) gens_.push_back(s);
    }
    std::uint64_t weight = base_order_;
    for (std::uint64_t j = 0; j < module_.dim(); ++j, weight *= p) {
      gens_.push_back(weight);
    }
  }
}

void SdGroup::check(const SdElement& x) const {
  if (x.a >= base_order_) throw Error("base element outside A");
  if (x.v.dim() != module_.dim() || x.v.p() != p()) {
    throw Error("vector part is not in B");
  }
}

SdElement SdGroup::from_base(Elem a) const { return make(a, module_.zero()); }

SdElement SdGroup::from_vector(GfpVector v) const {
  return make(kIdentity, std::move(v));
}

SdElement SdGroup::make(Elem a, GfpVector v) const {
  SdElement x{a, std::move(v)};
  check(x);
  if (x.v.rep() != module_.rep()) x.v = x.v.with_rep(module_.rep());
  return x;
}

SdElement SdGroup::multiply(const SdElement& x, const SdElement& y) const {
  check(x);
  check(y);
  SdElement z{base().mul(x.a, y.a), module_.act(x.v, y.a)};
  z.v += y.v;
  return z;
}

SdElement SdGroup::inverse(const SdElement& x) const {
  check(x);
  const Elem a_inv = base().inv(x.a);
  return {a_inv, -module_.act(x.v, a_inv)};
}

SdElement SdGroup::power(const SdElement& x, std::uint64_t k) const {
  SdElement result = identity_element();
  SdElement base_el = x;
  while (k > 0) {
    if (k & 1) result = multiply(result, base_el);
    k >>= 1;
    if (k > 0) base_el = multiply(base_el, base_el);
  }
  return result;
}

SdElement SdGroup::conjugate(const SdElement& x, const SdElement& by) const {
  return multiply(multiply(inverse(by), x), by);
}

GfpVector SdGroup::orbit_sum(const GfpVector& t, Elem g,
                             std::uint64_t count) const {
  GfpVector acc = module_.zero();
  GfpVector cur = t;
  for (std::uint64_t k = 0; k < count; ++k) {
    acc += cur;
    if (k + 1 < count) cur = module_.act(cur, g);
  }
  return acc;
}

std::uint64_t SdGroup::element_order(const SdElement& x) const {
  check(x);
  const std::uint64_t m = grpwild::element_order(base(), x.a);
  return orbit_sum(x.v, x.a, m).is_zero() ? m : m * p();
}

std::uint64_t SdGroup::element_order_naive(const SdElement& x) const {
  check(x);
  const SdElement e = identity_element();
  std::uint64_t n = 1;
  for (SdElement y = x; !(y == e); y = multiply(y, x)) ++n;
  return n;
}

void SdGroup::require_indexable() const {
  if (!indexable_) {
    throw LimitError(name_ + " of order " + order_.render() +
                     " cannot be enumerated by index");
  }
}

Elem SdGroup::index_of(const SdElement& x) const {
  require_indexable();
  check(x);
  std::uint64_t vec = 0;
  std::uint64_t weight = 1;
  const std::vector<Residue> coords = x.v.to_dense();
  for (Residue c : coords) {
    vec += c * weight;
    weight *= p();
  }
  return x.a + base_order_ * vec;
}

SdElement SdGroup::element_at(Elem index) const {
  require_indexable();
  if (index / base_order_ >= vector_count_) throw Error("element index out of range");
  std::uint64_t vec = index / base_order_;
  std::vector<Residue> coords(module_.dim());
  for (auto& c : coords) {
    c = static_cast<Residue>(vec % p());
    vec /= p();
  }
  return {index % base_order_, GfpVector::from_dense(p(), coords, module_.rep())};
}

std::uint64_t SdGroup::order() const {
  require_indexable();
  return vector_count_ * base_order_;
}

Elem SdGroup::mul(Elem x, Elem y) const {
  return index_of(multiply(element_at(x), element_at(y)));
}

Elem SdGroup::inv(Elem x) const { return index_of(inverse(element_at(x))); }

std::span<const Elem> SdGroup::generators() const {
  require_indexable();
  return gens_;
}

std::string SdGroup::label(const SdElement& x) const {
  std::string out = "(" + base().element_label(x.a) + "; ";
  bool first = true;
  x.v.for_each_nonzero([&](std::uint64_t c, Residue coef) {
    auto [block, g] = module_.basis_label(c);
    if (!first) out += " + ";
    first = false;
    if (coef != 1) out += std::to_string(coef) + "*";
    out += "v[" + base().element_label(g) + "]^" + std::to_string(block);
  });
  if (first) out += "0";
  return out + ")";
}

std::string SdGroup::element_label(Elem x) const { return label(element_at(x)); }

std::shared_ptr<const TableGroup> enumerate(const SdGroup& g,
                                            const Limits& limits) {
  if (!g.indexable() || g.order() > limits.max_table) {
    throw LimitError(g.name() + " of order " + g.exact_order().render() +
                     " exceeds the table limit " + std::to_string(limits.max_table));
  }
  return to_table(g, limits);
}

SakDescriptor build_saksonov(std::shared_ptr<const Group> base) {
  if (!base) throw Error("null base group");
  if (base->order() < 2) throw Error("Sak(A) needs a nontrivial A");
  SakDescriptor d;
  d.base_name = base->name();
  d.base_order = group_order(*base);
  d.prime_chain = d.base_order.primes();
  std::reverse(d.prime_chain.begin(), d.prime_chain.end());

  std::shared_ptr<const Group> current = base;
  Order current_order = d.base_order;
  bool nested = dynamic_cast<const SdGroup*>(base.get()) != nullptr;
  for (std::uint64_t p : d.prime_chain) {
    SakLevel level;
    level.p = p;
    const std::vector<std::uint64_t> primes = current_order.primes();
    level.r = minimal_wild_prime(primes, p);
    if (auto n = current_order.value(4096); n && current_order.is_numeric()) {
      level.dimension = (BigInt(level.r) * (*n - 1)).str();
    } else {
      level.dimension = std::to_string(level.r) + "*(" +
                        current_order.render_compact() + "-1)";
    }
    level.order = Order::semidirect(p, level.r, current_order, nested);
    if (current) {
      try {
        level.group = SdGroup::build(current, p);
      } catch (const LimitError&) {
        level.group = nullptr;
      }
    }
    // The next level can index this one only if its elements fit in 63 bits.
    current = level.group && level.group->indexable() ? level.group : nullptr;
    current_order = level.order;
    nested = true;
    d.levels.push_back(std::move(level));
  }
  return d;
}

}  // namespace grpwild
