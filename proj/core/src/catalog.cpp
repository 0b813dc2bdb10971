#include "grpwild/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "grpwild/error.hpp"

namespace grpwild {

namespace {

using Perm = std::vector<std::uint32_t>;

std::string cycle_label(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

bool is_even(const Perm& p) {
  std::size_t transpositions = 0;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Perm cycle(std::size_t degree, std::initializer_list<std::uint32_t> points) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<std::uint32_t> pts(points);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    p[pts[k]] = pts[(k + 1) % pts.size()];
  }
  return p;
}

// Permutation group on {0..n-1} listed in lexicographic order; x*y applies x
// first, then y.
std::shared_ptr<const TableGroup> perm_table(std::string name,
                                             std::vector<Perm> elems,
                                             const std::vector<Perm>& gens,
                                             const Limits& limits) {
  std::map<Perm, Elem> index;
  for (Elem i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  const std::size_t deg = elems.front().size();
  std::vector<Elem> gen_idx;
  for (const Perm& g : gens) gen_idx.push_back(index.at(g));
  if (gen_idx.empty()) gen_idx.push_back(kIdentity);
  std::vector<std::string> labels;
  for (const Perm& p : elems) labels.push_back(cycle_label(p));
  auto mul = [&](Elem x, Elem y) {
    Perm z(deg);
    for (std::size_t i = 0; i < deg; ++i) z[i] = elems[y][elems[x][i]];
    return index.at(z);
  };
  return TableGroup::from_function(std::move(name), elems.size(), mul,
                                   std::move(gen_idx), std::move(labels),
                                   limits);
}

std::vector<Perm> all_perms(std::uint64_t n, bool even_only) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<Perm> out;
  do {
    if (!even_only || is_even(p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void check_degree(char kind, std::uint64_t n) {
  if (n < 1 || n > kMaxPermDegree) {
    throw Error(std::string(1, kind) + std::to_string(n) +
                ": degree must be in 1.." + std::to_string(kMaxPermDegree));
  }
}

std::shared_ptr<const TableGroup> atom(std::string_view text,
                                       const Limits& limits) {
  if (text == "Q8") return quaternion8();
  if (text.size() < 2 || !std::all_of(text.begin() + 1, text.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    throw Error("unknown group atom '" + std::string(text) + "'");
  }
  if (text.size() > 12) throw LimitError("atom parameter too large");
  const std::uint64_t n = std::stoull(std::string(text.substr(1)));
  switch (text[0]) {
    case 'C':
      return cyclic(n, limits);
    case 'D':
      return dihedral(n, limits);
    case 'S':
      return symmetric(n, limits);
    case 'A':
      return alternating(n, limits);
    default:
      throw Error("unknown group atom '" + std::string(text) + "'");
  }
}

}  // namespace

std::shared_ptr<const TableGroup> cyclic(std::uint64_t n, const Limits& limits) {
  if (n < 1) throw Error("C0 is not a group");
  if (n > limits.max_table) {
    throw LimitError("C" + std::to_string(n) + " exceeds the table limit");
  }
  std::vector<std::string> labels;
  for (std::uint64_t i = 0; i < n; ++i) labels.push_back("g^" + std::to_string(i));
  return TableGroup::from_function(
      "C" + std::to_string(n), n, [n](Elem x, Elem y) { return (x + y) % n; },
      {n > 1 ? Elem{1} : kIdentity}, std::move(labels), limits);
}

std::shared_ptr<const TableGroup> dihedral(std::uint64_t n,
                                           const Limits& limits) {
  if (n < 1) throw Error("D0 is not a group");
  if (2 * n > limits.max_table) {
    throw LimitError("D" + std::to_string(n) + " exceeds the table limit");
  }
  // r^i s^e at index i + n e.
  auto mul = [n](Elem x, Elem y) {
    const std::uint64_t i = x % n, a = x / n, j = y % n, b = y / n;
    const std::uint64_t rot = a == 0 ? (i + j) % n : (i + n - j) % n;
    return rot + n * ((a + b) % 2);
  };
  std::vector<std::string> labels;
  for (std::uint64_t e = 0; e < 2; ++e) {
    for (std::uint64_t i = 0; i < n; ++i) {
      labels.push_back("r^" + std::to_string(i) + (e ? "s" : ""));
    }
  }
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  gens.push_back(n);
  return TableGroup::from_function("D" + std::to_string(n), 2 * n, mul,
                                   std::move(gens), std::move(labels), limits);
}

std::shared_ptr<const TableGroup> symmetric(std::uint64_t n,
                                            const Limits& limits) {
  check_degree('S', n);
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(cycle(n, {0, 1}));
  if (n >= 3) {
    Perm c(n);
    for (std::uint32_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(c);
  }
  return perm_table("S" + std::to_string(n), all_perms(n, false), gens, limits);
}

std::shared_ptr<const TableGroup> alternating(std::uint64_t n,
                                              const Limits& limits) {
  check_degree('A', n);
  std::vector<Perm> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(cycle(n, {0, 1, k}));
  return perm_table("A" + std::to_string(n), all_perms(n, true), gens, limits);
}

std::shared_ptr<const TableGroup> quaternion8() {
  // Index 2u + s: unit u in {1, i, j, k}, sign s (1 = negative).
  static constexpr int kUnit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto mul = [](Elem x, Elem y) {
    const auto u = x / 2, v = y / 2;
    const auto sign = (x % 2 + y % 2 + kSign[u][v]) % 2;
    return Elem(2 * kUnit[u][v] + sign);
  };
  return TableGroup::from_function(
      "Q8", 8, mul, {2, 4}, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

std::shared_ptr<const TableGroup> direct_product(const Group& g,
                                                 const Group& h,
                                                 const Limits& limits) {
  const std::uint64_t ng = g.order(), nh = h.order();
  if (ng * nh > limits.max_table || ng * nh / nh != ng) {
    throw LimitError("product order exceeds the table limit");
  }
  auto mul = [&](Elem x, Elem y) {
    return g.mul(x % ng, y % ng) + ng * h.mul(x / ng, y / ng);
  };
  std::vector<Elem> gens;
  for (Elem s : g.generators()) {
    if (s != kIdentity) gens.push_back(s);
  }
  for (Elem s : h.generators()) {
    if (s != kIdentity) gens.push_back(ng * s);
  }
  if (gens.empty()) gens.push_back(kIdentity);
  std::vector<std::string> labels;
  for (Elem x = 0; x < ng * nh; ++x) {
    labels.push_back("(" + g.element_label(x % ng) + "," +
                     h.element_label(x / ng) + ")");
  }
  return TableGroup::from_function(g.name() + " x " + h.name(), ng * nh, mul,
                                   std::move(gens), std::move(labels), limits);
}

std::shared_ptr<const TableGroup> catalog_group(std::string_view spec,
                                                const Limits& limits) {
  std::vector<std::string> atoms;
  std::string cur;
  for (char c : spec) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) atoms.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) atoms.push_back(std::move(cur));
  // Tokens alternate atom, 'x', atom, ...
  if (atoms.empty() || atoms.size() % 2 == 0) {
    throw Error("malformed group spec '" + std::string(spec) + "'");
  }
  std::shared_ptr<const TableGroup> result = atom(atoms[0], limits);
  for (std::size_t k = 1; k < atoms.size(); k += 2) {
    if (atoms[k] != "x") {
      throw Error("expected 'x' in group spec '" + std::string(spec) + "'");
    }
    result = direct_product(*result, *atom(atoms[k + 1], limits), limits);
  }
  return result;
}

}  // namespace grpwild
