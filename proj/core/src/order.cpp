#include "grpwild/order.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "grpwild/error.hpp"
#include "grpwild/group_ops.hpp"

namespace grpwild {

Order Order::from_u64(std::uint64_t n) {
  if (n == 0) throw Error("order must be positive");
  Order o;
  for (auto [p, e] : factorize(n)) o.numeric_[p] = e;
  return o;
}

Order Order::semidirect(std::uint64_t p, std::uint64_t r, const Order& base,
                        bool symbolic) {
  Order o = base;
  if (!symbolic) {
    auto n = base.value();
    if (!base.is_numeric() || !n) {
      throw Error("numeric semidirect order needs a numeric base order");
    }
    const BigInt exponent = BigInt(r) * (*n - 1);
    if (exponent != 0) o.numeric_[p] += exponent;
    return o;
  }
  o.symbolic_.insert(o.symbolic_.begin(),
                     Symbolic{p, r, std::make_shared<const Order>(base)});
  return o;
}

std::vector<std::uint64_t> Order::primes() const {
  std::set<std::uint64_t> out;
  for (const auto& [p, e] : numeric_) {
    if (e != 0) out.insert(p);
  }
  for (const auto& s : symbolic_) {
    // r(|A|-1) > 0 because symbolic levels have nontrivial bases.
    out.insert(s.prime);
  }
  return {out.begin(), out.end()};
}

std::optional<BigInt> Order::value(std::size_t max_bits) const {
  if (!is_numeric()) return std::nullopt;
  double bits = 0;
  for (const auto& [p, e] : numeric_) {
    bits += static_cast<double>(e) * std::log2(static_cast<double>(p));
    if (bits > static_cast<double>(max_bits)) return std::nullopt;
  }
  BigInt v = 1;
  for (const auto& [p, e] : numeric_) {
    v *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
  }
  return v;
}

std::optional<std::uint64_t> Order::to_u64() const {
  auto v = value(64);
  if (!v || *v > BigInt(UINT64_MAX)) return std::nullopt;
  return static_cast<std::uint64_t>(*v);
}

std::string Order::join(const char* sep) const {
  std::vector<std::string> parts;
  for (const auto& s : symbolic_) {
    parts.push_back(std::to_string(s.prime) + "^(" + std::to_string(s.r) +
                    "*(" + s.base->render_compact() + "-1))");
  }
  for (const auto& [p, e] : numeric_) {
    if (e == 0) continue;
    parts.push_back(e == 1 ? std::to_string(p)
                           : std::to_string(p) + "^" + e.str());
  }
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += sep + parts[i];
  return out;
}

std::string Order::render() const { return join(" * "); }
std::string Order::render_compact() const { return join("*"); }

}  // namespace grpwild
