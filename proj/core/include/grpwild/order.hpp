#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace grpwild {

using BigInt = boost::multiprecision::cpp_int;

/// Exact group order as a product of prime powers. Exponents are either
/// integers or of the form r * (|A| - 1) for a nested order |A|, so towers
/// of semidirect products stay representable without being evaluated.
class Order {
 public:
  Order() = default;
  static Order from_u64(std::uint64_t n);
  /// p^(r(|base|-1)) * |base|. A numeric result requires a numeric base.
  static Order semidirect(std::uint64_t p, std::uint64_t r, const Order& base,
                          bool symbolic);

  std::vector<std::uint64_t> primes() const;
  bool is_numeric() const { return symbolic_.empty(); }
  /// Decimal value when numeric and at most `max_bits` long.
  std::optional<BigInt> value(std::size_t max_bits = 1u << 16) const;
  std::optional<std::uint64_t> to_u64() const;

  /// Factor form joined by " * ", e.g. "2^(5*(2*3^26-1)) * 2 * 3^26".
  std::string render() const;
  /// Same, joined by "*" (used inside exponents).
  std::string render_compact() const;

  friend bool operator==(const Order& a, const Order& b) {
    return a.render() == b.render();
  }

 private:
  struct Symbolic {
    std::uint64_t prime;
    std::uint64_t r;
    std::shared_ptr<const Order> base;
  };
  std::string join(const char* sep) const;

  std::map<std::uint64_t, BigInt> numeric_;
  std::vector<Symbolic> symbolic_;  // outermost first
};

}  // namespace grpwild
