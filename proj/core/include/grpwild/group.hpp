#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace grpwild {

/// Group elements are addressed by index; index 0 is always the identity.
using Elem = std::uint64_t;

inline constexpr Elem kIdentity = 0;

/// A finite group whose elements are addressed by index.
///
/// Implementations are immutable after construction and safe for concurrent
/// reads. Groups too large to index (see SdGroup) throw LimitError from
/// order()/mul()/inv().
class Group {
 public:
  virtual ~Group() = default;

  virtual std::uint64_t order() const = 0;
  virtual Elem mul(Elem x, Elem y) const = 0;
  virtual Elem inv(Elem x) const = 0;
  virtual std::span<const Elem> generators() const = 0;
  virtual std::string name() const = 0;
  virtual std::string element_label(Elem x) const { return std::to_string(x); }

  Elem pow(Elem x, std::uint64_t n) const;
  /// Right conjugation by^-1 * x * by.
  Elem conj(Elem x, Elem by) const { return mul(mul(inv(by), x), by); }
  /// x^-1 y^-1 x y.
  Elem commutator(Elem x, Elem y) const {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }
};

}  // namespace grpwild
