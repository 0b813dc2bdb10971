#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grpwild {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size limit (enumeration, table, brute-force Aut, closure ceiling) was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// A property the mathematics guarantees did not hold. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A linear map on B does not commute with the action of A.
class EquivarianceError : public Error {
 public:
  EquivarianceError(std::uint64_t basis_index, std::uint64_t generator)
      : Error("linear map is not A-equivariant at basis vector " +
              std::to_string(basis_index) + " and generator " +
              std::to_string(generator)),
        basis_index_(basis_index),
        generator_(generator) {}

  std::uint64_t basis_index() const { return basis_index_; }
  std::uint64_t generator() const { return generator_; }

 private:
  std::uint64_t basis_index_;
  std::uint64_t generator_;
};

}  // namespace grpwild
