#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grpwild/error.hpp"
#include "grpwild/group.hpp"
#include "grpwild/limits.hpp"
#include "grpwild/order.hpp"
#include "grpwild/semidirect.hpp"

namespace grpwild::cli {

/// Parsed group expression.
///
///   expr := term ('x' term)*
///   term := atom | 'G(' prime ',' expr ')' | 'Sak(' expr ')'
///   atom := ('C'|'D'|'S'|'A') digits | 'Q8'
struct GroupExpr {
  enum class Kind { kAtom, kProduct, kGp, kSak };
  Kind kind = Kind::kAtom;
  char atom = 'C';         // C, D, S, A or Q
  std::uint64_t n = 1;     // atom parameter, or the prime of G(p, .)
  std::vector<GroupExpr> children;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Largest accepted atom parameters.
inline constexpr std::uint64_t kMaxCyclic = 4096;
inline constexpr std::uint64_t kMaxDihedral = 2048;

GroupExpr parse_group_expr(std::string_view text);
/// Canonical text, e.g. "G(2, C3)", "Sak(S3)", "C2 x C2".
std::string render(const GroupExpr& e);

struct EvaluatedGroup {
  /// Null when the group cannot be addressed by index (outer Sak levels).
  std::shared_ptr<const Group> group;
  std::optional<SakDescriptor> sak;
  Order order;
};

EvaluatedGroup evaluate(const GroupExpr& e, const Limits& limits = {});

}  // namespace grpwild::cli
