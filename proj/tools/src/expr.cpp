#include "grpwild_cli/expr.hpp"

#include <cctype>

#include "grpwild/catalog.hpp"
#include "grpwild/group_ops.hpp"

namespace grpwild::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  GroupExpr parse() {
    GroupExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      fail(pos_ < s_.size() ? "expected '" + std::string(1, c) + "', found '" +
                                  std::string(1, s_[pos_]) + "'"
                            : "expected '" + std::string(1, c) + "' at end of input");
    }
    ++pos_;
  }

  std::uint64_t number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 12) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoull(std::string(s_.substr(start, pos_ - start)));
  }

  GroupExpr expr() {
    GroupExpr first = term();
    if (!peek('x')) return first;
    GroupExpr prod;
    prod.kind = GroupExpr::Kind::kProduct;
    prod.children.push_back(std::move(first));
    while (peek('x')) {
      ++pos_;
      prod.children.push_back(term());
    }
    return prod;
  }

  GroupExpr term() {
    skip();
    if (pos_ >= s_.size()) fail("expected a group at end of input");
    const std::size_t start = pos_;
    if (s_.substr(pos_, 4) == "Sak(") {
      pos_ += 4;
      GroupExpr e;
      e.kind = GroupExpr::Kind::kSak;
      e.children.push_back(expr());
      expect(')');
      return e;
    }
    if (s_.substr(pos_, 2) == "G(") {
      pos_ += 2;
      const std::size_t at = (skip(), pos_);
      const std::uint64_t p = number();
      if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
        pos_ = at;
        fail(std::to_string(p) + " is not a supported prime");
      }
      expect(',');
      GroupExpr e;
      e.kind = GroupExpr::Kind::kGp;
      e.n = p;
      e.children.push_back(expr());
      expect(')');
      return e;
    }
    const char c = s_[pos_];
    GroupExpr e;
    e.kind = GroupExpr::Kind::kAtom;
    if (c == 'Q') {
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] != '8') {
        pos_ = start;
        fail("only Q8 is supported");
      }
      ++pos_;
      e.atom = 'Q';
      e.n = 8;
      return e;
    }
    if (c != 'C' && c != 'D' && c != 'S' && c != 'A') {
      fail("expected a group, found '" + std::string(1, c) + "'");
    }
    ++pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("expected digits after '" + std::string(1, c) + "'");
    }
    e.atom = c;
    e.n = number();
    const std::uint64_t max = c == 'C'   ? kMaxCyclic
                              : c == 'D' ? kMaxDihedral
                                         : kMaxPermDegree;
    if (e.n < 1 || e.n > max) {
      pos_ = start;
      fail(std::string(1, c) + std::to_string(e.n) + ": parameter must be in 1.." +
           std::to_string(max));
    }
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string render(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::kAtom:
      return e.atom == 'Q' ? "Q8" : std::string(1, e.atom) + std::to_string(e.n);
    case GroupExpr::Kind::kProduct: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += " x ";
        out += render(e.children[i]);
      }
      return out;
    }
    case GroupExpr::Kind::kGp:
      return "G(" + std::to_string(e.n) + ", " + render(e.children.at(0)) + ")";
    case GroupExpr::Kind::kSak:
      return "Sak(" + render(e.children.at(0)) + ")";
  }
  return {};
}

namespace {

std::shared_ptr<const Group> require_group(const EvaluatedGroup& g, const GroupExpr& e) {
  if (!g.group) {
    throw LimitError(render(e) + " of order " + g.order.render() +
                     " cannot be addressed by index");
  }
  return g.group;
}

}  // namespace

EvaluatedGroup evaluate(const GroupExpr& e, const Limits& limits) {
  EvaluatedGroup out;
  switch (e.kind) {
    case GroupExpr::Kind::kAtom: {
      std::shared_ptr<const Group> g;
      switch (e.atom) {
        case 'C': g = cyclic(e.n, limits); break;
        case 'D': g = dihedral(e.n, limits); break;
        case 'S': g = symmetric(e.n, limits); break;
        case 'A': g = alternating(e.n, limits); break;
        default: g = quaternion8(); break;
      }
      out.order = Order::from_u64(g->order());
      out.group = std::move(g);
      return out;
    }
    case GroupExpr::Kind::kProduct: {
      std::shared_ptr<const Group> acc;
      for (const GroupExpr& c : e.children) {
        auto part = require_group(evaluate(c, limits), c);
        if (part->order() > limits.max_table) {
          throw LimitError(render(c) + " exceeds the table limit for products");
        }
        acc = acc ? std::shared_ptr<const Group>(direct_product(*acc, *part, limits))
                  : part;
      }
      out.order = Order::from_u64(acc->order());
      out.group = std::move(acc);
      return out;
    }
    case GroupExpr::Kind::kGp: {
      auto base = require_group(evaluate(e.children.at(0), limits), e.children.at(0));
      auto sd = SdGroup::build(base, e.n);
      out.order = sd->exact_order();
      out.group = std::move(sd);
      return out;
    }
    case GroupExpr::Kind::kSak: {
      auto base = require_group(evaluate(e.children.at(0), limits), e.children.at(0));
      SakDescriptor d = build_saksonov(base);
      out.order = d.order();
      out.group = d.outermost();
      out.sak = std::move(d);
      return out;
    }
  }
  return out;
}

}  // namespace grpwild::cli
