#include "grpwild/autos.hpp"

#include <algorithm>
#include <string>

#include "grpwild/error.hpp"
#include "grpwild/group_ops.hpp"

namespace grpwild {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const SdGroup& require_sd(const AutMap& f) {
  if (!f.sd()) throw Error("primitive needs a semidirect parent");
  return *f.sd();
}

std::string perm_text(const Perm& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

std::string vector_text(const GfpVector& v) {
  std::string out = "{";
  bool first = true;
  v.for_each_nonzero([&](std::uint64_t c, Residue coef) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(c) + ":" + std::to_string(coef);
  });
  return out + "}";
}

std::string with_exponent(std::string base, std::uint64_t e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

SdElement apply_primitive(const SdGroup& g, const Primitive& p,
                          const SdElement& x) {
  const ModuleB& b = g.module();
  return std::visit(
      Overloaded{
          [&](const prim::Psi& s) {
            std::vector<GfpVector::Term> terms;
            x.v.for_each_nonzero([&](std::uint64_t c, Residue coef) {
              auto [blk, h] = b.basis_label(c);
              const std::uint32_t nb = (blk - 1 + s.exponent) % b.r() + 1;
              terms.emplace_back(b.coord_of(nb, h), coef);
            });
            return SdElement{x.a, GfpVector::from_terms(b.p(), b.dim(), x.v.rep(),
                                                        std::move(terms))};
          },
          [&](const prim::Phi& s) {
            std::vector<GfpVector::Term> terms = x.v.terms();
            const Residue factor = b.field().neg(s.exponent % b.p());
            x.v.for_each_nonzero([&](std::uint64_t c, Residue coef) {
              auto [blk, h] = b.basis_label(c);
              if (blk == b.r()) {
                terms.emplace_back(b.coord_of(1, h), b.field().mul(coef, factor));
              }
            });
            return SdElement{x.a, GfpVector::from_terms(b.p(), b.dim(), x.v.rep(),
                                                        std::move(terms))};
          },
          [&](const prim::PsiBlock& s) {
            SdElement y = x;
            if (x.a != kIdentity) y.v += b.basis(s.block, x.a, s.exponent);
            return y;
          },
          [&](const prim::Lift& s) {
            const Perm& f = *s.images;
            std::vector<GfpVector::Term> terms;
            x.v.for_each_nonzero([&](std::uint64_t c, Residue coef) {
              auto [blk, h] = b.basis_label(c);
              terms.emplace_back(b.coord_of(blk, f[h]), coef);
            });
            return SdElement{f[x.a], GfpVector::from_terms(b.p(), b.dim(), x.v.rep(),
                                                           std::move(terms))};
          },
          [&](const prim::Inner& s) { return g.conjugate(x, s.by); },
          [&](const prim::Linear& s) {
            const std::vector<Residue> image = s.matrix->apply(b.p(), x.v.to_dense());
            return SdElement{x.a, GfpVector::from_dense(b.p(), image, x.v.rep())};
          },
          [&](const prim::TablePerm& s) {
            return g.element_at((*s.perm)[g.index_of(x)]);
          },
          [&](const prim::TableInner& s) {
            return g.element_at(g.conj(g.index_of(x), s.by));
          },
      },
      p);
}

Elem apply_table_primitive(const Group& g, const Primitive& p, Elem x) {
  if (const auto* t = std::get_if<prim::TablePerm>(&p)) return (*t->perm)[x];
  if (const auto* t = std::get_if<prim::TableInner>(&p)) return g.conj(x, t->by);
  throw Error("primitive needs a semidirect parent");
}

}  // namespace

AutMap::AutMap(std::shared_ptr<const Group> parent) : parent_(std::move(parent)) {
  if (!parent_) throw Error("automorphism needs a parent group");
  sd_ = dynamic_cast<const SdGroup*>(parent_.get());
}

AutMap::AutMap(std::shared_ptr<const Group> parent, Primitive p)
    : AutMap(std::move(parent)) {
  word_.push_back(std::move(p));
}

SdElement AutMap::apply(const SdElement& x) const {
  const SdGroup& g = require_sd(*this);
  SdElement y = x;
  for (const Primitive& p : word_) y = apply_primitive(g, p, y);
  return y;
}

Elem AutMap::apply(Elem x) const {
  if (sd_) return sd_->index_of(apply(sd_->element_at(x)));
  for (const Primitive& p : word_) x = apply_table_primitive(*parent_, p, x);
  return x;
}

std::string render_primitive(const Primitive& p, const Group& parent) {
  return std::visit(
      Overloaded{
          [](const prim::Psi& s) { return with_exponent("psi", s.exponent); },
          [](const prim::Phi& s) { return with_exponent("phi", s.exponent); },
          [](const prim::PsiBlock& s) {
            return with_exponent("psi_" + std::to_string(s.block), s.exponent);
          },
          [](const prim::Lift& s) { return "lift" + perm_text(*s.images); },
          [](const prim::Inner& s) {
            return "inner(" + std::to_string(s.by.a) + ";" + vector_text(s.by.v) + ")";
          },
          [](const prim::Linear& s) {
            std::string out = "linear[";
            for (std::size_t r = 0; r < s.matrix->rows(); ++r) {
              if (r) out += ";";
              for (std::size_t c = 0; c < s.matrix->cols(); ++c) {
                if (c) out += ",";
                out += std::to_string(s.matrix->at(r, c));
              }
            }
            return out + "]";
          },
          [](const prim::TablePerm& s) { return "aut" + perm_text(*s.perm); },
          [&](const prim::TableInner& s) {
            return "inner(" + parent.element_label(s.by) + ")";
          },
      },
      p);
}

Primitive inverse_primitive(const Primitive& p, const Group& parent) {
  const auto* sd = dynamic_cast<const SdGroup*>(&parent);
  return std::visit(
      Overloaded{
          [&](const prim::Psi& s) -> Primitive {
            const std::uint32_t r = sd->r();
            return prim::Psi{(r - s.exponent % r) % r};
          },
          [&](const prim::Phi& s) -> Primitive {
            return prim::Phi{sd->module().field().neg(s.exponent % sd->p())};
          },
          [&](const prim::PsiBlock& s) -> Primitive {
            return prim::PsiBlock{s.block, sd->module().field().neg(s.exponent % sd->p())};
          },
          [](const prim::Lift& s) -> Primitive {
            return prim::Lift{s.inverse_images, s.images};
          },
          [&](const prim::Inner& s) -> Primitive {
            return prim::Inner{sd->inverse(s.by)};
          },
          [](const prim::Linear& s) -> Primitive {
            return prim::Linear{s.inverse, s.matrix};
          },
          [](const prim::TablePerm& s) -> Primitive {
            return prim::TablePerm{s.inverse, s.perm};
          },
          [&](const prim::TableInner& s) -> Primitive {
            return prim::TableInner{parent.inv(s.by)};
          },
      },
      p);
}

std::vector<std::string> AutMap::serialize() const {
  std::vector<std::string> out;
  for (const Primitive& p : word_) out.push_back(render_primitive(p, *parent_));
  return out;
}

std::string AutMap::render() const {
  if (word_.empty()) return "id";
  std::string out;
  for (const std::string& s : serialize()) {
    if (!out.empty()) out += " ; ";
    out += s;
  }
  return out;
}

AutMap compose(const AutMap& f, const AutMap& g) {
  if (f.parent_ != g.parent_) throw Error("automorphisms of different groups");
  AutMap out = g;
  out.word_.insert(out.word_.end(), f.word_.begin(), f.word_.end());
  return out;
}

AutMap invert(const AutMap& f) {
  AutMap out(f.parent_);
  for (auto it = f.word_.rbegin(); it != f.word_.rend(); ++it) {
    out.word_.push_back(inverse_primitive(*it, *f.parent_));
  }
  return out;
}

AutMap make_psi(std::shared_ptr<const SdGroup> g) {
  return AutMap(std::move(g), prim::Psi{1});
}

AutMap make_phi(std::shared_ptr<const SdGroup> g) {
  return AutMap(std::move(g), prim::Phi{1});
}

AutMap make_psi_block(std::shared_ptr<const SdGroup> g, std::uint32_t block,
                      Residue exponent) {
  if (block < 1 || block > g->r()) {
    throw Error("psi_i needs 1 <= i <= " + std::to_string(g->r()));
  }
  const Residue e = exponent % g->p();
  return AutMap(std::move(g), prim::PsiBlock{block, e});
}

AutMap make_lift(std::shared_ptr<const SdGroup> g, const Perm& f) {
  if (f.size() != g->base().order() || !is_automorphism(g->base(), f)) {
    throw Error("lift needs an automorphism of A");
  }
  return AutMap(g, prim::Lift{std::make_shared<const Perm>(f),
                              std::make_shared<const Perm>(inverse(f))});
}

AutMap make_inner(std::shared_ptr<const SdGroup> g, const SdElement& by) {
  SdElement x = g->make(by.a, by.v);
  return AutMap(std::move(g), prim::Inner{std::move(x)});
}

AutMap make_table_aut(std::shared_ptr<const Group> g, const Perm& perm) {
  if (!is_automorphism(*g, perm)) throw Error("map is not an automorphism");
  return AutMap(std::move(g), prim::TablePerm{std::make_shared<const Perm>(perm),
                                              std::make_shared<const Perm>(inverse(perm))});
}

AutMap make_table_inner(std::shared_ptr<const Group> g, Elem by) {
  if (by >= g->order()) throw Error("conjugating element out of range");
  return AutMap(std::move(g), prim::TableInner{by});
}

GfpMatrix psi_matrix(const SdGroup& g) {
  const ModuleB& b = g.module();
  GfpMatrix m(b.dim(), b.dim());
  for (std::uint64_t c = 0; c < b.dim(); ++c) {
    auto [blk, h] = b.basis_label(c);
    m.at(b.coord_of(blk % b.r() + 1, h), c) = 1;
  }
  return m;
}

AutMap extend_linear(std::shared_ptr<const SdGroup> g, const GfpMatrix& l) {
  const ModuleB& b = g->module();
  if (b.dim() > GfpVector::kSparseThreshold) {
    throw LimitError("extend_linear needs a dense module");
  }
  if (l.rows() != b.dim() || l.cols() != b.dim()) {
    throw Error("linear map has wrong dimensions");
  }
  auto inv = invert(b.p(), l);
  if (!inv) throw Error("linear map is not invertible");
  auto apply_l = [&](const GfpVector& v) {
    return GfpVector::from_dense(b.p(), l.apply(b.p(), v.to_dense()), v.rep());
  };
  for (std::uint64_t j = 0; j < b.dim(); ++j) {
    const GfpVector e = GfpVector::unit(b.p(), b.dim(), j);
    for (Elem s : g->base().generators()) {
      if (!(apply_l(b.act(e, s)) == b.act(apply_l(e), s))) {
        throw EquivarianceError(j, s);
      }
    }
  }
  return AutMap(g, prim::Linear{std::make_shared<const GfpMatrix>(l),
                                std::make_shared<const GfpMatrix>(std::move(*inv))});
}

bool is_multiplicative_exhaustive(const AutMap& f) {
  const Group& g = f.parent();
  const std::uint64_t n = g.order();
  std::vector<Elem> image(n);
  std::vector<bool> hit(n, false);
  for (Elem x = 0; x < n; ++x) {
    image[x] = f.apply(x);
    if (image[x] >= n || hit[image[x]]) return false;
    hit[image[x]] = true;
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (image[g.mul(x, y)] != g.mul(image[x], image[y])) return false;
    }
  }
  return true;
}

SdElement random_element(const SdGroup& g, std::mt19937_64& rng) {
  const ModuleB& b = g.module();
  std::uniform_int_distribution<std::uint64_t> base_dist(0, b.base_order() - 1);
  std::uniform_int_distribution<Residue> coef(0, b.p() - 1);
  const Elem a = base_dist(rng);
  if (b.rep() == GfpVector::Rep::kDense) {
    std::vector<Residue> coords(b.dim());
    for (auto& c : coords) c = coef(rng);
    return g.make(a, GfpVector::from_dense(b.p(), coords, b.rep()));
  }
  // Sparse modules: a handful of random coordinates.
  std::uniform_int_distribution<std::uint64_t> coord(0, b.dim() - 1);
  std::vector<GfpVector::Term> terms;
  for (int k = 0; k < 16; ++k) terms.emplace_back(coord(rng), coef(rng));
  return g.make(a, GfpVector::from_terms(b.p(), b.dim(), b.rep(), std::move(terms)));
}

namespace {

std::vector<SdElement> sd_generators(const SdGroup& g) {
  const ModuleB& b = g.module();
  if (b.dim() > GfpVector::kSparseThreshold) {
    throw LimitError("too many basis vectors to check on generators");
  }
  std::vector<SdElement> out;
  for (Elem s : g.base().generators()) out.push_back(g.from_base(s));
  for (std::uint64_t j = 0; j < b.dim(); ++j) {
    out.push_back(g.from_vector(GfpVector::unit(b.p(), b.dim(), j)));
  }
  return out;
}

}  // namespace

bool is_multiplicative_sampled(const AutMap& f, std::size_t samples,
                               std::mt19937_64& rng) {
  if (!f.sd()) throw Error("sampled check needs a semidirect parent");
  const SdGroup& g = *f.sd();
  std::vector<SdElement> pool = sd_generators(g);
  for (std::size_t k = 0; k < samples; ++k) pool.push_back(random_element(g, rng));
  for (const SdElement& x : pool) {
    for (const SdElement& y : pool) {
      if (!(f.apply(g.multiply(x, y)) == g.multiply(f.apply(x), f.apply(y)))) {
        return false;
      }
    }
  }
  return true;
}

bool equal_on_generators(const AutMap& f, const AutMap& h) {
  if (f.parent_ptr() != h.parent_ptr()) return false;
  if (f.sd() && !f.sd()->indexable()) {
    for (const SdElement& x : sd_generators(*f.sd())) {
      if (!(f.apply(x) == h.apply(x))) return false;
    }
    return true;
  }
  for (Elem s : f.parent().generators()) {
    if (f.apply(s) != h.apply(s)) return false;
  }
  return true;
}

Lemma5Result lemma5_conjugator(std::shared_ptr<const SdGroup> g,
                               const SdElement& x_in) {
  const SdElement x = g->make(x_in.a, x_in.v);
  const ModuleB& b = g->module();
  const PrimeField& f = b.field();
  const std::uint32_t p = b.p();
  if (x.a == kIdentity) throw Error("conjugator needs g != 1");
  if (g->element_order(x) != element_order(g->base(), x.a)) {
    throw Error("conjugator needs ord(x) = ord(g)");
  }

  const std::size_t bd = b.block_dim();
  const std::size_t g_local = x.a - 1;
  const GfpMatrix m = b.block_commutator_matrix(x.a);

  // Per block: find w, a with M w - a e_g = -t_i, so t_i + M w = a e_g.
  GfpMatrix aug(bd, bd + 1);
  for (std::size_t r = 0; r < bd; ++r) {
    for (std::size_t c = 0; c < bd; ++c) aug.at(r, c) = m.at(r, c);
  }
  aug.at(g_local, bd) = f.neg(1);

  GfpVector z = b.zero();
  for (std::uint32_t i = 1; i <= b.r(); ++i) {
    std::vector<Residue> t_i = b.to_block(x.v, i);
    bool in_span = true;
    for (std::size_t k = 0; k < bd; ++k) {
      if (k != g_local && t_i[k] != 0) in_span = false;
    }
    if (in_span) continue;  // z_i = 0
    std::vector<Residue> rhs(bd);
    for (std::size_t k = 0; k < bd; ++k) rhs[k] = f.neg(t_i[k]);
    LinearSolution sol = solve_linear(p, aug, rhs);
    if (!sol.solution) {
      throw InternalError("conjugator: no z_" + std::to_string(i) +
                          " in [g, B_i] moves t_i into <v_g^i>");
    }
    std::vector<Residue> w(sol.solution->begin(), sol.solution->begin() + bd);
    z += b.from_block(i, m.apply(p, w));
  }

  // Solve u - u^g = z, i.e. -M u_i = z_i on each block.
  GfpMatrix neg_m(bd, bd);
  for (std::size_t r = 0; r < bd; ++r) {
    for (std::size_t c = 0; c < bd; ++c) neg_m.at(r, c) = f.neg(m.at(r, c));
  }
  GfpVector u = b.zero();
  for (std::uint32_t i = 1; i <= b.r(); ++i) {
    std::vector<Residue> z_i = b.to_block(z, i);
    if (std::all_of(z_i.begin(), z_i.end(), [](Residue c) { return c == 0; })) continue;
    LinearSolution sol = solve_linear(p, neg_m, z_i);
    if (!sol.solution) throw InternalError("conjugator: z is not of the form u - u^g");
    u += b.from_block(i, *sol.solution);
  }

  const GfpVector tz = x.v + z;
  Lemma5Result out{u, std::vector<std::int64_t>(b.r(), 0), AutMap(g)};
  GfpVector expected = b.zero();
  for (std::uint32_t i = 1; i <= b.r(); ++i) {
    const Residue a_i = tz.get(b.coord_of(i, x.a));
    out.exponents[i - 1] = -static_cast<std::int64_t>(a_i);
    expected += b.basis(i, x.a, a_i);
  }
  if (!(expected == tz)) throw InternalError("conjugator: t + z is not in <v_g^i>");

  out.map = make_inner(g, g->from_vector(u));
  for (std::uint32_t i = 1; i <= b.r(); ++i) {
    const Residue a_i = tz.get(b.coord_of(i, x.a));
    if (a_i != 0) out.map = compose(make_psi_block(g, i, f.neg(a_i)), out.map);
  }
  if (!(out.map.apply(x) == g->from_base(x.a))) {
    throw InternalError("conjugator: conjugator does not send x to (g, 0)");
  }
  return out;
}

}  // namespace grpwild
