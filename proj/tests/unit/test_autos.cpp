#include <gtest/gtest.h>

#include <random>

#include "grpwild/autos.hpp"
#include "grpwild/catalog.hpp"
#include "grpwild/error.hpp"
#include "grpwild/group_ops.hpp"

using namespace grpwild;

namespace {

std::shared_ptr<const SdGroup> g2c3() {
  static auto g = SdGroup::build(cyclic(3), 2);
  return g;
}
std::shared_ptr<const SdGroup> g3c3() {
  static auto g = SdGroup::build(cyclic(3), 3);
  return g;
}

std::vector<AutMap> primitives(std::shared_ptr<const SdGroup> g) {
  std::vector<AutMap> out{make_psi(g), make_phi(g)};
  for (std::uint32_t i = 1; i <= g->r(); ++i) out.push_back(make_psi_block(g, i));
  for (Elem s : g->generators()) out.push_back(make_inner(g, g->element_at(s)));
  const PermSubgroup aut = brute_force_aut(g->base());
  for (const Perm& f : aut.elements()) out.push_back(make_lift(g, f));
  return out;
}

}  // namespace

TEST(Primitives, DefiningValues) {
  auto g = g3c3();
  const auto& b = g->module();
  EXPECT_EQ(make_psi(g).apply(g->from_vector(b.basis(1, 1))), g->from_vector(b.basis(2, 1)));
  EXPECT_EQ(make_psi(g).apply(g->from_vector(b.basis(5, 2))), g->from_vector(b.basis(1, 2)));
  EXPECT_EQ(make_phi(g).apply(g->from_vector(b.basis(5, 1))),
            g->from_vector(b.basis(5, 1) - b.basis(1, 1)));
  EXPECT_EQ(make_phi(g).apply(g->from_vector(b.basis(3, 1))), g->from_vector(b.basis(3, 1)));
  EXPECT_EQ(make_psi_block(g, 1).apply(g->from_base(1)), g->make(1, b.basis(1, 1)));
  EXPECT_EQ(make_psi(g).apply(g->from_base(2)), g->from_base(2));
}

TEST(Primitives, ExhaustivelyMultiplicativeOnG2C3) {
  for (const AutMap& f : primitives(g2c3())) {
    EXPECT_TRUE(is_multiplicative_exhaustive(f)) << f.render();
  }
}

TEST(Primitives, ExhaustivelyMultiplicativeOnG2C2) {
  for (const AutMap& f : primitives(SdGroup::build(cyclic(2), 2))) {
    EXPECT_TRUE(is_multiplicative_exhaustive(f)) << f.render();
  }
}

TEST(Primitives, SampledMultiplicativeOnLargerGroups) {
  std::mt19937_64 rng(8);
  for (auto g : {g3c3(), SdGroup::build(symmetric(3), 2), SdGroup::build(symmetric(3), 3)}) {
    for (const AutMap& f : primitives(g)) {
      EXPECT_TRUE(is_multiplicative_sampled(f, 200, rng)) << g->name() << " " << f.render();
    }
  }
}

TEST(Primitives, NonAutomorphismDetected) {
  // A transposition of two basis vectors is a bijection but not a homomorphism.
  auto g = g2c3();
  auto t = enumerate(*g);
  Perm f = identity_perm(48);
  std::swap(f[3], f[6]);
  EXPECT_FALSE(is_automorphism(*t, f));
  EXPECT_THROW(make_table_aut(t, f), Error);
}

TEST(Lifts, EveryAutomorphismOfBaseLifts) {
  std::mt19937_64 rng(12);
  for (auto base : {cyclic(3), symmetric(3)}) {
    for (std::uint64_t p : {2u, 3u}) {
      auto g = SdGroup::build(base, p);
      const PermSubgroup aut = brute_force_aut(*base);
      for (const Perm& f : aut.elements()) {
        AutMap lift = make_lift(g, f);
        EXPECT_TRUE(is_multiplicative_sampled(lift, 100, rng));
        // Induces f on A = G / B.
        for (int t = 0; t < 50; ++t) {
          auto x = random_element(*g, rng);
          EXPECT_EQ(lift.apply(x).a, f[x.a]);
        }
      }
    }
  }
  auto g = g2c3();
  const PermSubgroup aut = brute_force_aut(g->base());
  for (const Perm& f : aut.elements()) {
    EXPECT_TRUE(is_multiplicative_exhaustive(make_lift(g, f)));
  }
}

TEST(Lifts, RejectsNonAutomorphism) {
  auto g = SdGroup::build(symmetric(3), 2);
  Perm f = identity_perm(6);
  std::swap(f[1], f[2]);
  if (!is_automorphism(*symmetric(3), f)) EXPECT_THROW(make_lift(g, f), Error);
}

TEST(ExtendLinear, IdentityAndPsi) {
  auto g = g3c3();
  const std::size_t d = g->module().dim();
  EXPECT_TRUE(equal_on_generators(extend_linear(g, GfpMatrix::identity(d)), AutMap(g)));
  EXPECT_TRUE(equal_on_generators(extend_linear(g, psi_matrix(*g)), make_psi(g)));
}

TEST(ExtendLinear, RejectsNonEquivariantSwap) {
  auto g = g2c3();
  const auto& b = g->module();
  GfpMatrix l = GfpMatrix::identity(b.dim());
  const auto c1 = b.coord_of(1, 1), c2 = b.coord_of(1, 2);
  l.at(c1, c1) = l.at(c2, c2) = 0;
  l.at(c1, c2) = l.at(c2, c1) = 1;
  try {
    extend_linear(g, l);
    FAIL() << "swap accepted";
  } catch (const EquivarianceError& e) {
    EXPECT_LT(e.basis_index(), b.dim());
  }
  // Direct evaluation confirms: L(v^g) != L(v)^g for v = v_g^1.
  auto v = b.basis(1, 1);
  auto apply = [&](const GfpVector& x) {
    auto y = l.apply(2, x.to_dense());
    return GfpVector::from_dense(2, y, b.rep());
  };
  EXPECT_NE(apply(b.act(v, 1)), b.act(apply(v), 1));
}

TEST(ExtendLinear, RejectsSingular) {
  auto g = g2c3();
  EXPECT_THROW(extend_linear(g, GfpMatrix(g->module().dim(), g->module().dim())), Error);
}

TEST(Composition, InverseAndOrders) {
  auto g = g3c3();
  std::mt19937_64 rng(13);
  for (const AutMap& f : primitives(g)) {
    EXPECT_TRUE(equal_on_generators(compose(f, invert(f)), AutMap(g))) << f.render();
    EXPECT_TRUE(equal_on_generators(compose(invert(f), f), AutMap(g))) << f.render();
  }
  AutMap psi_r(g), phi_p(g);
  for (std::uint32_t k = 0; k < g->r(); ++k) psi_r = compose(make_psi(g), psi_r);
  for (std::uint32_t k = 0; k < g->p(); ++k) phi_p = compose(make_phi(g), phi_p);
  EXPECT_TRUE(equal_on_generators(psi_r, AutMap(g)));
  EXPECT_TRUE(equal_on_generators(phi_p, AutMap(g)));
  // compose(f, h) applies h first.
  auto x = random_element(*g, rng);
  AutMap f = make_psi(g), h = make_psi_block(g, 2);
  EXPECT_EQ(compose(f, h).apply(x), f.apply(h.apply(x)));
}

TEST(Serialization, Words) {
  auto g = g3c3();
  AutMap m = compose(make_phi(g), compose(make_psi_block(g, 2, 2), make_psi(g)));
  auto words = m.serialize();
  ASSERT_EQ(words.size(), 3u);
  EXPECT_EQ(words[0], "psi");
  EXPECT_EQ(words[2], "phi");
}

TEST(Lemma5, Examples) {
  auto g = g3c3();
  const auto& b = g->module();
  auto zero = lemma5_conjugator(g, g->from_base(1));
  EXPECT_TRUE(zero.u.is_zero());
  EXPECT_EQ(zero.exponents, std::vector<std::int64_t>(5, 0));

  auto x = g->make(1, b.basis(1, 1));
  auto r = lemma5_conjugator(g, x);
  EXPECT_TRUE(r.u.is_zero());
  EXPECT_EQ(r.exponents, (std::vector<std::int64_t>{-1, 0, 0, 0, 0}));
  EXPECT_EQ(r.map.apply(x), g->from_base(1));
  EXPECT_EQ(make_psi_block(g, 1, 2).apply(x), g->from_base(1));

  auto y = g->make(1, b.basis(1, 2));
  ASSERT_EQ(g->element_order(y), 3u);
  auto s = lemma5_conjugator(g, y);
  EXPECT_EQ(s.map.apply(y), g->from_base(1));
}

TEST(Lemma5, BruteForceOracleOnSlice) {
  // Oracle: search u over a 2-dimensional slice of B_1 for
  // (g, t)^u = (g, t + u - u^g) with t + u - u^g in <v_g^1>.
  auto g = g3c3();
  const auto& b = g->module();
  auto y = g->make(1, b.basis(1, 2));
  bool found = false;
  for (Residue c1 = 0; c1 < 3 && !found; ++c1) {
    for (Residue c2 = 0; c2 < 3 && !found; ++c2) {
      auto u = b.basis(1, 1, c1) + b.basis(1, 2, c2);
      auto conj = g->conjugate(y, g->from_vector(u));
      auto rest = conj.v - b.block_part(conj.v, 1);
      bool in_span = rest.is_zero();
      for (std::uint64_t c = 0; c < b.block_dim(); ++c) {
        if (c != b.coord_of(1, 1) && conj.v.get(c) != 0) in_span = false;
      }
      found = in_span;
    }
  }
  EXPECT_TRUE(found);
  auto r = lemma5_conjugator(g, y);
  auto conj = g->conjugate(y, g->from_vector(r.u));
  for (std::uint32_t i = 1; i <= g->r(); ++i) {
    auto part = b.block_part(conj.v, i);
    EXPECT_EQ(part, b.basis(i, 1, part.get(b.coord_of(i, 1))));
  }
}

TEST(Lemma5, ExhaustiveOnG2C3) {
  // Every x = (g, t), g != 1; none has order 6, so ord(x) = ord(g) = 3.
  auto g = g2c3();
  std::size_t checked = 0;
  for (Elem i = 0; i < g->order(); ++i) {
    auto x = g->element_at(i);
    if (x.a == kIdentity) continue;
    auto r = lemma5_conjugator(g, x);
    EXPECT_EQ(r.map.apply(x), g->from_base(x.a));
    // Independent evaluation: inner(u) then psi_i^{exps}.
    auto y = g->conjugate(x, g->from_vector(r.u));
    for (std::uint32_t k = 1; k <= g->r(); ++k) {
      const std::int64_t e = ((r.exponents[k - 1] % 2) + 2) % 2;
      y = make_psi_block(g, k, static_cast<Residue>(e)).apply(y);
    }
    EXPECT_EQ(y, g->from_base(x.a));
    ++checked;
  }
  EXPECT_EQ(checked, 32u);
}

TEST(Lemma5, SampledOnG3C3) {
  auto g = g3c3();
  std::mt19937_64 rng(2024);
  std::size_t checked = 0;
  while (checked < 1000) {
    auto x = random_element(*g, rng);
    if (x.a == kIdentity || g->element_order(x) != 3) continue;
    auto r = lemma5_conjugator(g, x);
    auto y = g->conjugate(x, g->from_vector(r.u));
    for (std::uint32_t k = 1; k <= g->r(); ++k) {
      const std::int64_t e = ((r.exponents[k - 1] % 3) + 3) % 3;
      y = make_psi_block(g, k, static_cast<Residue>(e)).apply(y);
    }
    ASSERT_EQ(y, g->from_base(x.a));
    ++checked;
  }
}

TEST(Lemma5, RejectsBadInput) {
  auto g = g3c3();
  EXPECT_THROW(lemma5_conjugator(g, g->from_vector(g->module().basis(1, 1))), Error);
}
