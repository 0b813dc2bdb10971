#include <gtest/gtest.h>

#include <random>

#include "grpwild/catalog.hpp"
#include "grpwild/error.hpp"
#include "grpwild/group_ops.hpp"
#include "grpwild/semidirect.hpp"
#include "grpwild/wildness.hpp"

using namespace grpwild;

namespace {

WildOptions exact() {
  WildOptions o;
  o.mode = WildMode::kExact;
  return o;
}

// Oracle: class ids by direct conjugation of subgroups.
std::size_t subgroup_classes_oracle(const Group& g, std::uint64_t p) {
  const Elem n = g.order();
  std::vector<std::vector<Elem>> subgroups;
  for (Elem x = 1; x < n; ++x) {
    if (element_order(g, x) != p) continue;
    std::vector<Elem> s;
    for (Elem y = x; y != kIdentity; y = g.mul(y, x)) s.push_back(y);
    std::sort(s.begin(), s.end());
    if (std::find(subgroups.begin(), subgroups.end(), s) == subgroups.end()) subgroups.push_back(s);
  }
  std::vector<int> cls(subgroups.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = next;
    for (Elem h = 0; h < n; ++h) {
      std::vector<Elem> c;
      for (Elem y : subgroups[i]) c.push_back(g.conj(y, h));
      std::sort(c.begin(), c.end());
      for (std::size_t j = 0; j < subgroups.size(); ++j) {
        if (subgroups[j] == c) cls[j] = next;
      }
    }
    ++next;
  }
  return static_cast<std::size_t>(next);
}

PermSubgroup trivial_aut(const Group& g) { return PermSubgroup::closure(g.order(), {}); }

}  // namespace

TEST(PCyclicClasses, Examples) {
  EXPECT_EQ(p_cyclic_classes(*catalog_group("C2 x C2 x C2 x C2"), 2).class_count(), 15u);
  EXPECT_EQ(p_cyclic_classes(*catalog_group("A5"), 2).class_count(), 1u);
  auto s4 = p_cyclic_classes(*catalog_group("S4"), 3);
  EXPECT_EQ(s4.class_count(), 1u);
  EXPECT_EQ(s4.elements.size(), 8u);
}

TEST(PCyclicClasses, MatchesSubgroupConjugationOracle) {
  for (const char* name : {"S4", "A5", "D6", "C3 x C3", "A4", "S3 x C2", "Q8"}) {
    auto g = catalog_group(name);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      EXPECT_EQ(p_cyclic_classes(*g, p).class_count(), subgroup_classes_oracle(*g, p))
          << name << " p=" << p;
    }
  }
}

TEST(VerifyPWild, A5SingleClassShortcut) {
  auto a5 = catalog_group("A5");
  auto r = verify_p_wild(a5, 2);
  EXPECT_EQ(r.status, WildStatus::kNotWildExact);
  ASSERT_TRUE(r.fixed_class);
  EXPECT_EQ(verify_p_wild(a5, 2, exact()).status, WildStatus::kNotWildExact);
}

TEST(VerifyPWild, ElementaryAbelianExact) {
  auto v = catalog_group("C2 x C2 x C2 x C2");
  auto r = verify_p_wild(v, 2, exact());
  EXPECT_EQ(r.status, WildStatus::kWildExact);
  EXPECT_EQ(r.class_count, 15u);
  EXPECT_EQ(r.witnesses.size(), 15u);
  auto g = SdGroup::build(cyclic(2), 2);
  EXPECT_EQ(verify_p_wild(g, 2, exact()).status, WildStatus::kWildExact);
}

TEST(VerifyPWild, G2C3Witnessed) {
  auto g = SdGroup::build(cyclic(3), 2);
  WildOptions o;
  o.depth = 3;
  auto r = verify_p_wild(g, 2, o);
  ASSERT_EQ(r.status, WildStatus::kWildWitnessed);
  EXPECT_EQ(r.witnesses.size(), r.class_count);
  auto t = enumerate(*g);
  auto classes = p_cyclic_classes(*t, 2);
  for (const Witness& w : r.witnesses) {
    // Independent re-evaluation on the table.
    const Elem y = w.map.apply(w.rep);
    EXPECT_EQ(y, w.image);
    EXPECT_NE(classes.subgroup_id_of[y], w.class_id);
    // Involutions of G_2(C3) lie in B.
    EXPECT_EQ(w.rep % 3, 0u);
  }
  // Exact mode agrees.
  EXPECT_EQ(verify_p_wild(g, 2, exact()).status, WildStatus::kWildExact);
}

TEST(VerifyPWild, NoElementsOfOrderP) {
  auto r = verify_p_wild(catalog_group("C3"), 2);
  EXPECT_EQ(r.status, WildStatus::kWildExact);
  EXPECT_EQ(r.class_count, 0u);
}

TEST(VerifyPWild, InnerOnlyIsInconclusiveOnAbelian) {
  auto r = verify_p_wild(catalog_group("C2 x C2"), 2);
  EXPECT_EQ(r.status, WildStatus::kInconclusive);
  EXPECT_EQ(r.unresolved_classes.size(), 3u);
}

TEST(VerifyPWild, ExactLimit) {
  WildOptions o = exact();
  o.limits.max_brute_aut = 16;
  EXPECT_THROW(verify_p_wild(catalog_group("A5"), 2, o), LimitError);
}

TEST(VerifyPWild, ThreadCountDoesNotChangeResults) {
  auto g = SdGroup::build(cyclic(3), 2);
  std::vector<std::string> reference;
  for (unsigned threads : {1u, 4u, 8u}) {
    WildOptions o;
    o.threads = threads;
    auto r = verify_p_wild(g, 2, o);
    std::vector<std::string> words;
    for (const Witness& w : r.witnesses) words.push_back(w.map.render());
    if (reference.empty()) reference = words;
    EXPECT_EQ(words, reference);
    EXPECT_EQ(r.status, WildStatus::kWildWitnessed);
  }
}

TEST(VerifyPWild, GeneratorOrderDoesNotChangeStatus) {
  auto g = SdGroup::build(cyclic(3), 2);
  auto gens = default_witness_generators(g);
  std::reverse(gens.begin(), gens.end());
  WildOptions o;
  o.generators = gens;
  EXPECT_EQ(verify_p_wild(g, 2, o).status, WildStatus::kWildWitnessed);
}

TEST(VerifyPWild, WitnessNeverContradictsExact) {
  for (const char* name : {"C6", "S3", "S4", "A4", "D4", "Q8", "C2 x C2", "C2 x C4", "A5",
                           "D5", "C3 x C3", "C2 x C2 x C2", "S3 x C2", "D6"}) {
    auto g = catalog_group(name);
    for (std::uint64_t p : group_order(*g).primes()) {
      auto w = verify_p_wild(g, p);
      auto e = verify_p_wild(g, p, exact());
      if (is_wild(w.status)) EXPECT_TRUE(is_wild(e.status)) << name << " p=" << p;
      if (e.status == WildStatus::kNotWildExact) EXPECT_FALSE(is_wild(w.status)) << name;
      if (w.status == WildStatus::kNotWildExact) EXPECT_EQ(e.status, WildStatus::kNotWildExact);
    }
  }
}

TEST(Xi, Examples) {
  auto sak = build_saksonov(cyclic(2));
  WildOptions o = exact();
  auto x = xi(sak.outermost(), o);
  EXPECT_EQ(x.pi, (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(x.xi, (std::vector<std::uint64_t>{2}));
  auto c6 = xi(catalog_group("C6"), o);
  EXPECT_EQ(c6.pi, (std::vector<std::uint64_t>{2, 3}));
  EXPECT_TRUE(c6.xi.empty());
  auto a5 = xi(catalog_group("A5"));
  EXPECT_EQ(a5.per_prime.at(2).status, WildStatus::kNotWildExact);
}

TEST(Triplets, V4WithOrderThreeAutomorphism) {
  auto v4 = catalog_group("C2 x C2");
  // Cycle the three involutions 1 -> 2 -> 3 -> 1.
  Perm cyc{0, 2, 3, 1};
  ASSERT_TRUE(is_automorphism(*v4, cyc));
  auto t = make_triplet(v4, {}, {cyc}, "V4/1/C3");
  auto r = check_triplet(t);
  EXPECT_TRUE(r.ordinary);
  EXPECT_TRUE(r.wild);
  EXPECT_TRUE(r.wild_centralizer_form);
  EXPECT_TRUE(r.d1_mod_d0_n2c);
  EXPECT_EQ(r.quotient_order, 3u);
  EXPECT_TRUE(r.solvable);
  EXPECT_TRUE(theorem1_harness({t}).violations.empty());
}

TEST(Triplets, A5InnAut) {
  auto a5 = catalog_group("A5");
  auto inn = inner_automorphisms(*a5);
  auto aut = brute_force_aut(*a5);
  auto r = check_triplet({a5, inn, aut, "A5"});
  EXPECT_FALSE(r.wild);
  EXPECT_TRUE(r.forms_agree);
  EXPECT_EQ(r.quotient_order, 2u);
}

TEST(Triplets, S3InnInn) {
  auto s3 = catalog_group("S3");
  auto inn = inner_automorphisms(*s3);
  auto r = check_triplet({s3, inn, inn, "S3"});
  EXPECT_FALSE(r.wild);
  EXPECT_TRUE(r.forms_agree);
}

TEST(Triplets, ValidationErrors) {
  auto s3 = catalog_group("S3");
  auto inn = inner_automorphisms(*s3);
  try {
    check_triplet({s3, trivial_aut(*s3), inn, "bad"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("conjugation by"), std::string::npos);
  }
  auto v4 = catalog_group("C2 x C2");
  Perm swap{0, 2, 1, 3};
  Perm cyc{0, 2, 3, 1};
  // D0 = <swap> is not normal in D1 = S3.
  auto t = make_triplet(v4, {swap}, {cyc}, "bad");
  EXPECT_THROW(check_triplet(t), Error);
  // D0 not contained in D1.
  EXPECT_THROW(check_triplet({v4, PermSubgroup::closure(4, {swap}), PermSubgroup::closure(4, {cyc}), ""}),
               Error);
  Perm bad{1, 0, 2, 3};
  EXPECT_THROW(check_triplet({v4, trivial_aut(*v4), PermSubgroup::closure(4, {bad}), ""}), Error);
}

TEST(Triplets, FormsAgreeOnCatalog) {
  std::mt19937_64 rng(99);
  for (const char* name : {"S3", "S4", "A4", "D4", "Q8", "C2 x C2", "C2 x C2 x C2", "D6", "A5",
                           "C2 x C4", "D5", "S3 x C2"}) {
    auto g = catalog_group(name);
    auto inn = inner_automorphisms(*g);
    auto aut = brute_force_aut(*g);
    std::vector<PermSubgroup> d1s{inn, aut};
    for (int i = 0; i < 5; ++i) d1s.push_back(sample_intermediate(inn, aut, rng));
    for (const auto& d1 : d1s) {
      auto r = check_triplet({g, inn, d1, name});
      EXPECT_TRUE(r.forms_agree) << name;
    }
  }
}

TEST(TwiceOddTriplets, TwiceOddOrdersAreNeverWild) {
  std::mt19937_64 rng(3);
  for (const char* name : {"S3", "D5", "C2 x C3", "C2", "D3 x C3", "C10", "D7"}) {
    for (const auto& r : proposition3_harness(catalog_group(name), 10, rng)) {
      EXPECT_FALSE(r.wild) << name;
      EXPECT_TRUE(r.forms_agree) << name;
    }
  }
  EXPECT_THROW(proposition3_harness(catalog_group("C4"), 1, rng), Error);
}

TEST(NonsolvableHarness, Examples) {
  EXPECT_TRUE(theorem1_harness({}).violations.empty());
  std::vector<TripletSpec> specs;
  auto a5 = catalog_group("A5");
  specs.push_back({a5, inner_automorphisms(*a5), brute_force_aut(*a5), "A5/Inn/Aut"});
  auto s5 = catalog_group("S5");
  auto inn5 = inner_automorphisms(*s5);
  specs.push_back({s5, inn5, inn5, "S5/Inn/Inn"});
  auto a5c2 = catalog_group("A5 x C2");
  auto inn52 = inner_automorphisms(*a5c2);
  specs.push_back({a5c2, inn52, inn52, "A5xC2/Inn/Inn"});
  auto result = theorem1_harness(specs, {}, 3);
  EXPECT_TRUE(result.violations.empty());
  for (const auto& e : result.entries) {
    ASSERT_TRUE(e.report) << e.error;
    EXPECT_FALSE(e.report->wild && e.report->d1_mod_d0_n2c);
  }
}

TEST(InvolutionCentralizer, Examples) {
  auto s5 = catalog_group("S5");
  // A5 = derived subgroup of S5.
  auto a5 = derived_subgroup(*s5, whole_group(*s5));
  ASSERT_EQ(a5.size(), 60u);
  auto r = corollary1_check(*s5, a5);
  EXPECT_EQ(r.status, Corollary1Result::Status::kWitness);
  ASSERT_TRUE(r.involution);
  EXPECT_TRUE(a5.contains(*r.involution));

  auto alt = catalog_group("A5");
  EXPECT_EQ(corollary1_check(*alt, whole_group(*alt)).status, Corollary1Result::Status::kWitness);
  auto a5c2 = catalog_group("A5 x C2");
  EXPECT_EQ(corollary1_check(*a5c2, whole_group(*a5c2)).status,
            Corollary1Result::Status::kWitness);
  auto s4 = catalog_group("S4");
  EXPECT_EQ(corollary1_check(*s4, whole_group(*s4)).status,
            Corollary1Result::Status::kPreconditionUnmet);
}
