// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>

#include "grpwild/autos.hpp"
#include "grpwild/catalog.hpp"
#include "grpwild/error.hpp"
#include "grpwild/group_ops.hpp"
#include "grpwild/semidirect.hpp"
#include "grpwild/wildness.hpp"
#include "grpwild_cli/cache.hpp"
#include "grpwild_cli/commands.hpp"
#include "grpwild_cli/expr.hpp"

#ifndef GRPWILD_CLI_PATH
#error "GRPWILD_CLI_PATH must name the CLI executable"
#endif

using namespace grpwild;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void run(int id, const std::string& title, double budget_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  const double t = seconds_since(t0);
  c.require(t < budget_s, "runtime " + std::to_string(t) + " s over budget " +
                              std::to_string(budget_s) + " s");
  if (!c.ok) ++failures;
  std::ostringstream line;
  line << (c.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " ["
       << std::fixed;
  line.precision(2);
  line << t << " s]";
  if (!c.ok) line << " -- " << c.detail;
  std::cout << line.str() << std::endl;
}

int cli_exit(const std::string& args) {
  const std::string cmd = std::string("\"") + GRPWILD_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Independent check that <y> is not G-conjugate to <x>, by direct conjugation.
bool subgroups_conjugate(const Group& g, Elem x, Elem y) {
  std::vector<Elem> powers;
  for (Elem z = x; z != kIdentity; z = g.mul(z, x)) powers.push_back(z);
  for (Elem h = 0; h < g.order(); ++h) {
    const Elem c = g.conj(y, h);
    if (std::find(powers.begin(), powers.end(), c) != powers.end()) return true;
  }
  return false;
}

// Applies a witness word primitive by primitive on SdElements.
SdElement apply_word(const std::shared_ptr<const SdGroup>& g, const AutMap& m, SdElement x) {
  for (const Primitive& p : m.word()) x = AutMap(g, p).apply(x);
  return x;
}

GfpMatrix phi_matrix(const SdGroup& g) {
  const ModuleB& b = g.module();
  GfpMatrix m = GfpMatrix::identity(b.dim());
  for (Elem a = 1; a < b.base_order(); ++a) {
    m.at(b.coord_of(1, a), b.coord_of(b.r(), a)) = b.field().neg(1);
  }
  return m;
}

SdElement lemma5_independent(const std::shared_ptr<const SdGroup>& g, const SdElement& x,
                             const Lemma5Result& r) {
  SdElement y = g->conjugate(x, g->from_vector(r.u));
  for (std::uint32_t i = 1; i <= g->r(); ++i) {
    const std::int64_t p = g->p();
    const auto e = static_cast<Residue>(((r.exponents[i - 1] % p) + p) % p);
    const ModuleB& b = g->module();
    y.v += b.basis(i, y.a, e);
  }
  return y;
}

cli::GroupExpr random_expr(std::mt19937_64& rng, int depth) {
  cli::GroupExpr e;
  const int kind = depth <= 0 ? 0 : static_cast<int>(rng() % 4);
  if (kind == 0) {
    static const char atoms[] = {'C', 'D', 'S', 'A', 'Q'};
    e.atom = atoms[rng() % 5];
    e.n = e.atom == 'Q' ? 8 : (e.atom == 'S' || e.atom == 'A') ? 1 + rng() % 6 : 1 + rng() % 300;
    return e;
  }
  if (kind == 1) {
    e.kind = cli::GroupExpr::Kind::kProduct;
    const int parts = 2 + static_cast<int>(rng() % 3);
    while (static_cast<int>(e.children.size()) < parts) {
      cli::GroupExpr c = random_expr(rng, depth - 1);
      if (c.kind != cli::GroupExpr::Kind::kProduct) e.children.push_back(std::move(c));
    }
    return e;
  }
  static const std::uint64_t primes[] = {2, 3, 5, 7, 13};
  e.kind = kind == 2 ? cli::GroupExpr::Kind::kGp : cli::GroupExpr::Kind::kSak;
  if (kind == 2) e.n = primes[rng() % 5];
  e.children.push_back(random_expr(rng, depth - 1));
  return e;
}

WildOptions exact_mode() {
  WildOptions o;
  o.mode = WildMode::kExact;
  return o;
}

}  // namespace

int main() {
  run(1, "G_2(C2) has order 16, exponent 2 and is abelian", 1.0, [](Check& c) {
    auto g = SdGroup::build(cyclic(2), 2);
    c.require(g->order() == 16, "order " + std::to_string(g->order()));
    for (Elem x = 0; x < 16; ++x) {
      c.require(g->mul(x, x) == kIdentity, "element of order > 2");
      for (Elem y = 0; y < 16; ++y) c.require(g->mul(x, y) == g->mul(y, x), "not abelian");
    }
  });

  run(2, "xi(Sak(C2)) = pi = {2} in exact mode", 5.0, [](Check& c) {
    auto sak = build_saksonov(cyclic(2));
    auto x = xi(sak.outermost(), exact_mode());
    c.require(x.pi == std::vector<std::uint64_t>{2}, "pi != {2}");
    c.require(x.xi == std::vector<std::uint64_t>{2}, "xi != {2}");
    const WildReport& r = x.per_prime.at(2);
    c.require(r.status == WildStatus::kWildExact, std::string("status ") + to_string(r.status));
    c.require(r.class_count == 15, "class count " + std::to_string(r.class_count));
    c.require(!r.fixed_class, "a class is fixed");
    c.require(r.witnesses.size() == 15, "missing witnesses");
  });

  run(3, "G_2(C3), p = 2, witness depth 3 is wild-witnessed", 10.0, [](Check& c) {
    auto g = SdGroup::build(cyclic(3), 2);
    WildOptions o;
    o.depth = 3;
    auto r = verify_p_wild(g, 2, o);
    c.require(r.status == WildStatus::kWildWitnessed, std::string("status ") + to_string(r.status));
    c.require(r.witnesses.size() == r.class_count && r.class_count > 0, "witness count");
    auto t = enumerate(*g);
    for (const Witness& w : r.witnesses) {
      const SdElement img = apply_word(g, w.map, g->element_at(w.rep));
      c.require(g->index_of(img) == w.image, "witness image mismatch");
      c.require(t->pow(w.image, 2) == kIdentity && w.image != kIdentity, "image not an involution");
      c.require(!subgroups_conjugate(*t, w.rep, w.image), "witness does not move the class");
    }
  });

  run(4, "G_3(C3), p = 3, witness depth 3 is wild-witnessed", 600.0, [](Check& c) {
    auto g = SdGroup::build(cyclic(3), 3);
    c.require(g->order() == 177147, "order");
    WildOptions o;
    o.depth = 3;
    o.threads = std::max(1u, std::thread::hardware_concurrency());
    auto r = verify_p_wild(g, 3, o);
    c.require(r.status == WildStatus::kWildWitnessed, std::string("status ") + to_string(r.status));
    c.require(r.order_p_elements == 177146, "order-3 count " + std::to_string(r.order_p_elements));
    c.require(r.witnesses.size() == r.class_count, "witness count");
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
      const Witness& w = r.witnesses[rng() % r.witnesses.size()];
      c.require(g->index_of(apply_word(g, w.map, g->element_at(w.rep))) == w.image,
                "witness re-evaluation");
    }
  });

  run(5, "Normalising conjugators: all of G_2(C3), 1000 samples of G_3(C3)", 600.0, [](Check& c) {
    auto g48 = SdGroup::build(cyclic(3), 2);
    std::size_t n48 = 0;
    for (Elem i = 0; i < g48->order(); ++i) {
      const SdElement x = g48->element_at(i);
      if (x.a == kIdentity) continue;
      if (g48->element_order(x) != element_order(g48->base(), x.a)) continue;
      const Lemma5Result r = lemma5_conjugator(g48, x);
      c.require(lemma5_independent(g48, x, r) == g48->from_base(x.a), "G_2(C3) failure");
      ++n48;
    }
    c.require(n48 == 32, "expected 32 elements with g != 1, found " + std::to_string(n48));
    auto g = SdGroup::build(cyclic(3), 3);
    std::mt19937_64 rng(77);
    std::size_t done = 0, failed = 0;
    while (done < 1000) {
      const SdElement x = random_element(*g, rng);
      if (x.a == kIdentity || g->element_order(x) != 3) continue;
      const Lemma5Result r = lemma5_conjugator(g, x);
      if (!(lemma5_independent(g, x, r) == g->from_base(x.a))) ++failed;
      ++done;
    }
    c.require(failed == 0, std::to_string(failed) + " failures on G_3(C3)");
  });

  run(6, "psi, phi equivariant and multiplicative; Aut(C3), Aut(S3) lift", 60.0, [](Check& c) {
    auto g = SdGroup::build(cyclic(3), 2);
    AutMap psi = extend_linear(g, psi_matrix(*g));
    AutMap phi = extend_linear(g, phi_matrix(*g));
    c.require(equal_on_generators(psi, make_psi(g)), "psi matrix differs from psi");
    c.require(equal_on_generators(phi, make_phi(g)), "phi matrix differs from phi");
    for (const AutMap* f : {&psi, &phi}) {
      const auto& p = f->parent();
      for (Elem x = 0; x < 48; ++x)
        for (Elem y = 0; y < 48; ++y)
          c.require(f->apply(p.mul(x, y)) == p.mul(f->apply(x), f->apply(y)),
                    "not multiplicative on a pair");
      c.require(is_multiplicative_exhaustive(*f), "not bijective");
    }
    std::mt19937_64 rng(6);
    for (auto base : {cyclic(3), symmetric(3)}) {
      const PermSubgroup aut = brute_force_aut(*base);
      for (std::uint64_t p : {2u, 3u}) {
        auto sd = SdGroup::build(base, p);
        for (const Perm& f : aut.elements()) {
          AutMap lift = make_lift(sd, f);
          if (sd->indexable() && sd->order() <= 4096) {
            c.require(is_multiplicative_exhaustive(lift), "lift not an automorphism");
          } else {
            c.require(is_multiplicative_sampled(lift, 300, rng), "lift not multiplicative");
          }
          for (int k = 0; k < 100; ++k) {
            const SdElement x = random_element(*sd, rng);
            c.require(lift.apply(x).a == f[x.a], "lift does not induce F on the quotient");
          }
        }
      }
    }
  });

  run(7, "Triplet forms agree; 2*odd never wild; (V4, 1, C3) wild with N2C", 60.0, [](Check& c) {
    std::mt19937_64 rng(7);
    for (const char* name : {"S3", "S4", "A4", "D4", "Q8", "C2 x C2", "C2 x C2 x C2", "D6", "A5",
                             "C2 x C4", "D5", "S3 x C2", "S5", "A5 x C2", "C6", "D3 x C3"}) {
      auto g = catalog_group(name);
      const PermSubgroup inn = inner_automorphisms(*g);
      const PermSubgroup aut = brute_force_aut(*g);
      std::vector<PermSubgroup> d1s{inn, aut};
      for (int i = 0; i < 5; ++i) d1s.push_back(sample_intermediate(inn, aut, rng));
      for (const auto& d1 : d1s) {
        auto r = check_triplet({g, inn, d1, name});
        c.require(r.forms_agree, std::string("forms disagree on ") + name);
      }
    }
    for (const char* name : {"S3", "D5", "C2 x C3", "C2", "D3 x C3", "D7", "C10", "S3 x C3"}) {
      for (const auto& r : proposition3_harness(catalog_group(name), 20, rng)) {
        c.require(!r.wild, std::string("wild triplet on ") + name);
        c.require(r.forms_agree, std::string("forms disagree on ") + name);
      }
    }
    auto v4 = catalog_group("C2 x C2");
    auto r = check_triplet(make_triplet(v4, {}, {Perm{0, 2, 3, 1}}, "V4"));
    c.require(r.ordinary && r.wild && r.wild_centralizer_form && r.d1_mod_d0_n2c,
              "(V4, 1, C3) not wild with N2C quotient");
  });

  run(8, "Nonsolvable triplet harness has no violations; involution witness for (S5, A5)", 120.0,
      [](Check& c) {
        std::mt19937_64 rng(8);
        std::vector<TripletSpec> specs;
        for (const char* name : {"A5", "S5", "A5 x C2"}) {
          auto g = catalog_group(name);
          const PermSubgroup inn = inner_automorphisms(*g);
          const PermSubgroup aut = brute_force_aut(*g);
          specs.push_back({g, inn, inn, std::string(name) + " Inn/Inn"});
          specs.push_back({g, inn, aut, std::string(name) + " Inn/Aut"});
          for (int i = 0; i < 20; ++i) {
            specs.push_back({g, inn, sample_intermediate(inn, aut, rng), std::string(name) + " sample"});
          }
        }
        const Theorem1Result t = theorem1_harness(specs, {}, 4);
        c.require(t.violations.empty(), "violation: " + (t.violations.empty() ? "" : t.violations[0]));
        c.require(t.entries.size() == specs.size() && specs.size() == 66, "triplet count");
        for (const auto& e : t.entries) c.require(e.report.has_value(), "error: " + e.error);
        auto s5 = catalog_group("S5");
        Subgroup a5 = derived_subgroup(*s5, whole_group(*s5));
        c.require(a5.size() == 60, "derived subgroup of S5");
        auto cor = corollary1_check(*s5, a5);
        c.require(cor.status == Corollary1Result::Status::kWitness, cor.message);
      });

  run(9, "Witness and exact modes agree (order <= 64); A5 shortcut matches exact", 120.0,
      [](Check& c) {
        std::vector<std::shared_ptr<const Group>> groups;
        for (const char* name : {"C2", "C3", "C4", "C6", "S3", "D4", "Q8", "A4", "S4", "D5",
                                 "C2 x C2", "C2 x C4", "C2 x C2 x C2", "C2 x C2 x C2 x C2",
                                 "C3 x C3", "S3 x C2", "D6", "A5", "Q8 x C2", "D3 x C3"}) {
          groups.push_back(catalog_group(name));
        }
        groups.push_back(SdGroup::build(cyclic(2), 2));
        groups.push_back(SdGroup::build(cyclic(3), 2));
        for (const auto& g : groups) {
          for (std::uint64_t p : group_order(*g).primes()) {
            const WildReport w = verify_p_wild(g, p);
            const WildReport e = verify_p_wild(g, p, exact_mode());
            const std::string tag = g->name() + " p=" + std::to_string(p);
            if (is_wild(w.status)) c.require(is_wild(e.status), "witness wild, exact not: " + tag);
            if (e.status == WildStatus::kNotWildExact) {
              c.require(!is_wild(w.status), "exact not wild, witness wild: " + tag);
            }
            if (w.status == WildStatus::kNotWildExact) {
              c.require(e.status == WildStatus::kNotWildExact, "shortcut contradicts exact: " + tag);
            }
          }
        }
        auto a5 = catalog_group("A5");
        c.require(verify_p_wild(a5, 2).status == WildStatus::kNotWildExact, "A5 witness mode");
        c.require(verify_p_wild(a5, 2, exact_mode()).status == WildStatus::kNotWildExact,
                  "A5 exact mode");
      });

  run(10, "Parser round-trip, thread determinism, cache round-trip, exit codes", 300.0,
      [](Check& c) {
        std::mt19937_64 rng(10);
        for (int i = 0; i < 1000; ++i) {
          const cli::GroupExpr e = random_expr(rng, 3);
          c.require(cli::parse_group_expr(cli::render(e)) == e, "round-trip: " + cli::render(e));
        }

        struct Case {
          std::string expr;
          std::uint64_t p;
          WildMode mode;
        };
        for (const Case& k : {Case{"G(2, C3)", 2, WildMode::kWitness},
                              Case{"G(3, C3)", 3, WildMode::kWitness},
                              Case{"A5", 2, WildMode::kWitness},
                              Case{"Sak(C2)", 2, WildMode::kExact},
                              Case{"S4", 3, WildMode::kExact}}) {
          std::string reference;
          for (unsigned threads : {1u, 4u, 8u}) {
            cli::Config cfg;
            cfg.prime = k.p;
            cfg.mode = k.mode;
            cfg.threads = threads;
            auto r = cli::run_command("verify-pwild", k.expr, cfg);
            const std::string status = r.report["result"]["status"].get<std::string>();
            if (reference.empty()) reference = status;
            c.require(status == reference, "status differs across threads: " + k.expr);
          }
        }

        const auto dir = std::filesystem::temp_directory_path() / "grpwild-acceptance-cache";
        std::filesystem::remove_all(dir);
        auto g = SdGroup::build(cyclic(3), 3);
        const ConjPartition p = conjugacy_classes(*g, 4);
        cli::Cache cache(dir, cli::kToolVersion);
        const std::string key = cli::cache_key("G(3, C3)", "conj", 0);
        cache.store_partition(key, p);
        auto loaded = cache.load_partition(key);
        c.require(loaded && loaded->class_of == p.class_of, "partition round-trip");
        std::ifstream f1(cache.path_for(key), std::ios::binary);
        const std::string bytes1((std::istreambuf_iterator<char>(f1)), {});
        cache.store_partition(key, *loaded);
        std::ifstream f2(cache.path_for(key), std::ios::binary);
        const std::string bytes2((std::istreambuf_iterator<char>(f2)), {});
        c.require(bytes1 == bytes2, "cache bytes differ after reload and store");
        c.require(!cli::Cache(dir, "0.0.0-other").load_partition(key), "version mismatch hit");
        std::filesystem::remove_all(dir);

        int rc = cli_exit("xi \"Sak(C2)\" --mode exact");
        c.require(rc == 0, "xi Sak(C2) exit " + std::to_string(rc));
        rc = cli_exit("verify-pwild \"G(2,C2)\" --prime 2 --mode exact");
        c.require(rc == 0, "verify-pwild G(2,C2) exact exit " + std::to_string(rc));
        rc = cli_exit("verify-pwild \"G(2, C3)\" --prime 2 --depth 3");
        c.require(rc == 0, "verify-pwild G(2,C3) exit " + std::to_string(rc));
        rc = cli_exit("verify-pwild A5 --prime 2");
        c.require(rc == 1, "verify-pwild A5 exit " + std::to_string(rc));
        rc = cli_exit("verify-pwild \"C2 x x C2\" --prime 2");
        c.require(rc == 3, "usage error exit " + std::to_string(rc));
      });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
