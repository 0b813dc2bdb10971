#include "grpwild_cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "grpwild/autos.hpp"
#include "grpwild/catalog.hpp"
#include "grpwild/group_ops.hpp"
#include "grpwild/semidirect.hpp"
#include "grpwild_cli/cache.hpp"
#include "grpwild_cli/expr.hpp"

namespace grpwild::cli {

using json = nlohmann::ordered_json;

Limits Config::limits() const {
  Limits l;
  l.max_enum = max_enum;
  return l;
}

json to_json(const WildReport& r, const Group& g) {
  json j;
  j["prime"] = r.p;
  j["status"] = to_string(r.status);
  j["mode"] = to_string(r.mode);
  j["depth"] = r.depth;
  j["order_p_elements"] = r.order_p_elements;
  j["subgroup_classes"] = r.class_count;
  if (r.fixed_class) {
    j["fixed_class"] = *r.fixed_class;
    j["fixed_rep"] = *r.fixed_rep;
    j["fixed_rep_label"] = g.element_label(*r.fixed_rep);
  }
  if (!r.unresolved_classes.empty()) j["unresolved_classes"] = r.unresolved_classes;
  if (!r.note.empty()) j["note"] = r.note;
  json ws = json::array();
  for (const Witness& w : r.witnesses) {
    json e;
    e["class"] = w.class_id;
    e["rep"] = w.rep;
    e["word"] = w.map.serialize();
    e["image"] = w.image;
    e["image_class"] = w.image_class;
    ws.push_back(std::move(e));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

json to_json(const TripletReport& r) {
  json j;
  j["ordinary"] = r.ordinary;
  j["wild"] = r.wild;
  j["wild_centralizer_form"] = r.wild_centralizer_form;
  j["forms_agree"] = r.forms_agree;
  j["d1_mod_d0_n2c"] = r.d1_mod_d0_n2c;
  j["solvable"] = r.solvable;
  j["involutions"] = r.involutions;
  j["d0_orbits"] = r.d0_orbits;
  j["d0_order"] = r.d0_size;
  j["d1_order"] = r.d1_size;
  j["quotient_order"] = r.quotient_order;
  if (r.fixed_involution) j["fixed_involution"] = *r.fixed_involution;
  return j;
}

namespace {

struct Context {
  const Config& config;
  Limits limits;
  std::optional<Cache> cache;
  std::string expr_text;
};

std::shared_ptr<const Group> indexed(const EvaluatedGroup& g, const std::string& text) {
  if (!g.group) {
    throw LimitError(text + " of order " + g.order.render() + " cannot be addressed by index");
  }
  return g.group;
}

std::shared_ptr<const Group> tabled(const std::shared_ptr<const Group>& g, const Limits& limits) {
  if (dynamic_cast<const TableGroup*>(g.get())) return g;
  if (g->order() > limits.max_table) {
    throw LimitError(g->name() + " exceeds the table limit " + std::to_string(limits.max_table));
  }
  return to_table(*g, limits);
}

/// Conjugacy partition, through the cache when configured.
ConjPartition partition(const Context& ctx, const Group& g) {
  if (g.order() > ctx.limits.max_enum) {
    throw LimitError(g.name() + " exceeds the enumeration limit " +
                     std::to_string(ctx.limits.max_enum));
  }
  std::string key;
  if (ctx.cache) {
    key = cache_key(ctx.expr_text, "conj", 0);
    if (auto p = ctx.cache->load_partition(key); p && p->class_of.size() == g.order()) {
      return std::move(*p);
    }
  }
  std::shared_ptr<const Group> work;
  const Group* target = &g;
  if (g.order() <= ctx.limits.max_table && !dynamic_cast<const TableGroup*>(&g)) {
    work = to_table(g, ctx.limits);
    target = work.get();
  }
  ConjPartition p = conjugacy_classes(*target, ctx.config.threads, ctx.limits);
  if (ctx.cache) {
    try {
      ctx.cache->store_partition(key, p);
    } catch (const std::exception& e) {
      std::cerr << "warning: cache store failed: " << e.what() << "\n";
    }
  }
  return p;
}

WildOptions wild_options(const Context& ctx) {
  WildOptions o;
  o.mode = ctx.config.mode;
  o.depth = ctx.config.depth;
  o.threads = ctx.config.threads;
  o.limits = ctx.limits;
  return o;
}

int status_exit(WildStatus s) {
  switch (s) {
    case WildStatus::kWildExact:
    case WildStatus::kWildWitnessed: return kExitVerified;
    case WildStatus::kNotWildExact: return kExitRefuted;
    case WildStatus::kInconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

std::uint64_t exponent_of(const Group& g) {
  std::uint64_t e = 1;
  for (Elem x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

bool abelian(const Group& g) {
  for (Elem s : g.generators())
    for (Elem t : g.generators())
      if (g.mul(s, t) != g.mul(t, s)) return false;
  return true;
}

int cmd_construct(const Context& ctx, const EvaluatedGroup& eg, json& result) {
  if (eg.sak) {
    json levels = json::array();
    for (const SakLevel& l : eg.sak->levels) {
      json j;
      j["prime"] = l.p;
      j["r"] = l.r;
      j["dimension"] = l.dimension;
      j["order"] = l.order.render();
      j["indexable"] = l.group && l.group->indexable();
      levels.push_back(std::move(j));
    }
    result["prime_chain"] = eg.sak->prime_chain;
    result["levels"] = std::move(levels);
  }
  if (eg.group) {
    result["name"] = eg.group->name();
    if (const auto* sd = dynamic_cast<const SdGroup*>(eg.group.get())) {
      result["kind"] = "semidirect";
      result["prime"] = sd->p();
      result["r"] = sd->r();
      result["dimension"] = sd->module().dim();
      result["indexable"] = sd->indexable();
    } else {
      result["kind"] = "table";
    }
    const bool small = (!dynamic_cast<const SdGroup*>(eg.group.get()) ||
                        static_cast<const SdGroup&>(*eg.group).indexable()) &&
                       eg.group->order() <= ctx.limits.max_table;
    if (small) {
      auto t = tabled(eg.group, ctx.limits);
      result["abelian"] = abelian(*t);
      result["exponent"] = exponent_of(*t);
      result["conjugacy_classes"] = conjugacy_classes(*t, ctx.config.threads, ctx.limits).class_count();
      result["solvable"] = is_solvable(*t, ctx.limits);
    }
  } else {
    result["kind"] = "saksonov";
    result["indexable"] = false;
  }
  return kExitVerified;
}

int cmd_verify_pwild(const Context& ctx, const EvaluatedGroup& eg, json& result) {
  if (!ctx.config.prime) throw UsageError("verify-pwild needs --prime");
  auto g = indexed(eg, ctx.expr_text);
  const ConjPartition conj = partition(ctx, *g);
  WildOptions o = wild_options(ctx);
  o.conj = &conj;
  const WildReport r = verify_p_wild(g, *ctx.config.prime, o);
  result = to_json(r, *g);
  return status_exit(r.status);
}

int cmd_xi(const Context& ctx, const EvaluatedGroup& eg, json& result) {
  auto g = indexed(eg, ctx.expr_text);
  const ConjPartition conj = partition(ctx, *g);
  WildOptions o = wild_options(ctx);
  o.conj = &conj;
  const XiReport x = xi(g, o);
  result["pi"] = x.pi;
  result["xi"] = x.xi;
  result["pi_equals_xi"] = x.pi == x.xi;
  json per = json::array();
  int code = kExitVerified;
  for (const auto& [p, r] : x.per_prime) {
    per.push_back(to_json(r, *g));
    if (r.status == WildStatus::kInconclusive) code = kExitInconclusive;
  }
  result["per_prime"] = std::move(per);
  return code;
}

std::vector<Perm> read_automorphism_file(const Group& g, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read automorphism file " + path);
  std::vector<Perm> out;
  std::string line;
  std::size_t lineno = 0;
  const auto gens = g.generators();
  while (std::getline(f, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::vector<Elem> images;
    for (std::uint64_t v; ss >> v;) images.push_back(v);
    if (!ss.eof()) throw UsageError(path + ":" + std::to_string(lineno) + ": not a number");
    if (images.empty()) continue;
    std::optional<Perm> perm;
    if (images.size() == gens.size()) {
      perm = extend_to_automorphism(g, gens, images);
    } else if (images.size() == g.order()) {
      Perm p(images.begin(), images.end());
      if (is_automorphism(g, p)) perm = std::move(p);
    } else {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(gens.size()) + " generator images or " +
                       std::to_string(g.order()) + " element images");
    }
    if (!perm) {
      throw Error(path + ":" + std::to_string(lineno) + ": not an automorphism of " + g.name());
    }
    out.push_back(std::move(*perm));
  }
  return out;
}

std::vector<Perm> named_generators(const Context& ctx, const std::shared_ptr<const Group>& g,
                                   const std::string& spec) {
  std::vector<Perm> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    PermSubgroup sub;
    if (item == "inn") {
      sub = inner_automorphisms(*g, ctx.limits);
    } else if (item == "aut") {
      sub = brute_force_aut(*g, ctx.limits);
    } else if (item == "trivial") {
      continue;
    } else if (item.rfind("file:", 0) == 0) {
      auto perms = read_automorphism_file(*g, item.substr(5));
      out.insert(out.end(), perms.begin(), perms.end());
      continue;
    } else {
      throw UsageError("unknown automorphism group '" + item +
                       "' (expected inn, aut, trivial or file:PATH)");
    }
    out.insert(out.end(), sub.generators().begin(), sub.generators().end());
  }
  return out;
}

int cmd_verify_triplet(const Context& ctx, const EvaluatedGroup& eg, json& result) {
  auto g = tabled(indexed(eg, ctx.expr_text), ctx.limits);
  const std::vector<Perm> d0 = named_generators(ctx, g, ctx.config.d0);
  const std::vector<Perm> d1 = named_generators(ctx, g, ctx.config.d1);
  result["d0"] = ctx.config.d0;
  result["d1"] = ctx.config.d1;
  TripletReport r;
  try {
    r = check_triplet(make_triplet(g, d0, d1, ctx.expr_text, ctx.limits), ctx.limits);
  } catch (const LimitError&) {
    throw;
  } catch (const InternalError&) {
    throw;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    result["valid"] = false;
    result["error"] = e.what();
    return kExitRefuted;
  }
  result["valid"] = true;
  result.update(to_json(r));
  const bool violation = r.wild && r.d1_mod_d0_n2c && !r.solvable;
  result["theorem1_violation"] = violation;
  return r.forms_agree && !violation ? kExitVerified : kExitRefuted;
}

int cmd_theorem1(const Context& ctx, json& result) {
  std::mt19937_64 rng(ctx.config.seed);
  std::vector<TripletSpec> specs;
  for (const char* name : {"A5", "S5", "A5 x C2"}) {
    auto g = catalog_group(name, ctx.limits);
    const PermSubgroup inn = inner_automorphisms(*g, ctx.limits);
    const PermSubgroup aut = brute_force_aut(*g, ctx.limits);
    specs.push_back({g, inn, inn, std::string(name) + " (Inn, Inn)"});
    specs.push_back({g, inn, aut, std::string(name) + " (Inn, Aut)"});
    for (std::size_t i = 0; i < ctx.config.samples; ++i) {
      specs.push_back({g, inn, sample_intermediate(inn, aut, rng, ctx.limits),
                       std::string(name) + " (Inn, D1 sample " + std::to_string(i + 1) + ")"});
    }
  }
  {
    auto v4 = catalog_group("C2 x C2", ctx.limits);
    specs.push_back(make_triplet(v4, {}, {Perm{0, 2, 3, 1}}, "C2 x C2 (1, C3)", ctx.limits));
  }
  const Theorem1Result t1 = theorem1_harness(specs, ctx.limits, ctx.config.threads);
  bool ok = t1.violations.empty();
  json entries = json::array();
  for (const Theorem1Entry& e : t1.entries) {
    json j;
    j["label"] = e.label;
    if (e.report) {
      j.update(to_json(*e.report));
      ok = ok && e.report->forms_agree;
    } else {
      j["error"] = e.error;
      ok = false;
    }
    entries.push_back(std::move(j));
  }
  result["triplets"] = std::move(entries);
  result["violations"] = t1.violations;

  json cor = json::array();
  for (const auto& [gname, nname] : {std::pair<const char*, const char*>{"S5", "A5"},
                                     {"A5", "A5"},
                                     {"A5 x C2", "A5 x C2"}}) {
    auto g = catalog_group(gname, ctx.limits);
    Subgroup n = std::string(gname) == nname ? whole_group(*g, ctx.limits)
                                             : derived_subgroup(*g, whole_group(*g, ctx.limits), ctx.limits);
    const Corollary1Result c = corollary1_check(*g, n, ctx.limits);
    json j;
    j["group"] = gname;
    j["normal_subgroup"] = nname;
    j["status"] = c.status == Corollary1Result::Status::kWitness   ? "witness"
                  : c.status == Corollary1Result::Status::kRefuted ? "refuted"
                                                                   : "precondition-unmet";
    if (c.involution) j["involution"] = g->element_label(*c.involution);
    j["message"] = c.message;
    ok = ok && c.status == Corollary1Result::Status::kWitness;
    cor.push_back(std::move(j));
  }
  result["corollary1"] = std::move(cor);
  return ok ? kExitVerified : kExitRefuted;
}

json vector_json(const SdGroup& g, const GfpVector& v) {
  json terms = json::array();
  v.for_each_nonzero([&](std::uint64_t c, Residue coef) {
    auto [block, a] = g.module().basis_label(c);
    terms.push_back({{"block", block}, {"g", g.base().element_label(a)}, {"coeff", coef}});
  });
  return terms;
}

int cmd_lemma5(const Context& ctx, const EvaluatedGroup& eg, json& result) {
  auto sd = std::dynamic_pointer_cast<const SdGroup>(eg.group);
  if (!sd) throw UsageError("lemma5-demo needs an expression of the form G(p, A)");
  SdElement x;
  if (ctx.config.element) {
    std::uint64_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoull(*ctx.config.element, &used);
      if (used != ctx.config.element->size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("--element expects an element index");
    }
    if (!sd->indexable() || index >= sd->order()) throw UsageError("element index out of range");
    x = sd->element_at(index);
  } else {
    std::mt19937_64 rng(ctx.config.seed);
    bool found = false;
    for (int attempt = 0; attempt < 100000 && !found; ++attempt) {
      x = random_element(*sd, rng);
      found = x.a != kIdentity && sd->element_order(x) == element_order(sd->base(), x.a);
    }
    if (!found) throw LimitError("no suitable element found by random search");
  }
  if (sd->indexable()) result["index"] = sd->index_of(x);
  result["element"] = sd->label(x);
  result["order"] = sd->element_order(x);
  const Lemma5Result r = lemma5_conjugator(sd, x);
  result["u"] = vector_json(*sd, r.u);
  result["exponents"] = r.exponents;
  result["word"] = r.map.serialize();
  const SdElement image = r.map.apply(x);
  result["image"] = sd->label(image);
  const bool verified = image == sd->from_base(x.a);
  result["verified"] = verified;
  return verified ? kExitVerified : kExitRefuted;
}

std::uint64_t now_ms_since(std::chrono::steady_clock::time_point t0) {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - t0)
                                        .count());
}

}  // namespace

CommandResult run_command(const std::string& command, const std::optional<std::string>& expr,
                          const Config& config) {
  const auto t0 = std::chrono::steady_clock::now();
  CommandResult out;
  static const std::vector<std::string> known{"construct",      "verify-pwild", "xi",
                                              "verify-triplet", "theorem1",     "lemma5-demo"};
  if (std::find(known.begin(), known.end(), command) == known.end()) {
    std::cerr << "error: unknown command '" << command << "'\n";
    return out;
  }
  const bool needs_expr = command != "theorem1";
  if (needs_expr && !expr) {
    std::cerr << "error: " << command << " needs a group expression\n";
    return out;
  }

  Context ctx{config, config.limits(), std::nullopt, ""};
  json result = json::object();
  std::optional<EvaluatedGroup> eg;
  try {
    ctx.cache = Cache::from_config(config.cache_dir, kToolVersion);
    if (needs_expr) {
      ctx.expr_text = render(parse_group_expr(*expr));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return out;
  }

  json report;
  report["tool"] = kToolName;
  report["version"] = kToolVersion;
  report["schema"] = kSchemaVersion;
  report["command"] = command;
  report["expr"] = needs_expr ? json(ctx.expr_text) : json(nullptr);
  json cfg;
  cfg["prime"] = config.prime ? json(*config.prime) : json(nullptr);
  cfg["mode"] = to_string(config.mode);
  cfg["depth"] = config.depth;
  cfg["max_enum"] = config.max_enum;
  cfg["threads"] = config.threads;
  cfg["seed"] = config.seed;
  report["config"] = std::move(cfg);

  int code = kExitUsage;
  try {
    if (needs_expr) {
      eg = evaluate(parse_group_expr(ctx.expr_text), ctx.limits);
      auto value = eg->order.value(1u << 16);
      report["order"] = value ? json(value->str()) : json(nullptr);
      report["order_factored"] = eg->order.render();
    }
    if (command == "construct") code = cmd_construct(ctx, *eg, result);
    else if (command == "verify-pwild") code = cmd_verify_pwild(ctx, *eg, result);
    else if (command == "xi") code = cmd_xi(ctx, *eg, result);
    else if (command == "verify-triplet") code = cmd_verify_triplet(ctx, *eg, result);
    else if (command == "theorem1") code = cmd_theorem1(ctx, result);
    else code = cmd_lemma5(ctx, *eg, result);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return out;
  } catch (const LimitError& e) {
    std::cerr << "limit: " << e.what() << "\n";
    result["error"] = e.what();
    code = kExitInconclusive;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    result["error"] = e.what();
    code = kExitRefuted;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return out;
  }
  report["result"] = std::move(result);
  report["exit_code"] = code;
  if (config.timings) report["timings_ms"] = {{"total", now_ms_since(t0)}};
  out.report = std::move(report);
  out.exit_code = code;
  return out;
}

}  // namespace grpwild::cli
