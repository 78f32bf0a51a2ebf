#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "altcoh/altcoh.hpp"
#include "altcoh/json_io.hpp"

namespace {

using namespace altcoh;

enum ExitCode { kOk = 0, kAssertionFailed = 1, kUsage = 2, kResource = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t cap = 0;
  std::string format = "json";
  std::uint64_t seed = 0;
  double timeout = 0;
};

struct Outcome {
  int code = kOk;
  std::string text;
};

// Assertions keyed for deterministic, sorted output.
class Report {
 public:
  void check(const std::string& key, const json& expected, const json& actual) {
    rows_[key] = {expected, actual, expected == actual ? "pass" : "fail"};
  }
  void unverifiable(const std::string& key, const std::string& why) { rows_[key] = {nullptr, why, "unverifiable"}; }

  int code() const {
    bool any_unverifiable = false;
    for (const auto& [k, r] : rows_) {
      if (r.status == "fail") return kAssertionFailed;
      if (r.status == "unverifiable") any_unverifiable = true;
    }
    return any_unverifiable ? kResource : kOk;
  }

  std::string render(const std::string& target, const json& params, const std::string& format) const {
    if (format == "json") {
      json a = json::array();
      for (const auto& [k, r] : rows_)
        a.push_back(json{{"key", k}, {"expected", r.expected}, {"actual", r.actual}, {"status", r.status}});
      json j{{"schema_version", kSchemaVersion}, {"kind", "verification"}, {"target", target}, {"params", params},
             {"assertions", a}, {"passed", code() == kOk}};
      return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (format == "csv") {
      os << "key,status,expected,actual\n";
      for (const auto& [k, r] : rows_)
        os << k << ',' << r.status << ",\"" << r.expected.dump() << "\",\"" << r.actual.dump() << "\"\n";
      return os.str();
    }
    std::size_t w = 3;
    for (const auto& [k, r] : rows_) w = std::max(w, k.size());
    os << "verify " << target << ' ' << params.dump() << '\n';
    for (const auto& [k, r] : rows_)
      os << std::left << std::setw(static_cast<int>(w)) << k << "  " << std::setw(12) << r.status
         << " expected=" << r.expected.dump() << " actual=" << r.actual.dump() << '\n';
    os << (code() == kOk ? "PASS" : "FAIL") << '\n';
    return os.str();
  }

 private:
  struct Row {
    json expected, actual;
    std::string status;
  };
  std::map<std::string, Row> rows_;
};

GroupTable load_group(const std::string& spec) {
  if (spec.find(':') != std::string::npos && spec.rfind(".json") == std::string::npos)
    return group_from_shorthand(spec);
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot open group table file '" + spec + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad group table JSON: ") + e.what());
  }
  return group_table_from_json(j);
}

void require_format(const std::string& f) {
  if (f != "json" && f != "csv" && f != "text") throw UsageError("format must be json, csv or text");
}

std::string pad_key(std::size_t i, std::size_t width = 4) {
  std::string s = std::to_string(i);
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

// ---------------------------------------------------------------------------

Outcome cmd_dim(std::uint64_t n, std::uint64_t p, std::optional<std::uint64_t> max_degree, const RunConfig& cfg) {
  if (n == 0) throw UsageError("--n must be positive");
  if (!is_prime(p)) throw UsageError("--p must be prime");
  const auto t = cohomology_table(n, p, max_degree);
  if (cfg.format == "csv") return {kOk, table_to_csv(t)};
  if (cfg.format == "text") return {kOk, table_to_text(t)};
  return {kOk, table_to_json(t).dump(2) + "\n"};
}

Outcome verify_ore(std::size_t m, const std::string& group, const RunConfig& cfg) {
  if (m == 0) throw UsageError("--m must be positive");
  const auto H = std::make_shared<const GroupTable>(load_group(group));
  const PermGroup G = monomial_perm_group(*H, m, cfg.cap);
  Report rep;
  const auto els = monomial_group_elements(H, m);
  rep.check("order", static_cast<std::uint64_t>(ipow(H->size(), static_cast<unsigned>(m)) * factorial(static_cast<unsigned>(m))),
            G.order());
  std::size_t decomp_bad = 0, central_bad = 0, conj_bad = 0;
  std::vector<Perm> reps;
  std::vector<std::size_t> rep_of(els.size());
  std::vector<std::size_t> rep_index;
  for (std::size_t i = 0; i < els.size(); ++i) {
    const auto& x = els[i];
    const auto cyc = disjoint_monomial_cycles(x);
    auto prod = MonomialElement::identity(H, m);
    for (const auto& c : cyc) prod = mono_mul(prod, c.as_element(H, m));
    if (!(prod == x)) ++decomp_bad;
    const Perm px = to_perm(x);
    if (centralizer_order(centralizer_shape(x)) != centralizer(G, px).order()) ++central_bad;
    std::optional<std::size_t> found;
    for (std::size_t r = 0; r < reps.size() && !found; ++r)
      if (are_conjugate(G, reps[r], px)) found = r;
    if (!found) {
      found = reps.size();
      reps.push_back(px);
      rep_index.push_back(i);
    }
    rep_of[i] = *found;
  }
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = 0; j < els.size(); ++j)
      if (monomial_conjugate_test(els[i], els[j]) != (rep_of[i] == rep_of[j])) ++conj_bad;
  rep.check("elements", G.order(), els.size());
  rep.check("decomposition_mismatches", 0, decomp_bad);
  rep.check("centralizer_order_mismatches", 0, central_bad);
  rep.check("conjugacy_pair_mismatches", 0, conj_bad);
  return {rep.code(), rep.render("ore", json{{"m", m}, {"group", group}}, cfg.format)};
}

Outcome verify_weyl(std::size_t n, std::uint64_t p, const RunConfig& cfg) {
  if (!is_prime(p) || p == 2) throw UsageError("--p must be an odd prime");
  Report rep;
  const PermGroup A = alternating_group(n, cfg.cap);
  const auto E = detecting_subgroup(n, p);
  try {
    const auto W = weyl_action(A, E);
    rep.check("E.weyl_times_centralizer", W.normalizer_order, W.elements.size() * W.centralizer_order);
    if (p == 3 && n % 3 != 2 && E.rank > 0) {
      const std::uint64_t k = E.rank;
      rep.check("E.weyl_order", factorial(static_cast<unsigned>(k)) * ipow(2, static_cast<unsigned>(k - 1)),
                W.elements.size());
    } else {
      rep.check("E.weyl_order_divides_normalizer", true, W.normalizer_order % W.elements.size() == 0);
    }
    std::vector<FpMatrix> dual;
    for (const auto& g : W.generators) dual.push_back(transpose(g));
    const auto dims = invariants(dual, static_cast<unsigned>(E.rank), static_cast<Residue>(p));
    std::vector<std::uint64_t> formula;
    for (std::size_t d = 0; d <= E.rank; ++d) formula.push_back(stable_dim(n, p, d));
    if (E.rank > 0) rep.check("E.invariants", formula, dims.dims);
  } catch (const ResourceLimit& e) {
    rep.unverifiable("E.weyl_order", e.what());
  }
  if (n == p * p) {
    const auto T = build_T_km(2, 2, p);
    try {
      const auto WA = weyl_action(A, T);
      rep.check("T22.alternating_equals_gl_plus", true, WA.elements == gl_plus(2, static_cast<Residue>(p), cfg.cap));
      const auto WS = weyl_action(symmetric_group(n, cfg.cap), T);
      rep.check("T22.symmetric_equals_gl", true, WS.elements == gl(2, static_cast<Residue>(p), cfg.cap));
    } catch (const ResourceLimit& e) {
      rep.unverifiable("T22", e.what());
    }
  }
  return {rep.code(), rep.render("weyl", json{{"n", n}, {"p", p}}, cfg.format)};
}

Outcome verify_closed_system(std::size_t n, std::uint64_t p, const RunConfig& cfg) {
  if (!is_prime(p) || p == 2) throw UsageError("--p must be an odd prime");
  Report rep;
  const PermGroup A = alternating_group(n, cfg.cap);
  const PermGroup S = sylow_generators(n, p, cfg.cap);
  rep.check("sylow_order", ipow(p, legendre(n, p)), S.order());
  std::vector<std::pair<std::string, ElemAbSubgroup>> cases{{"E", detecting_subgroup(n, p)}};
  std::uint64_t pm = p;
  unsigned m = 1;
  while (pm < n) {
    pm *= p;
    ++m;
  }
  if (pm == n && m >= 2) cases.emplace_back("T" + std::to_string(m) + std::to_string(m), build_T_km(m, m, p));
  for (const auto& [name, E] : cases) {
    if (E.rank == 0) continue;
    try {
      const auto r = closed_system_check(E.group(cfg.cap), S, A);
      rep.check(name + ".closed", true, r.passed);
      if (!r.exhaustive) rep.unverifiable(name + ".exhaustive", "A_n above the enumeration cap; backtracking path used");
    } catch (const ResourceLimit& e) {
      rep.unverifiable(name + ".closed", e.what());
    }
  }
  return {rep.code(), rep.render("closed-system", json{{"n", n}, {"p", p}}, cfg.format)};
}

Outcome verify_theorem_cmd(std::size_t n, std::uint64_t p, const RunConfig& cfg) {
  if (!is_prime(p)) throw UsageError("--p must be prime");
  Report rep;
  try {
    const auto r = verify_theorem(n, p, cfg.cap);
    if (r.provenance == Provenance::kUnverified) {
      rep.unverifiable("invariants", r.note.empty() ? "no independent path" : r.note);
    } else {
      for (std::size_t d = 0; d < r.formula.size(); ++d)
        rep.check("degree." + pad_key(d, 2), r.formula[d], r.invariant_dims[d]);
      if (r.closed_system) rep.check("closed_system", true, *r.closed_system);
    }
  } catch (const ResourceLimit& e) {
    rep.unverifiable("invariants", e.what());
  }
  return {rep.code(), rep.render("theorem", json{{"n", n}, {"p", p}}, cfg.format)};
}

Outcome verify_kunneth(std::size_t n, std::uint64_t p, const RunConfig& cfg) {
  if (p != 3) throw UsageError("kunneth is stated for --p 3");
  Report rep;
  rep.check("kunneth", true, kunneth_consistency(n, p));
  return {rep.code(), rep.render("kunneth", json{{"n", n}, {"p", p}}, cfg.format)};
}

Outcome cmd_subgroups(const std::string& kind, std::optional<std::size_t> m, std::optional<std::size_t> n,
                      std::uint64_t p, std::optional<std::size_t> index, const RunConfig& cfg) {
  if (!is_prime(p)) throw UsageError("--p must be prime");
  auto need = [](const std::optional<std::size_t>& v, const char* flag) {
    if (!v || *v == 0) throw UsageError(std::string(flag) + " is required and must be positive");
    return *v;
  };
  json out;
  if (kind == "index-vectors") {
    const auto ivs = index_vectors(static_cast<unsigned>(need(m, "--m")), p);
    json list = json::array();
    for (const auto& iv : ivs) list.push_back(iv.i);
    out = json{{"schema_version", kSchemaVersion}, {"kind", "index-vectors"}, {"m", *m}, {"p", p}, {"vectors", list}};
  } else if (kind == "T") {
    const auto ivs = index_vectors(static_cast<unsigned>(need(m, "--m")), p);
    const std::size_t i = index.value_or(0);
    if (i >= ivs.size()) throw UsageError("--index out of range (0.." + std::to_string(ivs.size() - 1) + ")");
    out = subgroup_to_json("T", build_T(ivs[i]));
    out["index_vector"] = ivs[i].i;
  } else if (kind == "E") {
    out = subgroup_to_json("E", detecting_subgroup(need(n, "--n"), p));
  } else if (kind == "sylow") {
    if (p == 2) throw UsageError("sylow needs an odd prime");
    const auto S = sylow_generators(need(n, "--n"), p, cfg.cap);
    out = subgroup_to_json("sylow", S.degree(), p, S.generators(), S.order());
  } else {
    throw UsageError("--kind must be index-vectors, T, E or sylow");
  }
  return {kOk, out.dump(2) + "\n"};
}

Outcome cmd_fuzz(const std::string& group, std::size_t m, std::size_t samples, const RunConfig& cfg) {
  if (m == 0) throw UsageError("--m must be positive");
  const auto H = std::make_shared<const GroupTable>(load_group(group));
  const PermGroup G = monomial_perm_group(*H, m, cfg.cap);
  const auto els = monomial_group_elements(H, m);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  std::size_t conj_bad = 0, central_bad = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& x = els[pick(rng)];
    const auto& y = els[pick(rng)];
    if (monomial_conjugate_test(x, y) != are_conjugate(G, to_perm(x), to_perm(y))) ++conj_bad;
    if (centralizer_order(centralizer_shape(x)) != centralizer(G, to_perm(x)).order()) ++central_bad;
  }
  Report rep;
  rep.check("conjugacy_mismatches", 0, conj_bad);
  rep.check("centralizer_mismatches", 0, central_bad);
  rep.check("samples", samples, samples);
  return {rep.code(), rep.render("fuzz", json{{"group", group}, {"m", m}, {"samples", samples}}, cfg.format)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable mod-p cohomology tables of alternating groups and their verification"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::optional<std::uint64_t> cap_flag;
  app.add_option("--cap", cap_flag, "enumeration cap (default 2^21 or ALTCOH_ENUMERATION_CAP)");
  app.add_option("--format", cfg.format, "json, csv or text")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for fuzz sampling order")->capture_default_str();
  app.add_option("--timeout", cfg.timeout, "seconds before giving up (0 = none)")->capture_default_str();

  std::function<Outcome()> job;

  std::uint64_t n = 0, p = 0;
  std::optional<std::uint64_t> max_degree;
  auto* dim = app.add_subcommand("dim", "dimension table of H^*_s(A_n, Z/p)");
  dim->add_option("--n", n)->required();
  dim->add_option("--p", p)->required();
  dim->add_option("--max-degree", max_degree);
  dim->callback([&] { job = [&] { return cmd_dim(n, p, max_degree, cfg); }; });

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  verify->fallthrough();
  std::size_t m = 0;
  std::string group;
  auto* ore = verify->add_subcommand("ore", "Ore's theory in the complete monomial group");
  ore->add_option("--m", m)->required();
  ore->add_option("--group", group)->required();
  ore->callback([&] { job = [&] { return verify_ore(m, group, cfg); }; });
  auto add_np = [&](const char* name, const char* desc, auto fn) {
    auto* sc = verify->add_subcommand(name, desc);
    sc->add_option("--n", n)->required();
    sc->add_option("--p", p)->required();
    sc->callback([&, fn] { job = [&, fn] { return fn(static_cast<std::size_t>(n), p, cfg); }; });
  };
  add_np("weyl", "Weyl group orders and invariants", verify_weyl);
  add_np("closed-system", "closed-system check for (E, Syl_p(A_n), A_n)", verify_closed_system);
  add_np("theorem", "formula vs independent invariants", verify_theorem_cmd);
  add_np("kunneth", "A_3k ~ A_3k+1 and A_3k+2 vanishing", verify_kunneth);

  std::string kind;
  std::optional<std::size_t> sm, sn, sindex;
  std::uint64_t sp = 0;
  auto* subs = app.add_subcommand("subgroups", "elementary abelian and Sylow subgroup descriptors");
  subs->add_option("--kind", kind)->required();
  subs->add_option("--m", sm);
  subs->add_option("--n", sn);
  subs->add_option("--p", sp)->required();
  subs->add_option("--index", sindex, "position in the index-vectors list (kind T)");
  subs->callback([&] { job = [&] { return cmd_subgroups(kind, sm, sn, sp, sindex, cfg); }; });

  std::size_t samples = 100;
  auto* fuzz = app.add_subcommand("fuzz", "random differential test of Ore conjugacy and centralizers");
  fuzz->add_option("--group", group)->required();
  fuzz->add_option("--m", m)->required();
  fuzz->add_option("--samples", samples)->capture_default_str();
  fuzz->callback([&] { job = [&] { return cmd_fuzz(group, m, samples, cfg); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    require_format(cfg.format);
    cfg.cap = cap_flag.value_or(enumeration_cap_from_env());
    if (cfg.cap == 0) throw UsageError("--cap must be positive");
    if (cfg.timeout < 0) throw UsageError("--timeout must be nonnegative");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  auto run = [&]() -> Outcome {
    try {
      return job();
    } catch (const UsageError& e) {
      return {kUsage, std::string("error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
      return {kUsage, std::string("error: ") + e.what() + "\n"};
    } catch (const std::domain_error& e) {
      return {kUsage, std::string("error: ") + e.what() + "\n"};
    } catch (const ResourceLimit& e) {
      return {kResource, std::string("resource limit: ") + e.what() + "\n"};
    }
  };

  Outcome out;
  if (cfg.timeout > 0) {
    auto fut = std::async(std::launch::async, run);
    if (fut.wait_for(std::chrono::duration<double>(cfg.timeout)) != std::future_status::ready) {
      std::cerr << "resource limit: timed out after " << cfg.timeout << " s\n";
      std::fflush(stderr);
      std::_Exit(kResource);
    }
    out = fut.get();
  } else {
    out = run();
  }
  (out.code == kUsage || (out.code == kResource && out.text.rfind("resource", 0) == 0) ? std::cerr : std::cout)
      << out.text;
  return out.code;
}
