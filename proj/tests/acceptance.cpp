// Acceptance runner: one [PASS]/[FAIL] line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "altcoh/altcoh.hpp"
#include "oracles.hpp"

using namespace altcoh;

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "  failed: " << what << '\n';
    }
  }
};

using Criterion = std::function<void(Checker&)>;

void ore_suite(Checker& c, const HTable& H, std::size_t m, std::uint64_t want_order) {
  const PermGroup G = monomial_perm_group(*H, m);
  const auto els = monomial_group_elements(H, m);
  c.expect(G.order() == want_order && els.size() == want_order, "group order " + std::to_string(want_order));
  std::vector<Perm> perms;
  for (const auto& x : els) perms.push_back(to_perm(x));
  std::size_t bad_decomp = 0, bad_conj = 0, bad_cent = 0;
  for (std::size_t i = 0; i < els.size(); ++i) {
    const auto cs = disjoint_monomial_cycles(els[i]);
    auto prod = MonomialElement::identity(H, m);
    std::vector<bool> used(m, false);
    for (std::size_t a = 0; a < cs.size(); ++a) {
      const auto ea = cs[a].as_element(H, m);
      prod = mono_mul(prod, ea);
      for (auto s : cs[a].support) {
        if (used[s]) ++bad_decomp;
        used[s] = true;
      }
      for (std::size_t b = a + 1; b < cs.size(); ++b) {
        const auto eb = cs[b].as_element(H, m);
        if (!(mono_mul(ea, eb) == mono_mul(eb, ea))) ++bad_decomp;
      }
    }
    if (!(prod == els[i])) ++bad_decomp;
    if (centralizer_order(centralizer_shape(els[i])) != centralizer(G, perms[i]).order()) ++bad_cent;
    for (std::size_t j = 0; j < els.size(); ++j)
      if (monomial_conjugate_test(els[i], els[j]) != are_conjugate(G, perms[i], perms[j])) ++bad_conj;
  }
  c.expect(bad_decomp == 0, std::to_string(bad_decomp) + " decomposition defects");
  c.expect(bad_conj == 0, std::to_string(bad_conj) + " conjugacy disagreements");
  c.expect(bad_cent == 0, std::to_string(bad_cent) + " centralizer order disagreements");
}

void criterion_ore(Checker& c) {
  ore_suite(c, std::make_shared<const GroupTable>(GroupTable::cyclic(3)), 3, 162);
  ore_suite(c, std::make_shared<const GroupTable>(GroupTable::symmetric(3)), 2, 72);
}

void criterion_weyl(Checker& c) {
  const auto T = build_T_km(2, 2, 3);
  const auto WS = weyl_action(symmetric_group(9), T);
  c.expect(WS.elements.size() == 48, "|W_S9(T22)| = 48");
  c.expect(WS.elements == gl(2, 3), "W_S9(T22) = GL_2(F_3)");
  const auto WA = weyl_action(alternating_group(9), T);
  c.expect(WA.elements.size() == 24, "|W_A9(T22)| = 24");
  c.expect(WA.elements == gl_plus(2, 3), "W_A9(T22) = GL_2^+(F_3)");
  for (unsigned k = 1; k <= 3; ++k) {
    const auto W = weyl_action(alternating_group(3 * k), detecting_subgroup(3 * k, 3));
    c.expect(W.elements.size() == factorial(k) * ipow(2, k - 1), "|W_A" + std::to_string(3 * k) + "(E)| = k! 2^(k-1)");
  }
}

void criterion_theorem(Checker& c) {
  for (std::uint64_t n : {3u, 4u, 5u, 6u, 7u, 9u, 10u}) {
    const auto r = verify_theorem(n, 3, kDefaultEnumerationCap, false);
    c.expect(r.provenance == Provenance::kVerifiedByInvariants, "n=" + std::to_string(n) + " uses the normalizer path");
    c.expect(r.passed(), "n=" + std::to_string(n) + " formula equals invariants");
    if (n == 9) c.expect(r.invariant_dims == std::vector<std::uint64_t>{1, 0, 0, 1}, "n=9 dims [1,0,0,1]");
  }
}

void criterion_vanishing(Checker& c) {
  for (auto [n, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{5, 5}, {10, 5}, {7, 7}}) {
    const auto r = verify_theorem(n, p, kDefaultEnumerationCap, false);
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(p) + ")";
    c.expect(r.provenance == Provenance::kVerifiedByInvariants, tag + " independent path");
    for (std::size_t d = 1; d < r.formula.size(); ++d) {
      c.expect(r.formula[d] == 0, tag + " formula vanishes in degree " + std::to_string(d));
      c.expect(r.invariant_dims[d] == 0, tag + " invariants vanish in degree " + std::to_string(d));
    }
    for (std::uint64_t d = 1; d <= 2 * n; ++d) c.expect(stable_dim(n, p, d) == 0, tag + " stable_dim vanishes");
  }
}

void criterion_closed_system(Checker& c) {
  const PermGroup A9 = alternating_group(9);
  const PermGroup S = sylow_generators(9, 3);
  c.expect(S.order() == 81, "|Syl_3(A_9)| = 81");
  for (const auto& [name, E] : std::vector<std::pair<std::string, ElemAbSubgroup>>{
           {"E", detecting_subgroup(9, 3)}, {"T22", build_T_km(2, 2, 3)}}) {
    const auto r = closed_system_check(E.group(), S, A9);
    c.expect(r.exhaustive && r.conjugators_scanned == 181440, name + " scanned all 181440 conjugators");
    c.expect(r.passed, name + " closed system");
  }
}

void criterion_p2(Checker& c) {
  // transcribed basis w_{2i} (0 <= i <= m) and u_1 w_{2i} (0 < i <= m)
  for (std::uint64_t m = 0; m <= 6; ++m) {
    std::vector<std::uint64_t> golden(2 * m + 6, 0);
    for (std::uint64_t i = 0; i <= m; ++i) golden[2 * i] = 1;
    for (std::uint64_t i = 1; i <= m; ++i) golden[2 * i + 1] = 1;
    for (std::uint64_t d = 0; d < golden.size(); ++d) {
      if (m > 0) c.expect(stable_dim(2 * m, 2, d) == golden[d], "A_" + std::to_string(2 * m) + " degree " + std::to_string(d));
      c.expect(stable_dim(2 * m + 1, 2, d) == golden[d], "A_" + std::to_string(2 * m + 1) + " degree " + std::to_string(d));
      if (m > 0) c.expect(stable_dim(2 * m, 2, d) == stable_dim(2 * m + 1, 2, d), "2m vs 2m+1");
    }
  }
  c.expect(stable_dim(8, 2, 1) == 0, "stable_dim(8,2,1) = 0");
  c.expect(stable_dim(8, 2, 3) == 1, "stable_dim(8,2,3) = 1");
}

void criterion_zprime(Checker& c) {
  const auto H = std::make_shared<const GroupTable>(GroupTable::cyclic(3));
  std::size_t tested = 0;
  for (std::size_t m : {3u, 4u}) {
    const PermGroup W = wreath_alternating(*H, m);
    std::vector<Perm> three_power;
    for (const auto& g : W.elements())
      if (is_power_of(g.order(), 3)) three_power.push_back(g);
    const std::size_t stride = std::max<std::size_t>(1, three_power.size() / 15);
    for (std::size_t i = 0; i < three_power.size(); i += stride) {
      const auto x = from_perm(H, m, three_power[i]);
      const auto z = zprime(x);
      const PermGroup C = centralizer(W, three_power[i]);
      c.expect(z.group.is_subgroup_of(C), "Z' inside the centralizer");
      c.expect(C.order() % z.group.order() == 0 && is_power_of(C.order() / z.group.order(), 2),
               "index of Z' is a power of 2");
      ++tested;
    }
  }
  c.expect(tested >= 20, "at least 20 sampled elements (got " + std::to_string(tested) + ")");
}

void criterion_properties(Checker& c) {
  std::mt19937 rng(2024);
  auto rand_mat = [&](Residue p, std::size_t r, std::size_t cols) {
    std::uniform_int_distribution<long long> d(0, p - 1);
    std::vector<long long> e(r * cols);
    for (auto& x : e) x = d(rng);
    return FpMatrix(p, r, cols, e);
  };
  auto rand_inv = [&](Residue p, std::size_t k) {
    while (true) {
      auto m = rand_mat(p, k, k);
      if (invertible(m)) return m;
    }
  };
  for (int t = 0; t < 200; ++t) {
    const Residue p = t % 2 ? 3 : 5;
    const auto m = rand_mat(p, 1 + t % 4, 1 + t % 5);
    c.expect(rref(rref(m)) == rref(m), "rref idempotence");
    c.expect(rank(m) + kernel(m).dim() == m.cols(), "rank-nullity");
  }
  for (int t = 0; t < 60; ++t) {
    const Residue p = t % 2 ? 3 : 5;
    const unsigned k = 2 + t % 3;
    const auto g = rand_inv(p, k), h = rand_inv(p, k);
    ExtElement a(p, k);
    std::uniform_int_distribution<Residue> d(0, p - 1);
    for (Monomial s = 0; s < (Monomial{1} << k); ++s) a.add(s, d(rng));
    c.expect(act(g * h, a) == act(h, act(g, a)), "action homomorphism law");
    const auto top = ExtElement::monomial(p, k, (Monomial{1} << k) - 1, 1);
    c.expect(act(g, top) == scale(top, det(g)), "top-form determinant law");
  }
  for (const auto& orders : std::vector<std::vector<std::uint64_t>>{{3}, {9}, {3, 3}, {9, 3}, {5, 5}}) {
    const PermGroup A = regular_embedding(orders);
    bool free = true;
    for (const auto& g : A.elements())
      if (!g.is_identity())
        for (std::size_t x = 0; x < A.degree(); ++x) free = free && g(static_cast<Point>(x)) != x;
    c.expect(free && orbits(A.degree(), A.generators()).size() == 1, "regular representation free and transitive");
  }
  for (std::size_t n = 3; n <= 15; ++n)
    c.expect(sylow_generators(n, 3).order() == ipow(3, legendre(n, 3)), "Sylow order by Legendre");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"Ore suite: Sigma_3(C_3) and Sigma_2(S_3)", criterion_ore},
      {"Weyl suite: T_{2,2} in S_9/A_9 and E in A_{3k}", criterion_weyl},
      {"Main theorem p=3, n in {3,4,5,6,7,9,10}", criterion_theorem},
      {"Vanishing for p>=5: (5,5), (10,5), (7,7)", criterion_vanishing},
      {"Closed system in A_9 (E and T_{2,2})", criterion_closed_system},
      {"p=2 table against transcribed basis", criterion_p2},
      {"Z' lemma in C_3 wr A_3 and C_3 wr A_4", criterion_zprime},
      {"Exact-arithmetic property suites", criterion_properties},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "  exception: " << e.what() << '\n';
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %zu %s (%.1fs)\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs);
    if (!c.ok) std::cout << c.detail.str();
    all = all && c.ok;
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
