#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "altcoh/arith.hpp"
#include "altcoh/elemab.hpp"
#include "altcoh/exterior.hpp"
#include "altcoh/perm_group.hpp"

namespace altcoh {

/// dim over F_p of the degree-d stable cohomology of A_n.
inline std::uint64_t stable_dim(std::uint64_t n, std::uint64_t p, std::uint64_t d) {
  require_prime(p);
  if (n == 0) throw std::invalid_argument("stable_dim: n must be positive");
  if (d == 0) return 1;
  if (p == 2) {
    const std::uint64_t m = n / 2;
    if (d % 2 == 0) return d <= 2 * m ? 1 : 0;
    return d >= 3 && d <= 2 * m + 1 ? 1 : 0;
  }
  if (p != 3) return 0;
  const std::uint64_t k = n / 3, r = n % 3;
  if (r == 2) return 0;
  return d == k ? 1 : 0;
}

/// Largest degree that can carry a nonzero entry, at least 1.
inline std::uint64_t default_max_degree(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (p == 2) return 2 * (n / 2) + 1;
  return std::max<std::uint64_t>(n / p, 1);
}

enum class Provenance { kFormula, kVerifiedByInvariants, kLemmaWeylAction, kUnverified };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kFormula: return "formula";
    case Provenance::kVerifiedByInvariants: return "verified-by-invariants";
    case Provenance::kLemmaWeylAction: return "lemma-weyl-action";
    case Provenance::kUnverified:
    default: return "unverified";
  }
}

struct CohomologyTable {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> dims;
  std::vector<Provenance> provenance;
};

inline CohomologyTable cohomology_table(std::uint64_t n, std::uint64_t p, std::optional<std::uint64_t> max_degree = {}) {
  const std::uint64_t top = max_degree.value_or(default_max_degree(n, p));
  CohomologyTable t{n, p, {}, {}};
  for (std::uint64_t d = 0; d <= top; ++d) {
    t.dims.push_back(stable_dim(n, p, d));
    t.provenance.push_back(Provenance::kFormula);
  }
  return t;
}

/// Degree-d stable cohomology of prod Z/(orders[i]): C(r, d), r = #{i : p | orders[i]}.
inline std::uint64_t stable_cohomology_abelian(const std::vector<std::uint64_t>& orders, std::uint64_t p,
                                               std::uint64_t d) {
  require_prime(p);
  unsigned r = 0;
  for (auto o : orders) {
    if (o == 0) throw std::invalid_argument("cyclic factor of order 0");
    if (o % p == 0) ++r;
  }
  return d > r ? 0 : binomial(r, static_cast<unsigned>(d));
}

struct TheoremReport {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::size_t rank = 0;                       // rank of the detecting subgroup
  std::vector<std::uint64_t> formula;         // degrees 0..rank
  std::vector<std::uint64_t> invariant_dims;  // empty when unverified
  std::vector<bool> degree_pass;
  Provenance provenance = Provenance::kUnverified;
  std::uint64_t weyl_order = 0;
  std::uint64_t normalizer_order = 0;
  std::optional<bool> closed_system;
  std::string note;

  bool passed() const {
    return provenance != Provenance::kUnverified && closed_system.value_or(true) &&
           std::all_of(degree_pass.begin(), degree_pass.end(), [](bool b) { return b; });
  }
};

/// Recomputes degrees 0..rank(E) of the table as invariants of the Weyl
/// action on the exterior algebra over E^*, E the detecting subgroup.
inline TheoremReport verify_theorem(std::uint64_t n, std::uint64_t p, std::uint64_t cap = kDefaultEnumerationCap,
                                    bool check_closed_system = true) {
  require_prime(p);
  TheoremReport rep;
  rep.n = n;
  rep.p = p;
  if (p == 2) {
    rep.note = "p = 2 table is a quoted result; no independent path";
    return rep;
  }
  const ElemAbSubgroup E = detecting_subgroup(n, p);
  rep.rank = E.rank;
  for (std::size_t d = 0; d <= E.rank; ++d) rep.formula.push_back(stable_dim(n, p, d));

  const PermGroup G = alternating_group(n, cap);
  std::vector<FpMatrix> dual;
  const auto P = static_cast<Residue>(p);
  if (E.rank == 0) {
    rep.provenance = Provenance::kVerifiedByInvariants;
    rep.weyl_order = 1;
    rep.normalizer_order = G.order();
  } else if (G.enumerable() || n <= 13) {
    const WeylAction W = weyl_action(G, E);
    rep.weyl_order = W.elements.size();
    rep.normalizer_order = W.normalizer_order;
    for (const auto& g : W.generators) dual.push_back(transpose(g));
    rep.provenance = Provenance::kVerifiedByInvariants;
  } else if (p == 3) {
    dual = weyl_alternating_action(static_cast<unsigned>(E.rank));
    rep.weyl_order = matrix_group_closure(dual, P, E.rank, std::max(cap, kDefaultEnumerationCap)).size();
    rep.provenance = Provenance::kLemmaWeylAction;
    rep.note = "normalizer out of reach; used the generated Weyl action";
  } else {
    rep.note = "normalizer out of reach";
    return rep;
  }
  if (E.rank == 0) {
    rep.invariant_dims = {1};
  } else {
    rep.invariant_dims = [&] {
      const auto t = invariants(dual, static_cast<unsigned>(E.rank), P);
      return std::vector<std::uint64_t>(t.dims.begin(), t.dims.end());
    }();
  }
  for (std::size_t d = 0; d <= E.rank; ++d) rep.degree_pass.push_back(rep.formula[d] == rep.invariant_dims[d]);
  if (check_closed_system && E.rank > 0 && G.enumerable())
    rep.closed_system = closed_system_check(E.group(cap), sylow_generators(n, p, cap), G).passed;
  return rep;
}

/// Formula consistency with A_{3k} ~ A_{3k+1} and the vanishing for 3k+2.
inline bool kunneth_consistency(std::uint64_t n, std::uint64_t p) {
  if (p != 3) throw std::invalid_argument("kunneth_consistency is stated for p = 3");
  const std::uint64_t k = n / 3;
  const std::uint64_t top = std::max<std::uint64_t>(k, 1) + 1;
  for (std::uint64_t d = 0; d <= top; ++d) {
    if (k > 0 && stable_dim(3 * k, 3, d) != stable_dim(3 * k + 1, 3, d)) return false;
    if (d > 0 && stable_dim(3 * k + 2, 3, d) != 0) return false;
  }
  return true;
}

}  // namespace altcoh
