#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "altcoh/arith.hpp"
#include "altcoh/fp_matrix.hpp"
#include "altcoh/perm.hpp"
#include "altcoh/perm_group.hpp"

namespace altcoh {

struct IndexVector {
  std::uint64_t p = 3;
  unsigned m = 1;
  std::vector<std::uint64_t> i;  // i[j-1] = number of blocks of size p^j

  friend bool operator==(const IndexVector&, const IndexVector&) = default;
  friend auto operator<=>(const IndexVector&, const IndexVector&) = default;
};

/// All (i_1, ..., i_m) with sum i_j p^j = p^m, in lexicographic order.
inline std::vector<IndexVector> index_vectors(unsigned m, std::uint64_t p) {
  require_prime(p);
  if (m == 0) throw std::invalid_argument("index_vectors: m must be positive");
  const std::uint64_t total = ipow(p, m);
  std::vector<IndexVector> out;
  std::vector<std::uint64_t> cur(m, 0);
  std::function<void(unsigned, std::uint64_t)> rec = [&](unsigned j, std::uint64_t remaining) {
    if (j == m) {
      if (remaining == 0) out.push_back({p, m, cur});
      return;
    }
    const std::uint64_t w = ipow(p, j + 1);
    for (std::uint64_t c = 0; c * w <= remaining; ++c) {
      cur[j] = c;
      rec(j + 1, remaining - c * w);
    }
    cur[j] = 0;
  };
  rec(0, total);
  return out;
}

struct BasePDigits {
  std::uint64_t n = 0;
  std::uint64_t p = 3;
  std::vector<unsigned> digits;  // a_0, ..., a_m
};

inline BasePDigits base_p_digits(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  return {n, p, base_digits(n, p)};
}

struct Block {
  std::size_t start = 0;
  std::size_t size = 0;
  unsigned exponent = 0;  // size == p^exponent

  friend bool operator==(const Block&, const Block&) = default;
};

/// An elementary abelian p-subgroup with an ordered basis of generators.
struct ElemAbSubgroup {
  std::size_t ambient_degree = 0;
  std::uint64_t p = 3;
  std::size_t rank = 0;
  std::vector<Perm> generators;
  std::vector<Block> blocks;

  PermGroup group(std::uint64_t cap = kDefaultEnumerationCap) const {
    return PermGroup(ambient_degree, generators, cap);
  }
};

namespace detail {

// Regular action of (Z/p)^j on points start..start+p^j-1. The point with
// coordinates (c_1, ..., c_j) is start + sum c_t p^(j-t); generator t adds 1
// to c_t.
inline void append_regular_block(ElemAbSubgroup& E, std::size_t start, unsigned j) {
  const std::uint64_t p = E.p;
  const std::size_t size = ipow(p, j);
  for (unsigned t = 1; t <= j; ++t) {
    const std::uint64_t place = ipow(p, j - t);
    std::vector<Point> img(E.ambient_degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t x = 0; x < size; ++x) {
      const std::uint64_t c = (x / place) % p;
      const std::uint64_t y = x - c * place + ((c + 1) % p) * place;
      img[start + x] = static_cast<Point>(start + y);
    }
    E.generators.emplace_back(std::move(img));
  }
  E.rank += j;
  E.blocks.push_back({start, size, j});
}

}  // namespace detail

/// T(i_1, ..., i_m) in S_{p^m}: i_j blocks of size p^j, ordered by j then s,
/// each carrying the regular representation of (Z/p)^j.
inline ElemAbSubgroup build_T(const IndexVector& iv) {
  require_prime(iv.p);
  std::uint64_t total = 0;
  for (unsigned j = 1; j <= iv.i.size(); ++j) total += iv.i[j - 1] * ipow(iv.p, j);
  if (iv.i.size() != iv.m || total != ipow(iv.p, iv.m))
    throw std::invalid_argument("index vector does not satisfy sum i_j p^j = p^m");
  ElemAbSubgroup E;
  E.ambient_degree = total;
  E.p = iv.p;
  std::size_t start = 0;
  for (unsigned j = 1; j <= iv.m; ++j)
    for (std::uint64_t s = 0; s < iv.i[j - 1]; ++s) {
      detail::append_regular_block(E, start, j);
      start += ipow(iv.p, j);
    }
  return E;
}

/// T_{k,m}: p^(m-k) blocks of size p^k.
inline ElemAbSubgroup build_T_km(unsigned k, unsigned m, std::uint64_t p) {
  if (k == 0 || k > m) throw std::invalid_argument("T_{k,m} needs 1 <= k <= m");
  IndexVector iv{p, m, std::vector<std::uint64_t>(m, 0)};
  iv.i[k - 1] = ipow(p, m - k);
  return build_T(iv);
}

/// A = prod Z/(orders[i]) acting on itself by translation. Points are
/// mixed-radix codes with the first factor most significant.
inline PermGroup regular_embedding(const std::vector<std::uint64_t>& orders,
                                   std::uint64_t cap = kDefaultEnumerationCap) {
  std::uint64_t n = 1;
  for (auto o : orders) {
    if (o < 1) throw std::invalid_argument("cyclic factor of order 0");
    if (n > cap / o) throw ResourceLimit("regular embedding degree exceeds enumeration cap");
    n *= o;
  }
  if (n > 65535) throw ResourceLimit("regular embedding degree exceeds point range");
  std::vector<Perm> gens;
  std::uint64_t place = n;
  for (auto o : orders) {
    place /= o;
    std::vector<Point> img(n);
    for (std::uint64_t x = 0; x < n; ++x) {
      const std::uint64_t c = (x / place) % o;
      img[x] = static_cast<Point>(x - c * place + ((c + 1) % o) * place);
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens), cap);
}

/// E = prod_j a_j T_{1,j} in A_n: floor(n/p) disjoint consecutive p-cycles,
/// remaining a_0 points fixed.
inline ElemAbSubgroup detecting_subgroup(std::size_t n, std::uint64_t p) {
  require_prime(p);
  ElemAbSubgroup E;
  E.ambient_degree = n;
  E.p = p;
  const auto digits = base_digits(n, p);
  std::size_t start = 0;
  for (unsigned j = 1; j < digits.size(); ++j)
    for (unsigned s = 0; s < digits[j]; ++s)
      for (std::uint64_t b = 0; b < ipow(p, j - 1); ++b) {
        detail::append_regular_block(E, start, 1);
        start += p;
      }
  return E;
}

/// Syl_p(A_n) for odd p: per base-p digit a_j, a_j blocks of size p^j each
/// carrying the iterated wreath product Z/p wr ... wr Z/p.
inline PermGroup sylow_generators(std::size_t n, std::uint64_t p, std::uint64_t cap = kDefaultEnumerationCap) {
  require_odd_prime(p);
  const auto digits = base_digits(n, p);
  std::vector<Perm> gens;
  std::size_t start = 0;
  for (unsigned j = 1; j < digits.size(); ++j)
    for (unsigned s = 0; s < digits[j]; ++s) {
      for (unsigned l = 1; l <= j; ++l) {
        const std::uint64_t span = ipow(p, l), shift = ipow(p, l - 1);
        std::vector<Point> img(n);
        std::iota(img.begin(), img.end(), Point{0});
        for (std::uint64_t x = 0; x < span; ++x) img[start + x] = static_cast<Point>(start + (x + shift) % span);
        gens.emplace_back(std::move(img));
      }
      start += ipow(p, j);
    }
  return PermGroup(n, std::move(gens), cap);
}

// ---------------------------------------------------------------------------
// Reduction of abelian p-subgroups

struct AbelianReduction {
  enum class Route { kOrbitSplit, kProductAction };
  Route route = Route::kOrbitSplit;
  std::vector<std::size_t> t;                  // sizes t_h of the alternating factors
  std::vector<std::vector<Point>> orbits;      // kOrbitSplit: the index sets
  std::vector<std::vector<Point>> layout;      // kProductAction: layout[r][c], r over A', c over Z/p^k
  PermGroup product;                           // prod A_{t_h} inside A_N
  bool certified = false;
};

namespace detail {

inline std::vector<Perm> alternating_on(std::size_t degree, const std::vector<Point>& pts) {
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < pts.size(); ++i) gens.push_back(Perm::from_cycles(degree, {{pts[0], pts[1], pts[i]}}));
  return gens;
}

// Subgroup A' of the abelian group `els` with A' x <z> = A, by backtracking.
inline std::optional<std::vector<Perm>> complement_of_cyclic(const std::vector<Perm>& els, const Perm& z) {
  const std::size_t n = els.front().degree();
  std::set<Perm> zset;
  for (Perm y(n); zset.insert(y).second; y = y * z) {
  }
  const std::size_t target = els.size() / zset.size();
  std::function<std::optional<std::vector<Perm>>(std::set<Perm>, std::size_t)> rec =
      [&](std::set<Perm> sub, std::size_t from) -> std::optional<std::vector<Perm>> {
    if (sub.size() == target) return std::vector<Perm>(sub.begin(), sub.end());
    for (std::size_t i = from; i < els.size(); ++i) {
      if (sub.count(els[i])) continue;
      std::set<Perm> grown = sub;
      std::vector<Perm> queue(sub.begin(), sub.end());
      bool ok = true;
      for (std::size_t q = 0; q < queue.size() && ok; ++q) {
        Perm y = queue[q] * els[i];
        if (grown.insert(y).second) {
          if (!y.is_identity() && zset.count(y)) ok = false;
          queue.push_back(y);
        }
      }
      if (!ok || target % grown.size() != 0) continue;
      if (auto r = rec(std::move(grown), i + 1)) return r;
    }
    return std::nullopt;
  };
  return rec(std::set<Perm>{Perm(n)}, 0);
}

}  // namespace detail

/// Exhibits a non-cyclic abelian p-subgroup A of A_N inside a product of
/// smaller alternating groups: by orbits when A is intransitive, and as
/// A' x <z> acting on a |A'| x p^k grid when A is transitive (hence regular).
inline AbelianReduction reduce_abelian(const PermGroup& A) {
  if (!A.is_abelian()) throw std::invalid_argument("reduce_abelian: group is not abelian");
  const std::uint64_t ord = A.order();
  if (!is_prime_power(ord)) throw std::invalid_argument("reduce_abelian: group is not a p-group");
  const auto& els = A.elements();
  std::uint64_t max_order = 1;
  Perm z(A.degree());
  for (const auto& g : els)
    if (g.order() > max_order) {
      max_order = g.order();
      z = g;
    }
  if (max_order == ord) throw std::invalid_argument("reduce_abelian: group is cyclic");
  for (const auto& g : A.generators())
    if (sign(g) != 1) throw std::invalid_argument("reduce_abelian: group is not in the alternating group");

  const std::size_t N = A.degree();
  AbelianReduction out;
  auto orbs = orbits(N, A.generators());
  std::vector<Perm> pgens;
  if (orbs.size() > 1) {
    out.route = AbelianReduction::Route::kOrbitSplit;
    for (auto& o : orbs) {
      out.t.push_back(o.size());
      auto g = detail::alternating_on(N, o);
      pgens.insert(pgens.end(), g.begin(), g.end());
      out.orbits.push_back(std::move(o));
    }
  } else {
    out.route = AbelianReduction::Route::kProductAction;
    const auto comp = detail::complement_of_cyclic(els, z);
    if (!comp) throw std::logic_error("reduce_abelian: no complement to a maximal cyclic subgroup");
    const std::size_t rows = comp->size(), cols = max_order;
    out.layout.assign(rows, std::vector<Point>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      Perm zc(N);
      for (std::size_t c = 0; c < cols; ++c, zc = zc * z) out.layout[r][c] = ((*comp)[r] * zc)(0);
    }
    out.t = {rows, cols};
    auto grid_perm = [&](const Perm& sr, const Perm& sc) {
      std::vector<Point> img(N);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
          img[out.layout[r][c]] = out.layout[sr(static_cast<Point>(r))][sc(static_cast<Point>(c))];
      return Perm(std::move(img));
    };
    for (const auto& s : alternating_generators(rows)) pgens.push_back(grid_perm(s, Perm(cols)));
    for (const auto& s : alternating_generators(cols)) pgens.push_back(grid_perm(Perm(rows), s));
  }
  out.product = PermGroup(N, std::move(pgens), A.enumeration_cap());
  out.certified = std::all_of(A.generators().begin(), A.generators().end(),
                              [&](const Perm& g) { return out.product.contains(g); }) &&
                  std::all_of(out.t.begin(), out.t.end(), [&](std::size_t t) { return t < N; });
  return out;
}

// ---------------------------------------------------------------------------
// Subgroup enumeration and the closed-system check

using SubgroupKey = std::vector<Perm>;  // sorted element list

inline SubgroupKey subgroup_key(const PermGroup& H) { return H.elements(); }

inline SubgroupKey conjugate_key(const Perm& g, const std::vector<Perm>& els) {
  const Perm gi = inverse(g);
  SubgroupKey k;
  k.reserve(els.size());
  for (const auto& h : els) k.push_back(g * h * gi);
  std::sort(k.begin(), k.end());
  return k;
}

/// All elementary abelian p-subgroups of S (including the trivial one), as
/// sorted element lists ordered by (order, elements).
inline std::vector<SubgroupKey> elementary_abelian_subgroups(const PermGroup& S, std::uint64_t p,
                                                             std::size_t max_rank = SIZE_MAX) {
  std::vector<Perm> order_p;
  for (const auto& g : S.elements())
    if (g.order() == p) order_p.push_back(g);
  std::set<SubgroupKey> all{{Perm(S.degree())}};
  std::vector<SubgroupKey> layer{{Perm(S.degree())}};
  for (std::size_t r = 0; r < max_rank && !layer.empty(); ++r) {
    std::set<SubgroupKey> next;
    for (const auto& H : layer) {
      const std::set<Perm> hset(H.begin(), H.end());
      for (const auto& x : order_p) {
        if (hset.count(x)) continue;
        if (!std::all_of(H.begin(), H.end(), [&](const Perm& h) { return commute(h, x); })) continue;
        SubgroupKey grown;
        Perm xp(S.degree());
        for (std::uint64_t e = 0; e < p; ++e, xp = xp * x)
          for (const auto& h : H) grown.push_back(h * xp);
        std::sort(grown.begin(), grown.end());
        next.insert(std::move(grown));
      }
    }
    layer.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  std::vector<SubgroupKey> out(all.begin(), all.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

struct ClosedSystemReport {
  bool passed = false;
  bool exhaustive = false;
  std::uint64_t conjugators_scanned = 0;
  std::size_t g_conjugates_in_s = 0;  // distinct E^g contained in S
  std::size_t s_conjugates = 0;       // distinct E^s
};

/// Checks that every G-conjugate of E lying in S is already S-conjugate to E.
inline ClosedSystemReport closed_system_check(const PermGroup& E, const PermGroup& S, const PermGroup& G) {
  if (!E.is_subgroup_of(S) || !S.is_subgroup_of(G))
    throw std::invalid_argument("closed_system_check needs E <= S <= G");
  ClosedSystemReport rep;
  const auto& Eel = E.elements();
  std::set<SubgroupKey> s_conj;
  for (const auto& s : S.elements()) s_conj.insert(conjugate_key(s, Eel));
  rep.s_conjugates = s_conj.size();

  std::set<SubgroupKey> g_conj_in_s;
  if (G.enumerable()) {
    rep.exhaustive = true;
    G.for_each_element([&](const Perm& g) {
      ++rep.conjugators_scanned;
      const bool inside = std::all_of(E.generators().begin(), E.generators().end(),
                                      [&](const Perm& e) { return S.contains(conjugate(g, e)); });
      if (inside) g_conj_in_s.insert(conjugate_key(g, Eel));
      return true;
    });
  } else {
    const std::uint64_t p = [&] {
      std::uint64_t q = 2;
      while (E.order() % q != 0) ++q;
      return q;
    }();
    for (const auto& F : elementary_abelian_subgroups(S, p)) {
      if (F.size() != Eel.size()) continue;
      const PermGroup Fg = PermGroup::from_elements(G.degree(), F, G.enumeration_cap());
      if (subgroup_conjugator(G, E, Fg, SearchMode::kBacktrack)) g_conj_in_s.insert(F);
    }
  }
  rep.g_conjugates_in_s = g_conj_in_s.size();
  rep.passed = std::includes(s_conj.begin(), s_conj.end(), g_conj_in_s.begin(), g_conj_in_s.end());
  return rep;
}

/// Representatives of the G-classes of maximal elementary abelian
/// p-subgroups, found inside a Sylow p-subgroup S of G.
inline std::vector<PermGroup> maximal_elementary_abelian_classes(const PermGroup& S, const PermGroup& G,
                                                                 std::uint64_t p) {
  const auto subs = elementary_abelian_subgroups(S, p);
  auto contained = [](const SubgroupKey& a, const SubgroupKey& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<bool> maximal(subs.size(), true);
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size() && maximal[i]; ++j)
      if (contained(subs[i], subs[j])) maximal[i] = false;

  std::vector<PermGroup> groups;
  for (const auto& k : subs) groups.push_back(PermGroup::from_elements(G.degree(), k, G.enumeration_cap()));
  std::vector<int> cls(subs.size(), -1);
  int ncls = 0;
  for (std::size_t i = 1; i < subs.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = ncls;
    for (std::size_t j = i + 1; j < subs.size(); ++j)
      if (cls[j] < 0 && subs[j].size() == subs[i].size() &&
          subgroup_conjugator(G, groups[i], groups[j], SearchMode::kBacktrack))
        cls[j] = ncls;
    ++ncls;
  }
  std::vector<PermGroup> reps;
  for (int c = 0; c < ncls; ++c) {
    bool all_max = true;
    std::optional<std::size_t> first;
    for (std::size_t i = 1; i < subs.size(); ++i)
      if (cls[i] == c) {
        if (!first) first = i;
        all_max = all_max && maximal[i];
      }
    if (all_max) reps.push_back(groups[*first]);
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Weyl action

struct WeylAction {
  std::uint64_t p = 3;
  std::size_t rank = 0;
  std::vector<FpMatrix> generators;  // images of normalizer generators
  std::set<FpMatrix> elements;       // N_G(E) / C_G(E) as matrices
  std::uint64_t normalizer_order = 0;
  std::uint64_t centralizer_order = 0;
};

/// Exponent vector of every element of E with respect to its ordered basis.
inline std::unordered_map<Perm, std::vector<Residue>, PermHash> coordinate_map(const ElemAbSubgroup& E) {
  std::unordered_map<Perm, std::vector<Residue>, PermHash> coords;
  const std::uint64_t total = ipow(E.p, static_cast<unsigned>(E.rank));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Residue> v(E.rank);
    Perm g(E.ambient_degree);
    std::uint64_t c = code;
    for (std::size_t i = E.rank; i-- > 0;) {
      v[i] = static_cast<Residue>(c % E.p);
      c /= E.p;
      g = g * power(E.generators[i], v[i]);
    }
    if (!coords.emplace(std::move(g), std::move(v)).second)
      throw std::invalid_argument("generators are not a basis of an elementary abelian group");
  }
  for (const auto& g : E.generators)
    for (const auto& h : E.generators)
      if (!commute(g, h) || power(g, static_cast<long long>(E.p)) != Perm(E.ambient_degree))
        throw std::invalid_argument("generators do not span an elementary abelian p-group");
  return coords;
}

/// Row i of the matrix of x is the coordinate vector of x e_i x^-1.
inline FpMatrix conjugation_matrix(const Perm& x, const ElemAbSubgroup& E,
                                   const std::unordered_map<Perm, std::vector<Residue>, PermHash>& coords) {
  FpMatrix M(static_cast<Residue>(E.p), E.rank, E.rank);
  for (std::size_t i = 0; i < E.rank; ++i) {
    const auto it = coords.find(conjugate(x, E.generators[i]));
    if (it == coords.end()) throw std::invalid_argument("element does not normalize E");
    for (std::size_t j = 0; j < E.rank; ++j) M(i, j) = it->second[j];
  }
  return M;
}

/// Image of N_G(E) in GL(E) with respect to E's ordered basis.
inline WeylAction weyl_action(const PermGroup& G, const ElemAbSubgroup& E, SearchMode mode = SearchMode::kAuto) {
  const auto coords = coordinate_map(E);
  const PermGroup Eg = E.group(G.enumeration_cap());
  const PermGroup N = normalizer(G, Eg, mode);
  WeylAction W;
  W.p = E.p;
  W.rank = E.rank;
  W.normalizer_order = N.order();
  for (const auto& x : N.generators()) W.generators.push_back(conjugation_matrix(x, E, coords));
  W.elements = matrix_group_closure(W.generators, static_cast<Residue>(E.p), E.rank, G.enumeration_cap());
  if (W.normalizer_order % W.elements.size() != 0) throw std::logic_error("Weyl image order does not divide |N|");
  W.centralizer_order = W.normalizer_order / W.elements.size();
  return W;
}

}  // namespace altcoh
