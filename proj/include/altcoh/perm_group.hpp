#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "altcoh/arith.hpp"
#include "altcoh/error.hpp"
#include "altcoh/perm.hpp"

namespace altcoh {

/// Stabilizer chain over the full base 0, 1, ..., n-1.
///
/// Level i stores strong generators of the pointwise stabilizer of
/// {0, ..., i-1} together with the orbit of i and a transversal u_b with
/// u_b(i) = b. Levels whose orbit is {i} are trivial. Built by the
/// deterministic Schreier-Sims procedure.
class StabilizerChain {
 public:
  struct Level {
    std::vector<Perm> gens;
    std::vector<Point> orbit;         // BFS order, orbit[0] == base point
    std::vector<int> slot;            // point -> index into orbit/reps, -1 if absent
    std::vector<Perm> reps;           // reps[j](base) == orbit[j]
  };

  StabilizerChain() = default;

  StabilizerChain(std::size_t degree, const std::vector<Perm>& gens) : degree_(degree), levels_(degree) {
    for (const auto& g : gens) {
      if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
      if (g.is_identity()) continue;
      const std::size_t moved = first_moved(g);
      for (std::size_t l = 0; l <= moved; ++l) levels_[l].gens.push_back(g);
    }
    for (std::size_t l = 0; l < degree_; ++l) rebuild(l);
    schreier_sims();
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }

  std::uint64_t order() const {
    std::uint64_t r = 1;
    for (const auto& L : levels_) {
      const std::uint64_t s = L.orbit.size();
      if (r > UINT64_MAX / s) throw ResourceLimit("group order overflows 64 bits");
      r *= s;
    }
    return r;
  }

  /// Strips g through levels from..n-1. Returns the residue and the level
  /// at which stripping stopped (degree() when it ran through).
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from = 0) const {
    for (std::size_t l = from; l < degree_; ++l) {
      const int j = levels_[l].slot[g(static_cast<Point>(l))];
      if (j < 0) return {std::move(g), l};
      if (j > 0) g = inverse(levels_[l].reps[j]) * g;
    }
    return {std::move(g), degree_};
  }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    return sift(g).first.is_identity();
  }

 private:
  static std::size_t first_moved(const Perm& g) {
    for (std::size_t i = 0; i < g.degree(); ++i)
      if (g(static_cast<Point>(i)) != i) return i;
    return g.degree();
  }

  void rebuild(std::size_t l) {
    Level& L = levels_[l];
    L.orbit.assign(1, static_cast<Point>(l));
    L.slot.assign(degree_, -1);
    L.slot[l] = 0;
    L.reps.assign(1, Perm(degree_));
    for (std::size_t q = 0; q < L.orbit.size(); ++q) {
      for (const auto& s : L.gens) {
        const Point img = s(L.orbit[q]);
        if (L.slot[img] >= 0) continue;
        L.slot[img] = static_cast<int>(L.orbit.size());
        L.orbit.push_back(img);
        L.reps.push_back(s * L.reps[q]);
      }
    }
  }

  void schreier_sims() {
    long i = static_cast<long>(degree_) - 1;
    while (i >= 0) {
      const auto li = static_cast<std::size_t>(i);
      std::optional<std::pair<Perm, std::size_t>> found;
      const Level& L = levels_[li];
      for (std::size_t q = 0; q < L.orbit.size() && !found; ++q) {
        for (const auto& s : L.gens) {
          const Point img = s(L.orbit[q]);
          Perm h = inverse(L.reps[L.slot[img]]) * s * L.reps[q];
          auto [r, stop] = sift(std::move(h), li + 1);
          if (!r.is_identity()) {
            found.emplace(std::move(r), stop);
            break;
          }
        }
      }
      if (!found) {
        --i;
        continue;
      }
      const auto [r, stop] = *found;
      for (std::size_t l = li + 1; l <= stop; ++l) {
        levels_[l].gens.push_back(r);
        rebuild(l);
      }
      i = static_cast<long>(stop);
    }
  }

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

/// Calls visit(g) for every element of the group described by chain, in
/// lexicographic order of image lists. prune(partial, known) may reject a
/// partial product whose images of points 0..known-1 are already final;
/// visit returns false to stop the traversal early.
template <class Prune, class Visit>
void chain_search(const StabilizerChain& chain, Prune&& prune, Visit&& visit) {
  const auto& levels = chain.levels();
  const std::size_t n = chain.degree();
  bool stop = false;
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t l, const Perm& P) {
    while (l < n && levels[l].orbit.size() == 1) ++l;
    if (l == n) {
      if (!visit(P)) stop = true;
      return;
    }
    const auto& L = levels[l];
    std::vector<std::pair<Point, std::size_t>> order;
    order.reserve(L.orbit.size());
    for (std::size_t j = 0; j < L.orbit.size(); ++j) order.emplace_back(P(L.orbit[j]), j);
    std::sort(order.begin(), order.end());
    for (const auto& [img, j] : order) {
      if (stop) return;
      Perm Q = P * L.reps[j];
      if (!prune(static_cast<const Perm&>(Q), l + 1)) continue;
      rec(l + 1, Q);
    }
  };
  rec(0, Perm(n));
}

/// A finitely generated permutation group of fixed degree.
///
/// Values are immutable; the element list is materialized on first request
/// (thread-safe) and only when the order does not exceed the enumeration cap.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}

  PermGroup(std::size_t degree, std::vector<Perm> generators,
            std::uint64_t enumeration_cap = kDefaultEnumerationCap)
      : degree_(degree), cap_(enumeration_cap), gens_(std::move(generators)) {
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw std::invalid_argument("generator degree does not match group degree");
    chain_ = std::make_shared<const StabilizerChain>(degree_, gens_);
    cache_ = std::make_shared<Cache>();
  }

  /// Group whose elements are exactly `elements` (assumed closed, sorted).
  /// Generators are chosen greedily: an element is kept only if it is not
  /// already generated by the earlier ones.
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements,
                                 std::uint64_t enumeration_cap = kDefaultEnumerationCap) {
    std::vector<Perm> gens;
    StabilizerChain chain(degree, gens);
    for (const auto& e : elements) {
      if (chain.contains(e)) continue;
      gens.push_back(e);
      chain = StabilizerChain(degree, gens);
    }
    PermGroup G(degree, std::move(gens), enumeration_cap);
    if (G.order() != elements.size()) throw std::logic_error("element list is not a group");
    if (elements.size() <= enumeration_cap) {
      std::call_once(G.cache_->once, [&] { G.cache_->elements = std::move(elements); });
    }
    return G;
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::uint64_t enumeration_cap() const { return cap_; }
  const StabilizerChain& chain() const { return *chain_; }
  std::uint64_t order() const { return chain_->order(); }
  bool enumerable() const { return order() <= cap_; }
  bool contains(const Perm& g) const { return chain_->contains(g); }

  PermGroup with_cap(std::uint64_t cap) const { return PermGroup(degree_, gens_, cap); }

  /// All elements in lexicographic order. Throws ResourceLimit above the cap.
  const std::vector<Perm>& elements() const {
    if (!enumerable())
      throw ResourceLimit("group of order " + std::to_string(order()) + " exceeds enumeration cap " +
                          std::to_string(cap_));
    std::call_once(cache_->once, [&] {
      std::vector<Perm> out;
      out.reserve(order());
      for_each_element([&](const Perm& g) {
        out.push_back(g);
        return true;
      });
      cache_->elements = std::move(out);
    });
    return cache_->elements;
  }

  /// Streams elements in lexicographic order without materializing them.
  template <class Visit>
  void for_each_element(Visit&& visit) const {
    chain_search(*chain_, [](const Perm&, std::size_t) { return true; }, visit);
  }

  bool is_subgroup_of(const PermGroup& G) const {
    if (G.degree() != degree_) return false;
    return std::all_of(gens_.begin(), gens_.end(), [&](const Perm& g) { return G.contains(g); });
  }

  bool is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = i + 1; j < gens_.size(); ++j)
        if (!commute(gens_[i], gens_[j])) return false;
    return true;
  }

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree() == b.degree() && a.order() == b.order() && a.is_subgroup_of(b);
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Perm> elements;
  };

  std::size_t degree_;
  std::uint64_t cap_;
  std::vector<Perm> gens_;
  std::shared_ptr<const StabilizerChain> chain_;
  std::shared_ptr<Cache> cache_;
};

// ---------------------------------------------------------------------------
// Standard groups

inline PermGroup symmetric_group(std::size_t n, std::uint64_t cap = kDefaultEnumerationCap) {
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(Perm::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<Point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup(n, std::move(gens), cap);
}

/// Generators (0 1 i) for i = 2..n-1.
inline std::vector<Perm> alternating_generators(std::size_t n) {
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i)
    gens.push_back(Perm::from_cycles(n, {{0, 1, static_cast<Point>(i)}}));
  return gens;
}

inline PermGroup alternating_group(std::size_t n, std::uint64_t cap = kDefaultEnumerationCap) {
  return PermGroup(n, alternating_generators(n), cap);
}

/// Orbits of the group generated by gens, each sorted, ordered by least point.
inline std::vector<std::vector<Point>> orbits(std::size_t degree, const std::vector<Perm>& gens) {
  std::vector<int> id(degree, -1);
  std::vector<std::vector<Point>> out;
  for (std::size_t s = 0; s < degree; ++s) {
    if (id[s] >= 0) continue;
    std::vector<Point> orb{static_cast<Point>(s)};
    id[s] = static_cast<int>(out.size());
    for (std::size_t q = 0; q < orb.size(); ++q)
      for (const auto& g : gens) {
        const Point y = g(orb[q]);
        if (id[y] < 0) {
          id[y] = static_cast<int>(out.size());
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

/// Element list of <gens> by breadth-first closure under right
/// multiplication by generators; independent of the stabilizer chain.
inline std::vector<Perm> closure_elements(std::size_t degree, const std::vector<Perm>& gens,
                                          std::uint64_t cap = kDefaultEnumerationCap) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue{Perm(degree)};
  seen.insert(queue.front());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& g : gens) {
      Perm h = queue[q] * g;
      if (seen.insert(h).second) {
        if (seen.size() > cap) throw ResourceLimit("closure enumeration exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(h));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

inline std::uint64_t order_by_closure(const PermGroup& G) {
  return closure_elements(G.degree(), G.generators(), G.enumeration_cap()).size();
}

inline std::uint64_t order(const PermGroup& G) { return G.order(); }

// ---------------------------------------------------------------------------
// Searches: exhaustive scan below the cap, pruned backtracking above it.

enum class SearchMode { kAuto, kExhaustive, kBacktrack };

namespace detail {

inline bool use_backtrack(const PermGroup& G, SearchMode mode) {
  switch (mode) {
    case SearchMode::kExhaustive:
      if (!G.enumerable())
        throw ResourceLimit("exhaustive scan of a group of order " + std::to_string(G.order()) +
                            " exceeds cap " + std::to_string(G.enumeration_cap()));
      return false;
    case SearchMode::kBacktrack:
      return true;
    case SearchMode::kAuto:
    default:
      return !G.enumerable();
  }
}

template <class Prune, class Accept, class Visit>
void filtered_search(const PermGroup& G, SearchMode mode, Prune&& prune, Accept&& accept, Visit&& visit) {
  auto on_leaf = [&](const Perm& g) { return accept(g) ? visit(g) : true; };
  if (use_backtrack(G, mode))
    chain_search(G.chain(), prune, on_leaf);
  else
    chain_search(G.chain(), [](const Perm&, std::size_t) { return true; }, on_leaf);
}

// Partial-map test for g h g^-1 in K: some k in K must satisfy
// k(g(a)) = g(h(a)) for every a < known with h(a) < known.
inline bool partial_conjugates_into(const Perm& g, std::size_t known, const Perm& h, const std::vector<Perm>& K) {
  std::vector<std::pair<Point, Point>> constraints;
  for (std::size_t a = 0; a < known; ++a) {
    const Point ha = h(static_cast<Point>(a));
    if (ha < known) constraints.emplace_back(g(static_cast<Point>(a)), g(ha));
  }
  if (constraints.empty()) return true;
  return std::any_of(K.begin(), K.end(), [&](const Perm& k) {
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const auto& c) { return k(c.first) == c.second; });
  });
}

template <class Accept>
PermGroup collect_subgroup(const PermGroup& G, SearchMode mode,
                           const std::function<bool(const Perm&, std::size_t)>& prune, Accept&& accept) {
  std::vector<Perm> found;
  filtered_search(G, mode, prune, accept, [&](const Perm& g) {
    found.push_back(g);
    if (found.size() > G.enumeration_cap())
      throw ResourceLimit("subgroup search result exceeds enumeration cap");
    return true;
  });
  return PermGroup::from_elements(G.degree(), std::move(found), G.enumeration_cap());
}

}  // namespace detail

/// {x in G : x g = g x}.
inline PermGroup centralizer(const PermGroup& G, const Perm& g, SearchMode mode = SearchMode::kAuto) {
  if (!G.contains(g)) throw std::invalid_argument("centralizer: element is not in the group");
  if (g.is_identity()) return G;
  auto prune = [&](const Perm& x, std::size_t known) {
    for (std::size_t a = 0; a < known; ++a) {
      const Point ga = g(static_cast<Point>(a));
      if (ga < known && x(ga) != g(x(static_cast<Point>(a)))) return false;
    }
    return true;
  };
  return detail::collect_subgroup(G, mode, prune, [&](const Perm& x) { return x * g == g * x; });
}

/// Some x in G with x H x^-1 = K, if one exists. K must be enumerable.
inline std::optional<Perm> subgroup_conjugator(const PermGroup& G, const PermGroup& H, const PermGroup& K,
                                               SearchMode mode = SearchMode::kAuto) {
  if (H.order() != K.order() || H.degree() != G.degree() || K.degree() != G.degree()) return std::nullopt;
  const auto& Kel = K.elements();
  const std::unordered_set<Perm, PermHash> kset(Kel.begin(), Kel.end());
  auto prune = [&](const Perm& x, std::size_t known) {
    for (const auto& h : H.generators())
      if (!detail::partial_conjugates_into(x, known, h, Kel)) return false;
    return true;
  };
  auto accept = [&](const Perm& x) {
    return std::all_of(H.generators().begin(), H.generators().end(),
                       [&](const Perm& h) { return kset.count(conjugate(x, h)) > 0; });
  };
  std::optional<Perm> out;
  detail::filtered_search(G, mode, prune, accept, [&](const Perm& x) {
    out = x;
    return false;
  });
  return out;
}

/// {x in G : x H x^-1 = H}. H must be enumerable.
inline PermGroup normalizer(const PermGroup& G, const PermGroup& H, SearchMode mode = SearchMode::kAuto) {
  if (!H.is_subgroup_of(G)) throw std::invalid_argument("normalizer: H is not a subgroup of G");
  if (H.order() == G.order()) return G;
  const auto& Hel = H.elements();
  const std::unordered_set<Perm, PermHash> hset(Hel.begin(), Hel.end());
  auto prune = [&](const Perm& x, std::size_t known) {
    for (const auto& h : H.generators())
      if (!detail::partial_conjugates_into(x, known, h, Hel)) return false;
    return true;
  };
  return detail::collect_subgroup(G, mode, prune, [&](const Perm& x) {
    return std::all_of(H.generators().begin(), H.generators().end(),
                       [&](const Perm& h) { return hset.count(conjugate(x, h)) > 0; });
  });
}

/// Some g in G with g x g^-1 = y, if one exists.
inline std::optional<Perm> element_conjugator(const PermGroup& G, const Perm& x, const Perm& y,
                                              SearchMode mode = SearchMode::kAuto) {
  if (x.order() != y.order()) return std::nullopt;
  auto prune = [&](const Perm& g, std::size_t known) {
    for (std::size_t a = 0; a < known; ++a) {
      const Point xa = x(static_cast<Point>(a));
      if (xa < known && g(xa) != y(g(static_cast<Point>(a)))) return false;
    }
    return true;
  };
  std::optional<Perm> out;
  detail::filtered_search(G, mode, prune, [&](const Perm& g) { return g * x == y * g; },
                          [&](const Perm& g) {
                            out = g;
                            return false;
                          });
  return out;
}

inline bool are_conjugate(const PermGroup& G, const Perm& x, const Perm& y, SearchMode mode = SearchMode::kAuto) {
  if (!G.contains(x) || !G.contains(y)) throw std::invalid_argument("are_conjugate: elements must lie in G");
  if (x == y) return true;
  return element_conjugator(G, x, y, mode).has_value();
}

}  // namespace altcoh
