#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "altcoh/arith.hpp"
#include "altcoh/group_table.hpp"
#include "altcoh/perm.hpp"
#include "altcoh/perm_group.hpp"

namespace altcoh {

using HTable = std::shared_ptr<const GroupTable>;

/// An element ((h_0, ..., h_{m-1}); sigma) of the complete monomial group
/// Sigma_m(H) = H wr S_m.
///
/// Product law: ((h); s) * ((h'); s') = ((h_i * h'_{s^-1(i)})_i; s s').
/// With this law the projection to S_m is a homomorphism under Perm's
/// composition convention, and to_perm() is a faithful representation.
class MonomialElement {
 public:
  MonomialElement(HTable H, std::vector<std::uint32_t> components, Perm sigma)
      : H_(std::move(H)), h_(std::move(components)), sigma_(std::move(sigma)) {
    if (!H_) throw std::invalid_argument("null group table");
    if (h_.size() != sigma_.degree()) throw std::invalid_argument("component count differs from permutation degree");
    for (auto c : h_)
      if (c >= H_->size()) throw std::invalid_argument("component out of range");
  }

  static MonomialElement identity(HTable H, std::size_t m) {
    std::vector<std::uint32_t> c(m, H->identity());
    return MonomialElement(std::move(H), std::move(c), Perm(m));
  }

  const HTable& table() const { return H_; }
  std::size_t m() const { return h_.size(); }
  const std::vector<std::uint32_t>& components() const { return h_; }
  const Perm& sigma() const { return sigma_; }

  bool is_identity() const {
    return sigma_.is_identity() &&
           std::all_of(h_.begin(), h_.end(), [&](auto c) { return c == H_->identity(); });
  }

  friend bool operator==(const MonomialElement& a, const MonomialElement& b) {
    return *a.H_ == *b.H_ && a.h_ == b.h_ && a.sigma_ == b.sigma_;
  }
  friend bool operator<(const MonomialElement& a, const MonomialElement& b) {
    return std::tie(a.sigma_, a.h_) < std::tie(b.sigma_, b.h_);
  }

 private:
  HTable H_;
  std::vector<std::uint32_t> h_;
  Perm sigma_;
};

inline void require_same_ambient(const MonomialElement& x, const MonomialElement& y) {
  if (x.m() != y.m() || !(*x.table() == *y.table()))
    throw std::invalid_argument("monomial elements live in different groups");
}

inline MonomialElement mono_mul(const MonomialElement& x, const MonomialElement& y) {
  require_same_ambient(x, y);
  const auto& H = *x.table();
  const Perm sinv = inverse(x.sigma());
  std::vector<std::uint32_t> c(x.m());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = H.mul(x.components()[i], y.components()[sinv(static_cast<Point>(i))]);
  return MonomialElement(x.table(), std::move(c), x.sigma() * y.sigma());
}

inline MonomialElement mono_inv(const MonomialElement& x) {
  const auto& H = *x.table();
  std::vector<std::uint32_t> c(x.m());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = H.inv(x.components()[x.sigma()(static_cast<Point>(j))]);
  return MonomialElement(x.table(), std::move(c), inverse(x.sigma()));
}

inline MonomialElement mono_pow(const MonomialElement& x, std::uint64_t e) {
  MonomialElement r = MonomialElement::identity(x.table(), x.m());
  for (std::uint64_t i = 0; i < e; ++i) r = mono_mul(r, x);
  return r;
}

/// Image in S_{m|H|}: point (i, a) = i*|H| + a goes to (sigma(i), h_{sigma(i)} * a).
inline Perm to_perm(const MonomialElement& x) {
  const auto& H = *x.table();
  const std::size_t d = H.size();
  std::vector<Point> img(x.m() * d);
  for (std::size_t i = 0; i < x.m(); ++i) {
    const Point j = x.sigma()(static_cast<Point>(i));
    for (std::uint32_t a = 0; a < d; ++a) img[i * d + a] = static_cast<Point>(j * d + H.mul(x.components()[j], a));
  }
  return Perm(std::move(img));
}

/// Inverse of to_perm for permutations that lie in the image.
inline MonomialElement from_perm(const HTable& H, std::size_t m, const Perm& g) {
  const std::size_t d = H->size();
  if (g.degree() != m * d) throw std::invalid_argument("permutation degree is not m*|H|");
  std::vector<Point> sig(m);
  std::vector<std::uint32_t> c(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Point y = g(static_cast<Point>(i * d + H->identity()));
    sig[i] = static_cast<Point>(y / d);
    c[y / d] = y % d;
  }
  MonomialElement x(H, std::move(c), Perm(std::move(sig)));
  if (to_perm(x) != g) throw std::invalid_argument("permutation is not in the monomial image");
  return x;
}

/// Every element of Sigma_m(H), ordered by (sigma, components).
inline std::vector<MonomialElement> monomial_group_elements(const HTable& H, std::size_t m) {
  std::vector<MonomialElement> out;
  std::vector<Point> img(m);
  std::iota(img.begin(), img.end(), Point{0});
  const std::uint64_t per = ipow(H->size(), static_cast<unsigned>(m));
  do {
    Perm s(img);
    for (std::uint64_t code = 0; code < per; ++code) {
      std::vector<std::uint32_t> c(m);
      std::uint64_t v = code;
      for (std::size_t i = m; i-- > 0;) {
        c[i] = static_cast<std::uint32_t>(v % H->size());
        v /= H->size();
      }
      out.emplace_back(H, std::move(c), s);
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Cycle decomposition

struct MonomialCycle {
  std::vector<Point> support;              // s_0 < ..., s_{k+1} = sigma(s_k)
  std::vector<std::uint32_t> components;   // components[k] sits at support[k]
  std::size_t length = 0;
  std::uint32_t det_class_rep = 0;

  /// The cycle as an element of Sigma_m(H) (identity off the support).
  MonomialElement as_element(const HTable& H, std::size_t m) const {
    std::vector<std::uint32_t> c(m, H->identity());
    std::vector<Point> img(m);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t k = 0; k < length; ++k) {
      c[support[k]] = components[k];
      img[support[k]] = support[(k + 1) % length];
    }
    return MonomialElement(H, std::move(c), Perm(std::move(img)));
  }
};

/// Canonical class representative of the product collected by the cycle:
/// the component of c^length at its first support point.
inline std::uint32_t determinant_class(const MonomialCycle& c, const HTable& H, std::size_t m) {
  const MonomialElement e = c.as_element(H, m);
  return H->class_rep(mono_pow(e, c.length).components()[c.support.front()]);
}

/// Unique decomposition into commuting monomial cycles with disjoint
/// supports, ordered by least support point. Fixed points carrying the
/// identity component are omitted unless include_trivial is set.
inline std::vector<MonomialCycle> disjoint_monomial_cycles(const MonomialElement& x, bool include_trivial = false) {
  const auto& H = x.table();
  std::vector<MonomialCycle> out;
  std::vector<bool> seen(x.m(), false);
  for (std::size_t s = 0; s < x.m(); ++s) {
    if (seen[s]) continue;
    MonomialCycle c;
    for (Point p = static_cast<Point>(s); !seen[p]; p = x.sigma()(p)) {
      seen[p] = true;
      c.support.push_back(p);
      c.components.push_back(x.components()[p]);
    }
    c.length = c.support.size();
    if (c.length == 1 && c.components[0] == H->identity() && !include_trivial) continue;
    c.det_class_rep = determinant_class(c, H, x.m());
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<std::pair<std::size_t, std::uint32_t>> cycle_type(const MonomialElement& x) {
  std::vector<std::pair<std::size_t, std::uint32_t>> t;
  for (const auto& c : disjoint_monomial_cycles(x)) t.emplace_back(c.length, c.det_class_rep);
  std::sort(t.begin(), t.end());
  return t;
}

/// Conjugacy in Sigma_m(H): equal multisets of (length, determinant class).
inline bool monomial_conjugate_test(const MonomialElement& x, const MonomialElement& y) {
  require_same_ambient(x, y);
  return cycle_type(x) == cycle_type(y);
}

// ---------------------------------------------------------------------------
// Centralizer shapes

struct ShapeBlock {
  std::size_t multiplicity = 0;   // k_i
  std::size_t cycle_length = 0;   // n_i
  std::uint32_t det_class_rep = 0;
  std::uint64_t z_h_order = 0;    // |Z_H(h_i)|

  friend bool operator==(const ShapeBlock&, const ShapeBlock&) = default;
};

struct CentralizerShape {
  std::vector<ShapeBlock> blocks;
  friend bool operator==(const CentralizerShape&, const CentralizerShape&) = default;
};

/// Groups all cycles (fixed points included) by (length, determinant class).
inline CentralizerShape centralizer_shape(const MonomialElement& x) {
  std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> counts;
  for (const auto& c : disjoint_monomial_cycles(x, true)) ++counts[{c.length, c.det_class_rep}];
  CentralizerShape s;
  for (const auto& [key, k] : counts)
    s.blocks.push_back({k, key.first, key.second, x.table()->centralizer_order(key.second)});
  return s;
}

/// prod_i (n_i * |Z_H(h_i)|)^{k_i} * k_i!
inline std::uint64_t centralizer_order(const CentralizerShape& s) {
  std::uint64_t r = 1;
  for (const auto& b : s.blocks) {
    const std::uint64_t f = ipow(b.cycle_length * b.z_h_order, static_cast<unsigned>(b.multiplicity)) *
                            factorial(static_cast<unsigned>(b.multiplicity));
    if (f != 0 && r > UINT64_MAX / f) throw ResourceLimit("centralizer order overflows 64 bits");
    r *= f;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Permutation embeddings

/// Sigma_m(H) inside S_{m d} for H acting faithfully on d points: H acts on
/// block 0 and S_m permutes the m blocks.
inline PermGroup embed_in_perm(const PermGroup& H, std::size_t m, std::uint64_t cap = kDefaultEnumerationCap) {
  const std::size_t d = H.degree();
  const std::size_t n = m * d;
  auto lift_block = [&](const Perm& h) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t a = 0; a < d; ++a) img[a] = h(static_cast<Point>(a));
    return Perm(std::move(img));
  };
  auto lift_sigma = [&](const Perm& s) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t a = 0; a < d; ++a) img[i * d + a] = static_cast<Point>(s(static_cast<Point>(i)) * d + a);
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (const auto& h : H.generators()) gens.push_back(lift_block(h));
  const PermGroup Sm = symmetric_group(m);
  for (const auto& s : Sm.generators()) gens.push_back(lift_sigma(s));
  return PermGroup(n, std::move(gens), cap);
}

inline PermGroup regular_perm_group(const GroupTable& H) {
  std::vector<Perm> gens;
  for (auto g : H.generating_set()) gens.push_back(H.regular_perm(g));
  return PermGroup(H.size(), std::move(gens));
}

/// Sigma_m(H) in the coordinates used by to_perm().
inline PermGroup monomial_perm_group(const GroupTable& H, std::size_t m, std::uint64_t cap = kDefaultEnumerationCap) {
  return embed_in_perm(regular_perm_group(H), m, cap);
}

/// H wr A_m in the coordinates used by to_perm().
inline PermGroup wreath_alternating(const GroupTable& H, std::size_t m, std::uint64_t cap = kDefaultEnumerationCap) {
  const HTable T = std::make_shared<const GroupTable>(H);
  std::vector<Perm> gens;
  for (auto g : H.generating_set()) {
    std::vector<std::uint32_t> c(m, H.identity());
    c[0] = g;
    gens.push_back(to_perm(MonomialElement(T, std::move(c), Perm(m))));
  }
  for (const auto& s : alternating_generators(m))
    gens.push_back(to_perm(MonomialElement(T, std::vector<std::uint32_t>(m, H.identity()), s)));
  return PermGroup(m * H.size(), std::move(gens), cap);
}

// ---------------------------------------------------------------------------
// Z' subgroup

namespace detail {

// Solves for the components of an element that swaps the supports of two
// cycles of the same length and determinant class (s_k <-> t_k) and
// commutes with their product.
inline MonomialElement swap_cycles(const MonomialCycle& a, const MonomialCycle& b, const HTable& H, std::size_t m) {
  const std::size_t L = a.length;
  if (b.length != L || a.det_class_rep != b.det_class_rep)
    throw std::invalid_argument("cycles are not of the same type");
  const GroupTable& T = *H;
  // components along `to` while mapping `from` onto it; g_{to_k} = h(to_k) g_{to_{k-1}} h(from_k)^-1
  auto solve = [&](const MonomialCycle& from, const MonomialCycle& to) -> std::vector<std::uint32_t> {
    for (std::uint32_t c0 = 0; c0 < T.size(); ++c0) {
      std::vector<std::uint32_t> g(L);
      g[0] = c0;
      for (std::size_t k = 1; k < L; ++k)
        g[k] = T.mul(T.mul(to.components[k], g[k - 1]), T.inv(from.components[k]));
      const std::uint32_t closing = T.mul(T.mul(to.components[0], g[L - 1]), T.inv(from.components[0]));
      if (closing == g[0]) return g;
    }
    throw std::logic_error("no swapping element exists for cycles of equal type");
  };
  const auto g_to_b = solve(a, b);
  const auto g_to_a = solve(b, a);
  std::vector<std::uint32_t> comps(m, T.identity());
  std::vector<Point> img(m);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t k = 0; k < L; ++k) {
    img[a.support[k]] = b.support[k];
    img[b.support[k]] = a.support[k];
    comps[b.support[k]] = g_to_b[k];
    comps[a.support[k]] = g_to_a[k];
  }
  return MonomialElement(H, std::move(comps), Perm(std::move(img)));
}

}  // namespace detail

struct ZPrime {
  PermGroup group;                           // in to_perm() coordinates
  std::vector<MonomialElement> generators;
  std::uint64_t predicted_order = 1;         // prod |A_h|^{k_h} * |A_{k_h}|
};

/// Z' = prod_h A_h wr A_{k_h} inside the centralizer of x in A wr A_m, where
/// A is an abelian p-group (p odd) and x has p-power order.
inline ZPrime zprime(const MonomialElement& x, std::uint64_t cap = kDefaultEnumerationCap) {
  const HTable& H = x.table();
  const GroupTable& A = *H;
  if (!A.is_abelian()) throw std::invalid_argument("zprime: A must be abelian");
  std::uint64_t p = 2;
  while (A.size() % p != 0) ++p;
  if (A.size() < 2 || p == 2 || !is_power_of(A.size(), p))
    throw std::invalid_argument("zprime: A must be an abelian p-group for an odd prime p");
  if (sign(x.sigma()) != 1) throw std::invalid_argument("zprime: x is not in A wr A_m");
  if (!is_power_of(to_perm(x).order(), p)) throw std::invalid_argument("zprime: x is not of p-power order");

  const std::size_t m = x.m();
  const auto cycles = disjoint_monomial_cycles(x, true);
  std::map<std::pair<std::size_t, std::uint32_t>, std::vector<std::size_t>> types;
  for (std::size_t i = 0; i < cycles.size(); ++i) types[{cycles[i].length, cycles[i].det_class_rep}].push_back(i);

  ZPrime out{PermGroup(m * A.size(), {}, cap), {}, 1};
  const auto agens = A.generating_set();
  for (const auto& c : cycles) {
    MonomialElement y = c.as_element(H, m);
    if (!y.is_identity()) out.generators.push_back(y);
    for (auto a : agens) {
      std::vector<std::uint32_t> comps(m, A.identity());
      for (auto s : c.support) comps[s] = a;
      out.generators.emplace_back(H, std::move(comps), Perm(m));
    }
  }
  for (const auto& [key, idx] : types) {
    const std::size_t k = idx.size();
    out.predicted_order *= ipow(key.first * A.size(), static_cast<unsigned>(k)) * (k >= 2 ? factorial(static_cast<unsigned>(k)) / 2 : 1);
    for (std::size_t i = 0; i + 2 < k; ++i) {
      const auto s01 = detail::swap_cycles(cycles[idx[i]], cycles[idx[i + 1]], H, m);
      const auto s12 = detail::swap_cycles(cycles[idx[i + 1]], cycles[idx[i + 2]], H, m);
      out.generators.push_back(mono_mul(s01, s12));
    }
  }
  std::vector<Perm> pg;
  for (const auto& g : out.generators) {
    if (!(mono_mul(g, x) == mono_mul(x, g))) throw std::logic_error("zprime generator does not centralize x");
    pg.push_back(to_perm(g));
  }
  out.group = PermGroup(m * A.size(), std::move(pg), cap);
  return out;
}

}  // namespace altcoh
