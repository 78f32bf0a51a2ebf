#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "altcoh/arith.hpp"
#include "altcoh/fp_matrix.hpp"

namespace altcoh {

/// Subsets of {0, ..., k-1} encoded as bit masks (bit i = generator e_{i+1}).
using Monomial = std::uint32_t;

inline unsigned monomial_degree(Monomial s) { return static_cast<unsigned>(std::popcount(s)); }

/// Degree-d basis of Lambda(e_1, ..., e_k), subsets in lexicographic order
/// of their sorted index lists.
inline std::vector<Monomial> exterior_basis(unsigned k, unsigned d) {
  if (k > 31) throw std::invalid_argument("exterior algebra on more than 31 generators");
  std::vector<Monomial> out;
  std::vector<unsigned> idx(d);
  std::function<void(unsigned, unsigned, Monomial)> rec = [&](unsigned pos, unsigned next, Monomial m) {
    if (pos == d) {
      out.push_back(m);
      return;
    }
    for (unsigned i = next; i + (d - pos) <= k; ++i) rec(pos + 1, i + 1, m | (Monomial{1} << i));
  };
  if (d <= k) rec(0, 0, 0);
  return out;
}

/// An element of the exterior algebra over F_p; zero coefficients are never stored.
class ExtElement {
 public:
  ExtElement(Residue p, unsigned k) : p_(p), k_(k) {
    if (k > 31) throw std::invalid_argument("exterior algebra on more than 31 generators");
  }

  static ExtElement one(Residue p, unsigned k) { return monomial(p, k, 0, 1); }

  /// e_i for 1 <= i <= k.
  static ExtElement generator(Residue p, unsigned k, unsigned i) {
    if (i < 1 || i > k) throw std::invalid_argument("generator index out of range");
    return monomial(p, k, Monomial{1} << (i - 1), 1);
  }

  static ExtElement monomial(Residue p, unsigned k, Monomial s, long long c) {
    ExtElement e(p, k);
    e.add(s, mod_reduce(c, p));
    return e;
  }

  Residue modulus() const { return p_; }
  unsigned rank() const { return k_; }
  const std::map<Monomial, Residue>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  Residue coeff(Monomial s) const {
    const auto it = c_.find(s);
    return it == c_.end() ? 0 : it->second;
  }

  void add(Monomial s, Residue c) {
    if (s >> k_) throw std::invalid_argument("monomial uses a generator beyond k");
    c %= p_;
    if (c == 0) return;
    Residue& slot = c_[s];
    slot = (slot + c) % p_;
    if (slot == 0) c_.erase(s);
  }

  friend bool operator==(const ExtElement&, const ExtElement&) = default;

 private:
  Residue p_;
  unsigned k_;
  std::map<Monomial, Residue> c_;
};

/// Sign of e_a * e_b relative to e_{a|b}: (-1)^(pairs i in a, j in b with i > j).
inline int wedge_sign(Monomial a, Monomial b) {
  int inv = 0;
  for (Monomial x = a; x; x &= x - 1) {
    const unsigned i = static_cast<unsigned>(std::countr_zero(x));
    inv += std::popcount(b & ((Monomial{1} << i) - 1));
  }
  return inv % 2 ? -1 : 1;
}

inline void require_same_algebra(const ExtElement& a, const ExtElement& b) {
  if (a.modulus() != b.modulus() || a.rank() != b.rank())
    throw std::invalid_argument("exterior elements live in different algebras");
}

inline ExtElement operator+(const ExtElement& a, const ExtElement& b) {
  require_same_algebra(a, b);
  ExtElement r = a;
  for (const auto& [s, c] : b.coeffs()) r.add(s, c);
  return r;
}

inline ExtElement scale(const ExtElement& a, long long c) {
  ExtElement r(a.modulus(), a.rank());
  const Residue cc = mod_reduce(c, a.modulus());
  for (const auto& [s, x] : a.coeffs()) r.add(s, mod_mul(x, cc, a.modulus()));
  return r;
}

inline ExtElement wedge(const ExtElement& a, const ExtElement& b) {
  require_same_algebra(a, b);
  const Residue p = a.modulus();
  ExtElement r(p, a.rank());
  for (const auto& [sa, ca] : a.coeffs())
    for (const auto& [sb, cb] : b.coeffs()) {
      if (sa & sb) continue;
      const Residue c = mod_mul(ca, cb, p);
      r.add(sa | sb, wedge_sign(sa, sb) > 0 ? c : (p - c) % p);
    }
  return r;
}

/// Algebra automorphism extending e_i -> sum_j g(i,j) e_j.
inline ExtElement act(const FpMatrix& g, const ExtElement& a) {
  const unsigned k = a.rank();
  const Residue p = a.modulus();
  if (g.rows() != k || g.cols() != k || g.modulus() != p) throw std::invalid_argument("matrix does not match algebra");
  if (!invertible(g)) throw std::invalid_argument("act: singular matrix");
  std::vector<ExtElement> images;
  for (unsigned i = 0; i < k; ++i) {
    ExtElement e(p, k);
    for (unsigned j = 0; j < k; ++j) e.add(Monomial{1} << j, g(i, j));
    images.push_back(std::move(e));
  }
  ExtElement r(p, k);
  for (const auto& [s, c] : a.coeffs()) {
    ExtElement term = ExtElement::monomial(p, k, 0, c);
    for (Monomial x = s; x; x &= x - 1) term = wedge(term, images[static_cast<unsigned>(std::countr_zero(x))]);
    r = r + term;
  }
  return r;
}

/// Matrix of g on the degree-d piece in the basis exterior_basis(k, d):
/// entry (S, T) is the minor of g on rows S and columns T.
inline FpMatrix compound_matrix(const FpMatrix& g, unsigned d) {
  if (!g.square()) throw std::invalid_argument("compound_matrix: matrix is not square");
  const unsigned k = static_cast<unsigned>(g.rows());
  const Residue p = g.modulus();
  const auto basis = exterior_basis(k, d);
  auto indices = [](Monomial s) {
    std::vector<std::size_t> v;
    for (Monomial x = s; x; x &= x - 1) v.push_back(static_cast<std::size_t>(std::countr_zero(x)));
    return v;
  };
  FpMatrix C(p, basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const auto rows = indices(basis[a]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto cols = indices(basis[b]);
      if (d == 0) {
        C(a, b) = 1 % p;
        continue;
      }
      FpMatrix minor(p, d, d);
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) minor(i, j) = g(rows[i], cols[j]);
      C(a, b) = det(minor);
    }
  }
  return C;
}

struct GradedInvariantTable {
  Residue p = 3;
  unsigned k = 0;
  std::vector<std::size_t> dims;                         // dims[d], d = 0..k
  std::vector<std::vector<std::vector<Residue>>> bases;  // RREF basis per degree, subset coordinates
};

/// Per-degree fixed subspaces of Lambda(F_p^k) under the matrices in gens.
inline GradedInvariantTable invariants(const std::vector<FpMatrix>& gens, unsigned k, Residue p) {
  require_prime(p);
  for (const auto& g : gens)
    if (g.rows() != k || g.cols() != k || g.modulus() != p) throw std::invalid_argument("generator has wrong shape");
  GradedInvariantTable t{p, k, {}, {}};
  for (unsigned d = 0; d <= k; ++d) {
    std::vector<FpMatrix> comp;
    for (const auto& g : gens) comp.push_back(compound_matrix(g, d));
    const FpSubspace fixed = fixed_subspace(comp, binomial(k, d), p);
    t.dims.push_back(fixed.dim());
    t.bases.push_back(fixed.basis);
  }
  return t;
}

/// W_{A_{3k}}(E) over F_3: adjacent signed transpositions e_i -> e_{i+1},
/// e_{i+1} -> -e_i, and sign changes on e_i, e_{i+1}.
inline std::vector<FpMatrix> weyl_alternating_action(unsigned k) {
  if (k == 0) throw std::invalid_argument("weyl_alternating_action: k must be positive");
  std::vector<FpMatrix> gens;
  for (unsigned i = 0; i + 1 < k; ++i) {
    FpMatrix t = FpMatrix::identity(3, k);
    t(i, i) = 0;
    t(i + 1, i + 1) = 0;
    t(i, i + 1) = 1;
    t(i + 1, i) = 2;
    gens.push_back(t);
    std::vector<long long> diag(k, 1);
    diag[i] = diag[i + 1] = -1;
    gens.push_back(FpMatrix::diagonal(3, diag));
  }
  if (gens.empty()) gens.push_back(FpMatrix::identity(3, k));
  return gens;
}

}  // namespace altcoh
