#pragma once

// Independent brute-force oracles. These deliberately avoid the stabilizer
// chain, backtracking and row reduction used by the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "altcoh/fp_matrix.hpp"
#include "altcoh/perm.hpp"

namespace oracle {

using altcoh::FpMatrix;
using altcoh::Perm;
using altcoh::Point;
using altcoh::Residue;

// Closure of gens under multiplication, as a sorted list.
inline std::vector<Perm> closure(std::size_t degree, const std::vector<Perm>& gens) {
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> queue{Perm(degree)};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& g : gens) {
      Perm h = g * queue[q];
      if (seen.insert(h).second) queue.push_back(h);
    }
  return {seen.begin(), seen.end()};
}

// Class index of each element, classes numbered in order of first appearance.
inline std::vector<int> conjugacy_class_ids(const std::vector<Perm>& els) {
  std::map<Perm, int> id;
  int next = 0;
  std::vector<int> out;
  for (const auto& x : els) {
    auto it = id.find(x);
    if (it == id.end()) {
      for (const auto& g : els) id.emplace(g * x * altcoh::inverse(g), next);
      it = id.find(x);
      ++next;
    }
    out.push_back(it->second);
  }
  return out;
}

inline std::size_t centralizer_size(const std::vector<Perm>& els, const Perm& x) {
  return static_cast<std::size_t>(
      std::count_if(els.begin(), els.end(), [&](const Perm& g) { return g * x == x * g; }));
}

// Determinant by the Leibniz expansion.
inline Residue leibniz_det(const FpMatrix& m) {
  const std::size_t n = m.rows();
  const Residue p = m.modulus();
  std::vector<std::size_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  long long total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (s[i] > s[j]) ++inv;
    long long term = 1;
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, s[i]) % p;
    total = (total + (inv % 2 ? p - term : term)) % p;
  } while (std::next_permutation(s.begin(), s.end()));
  return static_cast<Residue>(total % p);
}

// Dimension of {v : v M = v for all M} by counting fixed vectors.
inline std::size_t fixed_dim_by_count(const std::vector<FpMatrix>& mats, std::size_t d, Residue p) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= p;
  std::uint64_t fixed = 0;
  std::vector<Residue> v(d);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = static_cast<Residue>(c % p);
      c /= p;
    }
    bool ok = true;
    for (const auto& m : mats) {
      if (altcoh::apply_row(v, m) != v) {
        ok = false;
        break;
      }
    }
    if (ok) ++fixed;
  }
  std::size_t dim = 0;
  while (fixed > 1) {
    fixed /= p;
    ++dim;
  }
  return dim;
}

// All solutions of sum_j i_j p^j = p^m with 0 <= i_j <= p^m, by nested counting.
inline std::set<std::vector<std::uint64_t>> index_vectors_brute(unsigned m, std::uint64_t p) {
  std::uint64_t pm = 1;
  for (unsigned i = 0; i < m; ++i) pm *= p;
  std::set<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> v(m, 0);
  while (true) {
    std::uint64_t s = 0, w = p;
    for (unsigned j = 0; j < m; ++j, w *= p) s += v[j] * w;
    if (s == pm) out.insert(v);
    unsigned j = 0;
    while (j < m && v[j] == pm) v[j++] = 0;
    if (j == m) break;
    ++v[j];
  }
  return out;
}

}  // namespace oracle
