#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "altcoh/arith.hpp"
#include "altcoh/error.hpp"

namespace altcoh {

using Residue = std::uint32_t;

inline Residue mod_reduce(long long v, Residue p) {
  const long long r = v % static_cast<long long>(p);
  return static_cast<Residue>(r < 0 ? r + p : r);
}

inline Residue mod_mul(Residue a, Residue b, Residue p) {
  return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p);
}

inline Residue mod_pow(Residue a, std::uint64_t e, Residue p) {
  Residue r = 1 % p;
  while (e > 0) {
    if (e & 1u) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1u;
  }
  return r;
}

inline Residue mod_inv(Residue a, Residue p) {
  if (a % p == 0) throw std::domain_error("zero has no inverse mod p");
  return mod_pow(a, p - 2, p);
}

/// Dense matrix over the prime field F_p with entries in {0, ..., p-1}.
///
/// Matrices act on row vectors from the right: v -> v * M.
class FpMatrix {
 public:
  FpMatrix() = default;

  FpMatrix(Residue p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  }

  FpMatrix(Residue p, std::size_t rows, std::size_t cols, const std::vector<long long>& entries)
      : FpMatrix(p, rows, cols) {
    if (entries.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
    for (std::size_t i = 0; i < entries.size(); ++i) a_[i] = mod_reduce(entries[i], p);
  }

  /// Square matrix from nested rows.
  static FpMatrix from_rows(Residue p, const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    std::vector<long long> flat;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("ragged rows");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return FpMatrix(p, r, c, flat);
  }

  static FpMatrix identity(Residue p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
    return m;
  }

  static FpMatrix diagonal(Residue p, const std::vector<long long>& d) {
    FpMatrix m(p, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = mod_reduce(d[i], p);
    return m;
  }

  Residue modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const std::vector<Residue>& entries() const { return a_; }

  Residue operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  std::vector<Residue> row(std::size_t r) const {
    return {a_.begin() + static_cast<long>(r * cols_), a_.begin() + static_cast<long>((r + 1) * cols_)};
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Residue x) { return x == 0; });
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
  friend auto operator<=>(const FpMatrix&, const FpMatrix&) = default;

 private:
  Residue p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> a_;
};

inline void require_same_field(const FpMatrix& a, const FpMatrix& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("matrices over different fields");
}

inline FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not chain");
  const Residue p = a.modulus();
  FpMatrix c(p, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Residue aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + mod_mul(aik, b(k, j), p)) % p;
    }
  return c;
}

inline FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  FpMatrix c(a.modulus(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = (a(i, j) + a.modulus() - b(i, j)) % a.modulus();
  return c;
}

inline FpMatrix transpose(const FpMatrix& a) {
  FpMatrix t(a.modulus(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

/// Row vector times matrix.
inline std::vector<Residue> apply_row(const std::vector<Residue>& v, const FpMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector length does not match matrix");
  std::vector<Residue> out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = (out[j] + mod_mul(v[i], m(i, j), m.modulus())) % m.modulus();
  }
  return out;
}

/// Reduced row echelon form; the rank is the number of nonzero rows.
inline FpMatrix rref(FpMatrix m, std::size_t* rank_out = nullptr) {
  const Residue p = m.modulus();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const Residue inv = mod_inv(m(r, c), p);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = mod_mul(m(r, j), inv, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Residue f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = (m(i, j) + p - mod_mul(f, m(r, j), p)) % p;
    }
    ++r;
  }
  if (rank_out) *rank_out = r;
  return m;
}

inline std::size_t rank(const FpMatrix& m) {
  std::size_t r = 0;
  rref(m, &r);
  return r;
}

/// Gaussian elimination with pivot inverses only.
inline Residue det(FpMatrix m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const Residue p = m.modulus();
  const std::size_t n = m.rows();
  Residue d = 1 % p;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = (p - d) % p;
    }
    d = mod_mul(d, m(c, c), p);
    const Residue inv = mod_inv(m(c, c), p);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Residue f = mod_mul(m(i, c), inv, p);
      for (std::size_t j = c; j < n; ++j) m(i, j) = (m(i, j) + p - mod_mul(f, m(c, j), p)) % p;
    }
  }
  return d;
}

inline bool invertible(const FpMatrix& m) { return m.square() && det(m) != 0; }

inline FpMatrix inverse(const FpMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  FpMatrix aug(m.modulus(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1 % m.modulus();
  }
  std::size_t r = 0;
  aug = rref(aug, &r);
  for (std::size_t i = 0; i < n; ++i)
    if (aug(i, i) != 1) throw std::domain_error("matrix is singular");
  FpMatrix inv(m.modulus(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// A subspace of F_p^d given by a basis in reduced row echelon form.
struct FpSubspace {
  Residue p = 2;
  std::size_t ambient_dim = 0;
  std::vector<std::vector<Residue>> basis;

  std::size_t dim() const { return basis.size(); }

  /// Canonical subspace spanned by arbitrary rows.
  static FpSubspace span(Residue p, std::size_t ambient, const std::vector<std::vector<Residue>>& rows) {
    FpSubspace s{p, ambient, {}};
    if (rows.empty()) return s;
    FpMatrix m(p, rows.size(), ambient);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != ambient) throw std::invalid_argument("row length does not match ambient dimension");
      for (std::size_t j = 0; j < ambient; ++j) m(i, j) = rows[i][j] % p;
    }
    std::size_t r = 0;
    m = rref(m, &r);
    for (std::size_t i = 0; i < r; ++i) s.basis.push_back(m.row(i));
    return s;
  }

  bool contains(const std::vector<Residue>& v) const {
    auto rows = basis;
    rows.push_back(v);
    return span(p, ambient_dim, rows).dim() == dim();
  }

  friend bool operator==(const FpSubspace&, const FpSubspace&) = default;
};

/// Right null space {x : M x = 0}.
inline FpSubspace kernel(const FpMatrix& m) {
  const Residue p = m.modulus();
  std::size_t r = 0;
  const FpMatrix e = rref(m, &r);
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t c = 0;
    while (e(i, c) == 0) ++c;
    pivots.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<std::vector<Residue>> rows;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Residue> v(m.cols(), 0);
    v[f] = 1 % p;
    for (std::size_t i = 0; i < r; ++i) v[pivots[i]] = (p - e(i, f)) % p;
    rows.push_back(std::move(v));
  }
  return FpSubspace::span(p, m.cols(), rows);
}

/// Row vectors v with v * g = v for every g in mats.
inline FpSubspace fixed_subspace(const std::vector<FpMatrix>& mats, std::size_t d, Residue p) {
  std::vector<long long> stacked;
  std::size_t stacked_rows = 0;
  const FpMatrix id = FpMatrix::identity(p, d);
  for (const auto& g : mats) {
    if (g.modulus() != p) throw std::invalid_argument("matrix over a different field");
    if (g.rows() != d || g.cols() != d) throw std::invalid_argument("fixed_subspace: matrix is not d x d");
    if (!invertible(g)) throw std::invalid_argument("fixed_subspace: singular matrix");
    // v (g - I) = 0  <=>  (g - I)^T v^T = 0
    const FpMatrix t = transpose(g - id);
    for (Residue x : t.entries()) stacked.push_back(x);
    stacked_rows += d;
  }
  if (stacked_rows == 0) return kernel(FpMatrix(p, 1, d));
  return kernel(FpMatrix(p, stacked_rows, d, stacked));
}

inline std::set<FpMatrix> enumerate_gl_impl(std::size_t m, Residue p, std::uint64_t cap, bool plus_only) {
  const std::uint64_t total = ipow(p, static_cast<unsigned>(m * m));
  if (total > cap)
    throw ResourceLimit("enumerating " + std::to_string(total) + " matrices exceeds cap " + std::to_string(cap));
  std::set<FpMatrix> out;
  std::vector<long long> e(m * m, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = m * m; i-- > 0;) {
      e[i] = static_cast<long long>(c % p);
      c /= p;
    }
    FpMatrix M(p, m, m, e);
    const Residue d = det(M);
    if (d == 0) continue;
    if (plus_only && mod_pow(d, (p - 1) / 2, p) != 1) continue;
    out.insert(std::move(M));
  }
  return out;
}

/// GL_m(F_p) by exhaustive enumeration of all p^(m^2) matrices.
inline std::set<FpMatrix> gl(std::size_t m, Residue p, std::uint64_t cap = kDefaultEnumerationCap) {
  require_prime(p);
  return enumerate_gl_impl(m, p, cap, false);
}

/// Kernel of det^((p-1)/2) : GL_m(F_p) -> {+-1}.
inline std::set<FpMatrix> gl_plus(std::size_t m, Residue p, std::uint64_t cap = kDefaultEnumerationCap) {
  require_odd_prime(p);
  return enumerate_gl_impl(m, p, cap, true);
}

/// Group generated by invertible matrices, by closure.
inline std::set<FpMatrix> matrix_group_closure(const std::vector<FpMatrix>& gens, Residue p, std::size_t d,
                                               std::uint64_t cap = kDefaultEnumerationCap) {
  std::set<FpMatrix> seen{FpMatrix::identity(p, d)};
  std::vector<FpMatrix> queue(seen.begin(), seen.end());
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& g : gens) {
      FpMatrix h = queue[q] * g;
      if (seen.insert(h).second) {
        if (seen.size() > cap) throw ResourceLimit("matrix group closure exceeds cap");
        queue.push_back(std::move(h));
      }
    }
  return seen;
}

inline std::string to_string(const FpMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace altcoh
