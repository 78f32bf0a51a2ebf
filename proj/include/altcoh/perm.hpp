#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace altcoh {

using Point = std::uint16_t;

/// A permutation of {0, ..., n-1}, stored as its image list.
///
/// Composition follows (p * q)(x) = p(q(x)). Ordering is lexicographic on
/// the image list, which is the iteration order used for every enumeration.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x])
        throw std::invalid_argument("image list is not a bijection");
      seen[x] = true;
    }
  }

  /// Builds a permutation from disjoint cycles given as 0-based point lists.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> used(degree, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= degree || used[c[i]]) throw std::invalid_argument("cycles are not disjoint");
        used[c[i]] = true;
        img[c[i]] = c[(i + 1) % c.size()];
      }
    }
    return Perm(std::move(img));
  }

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s] || images_[s] == s) continue;
      std::vector<Point> c;
      for (Point x = static_cast<Point>(s); !seen[x]; x = images_[x]) {
        seen[x] = true;
        c.push_back(x);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  /// Element order: lcm of the cycle lengths.
  std::uint64_t order() const {
    std::uint64_t r = 1;
    for (const auto& c : cycles()) r = std::lcm(r, static_cast<std::uint64_t>(c.size()));
    return r;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<Point> images_;
};

inline void require_same_degree(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
}

/// p * q, i.e. x -> p(q(x)).
inline Perm compose(const Perm& p, const Perm& q) {
  require_same_degree(p, q);
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = p(q(static_cast<Point>(i)));
  return Perm(std::move(img));
}

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

inline Perm inverse(const Perm& p) {
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[p(static_cast<Point>(i))] = static_cast<Point>(i);
  return Perm(std::move(img));
}

inline Perm power(const Perm& p, long long e) {
  Perm base = e < 0 ? inverse(p) : p;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Perm r(p.degree());
  while (k > 0) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1u;
  }
  return r;
}

/// g x g^-1.
inline Perm conjugate(const Perm& g, const Perm& x) { return g * x * inverse(g); }

inline int sign(const Perm& p) {
  int s = 1;
  for (const auto& c : p.cycles())
    if (c.size() % 2 == 0) s = -s;
  return s;
}

inline bool commute(const Perm& a, const Perm& b) { return a * b == b * a; }

/// Cycle notation with 0-based points, e.g. "(0 1 2)(3 4)"; "()" for the identity.
inline std::string to_string(const Perm& p) {
  std::ostringstream os;
  const auto cs = p.cycles();
  if (cs.empty()) return "()";
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace altcoh
