#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "altcoh/arith.hpp"
#include "altcoh/perm.hpp"

namespace altcoh {

/// A finite abstract group given by its multiplication table.
///
/// Elements are indices 0..size-1; mul(a, b) is the product a*b. Conjugacy
/// class representatives are the least index in each class.
class GroupTable {
 public:
  GroupTable(std::size_t size, std::vector<std::uint32_t> mul, std::uint32_t identity)
      : size_(size), mul_(std::move(mul)), identity_(identity) {
    validate();
    derive();
  }

  static GroupTable cyclic(std::size_t k) {
    if (k == 0) throw std::invalid_argument("cyclic group of order 0");
    std::vector<std::uint32_t> t(k * k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) t[a * k + b] = static_cast<std::uint32_t>((a + b) % k);
    return GroupTable(k, std::move(t), 0);
  }

  /// (Z/p)^r; element index is sum c_i p^i for exponent vector (c_0, ..., c_{r-1}).
  static GroupTable elementary_abelian(std::size_t p, unsigned r) {
    require_prime(p);
    const std::size_t n = ipow(p, r);
    std::vector<std::uint32_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t x = a, y = b, out = 0, place = 1;
        for (unsigned i = 0; i < r; ++i) {
          out += ((x % p + y % p) % p) * place;
          x /= p;
          y /= p;
          place *= p;
        }
        t[a * n + b] = static_cast<std::uint32_t>(out);
      }
    return GroupTable(n, std::move(t), 0);
  }

  /// Symmetric group on k points; elements are permutations in lexicographic order.
  static GroupTable symmetric(std::size_t k) {
    std::vector<Point> img(k);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<Perm> els;
    do els.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    return from_perms(els);
  }

  /// Table of a group given by its full (closed) list of permutations.
  static GroupTable from_perms(const std::vector<Perm>& els) {
    std::vector<Perm> sorted = els;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    auto index = [&](const Perm& g) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), g);
      if (it == sorted.end() || *it != g) throw std::invalid_argument("permutation list is not closed");
      return static_cast<std::uint32_t>(it - sorted.begin());
    };
    std::vector<std::uint32_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t[a * n + b] = index(sorted[a] * sorted[b]);
    return GroupTable(n, std::move(t), index(Perm(sorted.front().degree())));
  }

  std::size_t size() const { return size_; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * size_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t class_rep(std::uint32_t a) const { return class_rep_[a]; }
  std::uint64_t centralizer_order(std::uint32_t a) const { return centralizer_order_[a]; }
  const std::vector<std::uint32_t>& table() const { return mul_; }

  std::uint64_t element_order(std::uint32_t a) const {
    std::uint64_t k = 1;
    for (std::uint32_t x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (std::uint32_t a = 0; a < size_; ++a)
      for (std::uint32_t b = a + 1; b < size_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Left-regular representation: element a acts on points by x -> a*x.
  Perm regular_perm(std::uint32_t a) const {
    std::vector<Point> img(size_);
    for (std::uint32_t x = 0; x < size_; ++x) img[x] = static_cast<Point>(mul(a, x));
    return Perm(std::move(img));
  }

  /// Greedy generating set: elements in index order not yet generated.
  std::vector<std::uint32_t> generating_set() const {
    std::vector<bool> in(size_, false);
    in[identity_] = true;
    std::vector<std::uint32_t> gens;
    for (std::uint32_t a = 0; a < size_; ++a) {
      if (in[a]) continue;
      gens.push_back(a);
      std::vector<std::uint32_t> span;
      for (std::uint32_t x = 0; x < size_; ++x)
        if (in[x]) span.push_back(x);
      for (std::size_t q = 0; q < span.size(); ++q)
        for (std::uint32_t g : gens) {
          const std::uint32_t y = mul(span[q], g);
          if (!in[y]) {
            in[y] = true;
            span.push_back(y);
          }
        }
    }
    return gens;
  }

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.size_ == b.size_ && a.identity_ == b.identity_ && a.mul_ == b.mul_;
  }

 private:
  void validate() const {
    if (size_ == 0) throw std::invalid_argument("group table of size 0");
    if (mul_.size() != size_ * size_) throw std::invalid_argument("multiplication table has wrong size");
    if (identity_ >= size_) throw std::invalid_argument("identity index out of range");
    for (auto v : mul_)
      if (v >= size_) throw std::invalid_argument("table entry out of range");
    for (std::uint32_t a = 0; a < size_; ++a)
      if (mul(identity_, a) != a || mul(a, identity_) != a) throw std::invalid_argument("identity is not neutral");
    for (std::uint32_t a = 0; a < size_; ++a) {
      std::vector<bool> row(size_, false);
      for (std::uint32_t b = 0; b < size_; ++b) {
        if (row[mul(a, b)]) throw std::invalid_argument("table row is not a permutation (no inverses)");
        row[mul(a, b)] = true;
      }
    }
    for (std::uint32_t a = 0; a < size_; ++a)
      for (std::uint32_t b = 0; b < size_; ++b)
        for (std::uint32_t c = 0; c < size_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw std::invalid_argument("table is not associative");
  }

  void derive() {
    inv_.assign(size_, 0);
    for (std::uint32_t a = 0; a < size_; ++a)
      for (std::uint32_t b = 0; b < size_; ++b)
        if (mul(a, b) == identity_) inv_[a] = b;
    class_rep_.assign(size_, 0);
    centralizer_order_.assign(size_, 0);
    for (std::uint32_t a = 0; a < size_; ++a) {
      std::uint32_t best = a;
      std::uint64_t z = 0;
      for (std::uint32_t g = 0; g < size_; ++g) {
        best = std::min(best, mul(mul(g, a), inv_[g]));
        if (mul(g, a) == mul(a, g)) ++z;
      }
      class_rep_[a] = best;
      centralizer_order_[a] = z;
    }
  }

  std::size_t size_;
  std::vector<std::uint32_t> mul_;
  std::uint32_t identity_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> class_rep_;
  std::vector<std::uint64_t> centralizer_order_;
};

/// Parses "cyclic:k", "sym:k", or "elemab:p^r".
inline GroupTable group_from_shorthand(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("group shorthand needs a kind, e.g. cyclic:3");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  auto parse = [&](const std::string& s) -> std::size_t {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number in group shorthand: " + spec);
    }
    if (pos != s.size() || v == 0) throw std::invalid_argument("bad number in group shorthand: " + spec);
    return v;
  };
  if (kind == "cyclic") return GroupTable::cyclic(parse(arg));
  if (kind == "sym") {
    const std::size_t k = parse(arg);
    if (k > 5) throw std::invalid_argument("sym:k supported for k <= 5");
    return GroupTable::symmetric(k);
  }
  if (kind == "elemab") {
    const auto caret = arg.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("elemab shorthand is elemab:p^r");
    return GroupTable::elementary_abelian(parse(arg.substr(0, caret)),
                                          static_cast<unsigned>(parse(arg.substr(caret + 1))));
  }
  throw std::invalid_argument("unknown group kind '" + kind + "'");
}

}  // namespace altcoh
