#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "dialg/diagram.hpp"
#include "dialg/error.hpp"
#include "dialg/hom.hpp"

namespace dialg {

// An injection [m] -> [n]; map[i-1] is the image of i.
class FIMorphism {
 public:
  FIMorphism() = default;
  FIMorphism(int n, std::vector<int> map) : n_(n), map_(std::move(map)) {
    if (n < 0) throw InvalidInput("FI: negative target");
    if (static_cast<int>(map_.size()) > n_) throw InvalidInput("FI: no injection [m] -> [n] with m > n");
    std::vector<char> hit(static_cast<std::size_t>(n_) + 1, 0);
    for (int v : map_) {
      if (v < 1 || v > n_) throw InvalidInput("FI: image " + std::to_string(v) + " out of range");
      if (hit[static_cast<std::size_t>(v)]) throw InvalidInput("FI: map is not injective");
      hit[static_cast<std::size_t>(v)] = 1;
    }
  }

  static FIMorphism identity(int n) { return inclusion(n, n); }
  static FIMorphism inclusion(int m, int n) {
    std::vector<int> map(static_cast<std::size_t>(m));
    std::iota(map.begin(), map.end(), 1);
    return FIMorphism(n, std::move(map));
  }
  // Swaps a and b in [n].
  static FIMorphism transposition(int n, int a, int b) {
    auto t = identity(n);
    std::swap(t.map_[static_cast<std::size_t>(a - 1)], t.map_[static_cast<std::size_t>(b - 1)]);
    return t;
  }

  int source() const { return static_cast<int>(map_.size()); }
  int target() const { return n_; }
  const std::vector<int>& map() const { return map_; }
  int operator()(int i) const { return map_[static_cast<std::size_t>(i - 1)]; }

  auto operator<=>(const FIMorphism&) const = default;
  bool operator==(const FIMorphism&) const = default;

 private:
  int n_ = 0;
  std::vector<int> map_;
};

// All injections [m] -> [n] in lexicographic order of their image sequences.
inline std::vector<FIMorphism> enumerate_fi(int m, int n) {
  std::vector<FIMorphism> out;
  if (m < 0 || n < 0 || m > n) return out;
  std::vector<int> map;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(map.size()) == m) {
      out.emplace_back(n, map);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      map.push_back(v);
      self(self);
      map.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec);
  return out;
}

// g o f.
inline FIMorphism compose_fi(const FIMorphism& g, const FIMorphism& f) {
  if (f.target() != g.source()) {
    throw SizeMismatch("compose_fi: [" + std::to_string(f.source()) + "] -> [" +
                       std::to_string(f.target()) + "] then [" + std::to_string(g.source()) +
                       "] -> [" + std::to_string(g.target()) + "]");
  }
  std::vector<int> map;
  for (int v : f.map()) map.push_back(g(v));
  return FIMorphism(g.target(), std::move(map));
}

inline FIMorphism inverse_permutation(const FIMorphism& s) {
  if (s.source() != s.target()) throw PreconditionViolation("inverse of a non-permutation");
  std::vector<int> inv(s.map().size());
  for (int i = 1; i <= s.source(); ++i) inv[static_cast<std::size_t>(s(i) - 1)] = i;
  return FIMorphism(s.target(), std::move(inv));
}

// F(a): connections {-a(i), i}; the remaining left nodes go to the blob.
inline BlobDiagram functor_F(const FIMorphism& a, Family f) {
  if (f == Family::Partition) throw FamilyMismatch("functor_F is defined for brauer-type families");
  std::vector<std::array<int, 2>> pairs;
  std::vector<char> hit(static_cast<std::size_t>(a.target()) + 1, 0);
  for (int i = 1; i <= a.source(); ++i) {
    pairs.push_back({-a(i), i});
    hit[static_cast<std::size_t>(a(i))] = 1;
  }
  std::vector<int> blob;
  for (int k = 1; k <= a.target(); ++k) {
    if (!hit[static_cast<std::size_t>(k)]) blob.push_back(-k);
  }
  return BlobDiagram::from_pairs(f, a.source(), a.target(), pairs, blob);
}

// G(a): blocks {-a(i), i}; the remaining left nodes are marked singletons.
inline BlobDiagram functor_G(const FIMorphism& a) {
  std::vector<Block> blocks;
  std::vector<std::size_t> marked;
  std::vector<char> hit(static_cast<std::size_t>(a.target()) + 1, 0);
  for (int i = 1; i <= a.source(); ++i) {
    blocks.push_back({-a(i), i});
    hit[static_cast<std::size_t>(a(i))] = 1;
  }
  for (int k = 1; k <= a.target(); ++k) {
    if (!hit[static_cast<std::size_t>(k)]) {
      marked.push_back(blocks.size());
      blocks.push_back({-k});
    }
  }
  return BlobDiagram::from_blocks(Family::Partition, a.source(), a.target(), std::move(blocks),
                                  marked);
}

// G for Partition, F otherwise.
inline BlobDiagram functor_image(const FIMorphism& a, Family f) {
  return f == Family::Partition ? functor_G(a) : functor_F(a, f);
}

// An element of M_A(m)_n: formal combination of Hom(m, n) basis elements.
// Same representation as a hom element; FI acts by postcomposition.
using FreeModuleElement = HomElement;

inline FreeModuleElement fi_act(const FIMorphism& phi, const FreeModuleElement& v) {
  if (phi.source() != v.source()) {
    throw SizeMismatch("fi_act: injection from [" + std::to_string(phi.source()) +
                       "] applied to degree " + std::to_string(v.source()));
  }
  return compose(HomElement(functor_image(phi, v.family())), v);
}

}  // namespace dialg
