#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dialg/diagram.hpp"
#include "dialg/error.hpp"
#include "dialg/poly.hpp"
#include "dialg/product.hpp"

namespace dialg {

namespace detail {
// [-n] u [m], ascending.
inline std::vector<int> hom_labels(int m, int n) {
  std::vector<int> labels;
  for (int i = -n; i <= -1; ++i) labels.push_back(i);
  for (int i = 1; i <= m; ++i) labels.push_back(i);
  return labels;
}
}  // namespace detail

// Basis element of Hom(m, n) in C_A, stored uniformly as a partition of
// [-n] u [m] together with n - m marked blocks.
//
// For the Partition family the marked blocks are the distinguished blocks of
// the basis. For Brauer, RookBrauer and Rook the marked blocks are exactly the
// singletons {v} of nodes wired to the (n - m)-blob; unmarked blocks are pairs
// (or, outside Brauer, isolated nodes).
class BlobDiagram {
 public:
  BlobDiagram() = default;

  // Partition form. `marked` indexes into `blocks` as given; both are
  // normalized to canonical order.
  static BlobDiagram from_blocks(Family f, int m, int n, std::vector<Block> blocks,
                                 const std::vector<std::size_t>& marked) {
    check_degrees(m, n);
    std::vector<char> flag(blocks.size(), 0);
    for (std::size_t idx : marked) {
      if (idx >= blocks.size()) throw InvalidInput("marked index out of range");
      if (flag[idx]) throw InvalidInput("marked index repeated");
      flag[idx] = 1;
    }
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::vector<std::pair<Block, char>> tagged;
    for (std::size_t i = 0; i < blocks.size(); ++i) tagged.emplace_back(blocks[i], flag[i]);
    auto canonical = detail::canonical_blocks(blocks, detail::hom_labels(m, n));
    BlobDiagram x;
    x.family_ = f;
    x.m_ = m;
    x.n_ = n;
    for (std::size_t i = 0; i < canonical.size(); ++i) {
      auto it = std::find_if(tagged.begin(), tagged.end(),
                             [&](const auto& t) { return t.first == canonical[i]; });
      if (it->second) x.marked_.push_back(i);
    }
    x.blocks_ = std::move(canonical);
    x.validate();
    return x;
  }

  // Blob form: listed pairs, nodes wired to the blob, every other node isolated.
  static BlobDiagram from_pairs(Family f, int m, int n, const std::vector<std::array<int, 2>>& pairs,
                                const std::vector<int>& blob) {
    std::vector<Block> blocks;
    std::vector<std::size_t> marked;
    std::vector<int> covered;
    for (const auto& p : pairs) {
      blocks.push_back({p[0], p[1]});
      covered.insert(covered.end(), {p[0], p[1]});
    }
    for (int v : blob) {
      marked.push_back(blocks.size());
      blocks.push_back({v});
      covered.push_back(v);
    }
    std::sort(covered.begin(), covered.end());
    for (int v : detail::hom_labels(m, n)) {
      if (!std::binary_search(covered.begin(), covered.end(), v)) blocks.push_back({v});
    }
    return from_blocks(f, m, n, std::move(blocks), marked);
  }

  // Internal: trusted canonical blocks with marked flags (one per block).
  static BlobDiagram from_canonical(Family f, int m, int n, std::vector<Block> blocks,
                                    const std::vector<char>& flags) {
    BlobDiagram x;
    x.family_ = f;
    x.m_ = m;
    x.n_ = n;
    for (std::size_t i = 0; i < flags.size(); ++i) {
      if (flags[i]) x.marked_.push_back(i);
    }
    x.blocks_ = std::move(blocks);
    return x;
  }

  Family family() const { return family_; }
  int target() const { return m_; }  // m
  int source() const { return n_; }  // n
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<std::size_t>& marked() const { return marked_; }

  bool is_marked(std::size_t block) const {
    return std::binary_search(marked_.begin(), marked_.end(), block);
  }

  // Blob-form accessors (meaningful for Brauer, RookBrauer, Rook).
  std::vector<std::array<int, 2>> pairs() const {
    std::vector<std::array<int, 2>> out;
    for (const auto& b : blocks_) {
      if (b.size() == 2) out.push_back({b[0], b[1]});
    }
    return out;
  }
  std::vector<int> blob() const {
    std::vector<int> out;
    for (std::size_t i : marked_) out.insert(out.end(), blocks_[i].begin(), blocks_[i].end());
    std::sort(out.begin(), out.end());
    return out;
  }

  auto operator<=>(const BlobDiagram&) const = default;
  bool operator==(const BlobDiagram&) const = default;

  void validate() const {
    if (marked_.size() != static_cast<std::size_t>(n_ - m_)) {
      throw InvalidInput("expected " + std::to_string(n_ - m_) + " marked blocks, got " +
                         std::to_string(marked_.size()));
    }
    if (family_ == Family::Partition) return;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      const auto& b = blocks_[i];
      bool mk = is_marked(i);
      if (mk && b.size() != 1) throw InvalidInput("blob connections must be single nodes");
      if (b.size() > 2) throw InvalidInput("blocks of size > 2 in a blob diagram");
      if (family_ == Family::Brauer && !mk && b.size() != 2) {
        throw InvalidInput("brauer blob diagram has an isolated node");
      }
      if (family_ == Family::Rook) {
        if (b.size() == 2 && (b[0] < 0) == (b[1] < 0)) {
          throw InvalidInput("rook blob diagram has a same-side connection");
        }
        if (mk && b[0] > 0) throw InvalidInput("rook blob connections must be left nodes");
      }
    }
  }

 private:
  static void check_degrees(int m, int n) {
    if (m < 0 || n < 0) throw InvalidInput("negative degree");
    if (m > n) throw InvalidInput("blob diagrams need m <= n");
  }

  Family family_ = Family::Partition;
  int m_ = 0;
  int n_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::size_t> marked_;
};

// Element of Hom(m, n) = A_n (x)_{A_{n-m}} R. When m > n the space is zero
// and the element carries no terms.
class HomElement {
 public:
  using TermMap = std::map<BlobDiagram, PolyCoeff>;

  HomElement(Family f, int m, int n) : family_(f), m_(m), n_(n) {}
  explicit HomElement(const BlobDiagram& x, PolyCoeff c = 1)
      : family_(x.family()), m_(x.target()), n_(x.source()) {
    add(x, std::move(c));
  }

  Family family() const { return family_; }
  int target() const { return m_; }
  int source() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PolyCoeff coefficient(const BlobDiagram& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? PolyCoeff{} : it->second;
  }

  void add(const BlobDiagram& x, const PolyCoeff& c) {
    if (x.family() != family_ || x.target() != m_ || x.source() != n_) {
      throw SizeMismatch("HomElement: basis element of the wrong hom-space");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  HomElement& operator+=(const HomElement& o) {
    if (o.family_ != family_ || o.m_ != m_ || o.n_ != n_) {
      throw SizeMismatch("HomElement: adding elements of different hom-spaces");
    }
    for (const auto& [x, c] : o.terms_) add(x, c);
    return *this;
  }
  friend HomElement operator+(HomElement a, const HomElement& b) { return a += b; }
  friend HomElement operator*(const PolyCoeff& s, const HomElement& a) {
    HomElement r(a.family_, a.m_, a.n_);
    for (const auto& [x, c] : a.terms_) r.add(x, s * c);
    return r;
  }
  friend bool operator==(const HomElement& a, const HomElement& b) {
    return a.family_ == b.family_ && a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  Family family_;
  int m_;
  int n_;
  TermMap terms_;
};

// Visits every basis element of Hom(m, n) in generation order.
template <class Visit>
void for_each_hom_basis(int m, int n, Family f, Visit&& visit) {
  if (m < 0 || n < 0) throw InvalidInput("negative degree");
  if (m > n) return;
  auto labels = detail::hom_labels(m, n);
  const int marks = n - m;
  if (f == Family::Partition) {
    std::vector<char> flags;
    detail::for_each_set_partition(labels, [&](const std::vector<Block>& blocks) {
      // choose `marks` of the blocks, in lexicographic flag order
      const std::size_t k = blocks.size();
      if (static_cast<std::size_t>(marks) > k) return;
      flags.assign(k, 0);
      std::fill(flags.end() - marks, flags.end(), 1);
      do {
        visit(BlobDiagram::from_canonical(f, m, n, blocks, flags));
      } while (std::next_permutation(flags.begin(), flags.end()));
    });
    return;
  }
  detail::MatchingEnumerator e{
      labels, f, marks, f == Family::Rook,
      [&](const std::vector<Block>& blocks, const std::vector<char>& marked) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < marked.size(); ++i) {
          if (marked[i]) idx.push_back(i);
        }
        visit(BlobDiagram::from_blocks(f, m, n, blocks, idx));
      }};
  e.run();
}

// All basis elements of Hom(m, n), sorted; empty when m > n.
inline std::vector<BlobDiagram> enumerate_hom_basis(int m, int n, Family f) {
  std::vector<BlobDiagram> out;
  for_each_hom_basis(m, n, f, [&](BlobDiagram x) { out.push_back(std::move(x)); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t count_hom_basis(int m, int n, Family f) {
  std::size_t count = 0;
  for_each_hom_basis(m, n, f, [&](const BlobDiagram&) { ++count; });
  return count;
}

namespace detail {

// Marked blocks in attachment order: by the smallest absolute value among
// their left nodes, blocks with no left node last (by their smallest node).
inline std::vector<std::size_t> attachment_order(const BlobDiagram& x) {
  auto key = [&](std::size_t i) {
    const auto& b = x.blocks()[i];
    int left = 0;
    for (int v : b) {
      if (v < 0) left = v;  // blocks are ascending, so this ends at the largest negative
    }
    return left < 0 ? std::pair{0, -left} : std::pair{1, b.front()};
  };
  std::vector<std::size_t> order = x.marked();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  return order;
}

}  // namespace detail

// Representative in A_n of x (x) 1: marked blocks, taken in attachment order
// (-1 before -2 before ...), absorb right nodes m+1, m+2, ... in turn.
inline Diagram lift(const BlobDiagram& x) {
  std::vector<Block> blocks = x.blocks();
  int next = x.target() + 1;
  for (std::size_t i : detail::attachment_order(x)) blocks[i].push_back(next++);
  return canonicalize(x.source(), std::move(blocks));
}

// Same as lift, but marked block k absorbs right node m + 1 + order[k].
// `order` must be a permutation of 0..n-m-1.
inline Diagram lift_with_order(const BlobDiagram& x, const std::vector<int>& order) {
  if (order.size() != x.marked().size()) throw SizeMismatch("lift_with_order: wrong arity");
  std::vector<Block> blocks = x.blocks();
  for (std::size_t k = 0; k < x.marked().size(); ++k) {
    blocks[x.marked()[k]].push_back(x.target() + 1 + order[k]);
  }
  return canonicalize(x.source(), std::move(blocks));
}

// Membership of a basis diagram in J: some block holds two or more of the
// right nodes m+1..n, or consists of such right nodes only. For the three
// Brauer-type families this is the right-right pair / isolated right node
// condition; for Partition it is the same statement for arbitrary blocks.
inline bool is_in_J(const Diagram& d, int m, Family f) {
  require_family(d, f, "is_in_J");
  for (const auto& b : d.blocks()) {
    int bottom = 0;
    for (int v : b) {
      if (v > m) ++bottom;
    }
    if (bottom >= 2) return true;
    if (bottom == static_cast<int>(b.size())) return true;
  }
  return false;
}

// Image of a basis diagram under A_n -> Hom(m, n); empty optional-like result
// is signalled by returning false.
inline bool project_basis(const Diagram& d, int m, Family f, BlobDiagram& out) {
  if (m > d.size() || m < 0) throw SizeMismatch("project: m exceeds n");
  if (is_in_J(d, m, f)) return false;
  std::vector<Block> blocks;
  std::vector<char> flags;
  for (const auto& b : d.blocks()) {
    Block kept;
    for (int v : b) {
      if (v <= m) kept.push_back(v);
    }
    flags.push_back(kept.size() != b.size() ? 1 : 0);
    blocks.push_back(std::move(kept));
  }
  // Removing right nodes never changes a block's minimum (every block keeps a
  // smaller node), so the order is still canonical.
  out = BlobDiagram::from_canonical(f, m, d.size(), std::move(blocks), flags);
  return true;
}

inline HomElement project(const LinComb& a, int m) {
  if (m > a.size() || m < 0) throw SizeMismatch("project: m exceeds n");
  HomElement out(a.family(), m, a.size());
  BlobDiagram x;
  for (const auto& [d, c] : a.terms()) {
    if (project_basis(d, m, a.family(), x)) out.add(x, c);
  }
  return out;
}

inline HomElement project(const Diagram& d, int m, Family f) { return project(LinComb(d, f), m); }

// x in Hom(m, n), y in Hom(l, m) -> x o y in Hom(l, n), computed as
// project(lift(x) * embed_top(lift(y), n), l) and extended bilinearly.
inline HomElement compose(const HomElement& x, const HomElement& y) {
  if (x.family() != y.family()) throw FamilyMismatch("compose: families differ");
  if (x.target() != y.source()) {
    throw SizeMismatch("compose: Hom(" + std::to_string(x.target()) + "," +
                       std::to_string(x.source()) + ") after Hom(" + std::to_string(y.target()) +
                       "," + std::to_string(y.source()) + ")");
  }
  const Family f = x.family();
  const int l = y.target();
  const int m = x.target();
  const int n = x.source();
  HomElement out(f, l, n);
  if (!(l <= m && m <= n)) return out;
  BlobDiagram z;
  for (const auto& [bx, cx] : x.terms()) {
    Diagram top = lift(bx);
    for (const auto& [by, cy] : y.terms()) {
      auto t = multiply_basis(top, embed_top(lift(by), n), f);
      if (project_basis(t.diagram, l, f, z)) out.add(z, cx * cy * t.coeff);
    }
  }
  return out;
}

inline HomElement compose(const BlobDiagram& x, const BlobDiagram& y) {
  return compose(HomElement(x), HomElement(y));
}

// Unit of End(n).
inline HomElement hom_identity(int n, Family f) {
  BlobDiagram x;
  project_basis(Diagram::identity(n), n, f, x);
  return HomElement(x);
}

}  // namespace dialg
