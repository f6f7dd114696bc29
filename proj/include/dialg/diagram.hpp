#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dialg/error.hpp"

namespace dialg {

enum class Family { Partition, Brauer, RookBrauer, Rook };

inline constexpr Family kAllFamilies[] = {Family::Partition, Family::Brauer,
                                          Family::RookBrauer, Family::Rook};

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::Partition: return "partition";
    case Family::Brauer: return "brauer";
    case Family::RookBrauer: return "rookbrauer";
    case Family::Rook: return "rook";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  for (Family f : kAllFamilies) {
    if (to_string(f) == s) return f;
  }
  throw InvalidInput("unknown family '" + std::string(s) + "'");
}

using Block = std::vector<int>;

namespace detail {

// Node labels of [-n] u [n] in ascending order map to 0..2n-1.
inline int node_index(int label, int n) { return label < 0 ? label + n : label + n - 1; }
inline int node_label(int index, int n) { return index < n ? index - n : index - n + 1; }

// Validates that `blocks` partitions `labels` (ascending, no duplicates) and
// returns the canonical form: each block sorted, blocks ordered by minimum.
inline std::vector<Block> canonical_blocks(std::vector<Block> blocks,
                                           const std::vector<int>& labels) {
  std::vector<char> seen(labels.size(), 0);
  for (auto& b : blocks) {
    if (b.empty()) throw InvalidInput("empty block");
    for (int v : b) {
      auto it = std::lower_bound(labels.begin(), labels.end(), v);
      if (v == 0 || it == labels.end() || *it != v) {
        throw InvalidInput("node " + std::to_string(v) + " out of range");
      }
      auto& s = seen[static_cast<std::size_t>(it - labels.begin())];
      if (s) throw InvalidInput("overlap: node " + std::to_string(v) + " appears twice");
      s = 1;
    }
    std::sort(b.begin(), b.end());
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!seen[i]) throw InvalidInput("missing node " + std::to_string(labels[i]));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
  return blocks;
}

inline std::vector<int> diagram_labels(int n) {
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(2 * n));
  for (int i = -n; i <= n; ++i) {
    if (i != 0) labels.push_back(i);
  }
  return labels;
}

}  // namespace detail

// A set partition of [-n] u [n] in canonical form. Left nodes are -1..-n and
// right nodes 1..n. Identity is structural equality of the canonical blocks.
class Diagram {
 public:
  Diagram() = default;

  static Diagram identity(int n) {
    std::vector<Block> blocks;
    for (int i = n; i >= 1; --i) blocks.push_back({-i, i});
    return Diagram(n, std::move(blocks));
  }

  int size() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  // Block index of every node, indexed by detail::node_index.
  std::vector<int> block_of() const {
    std::vector<int> out(static_cast<std::size_t>(2 * n_));
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      for (int v : blocks_[b]) out[static_cast<std::size_t>(detail::node_index(v, n_))] = static_cast<int>(b);
    }
    return out;
  }

  auto operator<=>(const Diagram&) const = default;
  bool operator==(const Diagram&) const = default;

  friend Diagram canonicalize(int n, std::vector<Block> raw_blocks);
  // Builds a diagram from a component id per node (indexed by node_index).
  // Ids need not be contiguous; the result is canonical by construction.
  friend Diagram diagram_from_components(int n, const std::vector<int>& component);

 private:
  Diagram(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {}

  int n_ = 0;
  std::vector<Block> blocks_;
};

inline Diagram canonicalize(int n, std::vector<Block> raw_blocks) {
  if (n < 0) throw InvalidInput("negative diagram size");
  return Diagram(n, detail::canonical_blocks(std::move(raw_blocks), detail::diagram_labels(n)));
}

inline Diagram diagram_from_components(int n, const std::vector<int>& component) {
  // Scanning nodes in ascending label order creates blocks in order of their
  // minimum element, with each block's elements ascending.
  std::vector<Block> blocks;
  std::vector<std::pair<int, int>> slot;  // (component id, block index)
  for (int idx = 0; idx < 2 * n; ++idx) {
    int c = component[static_cast<std::size_t>(idx)];
    auto it = std::find_if(slot.begin(), slot.end(), [c](const auto& s) { return s.first == c; });
    int label = detail::node_label(idx, n);
    if (it == slot.end()) {
      slot.emplace_back(c, static_cast<int>(blocks.size()));
      blocks.push_back({label});
    } else {
      blocks[static_cast<std::size_t>(it->second)].push_back(label);
    }
  }
  return Diagram(n, std::move(blocks));
}

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const noexcept {
    std::size_t h = std::hash<int>{}(d.size());
    for (const auto& b : d.blocks()) {
      for (int v : b) h = h * 1000003u ^ std::hash<int>{}(v);
      h = h * 31u + 7u;
    }
    return h;
  }
};

inline bool in_family(const Diagram& d, Family f) {
  for (const auto& b : d.blocks()) {
    switch (f) {
      case Family::Partition:
        break;
      case Family::Brauer:
        if (b.size() != 2) return false;
        break;
      case Family::RookBrauer:
        if (b.size() > 2) return false;
        break;
      case Family::Rook:
        if (b.size() > 2) return false;
        if (b.size() == 2 && (b[0] < 0) == (b[1] < 0)) return false;
        break;
    }
  }
  return true;
}

// Number of blocks meeting both columns.
inline int propagating_number(const Diagram& d) {
  int count = 0;
  for (const auto& b : d.blocks()) {
    if (b.front() < 0 && b.back() > 0) ++count;
  }
  return count;
}

// True iff d is a permutation diagram: n blocks of the form {-i, j}.
inline bool is_invertible(const Diagram& d) {
  if (static_cast<int>(d.blocks().size()) != d.size()) return false;
  return std::all_of(d.blocks().begin(), d.blocks().end(), [](const Block& b) {
    return b.size() == 2 && b[0] < 0 && b[1] > 0;
  });
}

// Places d (size n - m) on nodes of absolute value m+1..n, with strands
// {-k, k} for k <= m.
inline Diagram embed_bottom(const Diagram& d, int n, int m) {
  if (m < 0 || m > n || d.size() != n - m) {
    throw SizeMismatch("embed_bottom: diagram of size " + std::to_string(d.size()) +
                       " cannot sit below " + std::to_string(m) + " strands in size " +
                       std::to_string(n));
  }
  std::vector<Block> blocks;
  for (int k = 1; k <= m; ++k) blocks.push_back({-k, k});
  for (const auto& b : d.blocks()) {
    Block shifted;
    for (int v : b) shifted.push_back(v < 0 ? v - m : v + m);
    blocks.push_back(std::move(shifted));
  }
  return canonicalize(n, std::move(blocks));
}

// Places d (size m) on nodes 1..m, with strands {-k, k} for m < k <= n.
inline Diagram embed_top(const Diagram& d, int n) {
  if (d.size() > n) {
    throw SizeMismatch("embed_top: diagram of size " + std::to_string(d.size()) +
                       " exceeds " + std::to_string(n));
  }
  std::vector<Block> blocks = d.blocks();
  for (int k = d.size() + 1; k <= n; ++k) blocks.push_back({-k, k});
  return canonicalize(n, std::move(blocks));
}

namespace detail {

// Recursive matcher shared by the Brauer-type enumerators: the smallest
// unassigned node is left single, marked, or paired with a later node.
class MatchingEnumerator {
 public:
  using Emit = std::function<void(const std::vector<Block>&, const std::vector<char>&)>;

  // `marks_wanted` singleton blocks get flagged (blob nodes), optionally only
  // among negative labels.
  MatchingEnumerator(const std::vector<int>& labels, Family family, int marks_wanted,
                     bool marks_on_left_only, Emit emit)
      : labels(labels),
        family(family),
        marks_wanted(marks_wanted),
        marks_on_left_only(marks_on_left_only),
        emit(std::move(emit)),
        used(labels.size(), 0) {}

  void run() { step(0, 0); }

 private:
  const std::vector<int>& labels;
  Family family;
  int marks_wanted;
  bool marks_on_left_only;
  Emit emit;
  std::vector<char> used;
  std::vector<Block> blocks;
  std::vector<char> marked;

  void step(std::size_t first, int marks) {
    while (first < labels.size() && used[first]) ++first;
    if (first == labels.size()) {
      if (marks == marks_wanted) emit(blocks, marked);
      return;
    }
    int v = labels[first];
    used[first] = 1;
    if (marks < marks_wanted && (!marks_on_left_only || v < 0)) {
      blocks.push_back({v});
      marked.push_back(1);
      step(first + 1, marks + 1);
      blocks.pop_back();
      marked.pop_back();
    }
    if (family == Family::RookBrauer || family == Family::Rook) {
      blocks.push_back({v});
      marked.push_back(0);
      step(first + 1, marks);
      blocks.pop_back();
      marked.pop_back();
    }
    for (std::size_t k = first + 1; k < labels.size(); ++k) {
      if (used[k]) continue;
      int w = labels[k];
      if (family == Family::Rook && (v < 0) == (w < 0)) continue;
      used[k] = 1;
      blocks.push_back({v, w});
      marked.push_back(0);
      step(first + 1, marks);
      blocks.pop_back();
      marked.pop_back();
      used[k] = 0;
    }
    used[first] = 0;
  }
};

// Restricted-growth enumeration of all set partitions of `labels`; blocks come
// out ordered by minimum with ascending elements.
template <class Visit>
void for_each_set_partition(const std::vector<int>& labels, Visit&& visit) {
  std::vector<Block> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == labels.size()) {
      visit(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(labels[i]);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({labels[i]});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

}  // namespace detail

// Visits every basis diagram of A_n (generation order, not sorted).
template <class Visit>
void for_each_basis(int n, Family f, Visit&& visit) {
  if (n < 0) throw InvalidInput("negative diagram size");
  auto labels = detail::diagram_labels(n);
  if (f == Family::Partition) {
    detail::for_each_set_partition(labels, [&](const std::vector<Block>& blocks) {
      visit(canonicalize(n, blocks));
    });
    return;
  }
  detail::MatchingEnumerator e{labels, f, 0, false,
                               [&](const std::vector<Block>& blocks, const std::vector<char>&) {
                                 visit(canonicalize(n, blocks));
                               }};
  e.run();
}

// All basis diagrams of A_n for the family, sorted lexicographically by their
// canonical block lists.
inline std::vector<Diagram> enumerate_basis(int n, Family f) {
  std::vector<Diagram> out;
  for_each_basis(n, f, [&](Diagram d) { out.push_back(std::move(d)); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t count_basis(int n, Family f) {
  std::size_t count = 0;
  for_each_basis(n, f, [&](const Diagram&) { ++count; });
  return count;
}

}  // namespace dialg
