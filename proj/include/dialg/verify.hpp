#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dialg/diagram.hpp"
#include "dialg/error.hpp"
#include "dialg/fi.hpp"
#include "dialg/hom.hpp"
#include "dialg/parallel.hpp"
#include "dialg/poly.hpp"
#include "dialg/product.hpp"
#include "dialg/rank.hpp"
#include "dialg/report.hpp"

namespace dialg {

// ---------------------------------------------------------------------------
// Factorizations of J
// ---------------------------------------------------------------------------

enum class FactorCase { IsolatedNode, RightRight, RookIsolated };

inline std::string_view to_string(FactorCase c) {
  switch (c) {
    case FactorCase::IsolatedNode: return "isolated-node";
    case FactorCase::RightRight: return "right-right";
    case FactorCase::RookIsolated: return "rook-isolated";
  }
  return "?";
}

// alpha = beta * gamma with gamma a non-invertible diagram of the bottom
// subalgebra A_{n-m} (stored at full size n).
struct FactorizationWitness {
  Diagram alpha;
  Diagram beta;
  Diagram gamma;
  FactorCase case_tag = FactorCase::IsolatedNode;
};

namespace detail {

inline bool in_bottom_subalgebra(const Diagram& g, int m) {
  for (int k = 1; k <= m; ++k) {
    Block strand{-k, k};
    if (std::find(g.blocks().begin(), g.blocks().end(), strand) == g.blocks().end()) return false;
  }
  return true;
}

// Diagram of size n with the given special blocks and {-l, l} on every other l.
inline Diagram strands_except(int n, std::vector<Block> special, const std::vector<int>& skip) {
  for (int l = 1; l <= n; ++l) {
    if (std::find(skip.begin(), skip.end(), l) == skip.end()) special.push_back({-l, l});
  }
  return canonicalize(n, std::move(special));
}

inline std::vector<Block> replace_blocks(const Diagram& d, const std::vector<Block>& remove,
                                         const std::vector<Block>& add) {
  std::vector<Block> out;
  for (const auto& b : d.blocks()) {
    if (std::find(remove.begin(), remove.end(), b) == remove.end()) out.push_back(b);
  }
  out.insert(out.end(), add.begin(), add.end());
  return out;
}

}  // namespace detail

// Checks a witness; throws VerificationFailure describing the triple if any
// condition fails.
inline void verify_witness(const FactorizationWitness& w, int m, Family f) {
  auto fail = [&](const std::string& why) {
    throw VerificationFailure("factor_J witness invalid (" + why + "): alpha " + describe(w.alpha) +
                              ", beta " + describe(w.beta) + ", gamma " + describe(w.gamma));
  };
  if (!in_family(w.beta, f) || !in_family(w.gamma, f)) fail("family");
  if (is_invertible(w.gamma)) fail("gamma invertible");
  if (!detail::in_bottom_subalgebra(w.gamma, m)) fail("gamma outside bottom subalgebra");
  auto t = multiply_basis(w.beta, w.gamma, f);
  if (t.diagram != w.alpha) fail("beta*gamma has the wrong diagram");
  if (t.coeff != PolyCoeff(1)) fail("beta*gamma has coefficient " + to_string(t.coeff));
}

// Writes a basis diagram alpha in J as beta * gamma following the case
// analysis for RookBrauer (isolated bottom-right node; right-right pair) and
// Rook (pair every isolated bottom-right node with an isolated left node).
// Ties go to the smallest absolute value, left side first. The witness is
// re-multiplied before it is returned.
inline FactorizationWitness factor_J(const Diagram& alpha, int m, Family f) {
  if (f != Family::RookBrauer && f != Family::Rook) {
    throw PreconditionViolation("factor_J is defined for rookbrauer and rook");
  }
  if (!is_in_J(alpha, m, f)) throw PreconditionViolation("factor_J: diagram not in J: " + describe(alpha));
  const int n = alpha.size();
  auto bo = alpha.block_of();
  auto block_at = [&](int v) -> const Block& {
    return alpha.blocks()[static_cast<std::size_t>(bo[static_cast<std::size_t>(detail::node_index(v, n))])];
  };
  auto isolated = [&](int v) { return block_at(v).size() == 1; };

  FactorizationWitness w;
  w.alpha = alpha;

  if (f == Family::Rook) {
    std::vector<int> rights;
    std::vector<int> lefts;
    for (int k = m + 1; k <= n; ++k) {
      if (isolated(k)) rights.push_back(k);
    }
    for (int k = 1; k <= n; ++k) {
      if (isolated(-k)) lefts.push_back(-k);
    }
    if (lefts.size() < rights.size()) throw VerificationFailure("rook diagram with unbalanced isolated nodes");
    std::vector<Block> remove;
    std::vector<Block> add;
    std::vector<Block> gamma_special;
    for (std::size_t i = 0; i < rights.size(); ++i) {
      remove.push_back({rights[i]});
      remove.push_back({lefts[i]});
      add.push_back({lefts[i], rights[i]});
      gamma_special.push_back({-rights[i]});
      gamma_special.push_back({rights[i]});
    }
    w.beta = canonicalize(n, detail::replace_blocks(alpha, remove, add));
    w.gamma = detail::strands_except(n, gamma_special, rights);
    w.case_tag = FactorCase::RookIsolated;
    verify_witness(w, m, f);
    return w;
  }

  // Case 1: an isolated right node k in m+1..n.
  for (int k = m + 1; k <= n; ++k) {
    if (!isolated(k)) continue;
    std::optional<int> partner;
    for (int v = 1; v <= n && !partner; ++v) {
      if (isolated(-v)) partner = -v;
    }
    for (int v = 1; v <= n && !partner; ++v) {
      if (v != k && isolated(v)) partner = v;
    }
    if (!partner) throw VerificationFailure("odd number of isolated nodes in " + describe(alpha));
    w.beta = canonicalize(n, detail::replace_blocks(alpha, {{k}, {*partner}}, {{std::min(k, *partner), std::max(k, *partner)}}));
    w.gamma = detail::strands_except(n, {{-k}, {k}}, {k});
    w.case_tag = FactorCase::IsolatedNode;
    verify_witness(w, m, f);
    return w;
  }

  // Case 2: a right-right pair {i, j} inside m+1..n.
  for (const auto& b : alpha.blocks()) {
    if (b.size() != 2 || b[0] <= m) continue;
    const int i = b[0];
    const int j = b[1];
    std::optional<std::pair<int, int>> left;  // (i', j') with |i'| < |j'|
    bool left_left = false;
    for (int v = 1; v <= n && !left; ++v) {
      const Block& bv = block_at(-v);
      if (bv.size() == 2 && bv[0] < 0 && bv[1] < 0) {
        left = {-v, bv[0] == -v ? bv[1] : bv[0]};
        left_left = true;
      } else if (bv.size() == 1) {
        for (int u = v + 1; u <= n; ++u) {
          if (isolated(-u)) {
            left = {-v, -u};
            break;
          }
        }
      }
    }
    if (!left) throw VerificationFailure("no left pair or connection opposite " + describe(alpha));
    auto [ip, jp] = *left;
    std::vector<Block> remove{{i, j}};
    if (left_left) {
      remove.push_back({std::min(ip, jp), std::max(ip, jp)});
    } else {
      remove.push_back({ip});
      remove.push_back({jp});
    }
    w.beta = canonicalize(n, detail::replace_blocks(alpha, remove, {{ip, i}, {jp, j}}));
    if (left_left) {
      w.gamma = detail::strands_except(n, {{-j, -i}, {i, j}}, {i, j});
    } else {
      w.gamma = detail::strands_except(n, {{-i}, {-j}, {i, j}}, {i, j});
    }
    w.case_tag = FactorCase::RightRight;
    verify_witness(w, m, f);
    return w;
  }
  throw VerificationFailure("diagram in J matched neither case: " + describe(alpha));
}

// ---------------------------------------------------------------------------
// Counting lemmas
// ---------------------------------------------------------------------------

inline std::size_t singleton_marked_count(const BlobDiagram& x) {
  std::size_t c = 0;
  for (std::size_t i : x.marked()) {
    if (x.blocks()[i].size() == 1) ++c;
  }
  return c;
}

inline std::size_t left_blob_count(const BlobDiagram& x) {
  std::size_t c = 0;
  for (int v : x.blob()) {
    if (v < 0) ++c;
  }
  return c;
}

// Every basis element of Hom_P(m, j), j >= 5m, has at least m+1 singleton
// marked blocks. `below_bound` permits j < 5m as an unasserted probe: the
// report then counts counterexamples instead of failing on them.
inline Report check_lemma_partition(int m, int j, bool below_bound = false) {
  if (m < 1) throw PreconditionViolation("lemma-partition needs m >= 1");
  if (j < 5 * m && !below_bound) {
    throw PreconditionViolation("lemma-partition needs j >= 5m (pass the probe flag to go below)");
  }
  const bool asserted = j >= 5 * m;
  Report r;
  r.check = "lemma-partition";
  r.family = Family::Partition;
  r.m = m;
  r.n = j;
  r.degree_key = "j";
  std::size_t minimum = std::numeric_limits<std::size_t>::max();
  long long counterexamples = 0;
  std::optional<BlobDiagram> first_bad;
  for_each_hom_basis(m, j, Family::Partition, [&](const BlobDiagram& x) {
    if (asserted && first_bad) return;  // a counterexample aborts the asserted run
    ++r.total;
    std::size_t s = singleton_marked_count(x);
    minimum = std::min(minimum, s);
    if (s < static_cast<std::size_t>(m + 1)) {
      ++counterexamples;
      if (!first_bad) first_bad = x;
    }
  });
  r.extras.emplace_back("min_singleton_marked", r.total ? static_cast<long long>(minimum) : -1);
  if (!asserted) {
    r.extras.emplace_back("asserted", 0);
    r.extras.emplace_back("counterexamples", counterexamples);
  } else if (first_bad) {
    r.failures.push_back("too few singleton marked blocks: " + describe(*first_bad));
  }
  return r;
}

// For Brauer-type families, every basis element of Hom(m, j), j > 2m, wires
// at least one left node to the blob.
inline Report check_lemma_blob(int m, int j, Family f) {
  if (f == Family::Partition) throw PreconditionViolation("lemma-blob is for brauer-type families");
  if (m < 1 || j <= 2 * m) throw PreconditionViolation("lemma-blob needs m >= 1 and j > 2m");
  Report r;
  r.check = "lemma-blob";
  r.family = f;
  r.m = m;
  r.n = j;
  r.degree_key = "j";
  std::size_t minimum = std::numeric_limits<std::size_t>::max();
  std::optional<BlobDiagram> first_bad;
  for_each_hom_basis(m, j, f, [&](const BlobDiagram& x) {
    if (first_bad) return;
    ++r.total;
    std::size_t c = left_blob_count(x);
    minimum = std::min(minimum, c);
    if (c == 0) first_bad = x;
  });
  r.extras.emplace_back("min_left_blob", r.total ? static_cast<long long>(minimum) : -1);
  if (first_bad) r.failures.push_back("no left node on the blob: " + describe(*first_bad));
  return r;
}

// ---------------------------------------------------------------------------
// Generation reductions
// ---------------------------------------------------------------------------

// alpha = phi . alpha_bar with phi : [j-1] -> [j].
struct GenerationWitness {
  BlobDiagram alpha;
  FIMorphism phi;
  BlobDiagram alpha_bar;
};

inline int generation_bound(int m, Family f) { return f == Family::Partition ? 5 * m : 2 * m; }

// Finds a left node -k that is a marked singleton (Partition) or on the blob
// (other families), preferring k = j and otherwise the smallest k. With the
// transposition s = (k j), alpha_bar is s.alpha with node -j deleted and
// phi = s o (inclusion [j-1] -> [j]). The witness is re-composed before return.
inline GenerationWitness reduce_generator(const BlobDiagram& alpha, Family f) {
  if (alpha.family() != f) throw FamilyMismatch("reduce_generator: family mismatch");
  const int m = alpha.target();
  const int j = alpha.source();
  if (m < 1 || j < generation_bound(m, f) + 1) {
    throw PreconditionViolation("reduce_generator needs m >= 1 and j >= " +
                                std::to_string(generation_bound(m, f) + 1));
  }
  auto free_left = [&](int k) {
    for (std::size_t i : alpha.marked()) {
      if (alpha.blocks()[i] == Block{-k}) return true;
    }
    return false;
  };
  int k = 0;
  if (free_left(j)) {
    k = j;
  } else {
    for (int v = 1; v <= j && !k; ++v) {
      if (free_left(v)) k = v;
    }
  }
  if (!k) throw VerificationFailure("no removable left node in " + describe(alpha));

  std::vector<Block> blocks;
  std::vector<std::size_t> marked;
  for (std::size_t i = 0; i < alpha.blocks().size(); ++i) {
    Block b = alpha.blocks()[i];
    for (int& v : b) {
      if (v == -k) {
        v = -j;
      } else if (v == -j) {
        v = -k;
      }
    }
    if (b == Block{-j}) continue;
    if (alpha.is_marked(i)) marked.push_back(blocks.size());
    blocks.push_back(std::move(b));
  }
  GenerationWitness w{alpha,
                      compose_fi(FIMorphism::transposition(j, k, j), FIMorphism::inclusion(j - 1, j)),
                      BlobDiagram::from_blocks(f, m, j - 1, std::move(blocks), marked)};
  if (fi_act(w.phi, HomElement(w.alpha_bar)) != HomElement(alpha)) {
    throw VerificationFailure("generation witness does not recompose: alpha " + describe(alpha) +
                              ", phi " + describe(w.phi) + ", alpha_bar " + describe(w.alpha_bar));
  }
  return w;
}

// Whether {phi . b : phi in Hom_FI(n-1, n), b basis of Hom(m, n-1)} spans
// Q^{basis Hom(m, n)} at (delta0, eps0). Requires n above the generation bound.
inline bool spanning_check(int m, int n, Family f, const Rational& delta0, const Rational& eps0) {
  if (m < 0 || n <= generation_bound(m, f) || n < 1) {
    throw PreconditionViolation("spanning_check needs n > " + std::to_string(generation_bound(m, f)));
  }
  auto target = enumerate_hom_basis(m, n, f);
  std::map<BlobDiagram, std::size_t> column;
  for (std::size_t i = 0; i < target.size(); ++i) column.emplace(target[i], i);
  auto sources = enumerate_hom_basis(m, n - 1, f);
  RowEchelon ech(target.size());
  for (const auto& phi : enumerate_fi(n - 1, n)) {
    for (const auto& b : sources) {
      auto v = fi_act(phi, HomElement(b));
      std::map<std::size_t, Rational> entries;
      for (const auto& [x, c] : v.terms()) entries[column.at(x)] += specialize(c, delta0, eps0);
      ech.insert(make_row(std::move(entries)));
      if (ech.rank() == target.size()) return true;
    }
  }
  return ech.rank() == target.size();
}

}  // namespace dialg
