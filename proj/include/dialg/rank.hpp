#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dialg/diagram.hpp"
#include "dialg/error.hpp"
#include "dialg/poly.hpp"
#include "dialg/product.hpp"

namespace dialg {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

// Incremental row echelon form over Q. Rows are inserted one at a time and
// reduced against the stored pivots; stored rows have leading coefficient 1.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : pivot_of_(columns, kNone) {}

  std::size_t columns() const { return pivot_of_.size(); }
  std::size_t rank() const { return rows_.size(); }

  // Returns true if the row was independent of the rows inserted so far.
  bool insert(SparseRow row) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      const std::size_t p = pivot_of_[lead];
      if (p == kNone) {
        Rational inv = 1 / row.front().second;
        for (auto& [c, v] : row) v *= inv;
        pivot_of_[lead] = rows_.size();
        rows_.push_back(std::move(row));
        return true;
      }
      row = axpy(row, rows_[p], Rational(-row.front().second));
    }
    return false;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // a + s * b, dropping zeros.
  static SparseRow axpy(const SparseRow& a, const SparseRow& b, const Rational& s) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, Rational(s * b[j].second));
        ++j;
      } else {
        Rational v = a[i].second + s * b[j].second;
        if (v != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<std::size_t> pivot_of_;
  std::vector<SparseRow> rows_;
};

// Collects (column -> value) entries and emits a sorted sparse row.
inline SparseRow make_row(std::map<std::size_t, Rational> entries) {
  SparseRow row;
  for (auto& [c, v] : entries) {
    if (v != 0) row.emplace_back(c, std::move(v));
  }
  return row;
}

enum class RelationSet {
  Auto,        // all basis diagrams unless the relation count is large
  All,         // every basis diagram c of the bottom A_{n-m}
  Generators,  // algebra generators of A_{n-m} plus a random stability probe
};

struct RankOptions {
  RelationSet relations = RelationSet::Auto;
  std::size_t auto_threshold = 100000;  // |basis A_n| * |basis A_{n-m}| above this uses generators
  std::size_t extra_random = 100;
  std::uint64_t seed = 20240531;
  bool unsafe_large = false;
};

// Largest n accepted by rank computations without the unsafe override.
inline int rank_size_limit(Family f) { return f == Family::Partition ? 3 : 4; }

// Algebra generators of A_k: adjacent transpositions, plus family-specific
// non-invertible generators (contraction e_i, isolation p_i, merge b_i).
inline std::vector<Diagram> algebra_generators(int k, Family f) {
  std::vector<Diagram> gens;
  auto with = [&](std::vector<Block> special, std::vector<int> skip) {
    std::vector<Block> blocks = std::move(special);
    for (int l = 1; l <= k; ++l) {
      if (std::find(skip.begin(), skip.end(), l) == skip.end()) blocks.push_back({-l, l});
    }
    gens.push_back(canonicalize(k, std::move(blocks)));
  };
  for (int i = 1; i < k; ++i) with({{-i, i + 1}, {-(i + 1), i}}, {i, i + 1});
  if (f == Family::Brauer || f == Family::RookBrauer) {
    for (int i = 1; i < k; ++i) with({{-i, -(i + 1)}, {i, i + 1}}, {i, i + 1});
  }
  if (f != Family::Brauer) {
    for (int i = 1; i <= k; ++i) with({{-i}, {i}}, {i});
  }
  if (f == Family::Partition) {
    for (int i = 1; i < k; ++i) with({{-(i + 1), -i, i, i + 1}}, {i, i + 1});
  }
  return gens;
}

// The relation module span{a c - aug(c) a} inside A_n, kept symbolically so
// it can be specialized at many parameter values.
class TensorQuotient {
 public:
  TensorQuotient(int m, int n, Family f, const RankOptions& opts = {})
      : m_(m), n_(n), family_(f) {
    if (m < 0 || m > n) throw PreconditionViolation("rank oracle needs 0 <= m <= n");
    if (!opts.unsafe_large && n > rank_size_limit(f)) {
      throw BoundExceeded("rank oracle: n = " + std::to_string(n) + " exceeds the " +
                          std::string(to_string(f)) + " limit " +
                          std::to_string(rank_size_limit(f)));
    }
    basis_ = enumerate_basis(n, f);
    for (std::size_t i = 0; i < basis_.size(); ++i) column_.emplace(basis_[i], i);

    auto bottom = enumerate_basis(n - m, f);
    RelationSet mode = opts.relations;
    if (mode == RelationSet::Auto) {
      mode = basis_.size() * bottom.size() > opts.auto_threshold ? RelationSet::Generators
                                                                 : RelationSet::All;
    }
    std::vector<Diagram> cs = mode == RelationSet::All ? bottom : algebra_generators(n - m, f);
    for (const auto& c : cs) add_relations_for(embed_bottom(c, n, m));
    used_generators_ = mode == RelationSet::Generators;
    if (used_generators_) {
      std::mt19937_64 rng(opts.seed);
      std::uniform_int_distribution<std::size_t> pick_a(0, basis_.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_c(0, bottom.size() - 1);
      for (std::size_t i = 0; i < opts.extra_random; ++i) {
        extras_.push_back(relation(basis_[pick_a(rng)], embed_bottom(bottom[pick_c(rng)], n, m)));
      }
    }
  }

  std::size_t ambient_dimension() const { return basis_.size(); }
  bool used_generators() const { return used_generators_; }
  std::size_t relation_count() const { return relations_.size(); }

  // dim_Q of A_n / relations at (delta0, eps0). With a generator subset the
  // rank is re-checked after adding the random extra relations.
  std::size_t dimension_at(const Rational& delta0, const Rational& eps0) const {
    RowEchelon ech(basis_.size());
    std::map<Exponent, Rational> cache;
    for (const auto& r : relations_) ech.insert(specialize_relation(r, delta0, eps0, cache));
    const std::size_t rank = ech.rank();
    for (const auto& r : extras_) ech.insert(specialize_relation(r, delta0, eps0, cache));
    if (ech.rank() != rank) {
      throw VerificationFailure("generator relations are not stable under random extras at " +
                                to_string(delta0) + ", " + to_string(eps0));
    }
    return basis_.size() - rank;
  }

 private:
  struct Relation {
    std::size_t product_column;
    PolyCoeff coeff;
    std::size_t source_column;
    int aug;
  };

  Relation relation(const Diagram& a, const Diagram& c) const {
    auto t = multiply_basis(a, c, family_);
    return {column_.at(t.diagram), std::move(t.coeff), column_.at(a), is_invertible(c) ? 1 : 0};
  }

  void add_relations_for(const Diagram& c) {
    for (const auto& a : basis_) {
      auto r = relation(a, c);
      // a * id - a vanishes identically
      if (r.aug == 1 && r.product_column == r.source_column && r.coeff == PolyCoeff(1)) continue;
      relations_.push_back(std::move(r));
    }
  }

  static SparseRow specialize_relation(const Relation& r, const Rational& d0, const Rational& e0,
                                       std::map<Exponent, Rational>& cache) {
    Rational value = 0;
    for (const auto& [e, c] : r.coeff.terms()) {
      auto it = cache.find(e);
      if (it == cache.end()) {
        it = cache.emplace(e, specialize(PolyCoeff::monomial(1, e.delta, e.eps), d0, e0)).first;
      }
      value += Rational(c) * it->second;
    }
    std::map<std::size_t, Rational> entries;
    entries[r.product_column] += value;
    entries[r.source_column] -= r.aug;
    return make_row(std::move(entries));
  }

  int m_;
  int n_;
  Family family_;
  std::vector<Diagram> basis_;
  std::map<Diagram, std::size_t> column_;
  std::vector<Relation> relations_;
  std::vector<Relation> extras_;
  bool used_generators_ = false;
};

// Dimension over Q of A_n (x)_{A_{n-m}} R at (delta0, eps0), computed as the
// quotient of A_n by the augmentation relations.
inline std::size_t rank_oracle(int m, int n, Family f, const Rational& delta0,
                               const Rational& eps0, const RankOptions& opts = {}) {
  return TensorQuotient(m, n, f, opts).dimension_at(delta0, eps0);
}

// Rank over Q of a list of vectors given as coefficient maps.
inline std::size_t rational_rank(std::size_t columns, const std::vector<SparseRow>& rows) {
  RowEchelon ech(columns);
  for (const auto& r : rows) ech.insert(r);
  return ech.rank();
}

}  // namespace dialg
