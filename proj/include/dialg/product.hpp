#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dialg/diagram.hpp"
#include "dialg/error.hpp"
#include "dialg/poly.hpp"
#include "dialg/union_find.hpp"

namespace dialg {

// Result of stacking p on top of q (p's right column glued to q's left).
struct ConjoinStats {
  Diagram result;
  int middle_total = 0;  // components meeting only the middle column
  int loops = 0;         // middle-only components containing a cycle
  int contractible = 0;  // middle-only components that are trees (paths, points)
};

// Builds the three-column graph: left column = p's left nodes, middle = p's
// right nodes identified with q's left nodes, right column = q's right nodes.
// Each block of size s contributes a path of s-1 edges, so for blocks of size
// <= 2 a middle-only component is a loop iff it has as many edges as nodes.
inline ConjoinStats conjoin(const Diagram& p, const Diagram& q) {
  if (p.size() != q.size()) {
    throw SizeMismatch("conjoin: sizes " + std::to_string(p.size()) + " and " +
                       std::to_string(q.size()));
  }
  const int n = p.size();
  const auto un = static_cast<std::size_t>(n);
  // left: -i -> i-1, middle: i -> n+i-1, right: i -> 2n+i-1
  auto p_index = [&](int v) { return static_cast<std::size_t>(v < 0 ? -v - 1 : n + v - 1); };
  auto q_index = [&](int v) { return static_cast<std::size_t>(v < 0 ? n - v - 1 : 2 * n + v - 1); };

  detail::UnionFind uf(3 * un);
  for (const auto& b : p.blocks()) {
    for (std::size_t i = 1; i < b.size(); ++i) uf.unite(p_index(b[0]), p_index(b[i]));
  }
  for (const auto& b : q.blocks()) {
    for (std::size_t i = 1; i < b.size(); ++i) uf.unite(q_index(b[0]), q_index(b[i]));
  }

  std::vector<int> edges(3 * un, 0);
  for (const auto& b : p.blocks()) edges[uf.find(p_index(b[0]))] += static_cast<int>(b.size()) - 1;
  for (const auto& b : q.blocks()) edges[uf.find(q_index(b[0]))] += static_cast<int>(b.size()) - 1;

  std::vector<char> touches_outer(3 * un, 0);
  for (std::size_t i = 0; i < un; ++i) {
    touches_outer[uf.find(i)] = 1;
    touches_outer[uf.find(2 * un + i)] = 1;
  }

  ConjoinStats stats;
  std::vector<int> nodes(3 * un, 0);
  for (std::size_t i = un; i < 2 * un; ++i) ++nodes[uf.find(i)];
  for (std::size_t r = 0; r < 3 * un; ++r) {
    if (nodes[r] == 0 || touches_outer[r]) continue;
    ++stats.middle_total;
    if (edges[r] >= nodes[r]) {
      ++stats.loops;
    } else {
      ++stats.contractible;
    }
  }

  std::vector<int> component(2 * un);
  for (int idx = 0; idx < 2 * n; ++idx) {
    int label = detail::node_label(idx, n);
    std::size_t node = label < 0 ? static_cast<std::size_t>(-label - 1)
                                 : 2 * un + static_cast<std::size_t>(label - 1);
    component[static_cast<std::size_t>(idx)] = static_cast<int>(uf.find(node));
  }
  stats.result = diagram_from_components(n, component);
  return stats;
}

// A scalar multiple of one basis diagram.
struct Term {
  PolyCoeff coeff;
  Diagram diagram;
};

// Coefficient of a conjoined product: d^r for Partition and Brauer, d^c e^k
// for RookBrauer, e^k for Rook.
inline PolyCoeff product_coefficient(const ConjoinStats& s, Family f) {
  switch (f) {
    case Family::Partition:
    case Family::Brauer:
      return PolyCoeff::delta(static_cast<unsigned>(s.middle_total));
    case Family::RookBrauer:
      return PolyCoeff::monomial(1, static_cast<unsigned>(s.loops),
                                 static_cast<unsigned>(s.contractible));
    case Family::Rook:
      return PolyCoeff::eps(static_cast<unsigned>(s.contractible));
  }
  return {};
}

inline void require_family(const Diagram& d, Family f, const char* where) {
  if (!in_family(d, f)) {
    throw FamilyMismatch(std::string(where) + ": diagram is not a " + std::string(to_string(f)) +
                         " diagram");
  }
}

inline Term multiply_basis(const Diagram& p, const Diagram& q, Family f) {
  require_family(p, f, "multiply");
  require_family(q, f, "multiply");
  auto stats = conjoin(p, q);
  return {product_coefficient(stats, f), std::move(stats.result)};
}

// Element of A_n: a finite sum of basis diagrams with polynomial coefficients.
class LinComb {
 public:
  using TermMap = std::map<Diagram, PolyCoeff>;

  LinComb(int n, Family f) : n_(n), family_(f) {}
  LinComb(const Diagram& d, Family f, PolyCoeff c = 1) : n_(d.size()), family_(f) {
    add(d, std::move(c));
  }

  int size() const { return n_; }
  Family family() const { return family_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PolyCoeff coefficient(const Diagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? PolyCoeff{} : it->second;
  }

  void add(const Diagram& d, const PolyCoeff& c) {
    if (d.size() != n_) throw SizeMismatch("LinComb: diagram size differs");
    require_family(d, family_, "LinComb");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    check_compatible(o);
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    check_compatible(o);
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const PolyCoeff& s, const LinComb& a) {
    LinComb r(a.n_, a.family_);
    for (const auto& [d, c] : a.terms_) r.add(d, s * c);
    return r;
  }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.n_ == b.n_ && a.family_ == b.family_ && a.terms_ == b.terms_;
  }

  void check_compatible(const LinComb& o) const {
    if (o.n_ != n_) throw SizeMismatch("LinComb sizes differ");
    if (o.family_ != family_) throw FamilyMismatch("LinComb families differ");
  }

 private:
  int n_;
  Family family_;
  TermMap terms_;
};

inline LinComb multiply(const Diagram& p, const Diagram& q, Family f) {
  auto t = multiply_basis(p, q, f);
  return LinComb(t.diagram, f, std::move(t.coeff));
}

inline LinComb lin_multiply(const LinComb& a, const LinComb& b) {
  a.check_compatible(b);
  LinComb out(a.size(), a.family());
  for (const auto& [p, cp] : a.terms()) {
    for (const auto& [q, cq] : b.terms()) {
      auto t = multiply_basis(p, q, a.family());
      out.add(t.diagram, cp * cq * t.coeff);
    }
  }
  return out;
}

// The trivial-module character: 1 on permutation diagrams, 0 on the rest.
inline PolyCoeff augmentation(const Diagram& d) { return is_invertible(d) ? PolyCoeff(1) : PolyCoeff(); }

inline PolyCoeff augmentation(const LinComb& a) {
  PolyCoeff sum;
  for (const auto& [d, c] : a.terms()) {
    if (is_invertible(d)) sum += c;
  }
  return sum;
}

}  // namespace dialg
