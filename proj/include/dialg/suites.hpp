#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dialg/diagram.hpp"
#include "dialg/fi.hpp"
#include "dialg/hom.hpp"
#include "dialg/parallel.hpp"
#include "dialg/product.hpp"
#include "dialg/rank.hpp"
#include "dialg/report.hpp"
#include "dialg/verify.hpp"

namespace dialg {

// Exhaustive and sampled law checks shared by the CLI and the test suites.
// Each runs its independent cases through parallel_for and merges failures in
// case order.

namespace detail {

inline constexpr std::size_t kMaxListedFailures = 50;

// Runs `count` cases; `body(i, fail)` reports problems through fail(message).
template <class Body>
void run_cases(Report& r, std::size_t count, Body&& body) {
  std::vector<std::vector<std::string>> per_case(count);
  parallel_for(count, [&](std::size_t i) {
    auto fail = [&](std::string msg) { per_case[i].push_back(std::move(msg)); };
    try {
      body(i, fail);
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
  });
  long long failures = 0;
  for (auto& list : per_case) {
    for (auto& msg : list) {
      ++failures;
      if (r.failures.size() < kMaxListedFailures) r.failures.push_back(std::move(msg));
    }
  }
  if (failures > static_cast<long long>(r.failures.size())) r.extras.emplace_back("failure_count", failures);
}

inline Report make_report(std::string check, Family f, std::optional<int> m, int n) {
  Report r;
  r.check = std::move(check);
  r.family = f;
  r.m = m;
  r.n = n;
  return r;
}

}  // namespace detail

// (pq)r = p(qr) over basis triples of A_n: all of them when `samples` is 0,
// otherwise `samples` random triples.
inline Report check_associativity(int n, Family f, std::size_t samples = 0, std::uint64_t seed = 1) {
  auto basis = enumerate_basis(n, f);
  Report r = detail::make_report("associativity", f, std::nullopt, n);
  const std::size_t b = basis.size();
  std::vector<std::array<std::size_t, 3>> triples;
  if (samples == 0) {
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j)
        for (std::size_t k = 0; k < b; ++k) triples.push_back({i, j, k});
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, b - 1);
    for (std::size_t s = 0; s < samples; ++s) triples.push_back({pick(rng), pick(rng), pick(rng)});
  }
  r.total = triples.size();
  detail::run_cases(r, triples.size(), [&](std::size_t t, auto&& fail) {
    const auto& p = basis[triples[t][0]];
    const auto& q = basis[triples[t][1]];
    const auto& s = basis[triples[t][2]];
    auto left = lin_multiply(multiply(p, q, f), LinComb(s, f));
    auto right = lin_multiply(LinComb(p, f), multiply(q, s, f));
    if (left != right) fail("(pq)r != p(qr) for " + describe(p) + " | " + describe(q) + " | " + describe(s));
  });
  return r;
}

// id d = d id = 1 d for every basis d.
inline Report check_identity_law(int n, Family f) {
  auto basis = enumerate_basis(n, f);
  Report r = detail::make_report("identity", f, std::nullopt, n);
  r.total = basis.size();
  const Diagram id = Diagram::identity(n);
  detail::run_cases(r, basis.size(), [&](std::size_t i, auto&& fail) {
    LinComb expect(basis[i], f);
    if (multiply(id, basis[i], f) != expect || multiply(basis[i], id, f) != expect) {
      fail("identity law fails for " + describe(basis[i]));
    }
  });
  return r;
}

// Products stay in the family, Rook products have no loops, propagating
// number is submultiplicative and the augmentation is multiplicative.
inline Report check_product_laws(int n, Family f) {
  auto basis = enumerate_basis(n, f);
  Report r = detail::make_report("product-laws", f, std::nullopt, n);
  r.total = basis.size() * basis.size();
  detail::run_cases(r, basis.size(), [&](std::size_t i, auto&& fail) {
    const auto& p = basis[i];
    for (const auto& q : basis) {
      auto stats = conjoin(p, q);
      auto prod = multiply(p, q, f);
      if (!in_family(stats.result, f)) fail("closure: " + describe(p) + " * " + describe(q));
      if (stats.middle_total != stats.loops + stats.contractible) fail("middle count split: " + describe(p));
      if (f == Family::Rook && stats.loops != 0) fail("rook loop: " + describe(p) + " * " + describe(q));
      if (propagating_number(stats.result) >
          std::min(propagating_number(p), propagating_number(q))) {
        fail("propagating number grew: " + describe(p) + " * " + describe(q));
      }
      if (augmentation(prod) != augmentation(p) * augmentation(q)) {
        fail("augmentation not multiplicative: " + describe(p) + " * " + describe(q));
      }
    }
  });
  return r;
}

// project(a c, m) = aug(c) project(a, m) for basis a of A_n and basis c of the
// bottom A_{n-m}, every m.
inline Report check_well_definedness(int n, Family f) {
  auto basis = enumerate_basis(n, f);
  Report r = detail::make_report("well-definedness", f, std::nullopt, n);
  std::vector<std::pair<int, Diagram>> cs;
  for (int m = 0; m <= n; ++m) {
    for (const auto& c : enumerate_basis(n - m, f)) cs.emplace_back(m, embed_bottom(c, n, m));
  }
  r.total = cs.size() * basis.size();
  detail::run_cases(r, cs.size(), [&](std::size_t i, auto&& fail) {
    const auto& [m, c] = cs[i];
    const PolyCoeff aug = augmentation(c);
    for (const auto& a : basis) {
      if (project(multiply(a, c, f), m) != aug * project(LinComb(a, f), m)) {
        fail("project(a c) != aug(c) project(a) at m=" + std::to_string(m) + ": a " + describe(a) +
             ", c " + describe(c));
      }
    }
  });
  return r;
}

// project(lift(x), m) = x for every basis x of Hom(m, n).
inline Report check_section(int m, int n, Family f) {
  auto basis = enumerate_hom_basis(m, n, f);
  Report r = detail::make_report("section", f, m, n);
  r.total = basis.size();
  detail::run_cases(r, basis.size(), [&](std::size_t i, auto&& fail) {
    if (project(lift(basis[i]), m, f) != HomElement(basis[i])) fail("project(lift(x)) != x for " + describe(basis[i]));
  });
  return r;
}

// Every basis diagram of J in A_n (all m) admits a verified factorization.
inline Report check_factorizations(int n, Family f) {
  auto basis = enumerate_basis(n, f);
  Report r = detail::make_report("factor", f, std::nullopt, n);
  std::vector<std::pair<int, std::size_t>> cases;
  for (int m = 0; m <= n; ++m) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (is_in_J(basis[i], m, f)) cases.emplace_back(m, i);
    }
  }
  r.total = cases.size();
  std::vector<int> tags(cases.size(), -1);
  detail::run_cases(r, cases.size(), [&](std::size_t i, auto&& fail) {
    auto w = factor_J(basis[cases[i].second], cases[i].first, f);
    tags[i] = static_cast<int>(w.case_tag);
    (void)fail;
  });
  long long by_case[3] = {0, 0, 0};
  for (int t : tags) {
    if (t >= 0) ++by_case[t];
  }
  r.extras.emplace_back("isolated_node", by_case[0]);
  r.extras.emplace_back("right_right", by_case[1]);
  r.extras.emplace_back("rook_isolated", by_case[2]);
  return r;
}

// reduce_generator on every basis element of Hom(m, j).
inline Report check_generation(int m, int j, Family f) {
  auto basis = enumerate_hom_basis(m, j, f);
  Report r = detail::make_report("generation", f, m, j);
  r.degree_key = "j";
  r.total = basis.size();
  detail::run_cases(r, basis.size(), [&](std::size_t i, auto&& fail) {
    (void)reduce_generator(basis[i], f);
    (void)fail;
  });
  return r;
}

inline Report check_spanning(int m, int n, Family f, const Rational& delta0, const Rational& eps0) {
  Report r = detail::make_report("spanning", f, m, n);
  r.parameters = {{"delta", to_string(delta0)}, {"eps", to_string(eps0)}};
  r.total = count_hom_basis(m, n, f);
  if (!spanning_check(m, n, f, delta0, eps0)) {
    r.failures.push_back("FI images of degree " + std::to_string(n - 1) + " do not span Hom(" +
                         std::to_string(m) + "," + std::to_string(n) + ")");
  }
  return r;
}

// |hom basis| = rank oracle at each specialization.
inline Report check_rank_agreement(int m, int n, Family f,
                                   const std::vector<std::pair<Rational, Rational>>& specs,
                                   const RankOptions& opts = {}) {
  Report r = detail::make_report("rank-agreement", f, m, n);
  const std::size_t expected = count_hom_basis(m, n, f);
  TensorQuotient quotient(m, n, f, opts);
  r.total = specs.size();
  r.extras.emplace_back("basis_count", static_cast<long long>(expected));
  r.extras.emplace_back("generator_relations", quotient.used_generators() ? 1 : 0);
  detail::run_cases(r, specs.size(), [&](std::size_t i, auto&& fail) {
    const auto& [d0, e0] = specs[i];
    std::size_t dim = quotient.dimension_at(d0, e0);
    if (dim != expected) {
      fail("rank " + std::to_string(dim) + " != basis count " + std::to_string(expected) +
           " at delta=" + to_string(d0) + " eps=" + to_string(e0));
    }
  });
  return r;
}

// F(g o f) = F(g) o F(f) (G for Partition) for all composable injections with
// target degree at most max_n.
inline Report check_functoriality(int max_n, Family fam) {
  Report r = detail::make_report("functoriality", fam, std::nullopt, max_n);
  std::vector<std::array<int, 3>> chains;
  for (int n = 0; n <= max_n; ++n)
    for (int m = 0; m <= n; ++m)
      for (int l = 0; l <= m; ++l) chains.push_back({l, m, n});
  std::vector<std::size_t> counts(chains.size(), 0);
  detail::run_cases(r, chains.size(), [&](std::size_t c, auto&& fail) {
    auto [l, m, n] = chains[c];
    for (const auto& g : enumerate_fi(m, n)) {
      HomElement Fg(functor_image(g, fam));
      for (const auto& f : enumerate_fi(l, m)) {
        ++counts[c];
        if (HomElement(functor_image(compose_fi(g, f), fam)) != compose(Fg, HomElement(functor_image(f, fam)))) {
          fail("functor fails on " + describe(g) + " o " + describe(f));
        }
      }
    }
    if (m == n && l == m) {
      auto id = HomElement(functor_image(FIMorphism::identity(n), fam));
      if (id != hom_identity(n, fam)) fail("image of identity is not the unit of End(" + std::to_string(n) + ")");
    }
  });
  r.total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  return r;
}

// (x o y) o z = x o (y o z) over basis triples of all chains k <= l <= m <= n
// with n <= max_n. Chains with more than `cap` triples are sampled.
inline Report check_compose_associativity(int max_n, Family f, std::size_t cap = 20000,
                                          std::uint64_t seed = 7) {
  Report r = detail::make_report("compose-associativity", f, std::nullopt, max_n);
  struct Case {
    BlobDiagram x, y, z;
  };
  std::vector<Case> cases;
  std::mt19937_64 rng(seed);
  long long sampled_chains = 0;
  for (int n = 0; n <= max_n; ++n)
    for (int m = 0; m <= n; ++m)
      for (int l = 0; l <= m; ++l)
        for (int k = 0; k <= l; ++k) {
          auto X = enumerate_hom_basis(m, n, f);
          auto Y = enumerate_hom_basis(l, m, f);
          auto Z = enumerate_hom_basis(k, l, f);
          const std::size_t total = X.size() * Y.size() * Z.size();
          if (total <= cap) {
            for (const auto& x : X)
              for (const auto& y : Y)
                for (const auto& z : Z) cases.push_back({x, y, z});
          } else {
            ++sampled_chains;
            std::uniform_int_distribution<std::size_t> px(0, X.size() - 1), py(0, Y.size() - 1),
                pz(0, Z.size() - 1);
            for (std::size_t s = 0; s < cap; ++s) cases.push_back({X[px(rng)], Y[py(rng)], Z[pz(rng)]});
          }
        }
  r.total = cases.size();
  r.extras.emplace_back("sampled_chains", sampled_chains);
  detail::run_cases(r, cases.size(), [&](std::size_t i, auto&& fail) {
    HomElement x(cases[i].x), y(cases[i].y), z(cases[i].z);
    if (compose(compose(x, y), z) != compose(x, compose(y, z))) {
      fail("compose not associative: " + describe(cases[i].x) + " | " + describe(cases[i].y) + " | " +
           describe(cases[i].z));
    }
  });
  return r;
}

// fi_act by any permutation sends basis elements to basis elements.
inline Report check_permutation_action(int m, int n, Family f) {
  auto basis = enumerate_hom_basis(m, n, f);
  auto perms = enumerate_fi(n, n);
  Report r = detail::make_report("permutation-action", f, m, n);
  r.total = basis.size() * perms.size();
  detail::run_cases(r, perms.size(), [&](std::size_t i, auto&& fail) {
    for (const auto& x : basis) {
      auto v = fi_act(perms[i], HomElement(x));
      if (v.terms().size() != 1 || v.terms().begin()->second != PolyCoeff(1)) {
        fail("permutation " + describe(perms[i]) + " does not permute " + describe(x));
      }
    }
  });
  return r;
}

}  // namespace dialg
