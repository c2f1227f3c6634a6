#pragma once

// Shared test fixtures and independent oracles. Everything here recomputes
// from first principles (permutation composition, brute-force closure,
// numeric eigendecomposition) so library results are checked against an
// implementation-independent route.

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "mackey/group.hpp"

namespace mackey::testing {

inline GroupPtr s3() {
  return from_permutations({{1, 0, 2}, {1, 2, 0}}, 3, "S3");
}

inline GroupPtr s4() {
  return from_permutations({{1, 0, 2, 3}, {1, 2, 3, 0}}, 4, "S4");
}

inline GroupPtr a4() {
  return from_permutations({{1, 0, 3, 2}, {1, 2, 0, 3}}, 4, "A4");
}

inline GroupPtr d4() {
  return from_permutations({{1, 2, 3, 0}, {2, 1, 0, 3}}, 4, "D4");
}

// Q8 by left multiplication on {1, i, j, k, -1, -i, -j, -k}
inline GroupPtr q8() {
  return from_permutations({{1, 4, 3, 6, 5, 0, 7, 2}, {2, 7, 4, 1, 6, 3, 0, 5}}, 8, "Q8");
}

/// Order of the closure of permutation generators, counted independently.
inline int closure_order_oracle(std::vector<std::vector<int>> gens, int degree) {
  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : frontier) {
      for (const auto& g : gens) {
        std::vector<int> c(degree);
        for (int i = 0; i < degree; ++i) c[i] = a[g[i]];
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  return static_cast<int>(seen.size());
}

/// Backtracking isomorphism search; intended for orders <= 16.
inline bool isomorphic_oracle(const FiniteGroup& g1, const FiniteGroup& g2) {
  if (g1.order != g2.order) return false;
  const int n = g1.order;
  std::vector<int> ord1(n), ord2(n);
  for (int x = 0; x < n; ++x) {
    ord1[x] = element_order(g1, x);
    ord2[x] = element_order(g2, x);
  }
  {
    std::multiset<int> p1(ord1.begin(), ord1.end()), p2(ord2.begin(), ord2.end());
    if (p1 != p2) return false;
  }
  std::vector<int> f(n, -1);
  std::vector<char> used(n, 0);
  std::vector<int> mapped;

  auto consistent = [&](int a) {
    for (int x : mapped) {
      int p = g1.mul(x, a);
      if (f[p] != -1 && f[p] != g2.mul(f[x], f[a])) return false;
      p = g1.mul(a, x);
      if (f[p] != -1 && f[p] != g2.mul(f[a], f[x])) return false;
    }
    int p = g1.mul(a, a);
    return f[p] == -1 || f[p] == g2.mul(f[a], f[a]);
  };

  std::function<bool(int)> dfs = [&](int a) -> bool {
    if (a == n) return true;
    if (f[a] != -1) return dfs(a + 1);
    for (int b = 0; b < n; ++b) {
      if (used[b] || ord1[a] != ord2[b]) continue;
      f[a] = b;
      used[b] = 1;
      mapped.push_back(a);
      if (consistent(a) && dfs(a + 1)) return true;
      mapped.pop_back();
      used[b] = 0;
      f[a] = -1;
    }
    return false;
  };
  f[g1.identity] = g2.identity;
  used[g2.identity] = 1;
  mapped.push_back(g1.identity);
  return dfs(0);
}

/// Numeric character table: class-sum matrices diagonalized in double
/// precision. Returns one row per irreducible with a value per ELEMENT
/// (row order arbitrary). Tolerance-grade oracle only.
inline std::vector<std::vector<std::complex<double>>> numeric_character_table(
    const FiniteGroup& g) {
  const int n = g.order;
  std::vector<int> class_of(n, -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (class_of[x] >= 0) continue;
    std::vector<int> cls;
    std::set<int> seen;
    for (int s = 0; s < n; ++s) {
      int y = g.mul(g.mul(s, x), g.inv(s));
      if (seen.insert(y).second) cls.push_back(y);
    }
    for (int y : cls) class_of[y] = static_cast<int>(classes.size());
    classes.push_back(std::move(cls));
  }
  const int r = static_cast<int>(classes.size());
  const int id_class = class_of[g.identity];

  std::vector<Eigen::MatrixXd> mats(r, Eigen::MatrixXd::Zero(r, r));
  for (int k = 0; k < r; ++k) {
    const int z = classes[k].front();
    for (int x = 0; x < n; ++x) {
      mats[class_of[x]](class_of[g.mul(g.inv(x), z)], k) += 1.0;
    }
  }

  std::mt19937_64 rng(271828);
  std::uniform_real_distribution<double> coeff(0.25, 1.0);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(r, r);
    for (int i = 0; i < r; ++i) t += coeff(rng) * mats[i];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(t);
    if (solver.info() != Eigen::Success) continue;
    auto lambda = solver.eigenvalues();
    double min_gap = 1e300;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) min_gap = std::min(min_gap, std::abs(lambda[i] - lambda[j]));
    if (r > 1 && min_gap < 1e-6) continue;

    std::vector<std::vector<std::complex<double>>> out;
    for (int i = 0; i < r; ++i) {
      Eigen::VectorXcd v = solver.eigenvectors().col(i);
      if (std::abs(v[id_class]) < 1e-9) return {};  // degenerate draw
      Eigen::VectorXcd omega = v / v[id_class];
      double s = 0;
      for (int j = 0; j < r; ++j) s += std::norm(omega[j]) / classes[j].size();
      const double d = std::sqrt(n / s);
      std::vector<std::complex<double>> row(n);
      for (int x = 0; x < n; ++x) {
        const int j = class_of[x];
        row[x] = d * omega[j] / static_cast<double>(classes[j].size());
      }
      out.push_back(std::move(row));
    }
    return out;
  }
  return {};
}

/// All distinct subgroups generated by at most two elements.
inline std::vector<Subgroup> subgroups_upto_2gen(const GroupPtr& g) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  auto add = [&](const std::vector<int>& gens) {
    Subgroup h = subgroup_generated(g, gens);
    if (seen.insert(h.members).second) out.push_back(std::move(h));
  };
  add({});
  for (int a = 0; a < g->order; ++a) {
    add({a});
    for (int b = a + 1; b < g->order; ++b) add({a, b});
  }
  return out;
}

/// Groups of order <= 24 reachable through the constructors, plus S4 and a
/// couple of permutation-group extras for nonabelian coverage.
inline std::vector<GroupPtr> small_corpus() {
  std::vector<GroupPtr> out;
  for (int n = 1; n <= 24; ++n) out.push_back(cyclic(n));
  for (int n = 2; n <= 12; ++n) out.push_back(semidirect_inversion(n));
  for (int a = 2; a <= 12; ++a) {
    for (int b = a; a * b <= 24; ++b) out.push_back(direct_product(cyclic(a), cyclic(b)));
  }
  for (int a = 2; a <= 6; ++a) {
    for (int b = 2; 2 * a * b <= 24; ++b) {
      out.push_back(direct_product(cyclic(a), semidirect_inversion(b)));
    }
  }
  out.push_back(s4());
  out.push_back(a4());
  out.push_back(q8());
  return out;
}

}  // namespace mackey::testing
