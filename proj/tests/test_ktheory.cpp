#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mackey/ktheory.hpp"

using namespace mackey;
using namespace mackey::testing;

namespace {

IntMat make_mat(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMat m(rows.size(), rows.begin()->size());
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long long v : row) m(i, j++) = Zint(v);
    ++i;
  }
  return m;
}

Eigen::MatrixXi make_mati(std::initializer_list<std::initializer_list<int>> rows) {
  Eigen::MatrixXi m(rows.size(), rows.begin()->size());
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

MultiplicityGraph graph_from_vertex_matrix(const Eigen::MatrixXi& a,
                                           std::vector<int> degrees, int index) {
  MultiplicityGraph e;
  for (int i = 0; i < a.rows(); ++i) e.vertices.push_back("chi" + std::to_string(i));
  e.degrees = std::move(degrees);
  e.a = a;
  e.group_name = "synthetic";
  e.subgroup_members = {0};
  e.index = index;
  return e;
}

std::vector<long long> as_int64(const std::vector<Zint>& v) {
  std::vector<long long> out;
  for (const Zint& z : v) out.push_back(z.to_int64());
  return out;
}

}  // namespace

TEST_CASE("SNF of [[1,1],[1,1]] reproduces the textbook decomposition") {
  auto snf = smith_normal_form(make_mat({{1, 1}, {1, 1}}));
  CHECK(snf.rank == 1);
  CHECK(snf.c == make_mat({{1, 0}, {1, 1}}));
  CHECK(snf.n == make_mat({{1, 0}, {0, 0}}));
  CHECK(snf.d == make_mat({{1, 1}, {0, 1}}));
  // same shape for any q on the diagonal family
  auto snf7 = smith_normal_form(make_mat({{7, 7}, {7, 7}}));
  CHECK(snf7.c == make_mat({{1, 0}, {1, 1}}));
  CHECK(snf7.n == make_mat({{7, 0}, {0, 0}}));
  CHECK(snf7.d == make_mat({{1, 1}, {0, 1}}));
  CHECK(as_int64(snf7.minor_gcds) == std::vector<long long>{1, 7});
}

TEST_CASE("SNF of the identity is trivial") {
  auto snf = smith_normal_form(IntMat(IntMat::Identity(3, 3)));
  CHECK(snf.rank == 3);
  CHECK(snf.c == IntMat(IntMat::Identity(3, 3)));
  CHECK(snf.n == IntMat(IntMat::Identity(3, 3)));
  CHECK(snf.d == IntMat(IntMat::Identity(3, 3)));
}

TEST_CASE("SNF invariant factors of [[3,2],[2,3]] are (1, 5)") {
  auto snf = smith_normal_form(make_mat({{3, 2}, {2, 3}}));
  CHECK(as_int64(snf.invariant_factors) == std::vector<long long>{1, 5});
  CHECK(as_int64(minor_gcds(make_mat({{3, 2}, {2, 3}}))) ==
        std::vector<long long>{1, 1, 5});
}

TEST_CASE("minor gcd oracle") {
  CHECK(as_int64(minor_gcds(make_mat({{7, 7}, {7, 7}}))) == std::vector<long long>{1, 7});
  CHECK_THROWS_AS(minor_gcds(IntMat(IntMat::Identity(9, 9))), ValidationError);
}

TEST_CASE("SNF property suite on random matrices") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<int> entry(-20, 20);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = dim(rng);
    const int m = dim(rng);
    IntMat b(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) b(i, j) = Zint(entry(rng));
    // decomposition verifies B = C N D and integer inverses internally
    auto snf = smith_normal_form(b);
    for (std::size_t j = 1; j < snf.invariant_factors.size(); ++j) {
      CHECK((snf.invariant_factors[j] % snf.invariant_factors[j - 1]).is_zero());
    }
    auto oracle = minor_gcds(b);
    REQUIRE(oracle.size() == snf.invariant_factors.size() + 1);
    for (std::size_t j = 1; j < oracle.size(); ++j) {
      CHECK(snf.invariant_factors[j - 1] == oracle[j] / oracle[j - 1]);
    }
    // kernel vectors are genuine
    auto kernel = kernel_basis(snf);
    for (int c = 0; c < kernel.cols(); ++c) {
      IntVec image = b * kernel.col(c);
      for (int i = 0; i < image.size(); ++i) CHECK(image[i].is_zero());
    }
    CHECK(kernel.cols() == m - snf.rank);
  }
}

TEST_CASE("kernel of [[q,q],[q,q]] is spanned by (1,-1)") {
  auto snf = smith_normal_form(make_mat({{5, 5}, {5, 5}}));
  auto kernel = kernel_basis(snf);
  REQUIRE(kernel.cols() == 1);
  CHECK(kernel(0, 0) == Zint(1));
  CHECK(kernel(1, 0) == Zint(-1));
}

TEST_CASE("ktheory of the S3 graph: both K-groups are Z") {
  auto e = graph_from_vertex_matrix(make_mati({{2, 1}, {1, 2}}), {1, 1}, 3);
  auto k = ktheory_of_graph(e);
  CHECK(k.torsion.empty());
  CHECK(k.free_rank_k0 == 1);
  CHECK(k.free_rank_k1 == 1);
  CHECK(as_int64(k.identity_class) == std::vector<long long>{0});
}

TEST_CASE("ktheory of the r=2, q=1 graph: K0 = Z3, [1]0 = 1") {
  auto e = graph_from_vertex_matrix(make_mati({{3, 1}, {1, 3}}), {1, 1}, 4);
  auto k = ktheory_of_graph(e);
  CHECK(as_int64(k.torsion) == std::vector<long long>{3});
  CHECK(k.free_rank_k0 == 0);
  CHECK(k.free_rank_k1 == 0);
  CHECK(as_int64(k.identity_class) == std::vector<long long>{1});
}

TEST_CASE("ktheory of the r=3, q=6 graph: K0 = Z2 + Z14, [1]0 = (0,1)") {
  auto e = graph_from_vertex_matrix(make_mati({{9, 6}, {6, 9}}), {1, 1}, 15);
  auto k = ktheory_of_graph(e);
  CHECK(as_int64(k.torsion) == std::vector<long long>{2, 14});
  CHECK(k.free_rank_k0 == 0);
  CHECK(as_int64(k.identity_class) == std::vector<long long>{0, 1});
}

TEST_CASE("rank bookkeeping: rank + free rank = n") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    IntMat b(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b(i, j) = Zint(entry(rng));
    auto k = ktheory_of_matrix(b);
    CHECK(k.snf.rank + k.free_rank_k1 == 3);
    CHECK(k.free_rank_k0 == k.free_rank_k1);
  }
}

TEST_CASE("identity class is stable under vertex permutations") {
  // permuting the vertices conjugates B; invariants and the canonical
  // identity class must not move
  std::vector<Eigen::MatrixXi> cases = {
      make_mati({{2, 1}, {1, 2}}),  make_mati({{3, 1}, {1, 3}}),
      make_mati({{9, 6}, {6, 9}}),  make_mati({{5, 3}, {3, 5}}),
      make_mati({{12, 9}, {9, 12}}),
  };
  for (const auto& a : cases) {
    auto base = ktheory_of_graph(graph_from_vertex_matrix(a, {1, 1}, a(0, 0) + a(0, 1)));
    Eigen::MatrixXi swapped(2, 2);
    swapped << a(1, 1), a(1, 0), a(0, 1), a(0, 0);
    auto perm = ktheory_of_graph(
        graph_from_vertex_matrix(swapped, {1, 1}, a(0, 0) + a(0, 1)));
    CHECK(as_int64(base.torsion) == as_int64(perm.torsion));
    CHECK(base.free_rank_k0 == perm.free_rank_k0);
    CHECK(as_int64(base.identity_class) == as_int64(perm.identity_class));
  }
  // a higher-rank case: central-style 4-vertex graph
  auto central = graph_from_vertex_matrix(
      make_mati({{3, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}}),
      {1, 1, 1, 1}, 3);
  auto k_central = ktheory_of_graph(central);
  CHECK(as_int64(k_central.torsion) == std::vector<long long>{2, 2, 2, 2});
  CHECK(as_int64(k_central.identity_class) ==
        as_int64(canonical_class({Zint(2), Zint(2), Zint(2), Zint(2)}, 0,
                                 {Zint(1), Zint(1), Zint(1), Zint(1)}, {})));
}

TEST_CASE("canonical_class basics") {
  // units act on Z_16: orbit of 2 is {2, 6, 10, 14}, minimum 2
  CHECK(as_int64(canonical_class({Zint(16)}, 0, {Zint(6)}, {})) ==
        std::vector<long long>{2});
  // gcd with the modulus is the canonical single-torsion representative
  CHECK(as_int64(canonical_class({Zint(40)}, 0, {Zint(34)}, {})) ==
        std::vector<long long>{2});
  // free part canonicalizes to (gcd, 0, ...)
  CHECK(as_int64(canonical_class({}, 2, {}, {Zint(-4), Zint(6)})) ==
        std::vector<long long>{2, 0});
  // free coordinate with gcd 1 can shift the torsion part away entirely
  CHECK(as_int64(canonical_class({Zint(5)}, 1, {Zint(3)}, {Zint(1)})) ==
        std::vector<long long>{0, 1});
  // (0,1) in Z2 + Z14 is already minimal
  CHECK(as_int64(canonical_class({Zint(2), Zint(14)}, 0, {Zint(0)
, Zint(1)}, {})) == std::vector<long long>{0, 1});
}
