#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "helpers.hpp"
#include "mackey/chartable.hpp"

using namespace mackey;
using namespace mackey::testing;

namespace {

// per-element numeric values of the exact table, for oracle comparison
std::vector<std::vector<std::complex<double>>> evaluate_exact(const CharacterTable& t) {
  const auto& cs = *t.cls;
  const int n = cs.group->order;
  const double tau = 2.0 * std::acos(-1.0) / static_cast<double>(cs.exponent);
  std::vector<std::vector<std::complex<double>>> out;
  for (const auto& chi : t.irreducibles) {
    std::vector<std::complex<double>> row(n);
    for (int x = 0; x < n; ++x) {
      const Cyc& v = chi.value_at(x);
      std::complex<double> acc = 0;
      for (std::int64_t i = 0; i < v.e; ++i) {
        if (v.coeffs[i] == 0) continue;
        acc += static_cast<double>(v.coeffs[i]) *
               std::complex<double>(std::cos(tau * i), std::sin(tau * i));
      }
      row[x] = acc;
    }
    out.push_back(std::move(row));
  }
  return out;
}

bool rows_match(const std::vector<std::complex<double>>& a,
                const std::vector<std::complex<double>>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > 1e-6) return false;
  }
  return true;
}

// every exact row must match exactly one oracle row and vice versa
void check_against_numeric_oracle(const GroupPtr& g) {
  CharacterTable table = character_table(g);
  auto exact = evaluate_exact(table);
  auto oracle = numeric_character_table(*g);
  REQUIRE_MESSAGE(!oracle.empty(), "numeric oracle failed to separate eigenvalues");
  REQUIRE(exact.size() == oracle.size());
  std::vector<char> used(oracle.size(), 0);
  for (const auto& row : exact) {
    bool found = false;
    for (std::size_t i = 0; i < oracle.size() && !found; ++i) {
      if (!used[i] && rows_match(row, oracle[i])) {
        used[i] = 1;
        found = true;
      }
    }
    CHECK_MESSAGE(found, "no oracle row matches an exact character of " << g->name);
  }
}

Cyc cyc_int(std::int64_t e, std::int64_t v) { return Cyc::integer(e, v); }

}  // namespace

TEST_CASE("Z2 character table is [[1,1],[1,-1]]") {
  auto table = character_table(cyclic(2));
  REQUIRE(table.count() == 2);
  CHECK(table.degrees == std::vector<int>{1, 1});
  CHECK(integer_value(table.irreducibles[0].values[0]) == Zint(1));
  CHECK(integer_value(table.irreducibles[0].values[1]) == Zint(1));
  CHECK(integer_value(table.irreducibles[1].values[0]) == Zint(1));
  CHECK(integer_value(table.irreducibles[1].values[1]) == Zint(-1));
  // -1 is carried as the order-2 root of unity itself
  CHECK(table.irreducibles[1].values[1] == Cyc::monomial(2, 1));
}

TEST_CASE("Z4 characters take values in 4th roots of unity") {
  auto table = character_table(cyclic(4));
  REQUIRE(table.count() == 4);
  CHECK(table.degrees == std::vector<int>{1, 1, 1, 1});
  for (const auto& chi : table.irreducibles) {
    for (const auto& v : chi.values) {
      int nonzero = 0;
      for (std::int64_t i = 0; i < v.e; ++i) {
        if (v.coeffs[i] != 0) {
          ++nonzero;
          CHECK(std::abs(v.coeffs[i]) == 1);
        }
      }
      CHECK(nonzero == 1);  // a single root of unity
    }
  }
  // some character has genuinely complex values (order-4 root)
  bool has_i = false;
  for (const auto& chi : table.irreducibles) {
    for (const auto& v : chi.values) has_i = has_i || v.coeffs[1] != 0 || v.coeffs[3] != 0;
  }
  CHECK(has_i);
}

TEST_CASE("S3 table: degrees 1, 1, 2 and the standard characters") {
  auto g = s3();
  auto table = character_table(g);
  REQUIRE(table.count() == 3);
  CHECK(table.degrees == std::vector<int>{1, 1, 2});
  // classes: {e}, transpositions, 3-cycles
  const auto& cs = *table.cls;
  REQUIRE(cs.sizes == std::vector<int>{1, 3, 2});
  // trivial
  for (const auto& v : table.irreducibles[0].values) CHECK(v == cyc_int(6, 1));
  // sign: 1, -1, 1
  CHECK(integer_value(table.irreducibles[1].values[1]) == Zint(-1));
  CHECK(integer_value(table.irreducibles[1].values[2]) == Zint(1));
  // standard: 2, 0, -1
  CHECK(integer_value(table.irreducibles[2].values[0]) == Zint(2));
  CHECK(integer_value(table.irreducibles[2].values[1]) == Zint(0));
  CHECK(integer_value(table.irreducibles[2].values[2]) == Zint(-1));
}

TEST_CASE("exact tables agree with the numeric eigendecomposition oracle") {
  for (const auto& g : {s3(), d4(), q8(), a4(), s4(), cyclic(12),
                        semidirect_inversion(5), direct_product(cyclic(2), s3())}) {
    check_against_numeric_oracle(g);
  }
}

TEST_CASE("restriction") {
  auto g = s3();
  auto table = character_table(g);

  auto h2 = as_group(subgroup_generated(g, {1}));  // <(1 2)>
  auto h2_cls = class_structure(h2.group);
  auto h2_table = character_table(h2.group);

  // trivial restricts to trivial
  auto res_triv = restrict_to(table.irreducibles[0], h2, h2_cls);
  CHECK(res_triv.values == h2_table.irreducibles[0].values);
  // sign restricts to the sign of Z2
  auto res_sign = restrict_to(table.irreducibles[1], h2, h2_cls);
  CHECK(res_sign.values == h2_table.irreducibles[1].values);

  // the 2-dim character restricted to <(1 2 3)> is the sum of both
  // nontrivial Z3 characters
  auto h3 = as_group(subgroup_generated(g, {2}));
  auto h3_cls = class_structure(h3.group);
  auto h3_table = character_table(h3.group);
  auto res_std = restrict_to(table.irreducibles[2], h3, h3_cls);
  CHECK(inner_product(res_std, h3_table.irreducibles[0]) == 0);
  CHECK(inner_product(res_std, h3_table.irreducibles[1]) == 1);
  CHECK(inner_product(res_std, h3_table.irreducibles[2]) == 1);
  for (int c = 0; c < h3_cls->count(); ++c) {
    CHECK(res_std.values[c] ==
          h3_table.irreducibles[1].values[c] + h3_table.irreducibles[2].values[c]);
  }

  CHECK_THROWS_AS(restrict_to(h2_table.irreducibles[0], h3, h3_cls), ValidationError);
}

TEST_CASE("conjugation twist") {
  auto g = s3();
  auto h_sub = subgroup_generated(g, {1});
  auto emb = as_group(h_sub);
  auto table = character_table(emb.group);

  SUBCASE("centralizing element fixes the character on H_s = H") {
    // s = (1 2) itself centralizes H
    auto hs = as_group(Subgroup{emb.group, {0, 1}});
    auto hs_cls = class_structure(hs.group);
    auto twisted = conj_twist(table.irreducibles[1], emb, hs, hs_cls, h_sub.members[1]);
    auto straight = restrict_to(table.irreducibles[1], hs, hs_cls);
    CHECK(twisted.values == straight.values);
  }

  SUBCASE("noncentralizing element gives the trivial character of the trivial group") {
    auto dc = double_cosets(g, h_sub);
    const int s = dc.representatives[1];
    auto hs_amb = mackey_intersection(g, h_sub, s);
    REQUIRE(hs_amb.members == std::vector<int>{g->identity});
    auto hs = as_group(Subgroup{emb.group, {0}});
    auto hs_cls = class_structure(hs.group);
    auto twisted = conj_twist(table.irreducibles[1], emb, hs, hs_cls, s);
    REQUIRE(twisted.values.size() == 1);
    CHECK(integer_value(twisted.values[0]) == Zint(1));
  }
}

TEST_CASE("induced characters") {
  auto g = s3();
  auto g_cls = class_structure(g);
  auto table = character_table(g);

  SUBCASE("from the trivial subgroup: the regular character") {
    auto triv = as_group(trivial_subgroup(g));
    auto triv_cls = class_structure(triv.group);
    auto triv_table = character_table(triv.group);
    auto reg = induced_character(triv_table.irreducibles[0], triv, g_cls);
    CHECK(integer_value(reg.values[0]) == Zint(6));
    CHECK(integer_value(reg.values[1]) == Zint(0));
    CHECK(integer_value(reg.values[2]) == Zint(0));
    // <lambda_G, chi> = deg chi
    for (int i = 0; i < table.count(); ++i) {
      CHECK(inner_product(reg, table.irreducibles[i]) == table.degrees[i]);
    }
  }

  SUBCASE("from <(1 2)>: trivial induces to trivial + standard") {
    auto emb = as_group(subgroup_generated(g, {1}));
    auto h_table = character_table(emb.group);
    auto ind = induced_character(h_table.irreducibles[0], emb, g_cls);
    CHECK(integer_value(ind.values[0]) == Zint(3));  // degree [G:H] * 1
    CHECK(inner_product(ind, table.irreducibles[0]) == 1);
    CHECK(inner_product(ind, table.irreducibles[1]) == 0);
    CHECK(inner_product(ind, table.irreducibles[2]) == 1);
  }

  SUBCASE("degree identity across the corpus sample") {
    for (const auto& big : {s4(), a4()}) {
      auto big_cls = class_structure(big);
      for (const auto& h : subgroups_upto_2gen(big)) {
        auto emb = as_group(h);
        auto h_table = character_table(emb.group);
        for (int v = 0; v < h_table.count(); ++v) {
          auto ind = induced_character(h_table.irreducibles[v], emb, big_cls);
          Zint expected(static_cast<long long>(big->order / h.members.size()) *
                        h_table.degrees[v]);
          CHECK(integer_value(ind.values[0]) == expected);
        }
      }
    }
  }
}

TEST_CASE("inner products") {
  auto table = character_table(s3());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(inner_product(table.irreducibles[i], table.irreducibles[j]) ==
            (i == j ? 1 : 0));
    }
  }
  auto z3_table = character_table(cyclic(3));
  CHECK_THROWS_AS(inner_product(table.irreducibles[0], z3_table.irreducibles[0]),
                  ValidationError);
}

TEST_CASE("multiplicities: the S3 example") {
  auto g = s3();
  auto h = subgroup_generated(g, {1});
  auto emb = as_group(h);
  auto table = character_table(emb.group);
  // V = sign: X-Ind V = rV + q(sum of all U) with r = q = 1
  auto mult = mackey_multiplicities(g, h, emb, table, 1);
  CHECK(mult[0] == 1);  // trivial
  CHECK(mult[1] == 2);  // sign
  auto frob = frobenius_multiplicities(g, h, emb, table, 1);
  CHECK(frob == mult);
  auto mult0 = mackey_multiplicities(g, h, emb, table, 0);
  CHECK(mult0[0] == 2);
  CHECK(mult0[1] == 1);
}

TEST_CASE("multiplicities: extreme subgroups") {
  auto g = d4();
  SUBCASE("H = G: the identity correspondence") {
    auto h = whole_group(g);
    auto emb = as_group(h);
    auto table = character_table(emb.group);
    for (int v = 0; v < table.count(); ++v) {
      auto mult = mackey_multiplicities(g, h, emb, table, v);
      for (int u = 0; u < table.count(); ++u) CHECK(mult[u] == (u == v ? 1 : 0));
      CHECK(frobenius_multiplicities(g, h, emb, table, v) == mult);
    }
  }
  SUBCASE("H = {e}: the regular multiplicity") {
    auto h = trivial_subgroup(g);
    auto emb = as_group(h);
    auto table = character_table(emb.group);
    auto mult = mackey_multiplicities(g, h, emb, table, 0);
    REQUIRE(mult.size() == 1);
    CHECK(mult[0] == g->order);
  }
}

TEST_CASE("multiplicities: central subgroup gives [G:H] delta") {
  auto g = cyclic(4);
  auto h = subgroup_generated(g, {2});  // {0, 2}
  auto emb = as_group(h);
  auto table = character_table(emb.group);
  for (int v = 0; v < 2; ++v) {
    auto mult = mackey_multiplicities(g, h, emb, table, v);
    auto frob = frobenius_multiplicities(g, h, emb, table, v);
    CHECK(mult == frob);
    for (int u = 0; u < 2; ++u) CHECK(mult[u] == (u == v ? 2 : 0));
  }
}

TEST_CASE("Mackey route equals Frobenius route with the dimension identity (sample)") {
  for (const auto& g : {s4(), q8(), semidirect_inversion(6)}) {
    for (const auto& h : subgroups_upto_2gen(g)) {
      auto emb = as_group(h);
      auto table = character_table(emb.group);
      const int index = g->order / static_cast<int>(h.members.size());
      for (int v = 0; v < table.count(); ++v) {
        auto mackey = mackey_multiplicities(g, h, emb, table, v);
        auto frob = frobenius_multiplicities(g, h, emb, table, v);
        CHECK(mackey == frob);
        long long dim = 0;
        for (int u = 0; u < table.count(); ++u) {
          dim += static_cast<long long>(mackey[u]) * table.degrees[u];
        }
        CHECK(dim == static_cast<long long>(index) * table.degrees[v]);
      }
    }
  }
}
