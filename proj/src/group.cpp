#include "mackey/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace mackey {

namespace {

void check_order_cap(long long n, int cap, const std::string& what) {
  if (n > cap) {
    throw ResourceError(what + ": order " + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
  }
  // A dense order x order table must also be allocatable.
  if (n * n > (1LL << 31)) {
    throw ResourceError(what + ": dense Cayley table for order " +
                        std::to_string(n) + " is not representable");
  }
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "g" + std::to_string(i);
  return names;
}

std::string triple_msg(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

GroupPtr validate_and_build(const Eigen::MatrixXi& table,
                            std::vector<std::string> names,
                            std::string group_name, int order_cap) {
  const int n = static_cast<int>(table.rows());
  if (table.cols() != n || n <= 0) {
    throw ValidationError("Cayley table must be square and nonempty");
  }
  check_order_cap(n, order_cap, group_name);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (table(i, j) < 0 || table(i, j) >= n) {
        throw ValidationError("Cayley entry out of range at " + triple_msg(i, j, table(i, j)));
      }
    }
  }

  // Latin square: every row and column is a permutation of 0..n-1.
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (seen[table(i, j)]++) {
        throw ValidationError("row " + std::to_string(i) +
                              " is not a permutation (duplicate value " +
                              std::to_string(table(i, j)) + ")");
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (seen[table(j, i)]++) {
        throw ValidationError("column " + std::to_string(i) +
                              " is not a permutation (duplicate value " +
                              std::to_string(table(j, i)) + ")");
      }
    }
  }

  // Two-sided identity.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = table(e, x) == x && table(x, e) == x;
    }
    if (ok) { identity = e; break; }
  }
  if (identity < 0) throw ValidationError("no two-sided identity element");

  // Associativity: exhaustive for small orders, sampled above.
  auto check_triple = [&](int a, int b, int c) {
    if (table(table(a, b), c) != table(a, table(b, c))) {
      throw ValidationError("associativity fails at triple " + triple_msg(a, b, c));
    }
  };
  if (n <= 512) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x6d61636bULL);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 10000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }

  auto g = std::make_shared<FiniteGroup>();
  g->name = std::move(group_name);
  g->order = n;
  g->elements = names.empty() ? default_names(n) : std::move(names);
  if (static_cast<int>(g->elements.size()) != n) {
    throw ValidationError("element name list size mismatch");
  }
  g->cayley = table;
  g->identity = identity;
  g->inverse.resize(n);
  for (int x = 0; x < n; ++x) {
    int invx = -1;
    for (int y = 0; y < n; ++y) {
      if (table(x, y) == identity) { invx = y; break; }
    }
    if (invx < 0 || table(invx, x) != identity) {
      throw ValidationError("element " + std::to_string(x) + " has no two-sided inverse");
    }
    g->inverse[x] = invx;
  }
  return g;
}

std::string cycle_notation(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> done(n, 0);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (done[i] || p[i] == i) continue;
    any = true;
    os << "(";
    int j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) os << " ";
      os << (j + 1);  // 1-based, as usual for permutations
      first = false;
      j = p[j];
    }
    os << ")";
  }
  return any ? os.str() : "()";
}

}  // namespace

GroupPtr from_cayley(const Eigen::MatrixXi& table, std::vector<std::string> names,
                     std::string group_name, int order_cap) {
  return validate_and_build(table, std::move(names), std::move(group_name), order_cap);
}

GroupPtr from_permutations(const std::vector<Permutation>& generators, int degree,
                           std::string group_name, int order_cap) {
  if (degree <= 0) throw ValidationError("permutation degree must be positive");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree) {
      throw ValidationError("generator degree mismatch");
    }
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]++) {
        throw ValidationError("generator is not a bijection on {1.." +
                              std::to_string(degree) + "}");
      }
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [degree](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (int i = 0; i < degree; ++i) c[i] = a[b[i]];  // apply b first
    return c;
  };

  std::map<Permutation, int> index_of;
  std::vector<Permutation> elems;
  elems.push_back(id);
  index_of[id] = 0;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = compose(elems[head], gen);
      if (index_of.emplace(next, static_cast<int>(elems.size())).second) {
        if (static_cast<long long>(elems.size()) + 1 > order_cap) {
          throw ResourceError("permutation closure exceeds order cap " +
                              std::to_string(order_cap));
        }
        elems.push_back(std::move(next));
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  check_order_cap(n, order_cap, group_name);
  Eigen::MatrixXi table(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table(a, b) = index_of.at(compose(elems[a], elems[b]));
    }
  }
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = cycle_notation(elems[i]);
  return validate_and_build(table, std::move(names), std::move(group_name), order_cap);
}

GroupPtr cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic group order must be >= 1");
  check_order_cap(n, kDefaultOrderCap, "Z" + std::to_string(n));
  Eigen::MatrixXi table(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table(a, b) = (a + b) % n;
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
  return validate_and_build(table, std::move(names), "Z" + std::to_string(n),
                            kDefaultOrderCap);
}

GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2) {
  const int n1 = g1->order, n2 = g2->order;
  const long long n = static_cast<long long>(n1) * n2;
  check_order_cap(n, kDefaultOrderCap, g1->name + "x" + g2->name);
  Eigen::MatrixXi table(n, n);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2) {
          table(a1 * n2 + a2, b1 * n2 + b2) =
              g1->cayley(a1, b1) * n2 + g2->cayley(a2, b2);
        }
  std::vector<std::string> names(n);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2) {
      names[a1 * n2 + a2] = "(" + g1->elements[a1] + "," + g2->elements[a2] + ")";
    }
  return validate_and_build(table, std::move(names), g1->name + "x" + g2->name,
                            kDefaultOrderCap);
}

GroupPtr semidirect_inversion(int n) {
  if (n < 1) throw ValidationError("semidirect base order must be >= 1");
  const int order = 2 * n;
  check_order_cap(order, kDefaultOrderCap, "Z" + std::to_string(n) + "xiZ2");
  // (a, t)(b, s) = (a + (-1)^t b, t + s)
  auto idx = [n](int a, int t) { return t * n + a; };
  Eigen::MatrixXi table(order, order);
  for (int a = 0; a < n; ++a)
    for (int t = 0; t < 2; ++t)
      for (int b = 0; b < n; ++b)
        for (int s = 0; s < 2; ++s) {
          int ab = t == 0 ? (a + b) % n : ((a - b) % n + n) % n;
          table(idx(a, t), idx(b, s)) = idx(ab, (t + s) % 2);
        }
  std::vector<std::string> names(order);
  for (int a = 0; a < n; ++a)
    for (int t = 0; t < 2; ++t) {
      names[idx(a, t)] = "(" + std::to_string(a) + "," + std::to_string(t) + ")";
    }
  return validate_and_build(table, std::move(names),
                            "Z" + std::to_string(n) + "xiZ2", kDefaultOrderCap);
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens) {
  for (int x : gens) {
    if (x < 0 || x >= g->order) throw ValidationError("generator index out of range");
  }
  std::vector<char> in(g->order, 0);
  std::vector<int> stack{g->identity};
  in[g->identity] = 1;
  for (std::size_t head = 0; head < stack.size(); ++head) {
    for (int x : gens) {
      int y = g->mul(stack[head], x);
      if (!in[y]) { in[y] = 1; stack.push_back(y); }
      y = g->mul(stack[head], g->inv(x));
      if (!in[y]) { in[y] = 1; stack.push_back(y); }
    }
  }
  std::sort(stack.begin(), stack.end());
  return {g, std::move(stack)};
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<int> all(g->order);
  std::iota(all.begin(), all.end(), 0);
  return {g, std::move(all)};
}

Subgroup trivial_subgroup(const GroupPtr& g) { return {g, {g->identity}}; }

Subgroup subgroup_from_members(const GroupPtr& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int x : members) {
    if (x < 0 || x >= g->order) throw ValidationError("member index out of range");
  }
  std::vector<char> in(g->order, 0);
  for (int x : members) in[x] = 1;
  if (!in[g->identity]) throw ValidationError("subgroup must contain the identity");
  for (int a : members) {
    if (!in[g->inv(a)]) {
      throw ValidationError("member set not closed under inverse at " + std::to_string(a));
    }
    for (int b : members) {
      if (!in[g->mul(a, b)]) {
        throw ValidationError("member set not closed under product at (" +
                              std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
  if (g->order % static_cast<int>(members.size()) != 0) {
    throw ValidationError("subgroup order does not divide group order");  // unreachable
  }
  return {g, std::move(members)};
}

Subgroup centralizer(const GroupPtr& g, const Subgroup& h) {
  std::vector<int> members;
  for (int x = 0; x < g->order; ++x) {
    bool commutes = true;
    for (int y : h.members) {
      if (g->mul(x, y) != g->mul(y, x)) { commutes = false; break; }
    }
    if (commutes) members.push_back(x);
  }
  return {g, std::move(members)};
}

bool is_normal(const GroupPtr& g, const Subgroup& h) {
  std::vector<char> in(g->order, 0);
  for (int x : h.members) in[x] = 1;
  for (int s = 0; s < g->order; ++s) {
    for (int x : h.members) {
      if (!in[g->conj(s, x)]) return false;
    }
  }
  return true;
}

bool is_central(const GroupPtr& g, const Subgroup& h) {
  for (int x : h.members) {
    for (int y = 0; y < g->order; ++y) {
      if (g->mul(x, y) != g->mul(y, x)) return false;
    }
  }
  return true;
}

CosetSpace left_cosets(const GroupPtr& g, const Subgroup& h) {
  CosetSpace cs;
  cs.parent = g;
  cs.subgroup_members = h.members;
  cs.coset_of.assign(g->order, -1);
  for (int x = 0; x < g->order; ++x) {
    if (cs.coset_of[x] >= 0) continue;
    std::vector<int> coset;
    for (int y : h.members) coset.push_back(g->mul(x, y));
    std::sort(coset.begin(), coset.end());
    int c = static_cast<int>(cs.cosets.size());
    for (int z : coset) cs.coset_of[z] = c;
    cs.cosets.push_back(std::move(coset));
  }
  cs.representatives.resize(cs.cosets.size());
  for (std::size_t c = 0; c < cs.cosets.size(); ++c) {
    cs.representatives[c] = cs.cosets[c].front();  // minimal element
  }
  cs.base_coset = cs.coset_of[g->identity];
  cs.representatives[cs.base_coset] = g->identity;
  return cs;
}

CosetOrbits orbits_on_cosets(const GroupPtr& g, const Subgroup& h,
                             const CosetSpace& cs) {
  CosetOrbits out;
  const int m = cs.index();
  std::vector<char> done(m, 0);
  for (int c = 0; c < m; ++c) {
    if (done[c]) continue;
    std::vector<int> orbit;
    std::vector<int> stack{c};
    done[c] = 1;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      orbit.push_back(cur);
      for (int y : h.members) {
        int next = cs.coset_of[g->mul(y, cs.representatives[cur])];
        if (!done[next]) { done[next] = 1; stack.push_back(next); }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    if (orbit.size() == 1) ++out.fixed_points;
    else if (orbit.size() == 2) ++out.two_orbits;
    else ++out.larger_orbits;
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

DoubleCosetDecomp double_cosets(const GroupPtr& g, const Subgroup& h) {
  DoubleCosetDecomp dc;
  dc.parent = g;
  dc.subgroup_members = h.members;
  std::vector<char> done(g->order, 0);
  for (int s = 0; s < g->order; ++s) {
    if (done[s]) continue;
    std::vector<int> block;
    std::vector<int> stack{s};
    done[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      block.push_back(x);
      for (int y : h.members) {
        int left = g->mul(y, x);
        if (!done[left]) { done[left] = 1; stack.push_back(left); }
        int right = g->mul(x, y);
        if (!done[right]) { done[right] = 1; stack.push_back(right); }
      }
    }
    std::sort(block.begin(), block.end());
    dc.representatives.push_back(block.front());
    dc.blocks.push_back(std::move(block));
  }
  return dc;
}

Subgroup mackey_intersection(const GroupPtr& g, const Subgroup& h, int s) {
  std::vector<char> in(g->order, 0);
  for (int x : h.members) in[x] = 1;
  std::vector<int> members;
  const int sinv = g->inv(s);
  for (int x : h.members) {
    // x in s^-1 H s  <=>  s x s^-1 in H
    if (in[g->mul(g->mul(s, x), sinv)]) members.push_back(x);
  }
  return {g, std::move(members)};
}

EmbeddedGroup as_group(const Subgroup& h) {
  const auto& g = h.parent;
  const int n = static_cast<int>(h.members.size());
  EmbeddedGroup emb;
  emb.ambient = g;
  emb.to_ambient = h.members;
  emb.from_ambient.assign(g->order, -1);
  for (int i = 0; i < n; ++i) emb.from_ambient[h.members[i]] = i;
  Eigen::MatrixXi table(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int prod = g->mul(h.members[a], h.members[b]);
      int local = emb.from_ambient[prod];
      if (local < 0) throw ValidationError("member set is not closed under product");
      table(a, b) = local;
    }
  }
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = g->elements[h.members[i]];
  emb.group = from_cayley(table, std::move(names),
                          g->name + "_sub" + std::to_string(n));
  return emb;
}

int element_order(const FiniteGroup& g, int x) {
  int order = 1;
  int cur = x;
  while (cur != g.identity) {
    cur = g.mul(cur, x);
    ++order;
  }
  return order;
}

long long exponent_of(const FiniteGroup& g) {
  long long e = 1;
  for (int x = 0; x < g.order; ++x) {
    long long o = element_order(g, x);
    e = std::lcm(e, o);
  }
  return e;
}

}  // namespace mackey
