#include "mackey/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace mackey {

namespace {

using Mat64 = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

Mat64 mat_mul_mod(const Mat64& a, const Mat64& b, std::int64_t p) {
  const int n = static_cast<int>(a.rows());
  const int m = static_cast<int>(b.cols());
  const int k = static_cast<int>(a.cols());
  Mat64 c = Mat64::Zero(n, m);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a(i, t) == 0) continue;
      for (int j = 0; j < m; ++j) {
        c(i, j) = (c(i, j) + mul_mod(a(i, t), b(t, j), p)) % p;
      }
    }
  return c;
}

// Polynomials over GF(p), lowest-degree coefficient first.
using Poly = std::vector<std::int64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  trim(c);
  return c;
}

Poly poly_rem(Poly a, const Poly& f, std::int64_t p) {
  const std::int64_t lead_inv = inv_mod(f.back(), p);
  while (degree(a) >= degree(f)) {
    std::int64_t c = mul_mod(a.back(), lead_inv, p);
    int shift = degree(a) - degree(f);
    if (c != 0) {
      for (std::size_t j = 0; j < f.size(); ++j) {
        a[shift + j] = ((a[shift + j] - mul_mod(c, f[j], p)) % p + p) % p;
      }
    }
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_quot(Poly a, const Poly& f, std::int64_t p) {
  Poly q(std::max<int>(degree(a) - degree(f) + 1, 0), 0);
  const std::int64_t lead_inv = inv_mod(f.back(), p);
  while (degree(a) >= degree(f)) {
    std::int64_t c = mul_mod(a.back(), lead_inv, p);
    int shift = degree(a) - degree(f);
    q[shift] = c;
    for (std::size_t j = 0; j < f.size(); ++j) {
      a[shift + j] = ((a[shift + j] - mul_mod(c, f[j], p)) % p + p) % p;
    }
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  trim(q);
  return q;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::int64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, inv, p);
  }
  return a;
}

Poly poly_pow_mod(Poly base, std::int64_t k, const Poly& f, std::int64_t p) {
  Poly result{1};
  base = poly_rem(std::move(base), f, p);
  while (k > 0) {
    if (k & 1) result = poly_rem(poly_mul(result, base, p), f, p);
    base = poly_rem(poly_mul(base, base, p), f, p);
    k >>= 1;
  }
  return result;
}

Poly poly_derivative(const Poly& f, std::int64_t p) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mul_mod(f[i], i % p, p);
  trim(d);
  return d;
}

// Characteristic polynomial over GF(p) (Faddeev-LeVerrier; needs p > n).
Poly charpoly_mod(const Mat64& t, std::int64_t p) {
  const int n = static_cast<int>(t.rows());
  Poly c(n + 1, 0);
  c[n] = 1;
  Mat64 m = t;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      Mat64 shifted = m;
      for (int i = 0; i < n; ++i) shifted(i, i) = (shifted(i, i) + c[n - k + 1]) % p;
      m = mat_mul_mod(t, shifted, p);
    }
    std::int64_t tr = 0;
    for (int i = 0; i < n; ++i) tr = (tr + m(i, i)) % p;
    c[n - k] = mul_mod((p - tr) % p, inv_mod(k % p, p), p);
  }
  return c;
}

// All roots of a squarefree, completely-split polynomial over GF(p).
void split_roots(const Poly& f, std::int64_t p, std::mt19937_64& rng,
                 std::vector<std::int64_t>& out) {
  if (degree(f) < 1) return;
  if (degree(f) == 1) {
    out.push_back(mul_mod((p - f[0]) % p, inv_mod(f[1], p), p));
    return;
  }
  std::uniform_int_distribution<std::int64_t> pick(0, p - 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Poly shifted{pick(rng), 1};  // x + a
    Poly h = poly_pow_mod(shifted, (p - 1) / 2, f, p);
    if (h.empty()) continue;
    h[0] = ((h[0] - 1) % p + p) % p;
    trim(h);
    Poly g = poly_gcd(f, h, p);
    if (degree(g) >= 1 && degree(g) < degree(f)) {
      split_roots(g, p, rng, out);
      split_roots(poly_quot(f, g, p), p, rng, out);
      return;
    }
  }
  throw std::logic_error("root splitting failed to converge");
}

// One basis vector of ker(t - lambda I); empty when the nullity is not 1.
std::vector<std::int64_t> nullspace_1d(Mat64 t, std::int64_t lambda, std::int64_t p) {
  const int n = static_cast<int>(t.rows());
  for (int i = 0; i < n; ++i) t(i, i) = ((t(i, i) - lambda) % p + p) % p;
  std::vector<int> pivot_col_of_row(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pr = -1;
    for (int i = rank; i < n; ++i) {
      if (t(i, col) != 0) { pr = i; break; }
    }
    if (pr < 0) continue;
    t.row(pr).swap(t.row(rank));
    std::int64_t inv = inv_mod(t(rank, col), p);
    for (int j = 0; j < n; ++j) t(rank, j) = mul_mod(t(rank, j), inv, p);
    for (int i = 0; i < n; ++i) {
      if (i == rank || t(i, col) == 0) continue;
      std::int64_t c = t(i, col);
      for (int j = 0; j < n; ++j) {
        t(i, j) = ((t(i, j) - mul_mod(c, t(rank, j), p)) % p + p) % p;
      }
    }
    pivot_col_of_row[rank] = col;
    ++rank;
  }
  if (rank != n - 1) return {};
  std::vector<char> is_pivot(n, 0);
  for (int i = 0; i < rank; ++i) is_pivot[pivot_col_of_row[i]] = 1;
  int free_col = -1;
  for (int j = 0; j < n; ++j) {
    if (!is_pivot[j]) { free_col = j; break; }
  }
  std::vector<std::int64_t> v(n, 0);
  v[free_col] = 1;
  for (int i = 0; i < rank; ++i) {
    v[pivot_col_of_row[i]] = (p - t(i, free_col)) % p;
  }
  return v;
}

std::int64_t isqrt_exact(std::int64_t x) {
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(x))));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x ? r : -1;
}

}  // namespace

ClassesPtr class_structure(const GroupPtr& g) {
  auto cs = std::make_shared<ClassStructure>();
  cs->group = g;
  const int n = g->order;
  cs->class_of.assign(n, -1);

  // identity class first, then by minimal element
  std::vector<std::vector<int>> found;
  for (int x = 0; x < n; ++x) {
    if (cs->class_of[x] >= 0) continue;
    std::vector<char> seen(n, 0);
    std::vector<int> cls;
    for (int s = 0; s < n; ++s) {
      int y = g->conj(s, x);
      if (!seen[y]) { seen[y] = 1; cls.push_back(y); }
    }
    std::sort(cls.begin(), cls.end());
    for (int y : cls) cs->class_of[y] = static_cast<int>(found.size());
    found.push_back(std::move(cls));
  }
  std::vector<int> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  const int id_class = cs->class_of[g->identity];
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if ((a == id_class) != (b == id_class)) return a == id_class;
    return found[a].front() < found[b].front();
  });
  cs->classes.resize(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    cs->classes[i] = std::move(found[order[i]]);
    for (int y : cs->classes[i]) cs->class_of[y] = static_cast<int>(i);
  }
  cs->representatives.resize(cs->classes.size());
  cs->sizes.resize(cs->classes.size());
  for (std::size_t i = 0; i < cs->classes.size(); ++i) {
    cs->representatives[i] = i == 0 ? g->identity : cs->classes[i].front();
    cs->sizes[i] = static_cast<int>(cs->classes[i].size());
  }
  cs->inverse_class.resize(cs->classes.size());
  for (std::size_t i = 0; i < cs->classes.size(); ++i) {
    cs->inverse_class[i] = cs->class_of[g->inv(cs->representatives[i])];
  }
  cs->exponent = exponent_of(*g);
  cs->ctx = make_residue_ctx(cs->exponent, n);
  return cs;
}

ClassFunction make_class_function(const ClassesPtr& cls, std::vector<Cyc> values) {
  if (static_cast<int>(values.size()) != cls->count()) {
    throw ValidationError("class function needs one value per class");
  }
  ClassFunction f;
  f.cls = cls;
  f.residues.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].e != cls->exponent) values[i] = rebase(values[i], cls->exponent);
    f.residues[i] = cls->ctx.eval(values[i]);
  }
  f.values = std::move(values);
  return f;
}

std::int64_t inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.cls->group != psi.cls->group) {
    throw ValidationError("inner product requires class functions on the same group");
  }
  const auto& cls = *chi.cls;
  const std::int64_t order = cls.group->order;

  Cyc sum = Cyc::zero(cls.exponent);
  for (int j = 0; j < cls.count(); ++j) {
    sum = sum + cls.sizes[j] * (chi.values[j] * conj(psi.values[j]));
  }
  Zint exact = integer_value(sum);
  if (!(exact % Zint(static_cast<long long>(order))).is_zero()) {
    throw std::logic_error("inner product of class functions is not |K|-divisible");
  }
  Zint result = exact / Zint(static_cast<long long>(order));

  // residue route must agree with the exact one
  const auto& ctx = cls.ctx;
  std::int64_t sres = 0;
  for (int j = 0; j < cls.count(); ++j) {
    std::int64_t term = mul_mod(chi.residues[j], psi.residues[cls.inverse_class[j]], ctx.p);
    sres = (sres + mul_mod(cls.sizes[j] % ctx.p, term, ctx.p)) % ctx.p;
  }
  std::int64_t vres = mul_mod(sres, inv_mod(order % ctx.p, ctx.p), ctx.p);
  Zint expected = mod_floor(result, Zint(ctx.p));
  if (expected != Zint(vres)) {
    throw std::logic_error("cyclotomic/residue inner product mismatch");
  }
  if (!result.fits_int64()) throw std::logic_error("inner product out of range");
  return result.to_int64();
}

CharacterTable character_table(const GroupPtr& g) {
  if (g->order > kDefaultOrderCap) {
    throw ResourceError("character table: group order exceeds cap");
  }
  ClassesPtr cls = class_structure(g);
  const auto& cs = *cls;
  const int r = cs.count();
  const int n = g->order;
  const std::int64_t p = cs.ctx.p;
  const std::int64_t e = cs.exponent;

  // class-algebra structure constants: m[i](j, k) = #{x in K_i : x^-1 z_k in K_j}
  std::vector<Mat64> m(r, Mat64::Zero(r, r));
  for (int k = 0; k < r; ++k) {
    const int z = cs.representatives[k];
    for (int x = 0; x < n; ++x) {
      const int i = cs.class_of[x];
      const int j = cs.class_of[g->mul(g->inv(x), z)];
      m[i](j, k) += 1;
    }
  }

  std::mt19937_64 rng(0x6b617070615f6bULL);
  std::uniform_int_distribution<std::int64_t> pick(0, p - 1);

  std::vector<std::vector<std::int64_t>> omegas;  // r eigenvectors, normalized
  for (int attempt = 0; attempt < 64 && omegas.empty(); ++attempt) {
    Mat64 t = Mat64::Zero(r, r);
    for (int i = 0; i < r; ++i) {
      std::int64_t c = pick(rng);
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
          t(a, b) = (t(a, b) + mul_mod(c, m[i](a, b) % p, p)) % p;
        }
    }
    Poly f = charpoly_mod(t, p);
    Poly fp = poly_derivative(f, p);
    if (degree(poly_gcd(f, fp, p)) != 0) continue;  // repeated eigenvalue
    Poly xp = poly_pow_mod(Poly{0, 1}, p, f, p);
    if (degree(xp) >= 0) {
      // split check: f | x^p - x
      Poly xpx = xp;
      if (xpx.size() < 2) xpx.resize(2, 0);
      xpx[1] = ((xpx[1] - 1) % p + p) % p;
      trim(xpx);
      Poly full = poly_gcd(f, xpx.empty() ? f : xpx, p);
      if (degree(full) != degree(f)) continue;
    }
    std::vector<std::int64_t> roots;
    split_roots(f, p, rng, roots);
    if (static_cast<int>(roots.size()) != r) continue;
    std::sort(roots.begin(), roots.end());

    std::vector<std::vector<std::int64_t>> found;
    bool ok = true;
    for (std::int64_t lambda : roots) {
      auto w = nullspace_1d(t, lambda, p);
      if (w.empty() || w[0] == 0) { ok = false; break; }
      // normalize so the identity-class coordinate is 1
      std::int64_t inv = inv_mod(w[0], p);
      for (auto& c : w) c = mul_mod(c, inv, p);
      found.push_back(std::move(w));
    }
    if (ok) omegas = std::move(found);
  }
  if (omegas.empty()) {
    throw std::logic_error("character table: eigenspace separation failed");
  }

  // degrees and exact values per eigenvector
  std::vector<int> elem_order(n);
  for (int x = 0; x < n; ++x) elem_order[x] = element_order(*g, x);

  CharacterTable table;
  table.cls = cls;
  for (const auto& omega : omegas) {
    std::int64_t s = 0;
    for (int j = 0; j < r; ++j) {
      std::int64_t term = mul_mod(omega[j], omega[cs.inverse_class[j]], p);
      s = (s + mul_mod(term, inv_mod(cs.sizes[j], p), p)) % p;
    }
    std::int64_t d2 = mul_mod(n % p, inv_mod(s, p), p);
    if (d2 <= 0 || d2 > n) throw std::logic_error("character degree lift out of range");
    std::int64_t d = isqrt_exact(d2);
    if (d < 0) throw std::logic_error("character degree is not a perfect square root");

    std::vector<std::int64_t> chi_res(r);
    for (int j = 0; j < r; ++j) {
      chi_res[j] = mul_mod(mul_mod(d % p, omega[j], p), inv_mod(cs.sizes[j], p), p);
    }

    std::vector<Cyc> values;
    values.reserve(r);
    for (int j = 0; j < r; ++j) {
      const int rep = cs.representatives[j];
      const std::int64_t o = elem_order[rep];
      const std::int64_t zo = pow_mod(cs.ctx.root, e / o, p);
      const std::int64_t zo_inv = inv_mod(zo, p);
      // chi at the powers of rep
      std::vector<std::int64_t> power_res(o);
      int cur = g->identity;
      for (std::int64_t l = 0; l < o; ++l) {
        power_res[l] = chi_res[cs.class_of[cur]];
        cur = g->mul(cur, rep);
      }
      Cyc value = Cyc::zero(e);
      const std::int64_t o_inv = inv_mod(o % p, p);
      std::int64_t total = 0;
      for (std::int64_t t = 0; t < o; ++t) {
        std::int64_t acc = 0;
        std::int64_t zpow = 1;  // zo^(-t l)
        const std::int64_t zt = pow_mod(zo_inv, t, p);
        for (std::int64_t l = 0; l < o; ++l) {
          acc = (acc + mul_mod(power_res[l], zpow, p)) % p;
          zpow = mul_mod(zpow, zt, p);
        }
        std::int64_t mt = mul_mod(acc, o_inv, p);
        if (mt > d) throw std::logic_error("eigenvalue multiplicity lift out of range");
        if (mt != 0) value.coeffs[(t * (e / o)) % e] += mt;
        total += mt;
      }
      if (total != d) throw std::logic_error("eigenvalue multiplicities do not sum to degree");
      if (cs.ctx.eval(value) != chi_res[j]) {
        throw std::logic_error("lifted character value does not match residue");
      }
      values.push_back(std::move(value));
    }
    table.irreducibles.push_back(make_class_function(cls, std::move(values)));
    table.degrees.push_back(static_cast<int>(d));
  }

  // canonical order: trivial character, then ascending degree, then
  // lexicographic on per-class coefficient vectors
  auto is_trivial = [&](const ClassFunction& f) {
    Cyc one = Cyc::integer(e, 1);
    for (const Cyc& v : f.values) {
      if (!(v == one)) return false;
    }
    return true;
  };
  std::vector<int> order_idx(table.irreducibles.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  auto lex_less = [&](int a, int b) {
    for (int j = 0; j < r; ++j) {
      const auto& va = table.irreducibles[a].values[j].coeffs;
      const auto& vb = table.irreducibles[b].values[j].coeffs;
      for (std::int64_t i = 0; i < e; ++i) {
        if (va[i] != vb[i]) return va[i] < vb[i];
      }
    }
    return false;
  };
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    bool ta = is_trivial(table.irreducibles[a]);
    bool tb = is_trivial(table.irreducibles[b]);
    if (ta != tb) return ta;
    if (table.degrees[a] != table.degrees[b]) return table.degrees[a] < table.degrees[b];
    return lex_less(a, b);
  });
  CharacterTable sorted;
  sorted.cls = cls;
  for (int idx : order_idx) {
    sorted.irreducibles.push_back(std::move(table.irreducibles[idx]));
    sorted.degrees.push_back(table.degrees[idx]);
  }

  // exact verification of both orthogonality relations and the degree sum
  long long degree_sq_sum = 0;
  for (int d : sorted.degrees) degree_sq_sum += static_cast<long long>(d) * d;
  if (degree_sq_sum != n) throw std::logic_error("sum of squared degrees != |G|");
  for (int a = 0; a < r; ++a) {
    for (int b = a; b < r; ++b) {
      std::int64_t ip = inner_product(sorted.irreducibles[a], sorted.irreducibles[b]);
      if (ip != (a == b ? 1 : 0)) throw std::logic_error("row orthogonality failed");
    }
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      Cyc sum = Cyc::zero(e);
      for (int a = 0; a < r; ++a) {
        sum = sum + sorted.irreducibles[a].values[i] * conj(sorted.irreducibles[a].values[j]);
      }
      Zint expect = i == j ? Zint(static_cast<long long>(n / cs.sizes[i])) : Zint(0);
      if (integer_value(sum) != expect) throw std::logic_error("column orthogonality failed");
    }
  }
  return sorted;
}

ClassFunction restrict_to(const ClassFunction& chi, const EmbeddedGroup& k,
                          const ClassesPtr& k_cls) {
  if (k.ambient != chi.cls->group) {
    throw ValidationError("restriction: subgroup is not embedded in the function's group");
  }
  if (k_cls->group != k.group) {
    throw ValidationError("restriction: class data does not match the subgroup");
  }
  std::vector<Cyc> values;
  values.reserve(k_cls->count());
  for (int c = 0; c < k_cls->count(); ++c) {
    const int ambient = k.to_ambient[k_cls->representatives[c]];
    values.push_back(rebase(chi.value_at(ambient), k_cls->exponent));
  }
  return make_class_function(k_cls, std::move(values));
}

ClassFunction conj_twist(const ClassFunction& chi, const EmbeddedGroup& h_in_g,
                         const EmbeddedGroup& hs_in_h, const ClassesPtr& hs_cls,
                         int s) {
  if (chi.cls->group != h_in_g.group) {
    throw ValidationError("twist: character does not live on H");
  }
  const auto& g = *h_in_g.ambient;
  std::vector<Cyc> values;
  values.reserve(hs_cls->count());
  for (int c = 0; c < hs_cls->count(); ++c) {
    const int h_local = hs_in_h.to_ambient[hs_cls->representatives[c]];
    const int h_amb = h_in_g.to_ambient[h_local];
    const int conj_amb = g.conj(s, h_amb);
    const int conj_local = h_in_g.from_ambient[conj_amb];
    if (conj_local < 0) {
      throw std::logic_error("twist: s h s^-1 left H on the Mackey intersection");
    }
    values.push_back(rebase(chi.value_at(conj_local), hs_cls->exponent));
  }
  return make_class_function(hs_cls, std::move(values));
}

ClassFunction induced_character(const ClassFunction& chi, const EmbeddedGroup& k,
                                const ClassesPtr& ambient_cls) {
  if (chi.cls->group != k.group) {
    throw ValidationError("induction: character does not live on the given subgroup");
  }
  if (ambient_cls->group != k.ambient) {
    throw ValidationError("induction: ambient class data mismatch");
  }
  const auto& a = *k.ambient;
  Subgroup sub{k.ambient, k.to_ambient};
  CosetSpace cosets = left_cosets(k.ambient, sub);
  std::vector<Cyc> values;
  values.reserve(ambient_cls->count());
  for (int c = 0; c < ambient_cls->count(); ++c) {
    const int h = ambient_cls->representatives[c];
    Cyc sum = Cyc::zero(ambient_cls->exponent);
    for (int t : cosets.representatives) {
      const int conj = a.mul(a.mul(a.inv(t), h), t);
      const int local = k.from_ambient[conj];
      if (local >= 0) {
        sum = sum + rebase(chi.value_at(local), ambient_cls->exponent);
      }
    }
    values.push_back(std::move(sum));
  }
  return make_class_function(ambient_cls, std::move(values));
}

Eigen::VectorXi mackey_multiplicities(const GroupPtr& g, const Subgroup& h,
                                      const EmbeddedGroup& emb,
                                      const CharacterTable& table, int v) {
  const int count = table.count();
  Eigen::VectorXi mult = Eigen::VectorXi::Zero(count);
  DoubleCosetDecomp dc = double_cosets(g, h);
  for (int s : dc.representatives) {
    Subgroup hs_amb = mackey_intersection(g, h, s);
    std::vector<int> local;
    local.reserve(hs_amb.members.size());
    for (int x : hs_amb.members) local.push_back(emb.from_ambient[x]);
    std::sort(local.begin(), local.end());
    EmbeddedGroup hs_in_h = as_group(Subgroup{emb.group, std::move(local)});
    ClassesPtr hs_cls = class_structure(hs_in_h.group);
    ClassFunction twisted = conj_twist(table.irreducibles[v], emb, hs_in_h, hs_cls, s);
    for (int u = 0; u < count; ++u) {
      ClassFunction res = restrict_to(table.irreducibles[u], hs_in_h, hs_cls);
      mult[u] += static_cast<int>(inner_product(res, twisted));
    }
  }
  return mult;
}

Eigen::VectorXi frobenius_multiplicities(const GroupPtr& g, const Subgroup& h,
                                         const EmbeddedGroup& emb,
                                         const CharacterTable& table, int v) {
  (void)h;
  ClassesPtr g_cls = class_structure(g);
  ClassFunction ind = induced_character(table.irreducibles[v], emb, g_cls);
  ClassFunction back = restrict_to(ind, emb, table.cls);
  const int count = table.count();
  Eigen::VectorXi mult(count);
  for (int u = 0; u < count; ++u) {
    mult[u] = static_cast<int>(inner_product(table.irreducibles[u], back));
  }
  return mult;
}

}  // namespace mackey
