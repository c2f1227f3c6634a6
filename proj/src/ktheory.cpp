#include "mackey/ktheory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mackey {

namespace {

struct SnfWork {
  IntMat n, c, c_inv, d, d_inv;

  // row ops keep n = c_inv * b * d_inv in sync
  void row_swap(int i, int j) {
    if (i == j) return;
    n.row(i).swap(n.row(j));
    c_inv.row(i).swap(c_inv.row(j));
    c.col(i).swap(c.col(j));
  }
  void row_addmul(int i, int j, const Zint& f) {  // row i += f * row j
    if (f.is_zero()) return;
    n.row(i) += f * n.row(j);
    c_inv.row(i) += f * c_inv.row(j);
    c.col(j) -= f * c.col(i);
  }
  void row_negate(int i) {
    n.row(i) = -n.row(i);
    c_inv.row(i) = -c_inv.row(i);
    c.col(i) = -c.col(i);
  }
  void col_swap(int i, int j) {
    if (i == j) return;
    n.col(i).swap(n.col(j));
    d_inv.col(i).swap(d_inv.col(j));
    d.row(i).swap(d.row(j));
  }
  void col_addmul(int i, int j, const Zint& f) {  // col i += f * col j
    if (f.is_zero()) return;
    n.col(i) += f * n.col(j);
    d_inv.col(i) += f * d_inv.col(j);
    d.row(j) -= f * d.row(i);
  }
};

Zint det_bareiss(IntMat m) {
  const int n = static_cast<int>(m.rows());
  if (n == 0) return Zint(1);
  Zint sign(1), prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k).is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!m(i, k).is_zero()) { swap_row = i; break; }
      }
      if (swap_row < 0) return Zint(0);
      m.row(k).swap(m.row(swap_row));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

void verify_decomposition(const SmithDecomposition& s) {
  const int nr = static_cast<int>(s.b.rows());
  const int nc = static_cast<int>(s.b.cols());
  IntMat prod = s.c * s.n * s.d;
  if (prod != s.b) throw std::logic_error("SNF verification failed: C N D != B");
  IntMat eye_r = IntMat::Identity(nr, nr);
  IntMat eye_c = IntMat::Identity(nc, nc);
  if (IntMat(s.c * s.c_inv) != eye_r || IntMat(s.c_inv * s.c) != eye_r) {
    throw std::logic_error("SNF verification failed: C inverse");
  }
  if (IntMat(s.d * s.d_inv) != eye_c || IntMat(s.d_inv * s.d) != eye_c) {
    throw std::logic_error("SNF verification failed: D inverse");
  }
}

// all j-subsets of 0..m-1, lexicographic
void for_each_subset(int m, int j, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(j);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = j - 1;
    while (i >= 0 && idx[i] == m - j + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int t = i + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMat& b) {
  const int nr = static_cast<int>(b.rows());
  const int nc = static_cast<int>(b.cols());
  if (nr == 0 || nc == 0) throw ValidationError("SNF input must be nonempty");

  SnfWork w;
  w.n = b;
  w.c = IntMat::Identity(nr, nr);
  w.c_inv = IntMat::Identity(nr, nr);
  w.d = IntMat::Identity(nc, nc);
  w.d_inv = IntMat::Identity(nc, nc);

  const int steps = std::min(nr, nc);
  int t = 0;
  for (; t < steps; ++t) {
    // minimal |entry| pivot in the trailing submatrix, ties to smaller (row, col)
    int pr = -1, pc = -1;
    Zint best(0);
    for (int i = t; i < nr; ++i) {
      for (int j = t; j < nc; ++j) {
        if (w.n(i, j).is_zero()) continue;
        Zint mag = abs(w.n(i, j));
        if (pr < 0 || mag < best) { best = mag; pr = i; pc = j; }
      }
    }
    if (pr < 0) break;  // trailing submatrix is zero
    w.row_swap(t, pr);
    w.col_swap(t, pc);

    while (true) {
      bool moved = false;
      for (int i = t + 1; i < nr; ++i) {
        if (w.n(i, t).is_zero()) continue;
        Zint q = w.n(i, t) / w.n(t, t);
        w.row_addmul(i, t, -q);
        if (!w.n(i, t).is_zero()) {  // strictly smaller remainder becomes the pivot
          w.row_swap(t, i);
          moved = true;
        }
      }
      for (int j = t + 1; j < nc; ++j) {
        if (w.n(t, j).is_zero()) continue;
        Zint q = w.n(t, j) / w.n(t, t);
        w.col_addmul(j, t, -q);
        if (!w.n(t, j).is_zero()) {
          w.col_swap(t, j);
          moved = true;
        }
      }
      if (moved) continue;
      // pivot now divides the rest of its row and column, both cleared;
      // pull in any entry it does not divide and run again
      bool pulled = false;
      for (int i = t + 1; i < nr && !pulled; ++i) {
        for (int j = t + 1; j < nc && !pulled; ++j) {
          if (!(w.n(i, j) % w.n(t, t)).is_zero()) {
            w.row_addmul(t, i, Zint(1));
            pulled = true;
          }
        }
      }
      if (!pulled) break;
    }
    if (w.n(t, t).sign() < 0) w.row_negate(t);
  }

  SmithDecomposition out;
  out.b = b;
  out.c = std::move(w.c);
  out.c_inv = std::move(w.c_inv);
  out.d = std::move(w.d);
  out.d_inv = std::move(w.d_inv);
  out.n = std::move(w.n);
  out.rank = t;
  out.minor_gcds.push_back(Zint(1));
  for (int j = 0; j < t; ++j) {
    out.invariant_factors.push_back(out.n(j, j));
    out.minor_gcds.push_back(out.minor_gcds.back() * out.n(j, j));
  }
  for (int j = 1; j < t; ++j) {
    if (!(out.invariant_factors[j] % out.invariant_factors[j - 1]).is_zero()) {
      throw std::logic_error("SNF divisibility chain broken");
    }
  }
  verify_decomposition(out);
  return out;
}

std::vector<Zint> minor_gcds(const IntMat& b) {
  const int nr = static_cast<int>(b.rows());
  const int nc = static_cast<int>(b.cols());
  if (std::max(nr, nc) > 8) {
    throw ValidationError("minor_gcds guard: matrix dimension exceeds 8");
  }
  std::vector<Zint> out{Zint(1)};
  for (int j = 1; j <= std::min(nr, nc); ++j) {
    Zint g(0);
    for_each_subset(nr, j, [&](const std::vector<int>& rows) {
      for_each_subset(nc, j, [&](const std::vector<int>& cols) {
        IntMat sub(j, j);
        for (int a = 0; a < j; ++a)
          for (int c = 0; c < j; ++c) sub(a, c) = b(rows[a], cols[c]);
        g = gcd(g, det_bareiss(sub));
      });
    });
    if (g.is_zero()) break;  // rank reached
    out.push_back(g);
  }
  return out;
}

IntMat kernel_basis(const SmithDecomposition& snf) {
  const int nc = static_cast<int>(snf.b.cols());
  const int k = snf.rank;
  IntMat basis(nc, nc - k);
  for (int j = k; j < nc; ++j) {
    IntVec v = snf.d_inv.col(j);
    for (int i = 0; i < nc; ++i) {
      if (!v[i].is_zero()) {
        if (v[i].sign() < 0) v = -v;
        break;
      }
    }
    basis.col(j - k) = v;
  }
  return basis;
}

std::vector<Zint> canonical_class(const std::vector<Zint>& torsion, int free_rank,
                                  const std::vector<Zint>& torsion_coords,
                                  const std::vector<Zint>& free_coords) {
  const int tr = static_cast<int>(torsion.size());
  // Free part: GL_f(Z) orbits of vectors are classified by the gcd.
  Zint g(0);
  for (const Zint& x : free_coords) g = gcd(g, x);
  std::vector<Zint> free_canon(free_rank, Zint(0));
  if (free_rank > 0) free_canon[0] = g;

  if (tr == 0) {
    return free_canon;
  }

  long long torsion_order = 1;
  for (const Zint& q : torsion) {
    if (!q.fits_int64()) throw ResourceError("canonical_class: torsion factor too large");
    torsion_order *= q.to_int64();
    if (torsion_order > 2000000) {
      throw ResourceError("canonical_class: torsion group too large to canonicalize");
    }
  }
  std::vector<long long> q(tr), t(tr);
  for (int i = 0; i < tr; ++i) {
    q[i] = torsion[i].to_int64();
    t[i] = mod_floor(torsion_coords[i], torsion[i]).to_int64();
  }
  const long long shift_gcd = g.fits_int64() ? g.to_int64() : 0;  // huge gcd: treat mod q below

  // reachable shifts: the subgroup g*T (all of T when any free coordinate
  // has gcd 1, nothing when the free part vanishes)
  std::vector<std::vector<long long>> shifts;
  {
    std::vector<long long> cur(tr, 0);
    while (true) {
      shifts.push_back(cur);
      int i = tr - 1;
      while (i >= 0) {
        long long step = g.is_zero() ? q[i] : std::gcd(shift_gcd == 0 ? q[i] : shift_gcd, q[i]);
        if (step == 0) step = q[i];
        cur[i] += step;
        if (cur[i] < q[i]) break;
        cur[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }

  // orbit of t under Aut(T)
  std::set<std::vector<long long>> orbit;
  if (tr <= 2) {
    // complete enumeration of endomorphism matrices, keeping the bijective ones
    auto apply = [&](const std::vector<std::vector<long long>>& mat,
                     const std::vector<long long>& x) {
      std::vector<long long> y(tr, 0);
      for (int i = 0; i < tr; ++i) {
        for (int j = 0; j < tr; ++j) y[i] += mat[i][j] * x[j];
        y[i] = ((y[i] % q[i]) + q[i]) % q[i];
      }
      return y;
    };
    auto is_automorphism = [&](const std::vector<std::vector<long long>>& mat) {
      std::set<std::vector<long long>> image;
      std::vector<long long> x(tr, 0);
      while (true) {
        image.insert(apply(mat, x));
        int i = tr - 1;
        while (i >= 0 && ++x[i] == q[i]) { x[i] = 0; --i; }
        if (i < 0) break;
      }
      return static_cast<long long>(image.size()) == torsion_order;
    };
    std::vector<std::vector<long long>> mat(tr, std::vector<long long>(tr, 0));
    // entry (i, j) must define a homomorphism Z_{q_j} -> Z_{q_i}
    std::vector<std::vector<long long>> choices(tr * tr);
    for (int i = 0; i < tr; ++i) {
      for (int j = 0; j < tr; ++j) {
        long long step = q[i] / std::gcd(q[i], q[j]);
        for (long long v = 0; v < q[i]; v += step) choices[i * tr + j].push_back(v);
      }
    }
    std::function<void(int)> rec = [&](int pos) {
      if (pos == tr * tr) {
        if (is_automorphism(mat)) orbit.insert(apply(mat, t));
        return;
      }
      for (long long v : choices[pos]) {
        mat[pos / tr][pos % tr] = v;
        rec(pos + 1);
      }
    };
    rec(0);
  } else {
    // orbit search with elementary generators: unit scalings and transvections
    std::vector<std::vector<long long>> stack{t};
    orbit.insert(t);
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      auto push = [&](std::vector<long long> next) {
        if (orbit.insert(next).second) {
          if (orbit.size() > 2000000) {
            throw ResourceError("canonical_class: orbit too large");
          }
          stack.push_back(std::move(next));
        }
      };
      for (int i = 0; i < tr; ++i) {
        for (long long u = 2; u < q[i]; ++u) {
          if (std::gcd(u, q[i]) != 1) continue;
          auto next = cur;
          next[i] = (next[i] * u) % q[i];
          push(std::move(next));
        }
        for (int j = 0; j < tr; ++j) {
          if (i == j) continue;
          long long step = q[i] / std::gcd(q[i], q[j]);
          for (long long mcoef = step; mcoef < q[i]; mcoef += step) {
            auto next = cur;
            next[i] = (next[i] + mcoef * cur[j]) % q[i];
            push(std::move(next));
          }
        }
      }
    }
  }

  std::vector<long long> best;
  for (const auto& o : orbit) {
    for (const auto& s : shifts) {
      std::vector<long long> cand(tr);
      for (int i = 0; i < tr; ++i) cand[i] = (o[i] + s[i]) % q[i];
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }

  std::vector<Zint> result;
  result.reserve(tr + free_rank);
  for (long long v : best) result.push_back(Zint(v));
  for (const Zint& v : free_canon) result.push_back(v);
  return result;
}

namespace {

KTheoryInvariants invariants_from_snf(SmithDecomposition snf) {
  const int n = static_cast<int>(snf.b.rows());
  if (snf.b.cols() != n) throw ValidationError("K-theory needs a square matrix");
  KTheoryInvariants out;
  out.free_rank_k0 = n - snf.rank;
  out.free_rank_k1 = n - snf.rank;

  IntVec ones(n);
  for (int i = 0; i < n; ++i) ones[i] = 1;
  IntVec image = snf.c_inv * ones;

  std::vector<Zint> torsion, torsion_coords, free_coords;
  for (int j = 0; j < snf.rank; ++j) {
    const Zint& qj = snf.invariant_factors[j];
    if (qj > Zint(1)) {
      torsion.push_back(qj);
      torsion_coords.push_back(mod_floor(image[j], qj));
    }
  }
  for (int j = snf.rank; j < n; ++j) free_coords.push_back(image[j]);

  out.identity_class =
      canonical_class(torsion, out.free_rank_k0, torsion_coords, free_coords);
  out.torsion = std::move(torsion);
  out.snf = std::move(snf);
  return out;
}

}  // namespace

KTheoryInvariants ktheory_of_graph(const MultiplicityGraph& e) {
  const int n = e.size();
  IntMat b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b(i, j) = Zint(e.a(j, i));  // transpose
      if (i == j) b(i, j) -= 1;
    }
  }
  return invariants_from_snf(smith_normal_form(b));
}

KTheoryInvariants ktheory_of_matrix(const IntMat& b) {
  return invariants_from_snf(smith_normal_form(b));
}

}  // namespace mackey
