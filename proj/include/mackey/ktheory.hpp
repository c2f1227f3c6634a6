#pragma once

#include <vector>

#include "mackey/bigint.hpp"
#include "mackey/graph.hpp"

namespace mackey {

/// B = C * N * D with C, D unimodular and N diagonal in divisibility order.
/// c_inv and d_inv are maintained alongside so unimodularity is witnessed
/// by exact integer inverses.
struct SmithDecomposition {
  IntMat b, c, n, d;
  IntMat c_inv, d_inv;
  int rank = 0;
  std::vector<Zint> invariant_factors;  // q_1 | q_2 | ... | q_k, positive
  std::vector<Zint> minor_gcds;         // f_0 = 1, f_j = q_1 ... q_j
};

/// Elementary row/column reduction with minimal-|entry| pivoting; the
/// returned decomposition is re-verified by exact multiplication.
SmithDecomposition smith_normal_form(const IntMat& b);

/// f_0..f_k as gcds of all j-th order subdeterminants, by enumeration.
/// Guarded to matrices with max dimension <= 8 (oracle use).
std::vector<Zint> minor_gcds(const IntMat& b);

/// Basis of ker(B) read off the decomposition; every column v satisfies
/// B v = 0 exactly. Columns are sign-normalized (first nonzero entry > 0).
IntMat kernel_basis(const SmithDecomposition& snf);

/// K-theory of the graph algebra in the canonical presentation
/// (torsion ascending by divisibility, then the free part).
struct KTheoryInvariants {
  std::vector<Zint> torsion;       // invariant factors > 1
  int free_rank_k0 = 0;
  int free_rank_k1 = 0;
  std::vector<Zint> identity_class;  // torsion coordinates then free, canonical
  SmithDecomposition snf;
};

/// The class vector of an element of (+)Z_torsion (+) Z^free_rank in
/// canonical form: the lexicographic minimum of its orbit under the
/// automorphisms of the group. Complete enumeration for torsion rank <= 2;
/// elementary-generator orbit search above.
std::vector<Zint> canonical_class(const std::vector<Zint>& torsion, int free_rank,
                                  const std::vector<Zint>& torsion_coords,
                                  const std::vector<Zint>& free_coords);

/// K_0 = coker(A^t - 1), K_1 = ker(A^t - 1), and [1]_0 as the image of the
/// all-ones vertex vector under x -> C^-1 x.
KTheoryInvariants ktheory_of_graph(const MultiplicityGraph& e);

/// Same computation for a bare integer matrix treated as an endomorphism
/// of Z^n (used by the standalone matrix interface).
KTheoryInvariants ktheory_of_matrix(const IntMat& b);

}  // namespace mackey
