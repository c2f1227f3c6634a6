#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <memory>
#include <vector>

#include "mackey/cyclotomic.hpp"
#include "mackey/group.hpp"

namespace mackey {

/// Conjugacy classes of a group plus the cyclotomic/residue context shared
/// by all class functions on it. The identity's class comes first; the
/// remaining classes are ordered by minimal element index.
struct ClassStructure {
  GroupPtr group;
  std::vector<std::vector<int>> classes;  // each sorted
  std::vector<int> representatives;       // minimal element per class
  std::vector<int> class_of;              // element -> class index
  std::vector<int> sizes;
  std::vector<int> inverse_class;         // class of the inverses
  std::int64_t exponent = 1;
  ResidueCtx ctx;

  int count() const { return static_cast<int>(classes.size()); }
};

using ClassesPtr = std::shared_ptr<const ClassStructure>;

ClassesPtr class_structure(const GroupPtr& g);

/// Exact class function: one cyclotomic value per conjugacy class, plus
/// the companion residues modulo the verification prime.
struct ClassFunction {
  ClassesPtr cls;
  std::vector<Cyc> values;             // one per class, modulus cls->exponent
  std::vector<std::int64_t> residues;  // eval at cls->ctx.root

  const Cyc& value_on_class(int c) const { return values[c]; }
  const Cyc& value_at(int element) const { return values[cls->class_of[element]]; }
};

/// Builds a class function from per-class cyclotomic values (residues are
/// derived). Values must be constant on classes by construction.
ClassFunction make_class_function(const ClassesPtr& cls, std::vector<Cyc> values);

struct CharacterTable {
  ClassesPtr cls;
  std::vector<ClassFunction> irreducibles;  // trivial first, then by degree,
                                            // then lexicographic on values
  std::vector<int> degrees;

  int count() const { return static_cast<int>(irreducibles.size()); }
};

/// Exact irreducible character table via class-sum matrices over GF(p)
/// lifted to cyclotomic integers; both orthogonality relations are
/// verified before returning.
CharacterTable character_table(const GroupPtr& g);

/// <chi, psi> = (1/|K|) sum chi(k) conj(psi(k)), exact. The residue route
/// is recomputed alongside and must agree; disagreement or a non-integral
/// value throws (it would signal an arithmetic bug).
std::int64_t inner_product(const ClassFunction& chi, const ClassFunction& psi);

/// chi|_K for K embedded in chi's group.
ClassFunction restrict_to(const ClassFunction& chi, const EmbeddedGroup& k,
                          const ClassesPtr& k_cls);

/// chi^s on H_s <= H: value at h is chi(s h s^-1). `h_in_g` embeds H in G,
/// `hs_in_h` embeds H_s in H, and s is an element of G.
ClassFunction conj_twist(const ClassFunction& chi, const EmbeddedGroup& h_in_g,
                         const EmbeddedGroup& hs_in_h, const ClassesPtr& hs_cls,
                         int s);

/// Induction from K (embedded in the ambient group) up to the ambient group.
ClassFunction induced_character(const ClassFunction& chi, const EmbeddedGroup& k,
                                const ClassesPtr& ambient_cls);

/// Multiplicity vectors of the irreducibles of H in X-Ind V, where V is an
/// irreducible of H. Two independent routes: the double-coset decomposition
/// (production) and restriction of the induced character (cross-check).
Eigen::VectorXi mackey_multiplicities(const GroupPtr& g, const Subgroup& h,
                                      const EmbeddedGroup& emb,
                                      const CharacterTable& table, int v);
Eigen::VectorXi frobenius_multiplicities(const GroupPtr& g, const Subgroup& h,
                                         const EmbeddedGroup& emb,
                                         const CharacterTable& table, int v);

}  // namespace mackey
