#pragma once

#include <Eigen/Core>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mackey/errors.hpp"

namespace mackey {

/// Default cap on the order of any constructed group.
inline constexpr int kDefaultOrderCap = 100000;

/// A finite group given by a validated Cayley table over element indices.
///
/// Immutable after construction; all operations on groups are free
/// functions returning fresh values.
struct FiniteGroup {
  std::string name;
  int order = 0;
  std::vector<std::string> elements;  // one label per index
  Eigen::MatrixXi cayley;             // cayley(a, b) = index of a*b
  int identity = 0;
  std::vector<int> inverse;

  int mul(int a, int b) const { return cayley(a, b); }
  int inv(int a) const { return inverse[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted ascending, contains identity
};

/// Left cosets tH of H in G, with a distinguished section (one
/// representative per coset, identity on the coset H itself).
struct CosetSpace {
  GroupPtr parent;
  std::vector<int> subgroup_members;
  std::vector<std::vector<int>> cosets;  // each sorted; ordered by min element
  std::vector<int> representatives;      // default section
  std::vector<int> coset_of;             // element index -> coset index
  int base_coset = 0;                    // the coset H

  int index() const { return static_cast<int>(cosets.size()); }
};

struct DoubleCosetDecomp {
  GroupPtr parent;
  std::vector<int> subgroup_members;
  std::vector<std::vector<int>> blocks;  // HsH, each sorted; ordered by min element
  std::vector<int> representatives;      // minimal element per block
};

/// Orbits of the left H-action h.(tH) = (ht)H on G/H.
struct CosetOrbits {
  std::vector<std::vector<int>> orbits;  // coset indices, each sorted
  int fixed_points = 0;                  // orbits of size 1
  int two_orbits = 0;                    // orbits of size 2
  int larger_orbits = 0;
};

/// A subgroup realized as a group in its own right, with the embedding.
struct EmbeddedGroup {
  GroupPtr group;                // the subgroup's own Cayley structure
  GroupPtr ambient;
  std::vector<int> to_ambient;   // element of group -> element of ambient
  std::vector<int> from_ambient; // element of ambient -> element of group, or -1
};

// --- construction ---------------------------------------------------------

/// Validates table as a group (Latin square, identity, inverses,
/// associativity: full for order <= 512, 10000 sampled triples above).
/// Throws ValidationError naming the violation, ResourceError above cap.
GroupPtr from_cayley(const Eigen::MatrixXi& table,
                     std::vector<std::string> names = {},
                     std::string group_name = "G",
                     int order_cap = kDefaultOrderCap);

/// A permutation of {1..n} as the vector of 0-based images.
using Permutation = std::vector<int>;

/// Enumerates the closure of the generators under composition
/// (a*b = "apply b, then a"). Element names are cycle notations.
GroupPtr from_permutations(const std::vector<Permutation>& generators,
                           int degree,
                           std::string group_name = "G",
                           int order_cap = kDefaultOrderCap);

GroupPtr cyclic(int n);
GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2);
/// Z_n x| Z_2 with the nontrivial element acting by k -> -k.
/// Element (a, t) has index t*n + a; the designated involution is index n.
GroupPtr semidirect_inversion(int n);

// --- subgroup machinery ----------------------------------------------------

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens);
Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
/// Validates an explicit member list (throws ValidationError if not a subgroup).
Subgroup subgroup_from_members(const GroupPtr& g, std::vector<int> members);

Subgroup centralizer(const GroupPtr& g, const Subgroup& h);
bool is_normal(const GroupPtr& g, const Subgroup& h);
/// H <= Z(G)?
bool is_central(const GroupPtr& g, const Subgroup& h);

CosetSpace left_cosets(const GroupPtr& g, const Subgroup& h);
CosetOrbits orbits_on_cosets(const GroupPtr& g, const Subgroup& h,
                             const CosetSpace& cs);
DoubleCosetDecomp double_cosets(const GroupPtr& g, const Subgroup& h);

/// H_s = H n s^-1 H s, as a subgroup of G.
Subgroup mackey_intersection(const GroupPtr& g, const Subgroup& h, int s);

/// Realizes H as a standalone FiniteGroup plus the index maps.
EmbeddedGroup as_group(const Subgroup& h);

// --- small helpers ---------------------------------------------------------

int element_order(const FiniteGroup& g, int x);
/// lcm of all element orders; divides the group order.
long long exponent_of(const FiniteGroup& g);

}  // namespace mackey
