#pragma once

#include <Eigen/Core>

#include <vector>

#include "mackey/group.hpp"

namespace mackey {

/// A choice of coset representatives eta : G/H -> G.
struct Section {
  CosetSpace cosets;
  std::vector<int> representatives;  // one ambient element per coset
  bool base_normalized = false;      // eta(H) = identity

  int rep(int coset) const { return representatives[coset]; }
};

/// The default section of a coset space (minimal-index representatives,
/// identity on the base coset).
Section default_section(CosetSpace cs);
/// A section from explicit representatives; validates eta(tH) in tH.
Section section_from_representatives(CosetSpace cs, std::vector<int> reps);

/// kappa(h, tH) = eta(h tH)^-1 h eta(tH), tabulated over H x G/H.
/// Every value lies in H; the cocycle identity
/// kappa(h1 h2, tH) = kappa(h1, h2 tH) kappa(h2, tH) is verified
/// exhaustively on construction.
struct Cocycle {
  GroupPtr group;
  std::vector<int> subgroup_members;  // sorted
  Section section;
  Eigen::MatrixXi table;  // table(i, c) = kappa(members[i], coset c), ambient index

  int value(int member_pos, int coset) const { return table(member_pos, coset); }
};

Cocycle cocycle_from_section(const GroupPtr& g, const Subgroup& h, Section eta);

/// nu(tH) = eta(tH)^-1 eta'(tH); lands in H automatically, and exhibits the
/// two cocycles as cohomologous.
std::vector<int> coboundary_witness(const Section& eta, const Section& eta_prime);

/// Checks kappa'(h, tH) = nu(h tH)^-1 kappa(h, tH) nu(tH) for all pairs.
bool cohomology_relation_holds(const Cocycle& kappa, const Cocycle& kappa_prime,
                               const std::vector<int>& nu);

/// Checks h eta(tH) = eta(h tH) kappa(h, tH) for all pairs.
bool section_identity_holds(const Cocycle& kappa);

/// Stabilizer data of one coset: H_tH = {h in H : h tH = tH} and the
/// restricted homomorphism tau_tH(h) = kappa(h, tH).
struct ZimmerDatum {
  int coset = 0;
  bool orbit_base = false;          // minimal coset index within its H-orbit
  std::vector<int> stabilizer;      // ambient indices, sorted
  std::vector<int> tau;             // tau[i] = kappa(stabilizer[i], coset)
  bool is_inclusion = false;        // tau(h) = h for all h
};

/// One datum per coset; requires a base-normalized section. The
/// homomorphism property of every tau is verified.
std::vector<ZimmerDatum> zimmer_data(const Cocycle& kappa);

}  // namespace mackey
