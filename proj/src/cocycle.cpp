#include "mackey/cocycle.hpp"

#include <algorithm>

namespace mackey {

Section default_section(CosetSpace cs) {
  Section s;
  s.representatives = cs.representatives;
  s.cosets = std::move(cs);
  s.base_normalized = true;
  return s;
}

Section section_from_representatives(CosetSpace cs, std::vector<int> reps) {
  if (reps.size() != cs.cosets.size()) {
    throw ValidationError("section needs one representative per coset");
  }
  for (std::size_t c = 0; c < reps.size(); ++c) {
    if (reps[c] < 0 || reps[c] >= cs.parent->order ||
        cs.coset_of[reps[c]] != static_cast<int>(c)) {
      throw ValidationError("representative " + std::to_string(reps[c]) +
                            " does not lie in coset " + std::to_string(c));
    }
  }
  Section s;
  s.base_normalized = reps[cs.base_coset] == cs.parent->identity;
  s.representatives = std::move(reps);
  s.cosets = std::move(cs);
  return s;
}

Cocycle cocycle_from_section(const GroupPtr& g, const Subgroup& h, Section eta) {
  if (eta.cosets.parent != g || eta.cosets.subgroup_members != h.members) {
    throw ValidationError("section does not belong to this coset space");
  }
  const int nh = static_cast<int>(h.members.size());
  const int nc = eta.cosets.index();
  std::vector<char> in_h(g->order, 0);
  for (int x : h.members) in_h[x] = 1;

  Cocycle kappa;
  kappa.group = g;
  kappa.subgroup_members = h.members;
  kappa.table.resize(nh, nc);
  for (int i = 0; i < nh; ++i) {
    const int hh = h.members[i];
    for (int c = 0; c < nc; ++c) {
      const int target = eta.cosets.coset_of[g->mul(hh, eta.rep(c))];
      const int value = g->mul(g->mul(g->inv(eta.rep(target)), hh), eta.rep(c));
      if (!in_h[value]) {
        throw std::logic_error("cocycle value left the subgroup");  // impossible for valid sections
      }
      kappa.table(i, c) = value;
    }
  }
  kappa.section = std::move(eta);

  // cocycle identity, exhaustively
  const auto& cs = kappa.section.cosets;
  std::vector<int> pos(g->order, -1);
  for (int i = 0; i < nh; ++i) pos[h.members[i]] = i;
  for (int i = 0; i < nh; ++i) {
    for (int j = 0; j < nh; ++j) {
      const int prod = pos[g->mul(h.members[i], h.members[j])];
      for (int c = 0; c < nc; ++c) {
        const int moved = cs.coset_of[g->mul(h.members[j], kappa.section.rep(c))];
        const int lhs = kappa.table(prod, c);
        const int rhs = g->mul(kappa.table(i, moved), kappa.table(j, c));
        if (lhs != rhs) throw std::logic_error("cocycle identity failed");
      }
    }
  }
  return kappa;
}

std::vector<int> coboundary_witness(const Section& eta, const Section& eta_prime) {
  if (eta.cosets.parent != eta_prime.cosets.parent ||
      eta.cosets.subgroup_members != eta_prime.cosets.subgroup_members) {
    throw ValidationError("sections belong to different coset spaces");
  }
  const auto& g = *eta.cosets.parent;
  std::vector<int> nu(eta.cosets.index());
  for (int c = 0; c < eta.cosets.index(); ++c) {
    nu[c] = g.mul(g.inv(eta.rep(c)), eta_prime.rep(c));
  }
  return nu;
}

bool cohomology_relation_holds(const Cocycle& kappa, const Cocycle& kappa_prime,
                               const std::vector<int>& nu) {
  const auto& g = *kappa.group;
  const auto& cs = kappa.section.cosets;
  const int nh = static_cast<int>(kappa.subgroup_members.size());
  for (int i = 0; i < nh; ++i) {
    const int hh = kappa.subgroup_members[i];
    for (int c = 0; c < cs.index(); ++c) {
      const int moved = cs.coset_of[g.mul(hh, cs.representatives[c])];
      const int rhs = g.mul(g.mul(g.inv(nu[moved]), kappa.table(i, c)), nu[c]);
      if (kappa_prime.table(i, c) != rhs) return false;
    }
  }
  return true;
}

bool section_identity_holds(const Cocycle& kappa) {
  const auto& g = *kappa.group;
  const auto& cs = kappa.section.cosets;
  const int nh = static_cast<int>(kappa.subgroup_members.size());
  for (int i = 0; i < nh; ++i) {
    const int hh = kappa.subgroup_members[i];
    for (int c = 0; c < cs.index(); ++c) {
      const int moved = cs.coset_of[g.mul(hh, kappa.section.rep(c))];
      if (g.mul(hh, kappa.section.rep(c)) !=
          g.mul(kappa.section.rep(moved), kappa.table(i, c))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<ZimmerDatum> zimmer_data(const Cocycle& kappa) {
  if (!kappa.section.base_normalized) {
    throw ValidationError("Zimmer data requires a base-normalized section");
  }
  const auto& g = *kappa.group;
  const auto& cs = kappa.section.cosets;
  const int nh = static_cast<int>(kappa.subgroup_members.size());
  const int nc = cs.index();

  // orbit base points: minimal coset index per H-orbit
  std::vector<int> orbit_min(nc, -1);
  {
    std::vector<char> done(nc, 0);
    for (int c = 0; c < nc; ++c) {
      if (done[c]) continue;
      std::vector<int> stack{c};
      std::vector<int> orbit;
      done[c] = 1;
      while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        orbit.push_back(cur);
        for (int x : kappa.subgroup_members) {
          int next = cs.coset_of[g.mul(x, cs.representatives[cur])];
          if (!done[next]) { done[next] = 1; stack.push_back(next); }
        }
      }
      int base = *std::min_element(orbit.begin(), orbit.end());
      for (int o : orbit) orbit_min[o] = base;
    }
  }

  std::vector<int> pos(g.order, -1);
  for (int i = 0; i < nh; ++i) pos[kappa.subgroup_members[i]] = i;

  std::vector<ZimmerDatum> out;
  out.reserve(nc);
  for (int c = 0; c < nc; ++c) {
    ZimmerDatum datum;
    datum.coset = c;
    datum.orbit_base = orbit_min[c] == c;
    for (int i = 0; i < nh; ++i) {
      const int hh = kappa.subgroup_members[i];
      if (cs.coset_of[g.mul(hh, kappa.section.rep(c))] == c) {
        datum.stabilizer.push_back(hh);
        datum.tau.push_back(kappa.table(i, c));
      }
    }
    // homomorphism property of tau on the stabilizer
    std::vector<int> tau_of(g.order, -1);
    for (std::size_t i = 0; i < datum.stabilizer.size(); ++i) {
      tau_of[datum.stabilizer[i]] = datum.tau[i];
    }
    for (int a : datum.stabilizer) {
      for (int b : datum.stabilizer) {
        const int ab = g.mul(a, b);
        if (tau_of[ab] < 0 || tau_of[ab] != g.mul(tau_of[a], tau_of[b])) {
          throw std::logic_error("restricted cocycle is not a homomorphism");
        }
      }
    }
    datum.is_inclusion = datum.stabilizer == datum.tau;
    out.push_back(std::move(datum));
  }
  return out;
}

}  // namespace mackey
