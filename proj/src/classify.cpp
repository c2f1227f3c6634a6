#include "mackey/classify.hpp"

#include <numeric>

namespace mackey {

std::string label_name(AlgebraLabel label) {
  switch (label) {
    case AlgebraLabel::CuntzAlgebra: return "CuntzAlgebra";
    case AlgebraLabel::MatrixOverCuntz: return "MatrixOverCuntz";
    case AlgebraLabel::CentralTensor: return "CentralTensor";
    case AlgebraLabel::CircleTensor: return "CircleTensor";
    case AlgebraLabel::BaumslagSolitarPathAlgebra: return "BaumslagSolitarPathAlgebra";
    case AlgebraLabel::LacaSpielbergClass: return "LacaSpielbergClass";
    case AlgebraLabel::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

namespace {

bool subgroup_is_abelian(const GroupPtr& g, const Subgroup& h) {
  for (int a : h.members)
    for (int b : h.members) {
      if (g->mul(a, b) != g->mul(b, a)) return false;
    }
  return true;
}

}  // namespace

ClassificationResult classify(const GroupPtr& g, const Subgroup& h,
                              const MultiplicityGraph& e,
                              const KTheoryInvariants& k) {
  const int order_h = static_cast<int>(h.members.size());
  const int index = g->order / order_h;
  const bool abelian_h = subgroup_is_abelian(g, h);

  ClassificationResult res;
  res.relation = abelian_h ? Relation::Isomorphic : Relation::MoritaEquivalent;
  res.evidence["group"] = g->name;
  res.evidence["subgroup_order"] = std::to_string(order_h);
  res.evidence["index"] = std::to_string(index);

  // H = {1}: X is L^2(G) and O_X is the Cuntz algebra O_|G|.
  if (order_h == 1 && g->order >= 2) {
    res.label = AlgebraLabel::CuntzAlgebra;
    res.relation = Relation::Isomorphic;
    res.parameters["n"] = g->order;
    return res;
  }

  // H = G: the identity correspondence, O_X = C(T) (x) C*(G).
  if (order_h == g->order) {
    res.label = AlgebraLabel::CircleTensor;
    res.relation = Relation::Isomorphic;
    res.parameters["dual_size"] = e.size();
    return res;
  }

  if (is_central(g, h)) {
    if (e.size() != order_h || !abelian_h) {
      throw ValidationError("central subgroup must be abelian with |H| irreducibles");
    }
    res.label = AlgebraLabel::CentralTensor;
    res.relation = Relation::Isomorphic;
    res.parameters["index"] = index;
    res.parameters["dual_size"] = order_h;
    return res;
  }

  if (order_h == 2 && !is_normal(g, h)) {
    if (e.size() != 2) {
      throw ValidationError("an order-2 subgroup has exactly 2 irreducibles, got " +
                            std::to_string(e.size()));
    }
    Z2Profile prof = z2_profile(g, h);
    res.evidence["r"] = std::to_string(prof.r);
    res.evidence["q"] = std::to_string(prof.q);
    res.evidence["p"] = std::to_string(prof.p);
    res.evidence["d"] = std::to_string(prof.d);
    if (e.a(0, 0) != prof.r + prof.q || e.a(0, 1) != prof.q) {
      throw ValidationError("graph does not match the (r, q) profile");
    }

    if (prof.r == 1) {
      res.label = AlgebraLabel::BaumslagSolitarPathAlgebra;
      res.relation = Relation::Isomorphic;
      res.parameters["n"] = prof.q + 1;  // BS(1, n)
      if (prof.q == 1) {
        ClassificationResult note;
        note.label = AlgebraLabel::LacaSpielbergClass;
        note.relation = Relation::MoritaEquivalent;
        note.evidence["k_theory"] = "K_0 = Z, K_1 = Z";
        res.notes.push_back(std::move(note));
      }
      return res;
    }

    if (prof.a == 1) {
      if (prof.p - prof.q == 1) {
        res.label = AlgebraLabel::CuntzAlgebra;
        res.relation = Relation::Isomorphic;
        res.parameters["n"] = prof.d + 1;
      } else {
        res.label = AlgebraLabel::MatrixOverCuntz;
        res.relation = Relation::Isomorphic;
        res.parameters["matrix_size"] = prof.p - prof.q;
        res.parameters["n"] = prof.d + 1;
      }
      return res;
    }

    // p, q not coprime: K_0 = Z_a + Z_{ag}; no named model is known
    res.label = AlgebraLabel::Unclassified;
    res.evidence["k0"] = "Z_" + std::to_string(prof.a) + " + Z_" +
                         std::to_string(prof.a * prof.g);
    return res;
  }

  res.label = AlgebraLabel::Unclassified;
  std::string k0 = "Z^" + std::to_string(k.free_rank_k0);
  for (const Zint& q : k.torsion) k0 += " + Z_" + q.str();
  res.evidence["k0"] = k0;
  res.evidence["k1"] = "Z^" + std::to_string(k.free_rank_k1);
  return res;
}

}  // namespace mackey
