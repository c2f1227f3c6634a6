#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mackey/graph.hpp"
#include "mackey/ktheory.hpp"
#include "mackey/z2.hpp"

namespace mackey {

enum class AlgebraLabel {
  CuntzAlgebra,               // O_n, n >= 2
  MatrixOverCuntz,            // M_g(C) (x) O_n
  CentralTensor,              // O_[G:H] (x) C*(H), H central
  CircleTensor,               // C(T) (x) C*(G), H = G
  BaumslagSolitarPathAlgebra, // path-category algebra of BS(1, q+1)+
  LacaSpielbergClass,         // boundary / solenoid algebras with K = (Z, Z)
  Unclassified,
};

std::string label_name(AlgebraLabel label);

enum class Relation { Isomorphic, MoritaEquivalent };

struct ClassificationResult {
  AlgebraLabel label = AlgebraLabel::Unclassified;
  Relation relation = Relation::MoritaEquivalent;
  /// label-specific parameters, e.g. {"n": 4} for O_4 or
  /// {"matrix_size": 2, "n": 17} for M_2 (x) O_17.
  std::map<std::string, std::int64_t> parameters;
  /// invariants the rule fired on, for the report
  std::map<std::string, std::string> evidence;
  /// additional identifications the same invariants support
  std::vector<ClassificationResult> notes;
};

/// Maps (G, H, graph, K-theory) to the named-model identification the
/// invariants support, in the fixed rule order: H trivial; H = G; H
/// central; |H| = 2 nonnormal with r = 1; |H| = 2 nonnormal with r > 1
/// split on gcd(p, q). Anything else is Unclassified with the invariants
/// attached. Throws ValidationError on inconsistent inputs.
ClassificationResult classify(const GroupPtr& g, const Subgroup& h,
                              const MultiplicityGraph& e,
                              const KTheoryInvariants& k);

}  // namespace mackey
