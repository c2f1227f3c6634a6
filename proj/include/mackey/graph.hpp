#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "mackey/chartable.hpp"
#include "mackey/group.hpp"

namespace mackey {

/// Directed multigraph on the irreducibles of H: a(u, v) counts the edges
/// from vertex v to vertex u, i.e. the multiplicity of irreducible u in
/// X-Ind of irreducible v.
struct MultiplicityGraph {
  std::vector<std::string> vertices;  // canonical irreducible order
  std::vector<int> degrees;           // degree of each irreducible
  Eigen::MatrixXi a;                  // vertex matrix
  std::string group_name;             // provenance
  std::vector<int> subgroup_members;  // provenance
  int index = 0;                      // [G:H]

  int size() const { return static_cast<int>(vertices.size()); }
  bool operator==(const MultiplicityGraph& o) const {
    return vertices == o.vertices && degrees == o.degrees && a == o.a &&
           group_name == o.group_name && subgroup_members == o.subgroup_members &&
           index == o.index;
  }
};

struct GraphFlags {
  bool transitive = false;             // an edge between every ordered pair
  bool every_cycle_has_entry = false;
  bool loop_at_every_vertex = false;
  /// transitive + every cycle has an entry: the graph algebra is unital,
  /// simple, and purely infinite.
  bool unital_simple_purely_infinite = false;
};

/// Vertex matrix from the double-coset multiplicity computation; validates
/// the loop and column-dimension invariants before returning.
MultiplicityGraph build_graph(const GroupPtr& g, const Subgroup& h);

GraphFlags graph_flags(const MultiplicityGraph& e);

std::string export_dot(const MultiplicityGraph& e);
std::string export_graph_json(const MultiplicityGraph& e);
MultiplicityGraph graph_from_json(const std::string& text);

}  // namespace mackey
