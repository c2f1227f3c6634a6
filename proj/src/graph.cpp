#include "mackey/graph.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace mackey {

namespace {
using ordered_json = nlohmann::ordered_json;

void validate_graph(const MultiplicityGraph& e) {
  const int n = e.size();
  if (e.a.rows() != n || e.a.cols() != n) {
    throw ValidationError("vertex matrix shape does not match vertex count");
  }
  if (static_cast<int>(e.degrees.size()) != n) {
    throw ValidationError("graph needs one degree per vertex");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (e.a(i, j) < 0) throw ValidationError("vertex matrix entries must be >= 0");
    }
    if (e.a(i, i) < 1) throw ValidationError("graph must have a loop at every vertex");
  }
  for (int v = 0; v < n; ++v) {
    long long sum = 0;
    for (int u = 0; u < n; ++u) sum += static_cast<long long>(e.a(u, v)) * e.degrees[u];
    if (sum != static_cast<long long>(e.index) * e.degrees[v]) {
      throw ValidationError("column dimension identity fails at vertex " + std::to_string(v));
    }
  }
}
}  // namespace

MultiplicityGraph build_graph(const GroupPtr& g, const Subgroup& h) {
  EmbeddedGroup emb = as_group(h);
  CharacterTable table = character_table(emb.group);
  const int n = table.count();

  MultiplicityGraph e;
  e.group_name = g->name;
  e.subgroup_members = h.members;
  e.index = g->order / static_cast<int>(h.members.size());
  e.degrees = table.degrees;
  e.vertices.reserve(n);
  for (int i = 0; i < n; ++i) e.vertices.push_back("chi" + std::to_string(i));
  e.a.resize(n, n);
  for (int v = 0; v < n; ++v) {
    e.a.col(v) = mackey_multiplicities(g, h, emb, table, v);
  }
  validate_graph(e);
  return e;
}

GraphFlags graph_flags(const MultiplicityGraph& e) {
  const int n = e.size();
  GraphFlags flags;
  flags.transitive = (e.a.array() > 0).all();
  flags.loop_at_every_vertex = true;
  for (int i = 0; i < n; ++i) {
    if (e.a(i, i) < 1) flags.loop_at_every_vertex = false;
  }

  // A cycle with no entry consists of vertices of total in-degree exactly 1
  // whose unique incoming edge comes from the previous cycle vertex, so it
  // shows up as a cycle in the unique-predecessor graph.
  std::vector<int> pred(n, -1);
  for (int u = 0; u < n; ++u) {
    long long indeg = 0;
    int src = -1;
    for (int v = 0; v < n; ++v) {
      indeg += e.a(u, v);
      if (e.a(u, v) > 0) src = v;
    }
    if (indeg == 1) pred[u] = src;
  }
  flags.every_cycle_has_entry = true;
  for (int start = 0; start < n; ++start) {
    if (pred[start] < 0) continue;
    int slow = start;
    for (int step = 0; step < n && slow >= 0; ++step) {
      slow = pred[slow];
      if (slow == start) { flags.every_cycle_has_entry = false; break; }
    }
    if (!flags.every_cycle_has_entry) break;
  }
  flags.unital_simple_purely_infinite = flags.transitive && flags.every_cycle_has_entry;
  return flags;
}

std::string export_dot(const MultiplicityGraph& e) {
  std::ostringstream os;
  os << "digraph E {\n";
  for (int i = 0; i < e.size(); ++i) {
    os << "  \"" << e.vertices[i] << "\" [label=\"" << e.vertices[i]
       << " (deg " << e.degrees[i] << ")\"];\n";
  }
  for (int v = 0; v < e.size(); ++v) {
    for (int u = 0; u < e.size(); ++u) {
      if (e.a(u, v) > 0) {
        os << "  \"" << e.vertices[v] << "\" -> \"" << e.vertices[u]
           << "\" [label=\"(" << e.a(u, v) << ")\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

std::string export_graph_json(const MultiplicityGraph& e) {
  GraphFlags flags = graph_flags(e);
  ordered_json j;
  j["vertices"] = e.vertices;
  j["degrees"] = e.degrees;
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < e.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < e.size(); ++k) row.push_back(e.a(i, k));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  j["flags"] = {{"transitive", flags.transitive},
                {"every_cycle_has_entry", flags.every_cycle_has_entry},
                {"loop_at_every_vertex", flags.loop_at_every_vertex},
                {"unital_simple_purely_infinite", flags.unital_simple_purely_infinite}};
  j["provenance"] = {{"group", e.group_name},
                     {"subgroup_members", e.subgroup_members},
                     {"index", e.index}};
  return j.dump(2) + "\n";
}

MultiplicityGraph graph_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("graph JSON parse error: ") + ex.what());
  }
  MultiplicityGraph e;
  try {
    e.vertices = j.at("vertices").get<std::vector<std::string>>();
    e.degrees = j.at("degrees").get<std::vector<int>>();
    auto rows = j.at("matrix").get<std::vector<std::vector<int>>>();
    const int n = static_cast<int>(e.vertices.size());
    if (static_cast<int>(rows.size()) != n) throw ValidationError("matrix row count");
    e.a.resize(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) throw ValidationError("matrix column count");
      for (int k = 0; k < n; ++k) e.a(i, k) = rows[i][k];
    }
    const auto& prov = j.at("provenance");
    e.group_name = prov.at("group").get<std::string>();
    e.subgroup_members = prov.at("subgroup_members").get<std::vector<int>>();
    e.index = prov.at("index").get<int>();
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("graph JSON missing field: ") + ex.what());
  }
  validate_graph(e);
  return e;
}

}  // namespace mackey
