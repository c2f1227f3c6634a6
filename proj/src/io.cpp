#include "mackey/io.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace mackey {

namespace {

ordered_json zint_to_json(const Zint& z) {
  if (z.fits_int64()) return ordered_json(z.to_int64());
  return ordered_json(z.str());
}

ordered_json zint_vector_to_json(const std::vector<Zint>& v) {
  ordered_json arr = ordered_json::array();
  for (const Zint& z : v) arr.push_back(zint_to_json(z));
  return arr;
}

ordered_json intmat_to_json(const IntMat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(zint_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ordered_json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  try {
    ordered_json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& ex) {
    throw IoError("JSON parse error in " + path + ": " + ex.what());
  }
}

ordered_json parse_json_text(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("JSON parse error: ") + ex.what());
  }
}

namespace {

std::vector<Permutation> cycles_to_permutations(const ordered_json& gens, int degree) {
  std::vector<Permutation> out;
  for (const auto& gen : gens) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0);
    for (const auto& cycle : gen) {
      std::vector<int> c = cycle.get<std::vector<int>>();
      for (int v : c) {
        if (v < 1 || v > degree) {
          throw ValidationError("cycle entry " + std::to_string(v) +
                                " out of range 1.." + std::to_string(degree));
        }
      }
      for (std::size_t i = 0; i < c.size(); ++i) {
        p[c[i] - 1] = c[(i + 1) % c.size()] - 1;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

GroupPtr group_from_json(const ordered_json& j, int order_cap) {
  try {
    if (j.contains("permutation_generators")) {
      const int degree = j.at("degree").get<int>();
      auto gens = cycles_to_permutations(j.at("permutation_generators"), degree);
      std::string name = j.value("name", "G");
      return from_permutations(gens, degree, std::move(name), order_cap);
    }
    auto rows = j.at("cayley").get<std::vector<std::vector<int>>>();
    const int n = static_cast<int>(rows.size());
    Eigen::MatrixXi table(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) {
        throw ValidationError("cayley table is not square");
      }
      for (int k = 0; k < n; ++k) table(i, k) = rows[i][k];
    }
    std::vector<std::string> names;
    if (j.contains("elements")) names = j.at("elements").get<std::vector<std::string>>();
    std::string name = j.value("name", "G");
    return from_cayley(table, std::move(names), std::move(name), order_cap);
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("group file: ") + ex.what());
  }
}

GroupPtr load_group(const std::string& path, int order_cap) {
  return group_from_json(parse_json_file(path), order_cap);
}

Subgroup subgroup_from_json(const GroupPtr& g, const ordered_json& j) {
  try {
    if (j.contains("subgroup")) return subgroup_from_json(g, j.at("subgroup"));
    if (j.contains("generators")) {
      return subgroup_generated(g, j.at("generators").get<std::vector<int>>());
    }
    if (j.contains("members")) {
      return subgroup_from_members(g, j.at("members").get<std::vector<int>>());
    }
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("subgroup spec: ") + ex.what());
  }
  throw IoError("subgroup spec needs \"generators\" or \"members\"");
}

Subgroup load_subgroup(const GroupPtr& g, const std::string& path) {
  return subgroup_from_json(g, parse_json_file(path));
}

IntMat matrix_from_json(const ordered_json& j) {
  const ordered_json& m = j.is_array() ? j : j.at("matrix");
  try {
    auto rows = m.get<std::vector<std::vector<long long>>>();
    if (rows.empty()) throw ValidationError("matrix must be nonempty");
    IntMat out(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows[0].size()) {
        throw ValidationError("matrix rows have unequal lengths");
      }
      for (std::size_t k = 0; k < rows[i].size(); ++k) out(i, k) = Zint(rows[i][k]);
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("matrix input: ") + ex.what());
  }
}

std::vector<int> section_reps_from_json(const ordered_json& j) {
  try {
    if (j.is_array()) return j.get<std::vector<int>>();
    return j.at("representatives").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(std::string("section file: ") + ex.what());
  }
}

ordered_json group_to_json(const FiniteGroup& g) {
  ordered_json j;
  j["name"] = g.name;
  j["elements"] = g.elements;
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < g.order; ++i) {
    ordered_json row = ordered_json::array();
    for (int k = 0; k < g.order; ++k) row.push_back(g.cayley(i, k));
    rows.push_back(std::move(row));
  }
  j["cayley"] = std::move(rows);
  return j;
}

ordered_json chartable_to_json(const CharacterTable& table) {
  const auto& cs = *table.cls;
  ordered_json j;
  j["group"] = cs.group->name;
  j["order"] = cs.group->order;
  j["exponent"] = cs.exponent;
  ordered_json classes = ordered_json::array();
  for (int c = 0; c < cs.count(); ++c) {
    classes.push_back({{"representative", cs.representatives[c]},
                       {"size", cs.sizes[c]}});
  }
  j["classes"] = std::move(classes);
  ordered_json irr = ordered_json::array();
  for (int i = 0; i < table.count(); ++i) {
    ordered_json values = ordered_json::array();
    for (const Cyc& v : table.irreducibles[i].values) {
      ordered_json coeffs = ordered_json::array();
      for (std::int64_t c = 0; c < v.e; ++c) coeffs.push_back(v.coeffs[c]);
      values.push_back(std::move(coeffs));
    }
    irr.push_back({{"degree", table.degrees[i]}, {"values", std::move(values)}});
  }
  j["irreducibles"] = std::move(irr);
  return j;
}

ordered_json ktheory_to_json(const KTheoryInvariants& k) {
  ordered_json j;
  j["torsion"] = zint_vector_to_json(k.torsion);
  j["free_rank"] = k.free_rank_k0;
  j["k1_rank"] = k.free_rank_k1;
  j["identity_class"] = zint_vector_to_json(k.identity_class);
  ordered_json snf;
  snf["rank"] = k.snf.rank;
  snf["invariant_factors"] = zint_vector_to_json(k.snf.invariant_factors);
  snf["minor_gcds"] = zint_vector_to_json(k.snf.minor_gcds);
  snf["C"] = intmat_to_json(k.snf.c);
  snf["N"] = intmat_to_json(k.snf.n);
  snf["D"] = intmat_to_json(k.snf.d);
  j["snf"] = std::move(snf);
  return j;
}

ordered_json classification_to_json(const ClassificationResult& c) {
  ordered_json j;
  j["label"] = label_name(c.label);
  j["relation"] = c.relation == Relation::Isomorphic ? "isomorphic" : "morita_equivalent";
  j["parameters"] = ordered_json::object();
  for (const auto& [key, value] : c.parameters) j["parameters"][key] = value;
  j["evidence"] = ordered_json::object();
  for (const auto& [key, value] : c.evidence) j["evidence"][key] = value;
  ordered_json notes = ordered_json::array();
  for (const auto& note : c.notes) notes.push_back(classification_to_json(note));
  j["notes"] = std::move(notes);
  return j;
}

ordered_json z2_profile_to_json(const Z2Profile& prof) {
  ordered_json j;
  j["r"] = prof.r;
  j["q"] = prof.q;
  j["p"] = prof.p;
  j["d"] = prof.d;
  j["a"] = prof.a;
  j["u"] = prof.u;
  j["v"] = prof.v;
  j["g"] = prof.g;
  j["bezout"] = {{"z", prof.z}, {"w", prof.w}};
  if (prof.m) j["m"] = *prof.m;
  else j["m"] = nullptr;
  return j;
}

AnalysisReport analyze(const GroupPtr& g, const Subgroup& h) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport report;
  report.group = g;
  report.subgroup = h;
  report.index = g->order / static_cast<int>(h.members.size());
  report.normal = is_normal(g, h);
  report.central = is_central(g, h);
  report.double_cosets_summary = double_cosets(g, h);
  if (h.members.size() == 2 && !report.normal) {
    report.z2 = z2_profile(g, h);
  }
  report.graph = build_graph(g, h);
  report.flags = graph_flags(report.graph);
  report.ktheory = ktheory_of_graph(report.graph);
  report.classification = classify(g, h, report.graph, report.ktheory);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::string report_to_json(const AnalysisReport& report) {
  ordered_json j;
  j["group"] = {{"name", report.group->name}, {"order", report.group->order}};
  j["subgroup"] = {{"members", report.subgroup.members},
                   {"order", report.subgroup.members.size()},
                   {"index", report.index},
                   {"normal", report.normal},
                   {"central", report.central}};
  std::vector<std::size_t> sizes;
  for (const auto& block : report.double_cosets_summary.blocks) {
    sizes.push_back(block.size());
  }
  j["double_cosets"] = {{"count", report.double_cosets_summary.blocks.size()},
                        {"sizes", sizes}};
  j["z2_profile"] = report.z2 ? z2_profile_to_json(*report.z2) : ordered_json(nullptr);
  j["graph"] = parse_json_text(export_graph_json(report.graph));
  j["ktheory"] = ktheory_to_json(report.ktheory);
  j["classification"] = classification_to_json(report.classification);
  return j.dump(2) + "\n";
}

std::string report_to_table(const AnalysisReport& report) {
  std::ostringstream os;
  os << "group        " << report.group->name << " (order " << report.group->order << ")\n";
  os << "subgroup     order " << report.subgroup.members.size() << ", index "
     << report.index << (report.normal ? ", normal" : ", nonnormal")
     << (report.central ? ", central" : "") << "\n";
  os << "double cosets " << report.double_cosets_summary.blocks.size() << " block(s)\n";
  if (report.z2) {
    os << "z2 profile   r=" << report.z2->r << " q=" << report.z2->q
       << " p=" << report.z2->p << " d=" << report.z2->d << "\n";
  }
  os << "graph        " << report.graph.size() << " vertices, matrix";
  for (int i = 0; i < report.graph.size(); ++i) {
    os << " [";
    for (int k = 0; k < report.graph.size(); ++k) {
      os << report.graph.a(i, k) << (k + 1 < report.graph.size() ? " " : "");
    }
    os << "]";
  }
  os << "\n";
  os << "flags        transitive=" << report.flags.transitive
     << " every_cycle_has_entry=" << report.flags.every_cycle_has_entry
     << " loop_at_every_vertex=" << report.flags.loop_at_every_vertex << "\n";
  if (report.flags.unital_simple_purely_infinite) {
    os << "             C*(E) is unital, simple, and purely infinite\n";
  }
  os << "K0           ";
  if (report.ktheory.torsion.empty() && report.ktheory.free_rank_k0 == 0) os << "0";
  for (std::size_t i = 0; i < report.ktheory.torsion.size(); ++i) {
    os << (i ? " + " : "") << "Z_" << report.ktheory.torsion[i];
  }
  if (report.ktheory.free_rank_k0 > 0) {
    os << (report.ktheory.torsion.empty() ? "" : " + ") << "Z^"
       << report.ktheory.free_rank_k0;
  }
  os << "\n";
  os << "K1           Z^" << report.ktheory.free_rank_k1 << "\n";
  os << "[1]_0        (";
  for (std::size_t i = 0; i < report.ktheory.identity_class.size(); ++i) {
    os << (i ? ", " : "") << report.ktheory.identity_class[i];
  }
  os << ")\n";
  os << "class        " << label_name(report.classification.label) << " ("
     << (report.classification.relation == Relation::Isomorphic ? "isomorphic"
                                                                : "morita_equivalent")
     << ")\n";
  for (const auto& note : report.classification.notes) {
    os << "             also " << label_name(note.label) << " (morita_equivalent)\n";
  }
  os << "time         " << report.elapsed_ms << " ms\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write file: " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

}  // namespace mackey
