#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "mackey/chartable.hpp"
#include "mackey/classify.hpp"
#include "mackey/cocycle.hpp"
#include "mackey/graph.hpp"
#include "mackey/ktheory.hpp"
#include "mackey/z2.hpp"

namespace mackey {

using ordered_json = nlohmann::ordered_json;

// --- file formats -----------------------------------------------------------
//
// Group file:    {"name": str, "elements": [str], "cayley": [[int]]}
//            or  {"permutation_generators": [[[int]]], "degree": int}
//                (generators as 1-based cycle lists)
// Subgroup spec: {"generators": [int]} or {"members": [int]}; a group file
//                with an embedded "subgroup" object is also accepted.
// Matrix file:   {"matrix": [[int]]} or a bare [[int]].
// Section file:  {"representatives": [int]} or a bare [int].

ordered_json parse_json_file(const std::string& path);
ordered_json parse_json_text(const std::string& text);

GroupPtr group_from_json(const ordered_json& j, int order_cap = kDefaultOrderCap);
GroupPtr load_group(const std::string& path, int order_cap = kDefaultOrderCap);

Subgroup subgroup_from_json(const GroupPtr& g, const ordered_json& j);
Subgroup load_subgroup(const GroupPtr& g, const std::string& path);

IntMat matrix_from_json(const ordered_json& j);
std::vector<int> section_reps_from_json(const ordered_json& j);

ordered_json group_to_json(const FiniteGroup& g);
ordered_json chartable_to_json(const CharacterTable& table);
ordered_json ktheory_to_json(const KTheoryInvariants& k);
ordered_json classification_to_json(const ClassificationResult& c);
ordered_json z2_profile_to_json(const Z2Profile& prof);

/// Everything the pipeline derives from one (group file, subgroup spec)
/// pair; a pure function of the inputs.
struct AnalysisReport {
  GroupPtr group;
  Subgroup subgroup;
  int index = 0;
  bool normal = false;
  bool central = false;
  DoubleCosetDecomp double_cosets_summary;
  std::optional<Z2Profile> z2;
  MultiplicityGraph graph;
  GraphFlags flags;
  KTheoryInvariants ktheory;
  ClassificationResult classification;
  double elapsed_ms = 0.0;  // excluded from the JSON rendering
};

AnalysisReport analyze(const GroupPtr& g, const Subgroup& h);

/// Deterministic: byte-identical output for identical inputs.
std::string report_to_json(const AnalysisReport& report);
/// Human-readable; includes timing, exempt from determinism guarantees.
std::string report_to_table(const AnalysisReport& report);

/// Atomic file write (temp file + rename).
void write_file(const std::string& path, const std::string& content);

}  // namespace mackey
