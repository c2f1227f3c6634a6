// Command-line front end: analyze, ktheory, graph, chartable, cocycle, realize.
// Exit codes: 0 success, 2 file/parse error, 3 validation error, 4 resource cap.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "mackey/io.hpp"

namespace fs = std::filesystem;
using namespace mackey;

namespace {

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

struct AnalyzeArgs {
  std::string group, subgroup, format = "json", out, dot, batch;
  int order_cap = kDefaultOrderCap;
};

std::string run_analyze_one(const GroupPtr& g, const Subgroup& h,
                            const std::string& format, const std::string& dot) {
  AnalysisReport report = analyze(g, h);
  if (!dot.empty()) write_file(dot, export_dot(report.graph));
  return format == "table" ? report_to_table(report) : report_to_json(report);
}

int run_analyze(const AnalyzeArgs& args) {
  if (!args.batch.empty()) {
    std::vector<fs::path> jobs;
    for (const auto& entry : fs::directory_iterator(args.batch)) {
      const auto& p = entry.path();
      if (p.extension() == ".json" && p.string().find(".report.json") == std::string::npos) {
        jobs.push_back(p);
      }
    }
    std::sort(jobs.begin(), jobs.end());
    int worst = 0;
    for (const auto& job : jobs) {
      try {
        ordered_json spec = parse_json_file(job.string());
        GroupPtr g = spec.at("group").is_string()
                         ? load_group(spec.at("group").get<std::string>(), args.order_cap)
                         : group_from_json(spec.at("group"), args.order_cap);
        Subgroup h = spec.at("subgroup").is_string()
                         ? load_subgroup(g, spec.at("subgroup").get<std::string>())
                         : subgroup_from_json(g, spec.at("subgroup"));
        fs::path out = job;
        out.replace_extension(".report.json");
        write_file(out.string(), run_analyze_one(g, h, "json", ""));
        std::cout << job.filename().string() << ": ok\n";
      } catch (const IoError& ex) {
        std::cerr << job.filename().string() << ": " << ex.what() << "\n";
        worst = std::max(worst, 2);
      } catch (const ResourceError& ex) {
        std::cerr << job.filename().string() << ": " << ex.what() << "\n";
        worst = std::max(worst, 4);
      } catch (const ValidationError& ex) {
        std::cerr << job.filename().string() << ": " << ex.what() << "\n";
        worst = std::max(worst, 3);
      }
    }
    return worst;
  }
  GroupPtr g = load_group(args.group, args.order_cap);
  Subgroup h = load_subgroup(g, args.subgroup);
  emit(args.out, run_analyze_one(g, h, args.format, args.dot));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact induced-representation multiplicity graphs, graph-algebra "
               "K-theory, and coset cocycles for finite groups"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* cmd_analyze = app.add_subcommand("analyze", "Full pipeline report for (G, H)");
  cmd_analyze->add_option("--group", analyze_args.group, "group file (JSON)");
  cmd_analyze->add_option("--subgroup", analyze_args.subgroup, "subgroup spec (JSON)");
  cmd_analyze->add_option("--format", analyze_args.format, "json|table")
      ->check(CLI::IsMember({"json", "table"}));
  cmd_analyze->add_option("--out", analyze_args.out, "output path (default stdout)");
  cmd_analyze->add_option("--dot", analyze_args.dot, "also write the graph in DOT form");
  cmd_analyze->add_option("--batch", analyze_args.batch, "process every job file in a directory");
  cmd_analyze->add_option("--order-cap", analyze_args.order_cap, "group order cap");

  std::string kt_matrix, kt_out;
  auto* cmd_ktheory = app.add_subcommand(
      "ktheory", "Smith normal form and K-groups of an integer matrix");
  cmd_ktheory->add_option("--matrix", kt_matrix, "inline JSON [[..]] or a matrix file")
      ->required();
  cmd_ktheory->add_option("--out", kt_out, "output path (default stdout)");

  std::string gr_group, gr_subgroup, gr_out, gr_dot;
  int gr_cap = kDefaultOrderCap;
  auto* cmd_graph = app.add_subcommand("graph", "Multiplicity graph of (G, H)");
  cmd_graph->add_option("--group", gr_group)->required();
  cmd_graph->add_option("--subgroup", gr_subgroup)->required();
  cmd_graph->add_option("--out", gr_out);
  cmd_graph->add_option("--dot", gr_dot);
  cmd_graph->add_option("--order-cap", gr_cap);

  std::string ct_group, ct_out;
  int ct_cap = kDefaultOrderCap;
  auto* cmd_chartable = app.add_subcommand("chartable", "Exact character table of G");
  cmd_chartable->add_option("--group", ct_group)->required();
  cmd_chartable->add_option("--out", ct_out);
  cmd_chartable->add_option("--order-cap", ct_cap);

  std::string co_group, co_subgroup, co_section, co_compare, co_out;
  int co_cap = kDefaultOrderCap;
  auto* cmd_cocycle = app.add_subcommand(
      "cocycle", "Cross-section cocycle, coboundary witness, Zimmer data");
  cmd_cocycle->add_option("--group", co_group)->required();
  cmd_cocycle->add_option("--subgroup", co_subgroup)->required();
  cmd_cocycle->add_option("--section", co_section, "coset representative list");
  cmd_cocycle->add_option("--compare", co_compare, "second section to compare against");
  cmd_cocycle->add_option("--out", co_out);
  cmd_cocycle->add_option("--order-cap", co_cap);

  long long rz_r = 0, rz_q = 0;
  std::string rz_out;
  auto* cmd_realize = app.add_subcommand(
      "realize", "Smallest witness in the (r, q) family, as a group file");
  cmd_realize->add_option("--r", rz_r)->required();
  cmd_realize->add_option("--q", rz_q)->required();
  cmd_realize->add_option("--out", rz_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_analyze->parsed()) {
      if (analyze_args.batch.empty() &&
          (analyze_args.group.empty() || analyze_args.subgroup.empty())) {
        std::cerr << "analyze needs --group and --subgroup (or --batch)\n";
        return 2;
      }
      return run_analyze(analyze_args);
    }
    if (cmd_ktheory->parsed()) {
      ordered_json j = !kt_matrix.empty() && kt_matrix.front() == '['
                           ? parse_json_text(kt_matrix)
                           : parse_json_file(kt_matrix);
      KTheoryInvariants k = ktheory_of_matrix(matrix_from_json(j));
      emit(kt_out, ktheory_to_json(k).dump(2) + "\n");
      return 0;
    }
    if (cmd_graph->parsed()) {
      GroupPtr g = load_group(gr_group, gr_cap);
      Subgroup h = load_subgroup(g, gr_subgroup);
      MultiplicityGraph e = build_graph(g, h);
      if (!gr_dot.empty()) write_file(gr_dot, export_dot(e));
      emit(gr_out, export_graph_json(e));
      return 0;
    }
    if (cmd_chartable->parsed()) {
      GroupPtr g = load_group(ct_group, ct_cap);
      emit(ct_out, chartable_to_json(character_table(g)).dump(2) + "\n");
      return 0;
    }
    if (cmd_cocycle->parsed()) {
      GroupPtr g = load_group(co_group, co_cap);
      Subgroup h = load_subgroup(g, co_subgroup);
      CosetSpace cs = left_cosets(g, h);
      Section eta = co_section.empty()
                        ? default_section(cs)
                        : section_from_representatives(
                              cs, section_reps_from_json(parse_json_file(co_section)));
      Cocycle kappa = cocycle_from_section(g, h, eta);

      ordered_json j;
      j["group"] = {{"name", g->name}, {"order", g->order}};
      j["subgroup_members"] = h.members;
      j["cosets"] = kappa.section.cosets.cosets;
      j["section"] = kappa.section.representatives;
      ordered_json table = ordered_json::array();
      for (int i = 0; i < kappa.table.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < kappa.table.cols(); ++c) row.push_back(kappa.table(i, c));
        table.push_back(std::move(row));
      }
      j["kappa"] = std::move(table);
      j["checks"] = {{"cocycle_identity", true},  // verified on construction
                     {"section_identity", section_identity_holds(kappa)}};
      if (kappa.section.base_normalized) {
        ordered_json zimmer = ordered_json::array();
        for (const ZimmerDatum& datum : zimmer_data(kappa)) {
          zimmer.push_back({{"coset", datum.coset},
                            {"orbit_base", datum.orbit_base},
                            {"stabilizer", datum.stabilizer},
                            {"tau", datum.tau},
                            {"is_inclusion", datum.is_inclusion}});
        }
        j["zimmer"] = std::move(zimmer);
      } else {
        j["zimmer"] = nullptr;
      }
      if (!co_compare.empty()) {
        Section eta2 = section_from_representatives(
            left_cosets(g, h), section_reps_from_json(parse_json_file(co_compare)));
        Cocycle kappa2 = cocycle_from_section(g, h, eta2);
        std::vector<int> nu = coboundary_witness(eta, eta2);
        j["comparison"] = {
            {"section", eta2.representatives},
            {"nu", nu},
            {"cohomology_relation", cohomology_relation_holds(kappa, kappa2, nu)}};
      }
      emit(co_out, j.dump(2) + "\n");
      return 0;
    }
    if (cmd_realize->parsed()) {
      RealizedPair pair = realize(rz_r, rz_q);
      ordered_json j = group_to_json(*pair.group);
      j["subgroup"] = {{"members", pair.subgroup.members}};
      emit(rz_out, j.dump(2) + "\n");
      return 0;
    }
  } catch (const IoError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const ResourceError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 4;
  } catch (const ValidationError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
