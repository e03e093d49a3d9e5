#include "aeap/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "aeap/cascade.hpp"
#include "aeap/errors.hpp"
#include "aeap/harness.hpp"
#include "aeap/ilp.hpp"
#include "aeap/json_io.hpp"
#include "aeap/network.hpp"
#include "aeap/solvers.hpp"
#include "aeap/vulnerability.hpp"

namespace aeap {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << content;
}

Network load_network(const std::string& path) { return parse_network(read_file(path)); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
  }
  return out;
}

struct Options {
  std::string net;
  std::string fail;
  std::string trace_csv;
  int k = 1;
  std::string method;
  std::string attacked;
  int s = 1;
  std::string out;
  std::string sidecar;
  std::string config;
  std::string sweep;
  std::string out_dir;
  std::string universe;
  std::string subsets;
  int x = 1;
  std::uint64_t cap = kDefaultEvaluationCap;
};

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cascading failure simulation and auxiliary entity allocation for interdependent networks", "aeap"};
  app.require_subcommand(1);
  Options o;

  auto* simulate = app.add_subcommand("simulate", "Simulate the cascade triggered by an initial failure set");
  simulate->add_option("--net", o.net, "Network file (.idr)")->required();
  simulate->add_option("--fail", o.fail, "Comma separated initial failures, e.g. b2,b3")->required();
  simulate->add_option("--trace-csv", o.trace_csv, "Also write the per-step state table as CSV");

  auto* vulnerable = app.add_subcommand("vulnerable", "Find the k most vulnerable entities");
  vulnerable->add_option("--net", o.net, "Network file (.idr)")->required();
  vulnerable->add_option("--k", o.k, "Attack size")->required();
  o.method = "exact";
  vulnerable->add_option("--method", o.method, "exact|greedy")->check(CLI::IsMember({"exact", "greedy"}));
  vulnerable->add_option("--cap", o.cap, "Evaluation cap for exhaustive search");

  auto* aeap_cmd = app.add_subcommand("aeap", "Allocate auxiliary entities under a modification budget");
  aeap_cmd->add_option("--net", o.net, "Network file (.idr)")->required();
  aeap_cmd->add_option("--attacked", o.attacked, "Comma separated attacked entities")->required();
  aeap_cmd->add_option("--s", o.s, "Modification budget")->required();
  aeap_cmd->add_option("--method", o.method, "heuristic|exact|alg1")
      ->required()
      ->check(CLI::IsMember({"heuristic", "exact", "alg1"}));
  aeap_cmd->add_option("--cap", o.cap, "Evaluation cap for exhaustive search");

  auto* export_lp = app.add_subcommand("export-lp", "Write the allocation ILP in LP format");
  export_lp->add_option("--net", o.net, "Network file (.idr)")->required();
  export_lp->add_option("--attacked", o.attacked, "Comma separated attacked entities")->required();
  export_lp->add_option("--s", o.s, "Modification budget")->required();
  export_lp->add_option("--out", o.out, "LP output path")->required();
  export_lp->add_option("--sidecar", o.sidecar, "Variable map output path (default: <out>.json)");

  auto* gen = app.add_subcommand("gen", "Generate a synthetic network");
  gen->add_option("--config", o.config, "Generator config (key = value)")->required();
  gen->add_option("--out", o.out, "Network output path")->required();

  auto* experiment = app.add_subcommand("experiment", "Compare heuristic and optimal allocations over a sweep");
  experiment->add_option("--sweep", o.sweep, "Sweep config (key = value)")->required();
  experiment->add_option("--out-dir", o.out_dir, "Directory for records.csv and per-instance SVG charts")->required();

  auto* reduce = app.add_subcommand("reduce-setcover", "Build the AEAP instance of a set-cover instance");
  reduce->add_option("--universe", o.universe, "Comma separated element names")->required();
  reduce->add_option("--subsets", o.subsets, "Subsets separated by ';', elements by ','")->required();
  reduce->add_option("--x", o.x, "Cover size bound")->required();
  reduce->add_option("--out", o.out, "Network output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    Json result;
    if (simulate->parsed()) {
      const auto net = load_network(o.net);
      const auto trace = simulate_cascade(net, parse_entity_list(o.fail));
      if (!o.trace_csv.empty()) write_file(o.trace_csv, trace_to_csv(trace));
      result = to_json(trace);
    } else if (vulnerable->parsed()) {
      const auto net = load_network(o.net);
      result = to_json(o.method == "exact" ? k_most_vulnerable_exact(net, o.k, o.cap)
                                           : k_most_vulnerable_greedy(net, o.k));
    } else if (aeap_cmd->parsed()) {
      const auto net = load_network(o.net);
      const auto attacked = parse_entity_list(o.attacked);
      const auto method = parse_solver_method(o.method);
      const auto sol = method == SolverMethod::Exact       ? solve_exact(net, attacked, o.s, o.cap)
                       : method == SolverMethod::Heuristic ? solve_heuristic(net, attacked, o.s)
                                                           : solve_alg1_special_case(net, attacked, o.s);
      result = to_json(sol, net);
    } else if (export_lp->parsed()) {
      const auto net = load_network(o.net);
      const auto model = build_ilp(net, parse_entity_list(o.attacked), o.s);
      const auto sidecar = o.sidecar.empty() ? o.out + ".json" : o.sidecar;
      write_file(o.out, write_lp(model));
      write_file(sidecar, write_sidecar(model));
      const auto counts = model.counts();
      result["lp"] = o.out;
      result["sidecar"] = sidecar;
      result["horizon"] = model.horizon;
      result["variables"] = model.variables.size();
      result["virtual_entities"] = model.virtual_entities.size();
      result["constraints"] = counts.total();
    } else if (gen->parsed()) {
      const auto net = gen_network(parse_generator_config(read_file(o.config)));
      write_file(o.out, format_network(net));
      result["out"] = o.out;
      result["entities_a"] = net.entities_a().size();
      result["entities_b"] = net.entities_b().size();
      result["idrs"] = net.idr_count();
    } else if (experiment->parsed()) {
      const auto sweep = parse_sweep_config(read_file(o.sweep));
      const auto records = run_experiment(instances_from_sweep(sweep), {sweep.cap, sweep.record_timings});
      const std::filesystem::path dir(o.out_dir);
      std::filesystem::create_directories(dir);
      write_file(dir / "records.csv", records_to_csv(records));
      std::map<std::string, std::vector<ExperimentRecord>> by_instance;
      for (const auto& r : records) by_instance[r.instance].push_back(r);
      auto& svgs = result["svg"] = Json::array();
      for (const auto& [id, recs] : by_instance) {
        const auto path = dir / ("instance_" + id + ".svg");
        write_file(path, render_svg(recs));
        svgs.push_back(path.string());
      }
      double gap_sum = 0.0;
      double gap_max = 0.0;
      int compared = 0;
      for (const auto& r : records) {
        if (!r.protected_exact) continue;
        gap_sum += r.gap_percent;
        gap_max = std::max(gap_max, r.gap_percent);
        ++compared;
      }
      result["csv"] = (dir / "records.csv").string();
      result["records"] = records.size();
      result["compared"] = compared;
      result["mean_gap_pct"] = compared ? gap_sum / compared : 0.0;
      result["max_gap_pct"] = gap_max;
    } else if (reduce->parsed()) {
      const auto names = split(o.universe, ',');
      std::map<std::string, int> element_of;
      for (const auto& name : names) {
        if (name.empty()) throw ValidationError("empty element name in --universe");
        if (!element_of.emplace(name, static_cast<int>(element_of.size()) + 1).second) {
          throw ValidationError("duplicate element " + name);
        }
      }
      std::vector<std::vector<int>> subsets;
      for (const auto& group : split(o.subsets, ';')) {
        std::vector<int> subset;
        for (const auto& name : split(group, ',')) {
          if (name.empty()) continue;
          const auto it = element_of.find(name);
          if (it == element_of.end()) throw ValidationError("element " + name + " is not in the universe");
          subset.push_back(it->second);
        }
        subsets.push_back(std::move(subset));
      }
      const auto red = reduce_setcover(static_cast<int>(names.size()), subsets, o.x);
      write_file(o.out, format_network(red.network));
      result["out"] = o.out;
      result["attacked"] = to_strings(red.attacked);
      result["s"] = red.s;
      result["p_f_target"] = red.p_f_target;
      auto& elements = result["elements"] = Json::object();
      for (std::size_t i = 0; i < names.size(); ++i) elements[names[i]] = "a" + std::to_string(i + 1);
    }
    out << result.dump(2) << "\n";
    return kExitOk;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace aeap
