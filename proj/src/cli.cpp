#include "rpk/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>

#include <CLI11.hpp>
#include <json.hpp>

#include "rpk/conditions.hpp"
#include "rpk/document.hpp"
#include "rpk/error.hpp"
#include "rpk/solver.hpp"

namespace rpk {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::string method = "auto";
  int bound = -1;
  std::uint64_t seed = 1;
  std::string file;
  // validate
  std::string kernel;
  bool validate = false;
  // generate
  std::string cls;
  std::string fixture;
  int n = 6;
  int x = 2;
  int y = 3;
  std::string colours = "injective";
  int palette = 3;
  std::string output;
};

json names_json(VertexSet s, const std::vector<std::string>& names) {
  json a = json::array();
  for (int v : s) a.push_back(names[v]);
  return a;
}

json cycle_json(const Cycle& c, const std::vector<std::string>& names) {
  json a = json::array();
  for (int v : c) a.push_back(names[v]);
  return a;
}

std::string cycle_text(const Cycle& c, const std::vector<std::string>& names) {
  std::string s;
  for (int v : c) s += names[v] + " -> ";
  return s + names[c.front()];
}

const PatternGraph& pattern_named(const std::string& name) {
  if (name == qt4_pattern().name) return qt4_pattern();
  if (name == cb5_pattern().name) return cb5_pattern();
  return tb4_pattern();
}

json witness_json(const Witness& w, const std::vector<std::string>& names) {
  if (const auto* c = std::get_if<CycleWitness>(&w)) return {{"cycle", cycle_json(c->cycle, names)}};
  const auto& cp = std::get<CopyWitness>(w);
  const PatternGraph& p = pattern_named(cp.pattern);
  json map = json::object();
  for (int i = 0; i < p.order(); ++i) map[p.labels[i]] = names[cp.map[i]];
  return {{"pattern", cp.pattern}, {"map", map}};
}

std::string witness_text(const Witness& w, const std::vector<std::string>& names) {
  if (const auto* c = std::get_if<CycleWitness>(&w)) return "cycle " + cycle_text(c->cycle, names);
  const auto& cp = std::get<CopyWitness>(w);
  const PatternGraph& p = pattern_named(cp.pattern);
  std::string s = cp.pattern + " copy";
  for (int i = 0; i < p.order(); ++i) s += " " + p.labels[i] + "=" + names[cp.map[i]];
  return s;
}

std::string violation_text(const RpKernelViolation& v, const std::vector<std::string>& names) {
  if (v.kind == RpKernelViolation::Kind::Unabsorbed) return names[v.first] + " unabsorbed";
  return "rainbow path " + names[v.first] + " -> " + names[v.second];
}

int brute_bound(const Options& o) {
  if (o.bound >= 0) return o.bound;
  if (const char* env = std::getenv("RPK_BRUTE_BOUND")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, "RPK_BRUTE_BOUND must be an integer");
    }
  }
  return kDefaultBruteBound;
}

// --- subcommands ------------------------------------------------------------

int cmd_classify(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o.file);
  const ClassReport rep = classify(inst.graph);
  const auto& names = inst.names;
  if (o.json) {
    json doc;
    doc["classes"] = {{"unicyclic", rep.unicyclic},
                      {"semicomplete", rep.semicomplete},
                      {"tournament", rep.tournament},
                      {"quasi_transitive", rep.quasi_transitive},
                      {"bipartite_tournament", rep.bipartite_tournament}};
    doc["cycle"] = rep.cycle ? cycle_json(*rep.cycle, names) : json(nullptr);
    doc["bipartition"] = rep.bipartition ? json{{"x", names_json(rep.bipartition->x, names)},
                                                {"y", names_json(rep.bipartition->y, names)}}
                                         : json(nullptr);
    json conds = json::object();
    for (const auto& [c, r] : rep.conditions) {
      json entry = {{"label", condition_label(c)}, {"holds", r.holds}};
      entry["witness"] = r.witness ? witness_json(*r.witness, names) : json(nullptr);
      conds[std::string(condition_key(c))] = entry;
    }
    doc["conditions"] = conds;
    out << doc.dump(2) << "\n";
    return exit_code::kFound;
  }
  auto flag = [&](const char* name, bool v) { out << "  " << name << ": " << (v ? "true" : "false") << "\n"; };
  out << "classes:\n";
  flag("unicyclic", rep.unicyclic);
  flag("semicomplete", rep.semicomplete);
  flag("tournament", rep.tournament);
  flag("quasi_transitive", rep.quasi_transitive);
  flag("bipartite_tournament", rep.bipartite_tournament);
  if (rep.cycle) out << "  cycle: " << cycle_text(*rep.cycle, names) << "\n";
  if (rep.bipartition) {
    out << "  parts: " << vertex_names(rep.bipartition->x, names) << " "
        << vertex_names(rep.bipartition->y, names) << "\n";
  }
  out << "conditions:\n";
  for (const auto& [c, r] : rep.conditions) {
    out << "  " << condition_label(c) << ": " << (r.holds ? "PASS" : "FAIL");
    if (r.witness) out << " (" << witness_text(*r.witness, names) << ")";
    out << "\n";
  }
  return exit_code::kFound;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(o.file);
  auto strategy = parse_strategy(o.method);
  if (!strategy) throw Error(Errc::InvalidArgument, "unknown method '" + o.method + "'");
  SolveOptions opts;
  opts.brute_bound = brute_bound(o);

  SolveResult res;
  try {
    res = solve_with(inst.graph, *strategy, opts);
  } catch (const Error& e) {
    if (e.code() == Errc::PreconditionFailed) {
      if (o.json) {
        out << json{{"status", "precondition_failed"}, {"hypothesis", e.what()},
                    {"method", o.method}}.dump(2)
            << "\n";
      }
      err << "precondition failed: " << e.what() << "\n";
      return exit_code::kPrecondition;
    }
    if (e.code() == Errc::InstanceTooLarge) {
      if (o.json) out << json{{"status", "unknown"}, {"reason", e.what()}}.dump(2) << "\n";
      else out << "status: unknown (" << e.what() << ")\n";
      return exit_code::kUnknown;
    }
    throw;
  }
  if (o.validate && res.kernel) res.validated = is_rp_kernel(inst.graph, *res.kernel).ok;

  const auto& names = inst.names;
  if (o.json) {
    json doc = {{"status", status_name(res.status)},
                {"method", method_name(res.method)},
                {"validated", res.validated},
                {"leaf", res.leaf},
                {"diagnostics", res.diagnostics}};
    doc["kernel"] = res.kernel ? names_json(*res.kernel, names) : json(nullptr);
    out << doc.dump(2) << "\n";
  } else {
    out << "status: " << status_name(res.status) << "\n";
    if (res.kernel) out << "kernel: " << vertex_names(*res.kernel, names) << "\n";
    else if (res.status == SolveStatus::NoKernel) out << "no RP-kernel\n";
    out << "method: " << method_name(res.method) << "\n";
    if (!res.leaf.empty()) out << "branch: " << res.leaf << "\n";
    if (res.kernel) out << "validated: " << (res.validated ? "yes" : "no") << "\n";
    for (const auto& d : res.diagnostics) out << "  " << d << "\n";
  }
  switch (res.status) {
    case SolveStatus::Found: return exit_code::kFound;
    case SolveStatus::NoKernel: return exit_code::kAbsent;
    case SolveStatus::Unknown: return exit_code::kUnknown;
  }
  return exit_code::kUnknown;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o.file);
  out << serialize_closure(rainbow_closure(inst.graph), inst.names);
  return exit_code::kFound;
}

int cmd_reach(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o.file);
  const RainbowReachability r = rainbow_reachability(inst.graph);
  const int n = inst.graph.order();
  if (o.json) {
    json matrix = json::array();
    for (int u = 0; u < n; ++u) {
      json row = json::array();
      for (int v = 0; v < n; ++v) row.push_back(r(u, v) ? 1 : 0);
      matrix.push_back(row);
    }
    out << json{{"vertices", inst.names}, {"matrix", matrix}}.dump(2) << "\n";
    return exit_code::kFound;
  }
  for (int u = 0; u < n; ++u) {
    out << inst.names[u] << ":";
    for (int v = 0; v < n; ++v) out << " " << (r(u, v) ? 1 : 0);
    out << "\n";
  }
  return exit_code::kFound;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o.file);
  const VertexSet s = parse_vertex_list(o.kernel, inst.names);
  if (s.empty()) throw Error(Errc::EmptyVertexSet, "--kernel names no vertex");
  const RpKernelCheck check = is_rp_kernel(inst.graph, s);
  if (o.json) {
    json doc = {{"kernel", names_json(s, inst.names)}, {"valid", check.ok}};
    doc["witness"] = check.ok ? json(nullptr) : json(violation_text(*check.violation, inst.names));
    out << doc.dump(2) << "\n";
  } else if (check.ok) {
    out << "valid RP-kernel " << vertex_names(s, inst.names) << "\n";
  } else {
    out << "not an RP-kernel: " << violation_text(*check.violation, inst.names) << "\n";
  }
  return check.ok ? exit_code::kFound : exit_code::kAbsent;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write " + o.output);
  f << text;
}

int cmd_generate(const Options& o, std::ostream& out) {
  if (!o.fixture.empty()) {
    emit(o, serialize_instance(fixture(o.fixture)), out);
    return exit_code::kFound;
  }
  if (o.cls.empty()) throw Error(Errc::InvalidArgument, "generate needs --class or --fixture");
  auto cls = parse_gen_class(o.cls);
  if (!cls) throw Error(Errc::InvalidArgument, "unknown profile class '" + o.cls + "'");
  GenProfile p;
  p.cls = *cls;
  p.n = o.n;
  p.x_size = o.x;
  p.y_size = o.y;
  p.seed = o.seed;
  p.palette = o.palette;
  if (o.colours == "injective") p.colours = ColourStrategy::Injective;
  else if (o.colours == "repair") p.colours = ColourStrategy::RandomRepair;
  else throw Error(Errc::InvalidArgument, "unknown colour strategy '" + o.colours + "'");
  emit(o, serialize_instance(generate(p)), out);
  return exit_code::kFound;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  emit(o, export_dot(load_instance(o.file)), out);
  return exit_code::kFound;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"RP-kernels of arc-coloured digraphs", "rpk"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--method", o.method, "auto|unicyclic|semicomplete|qt|bipartite|brute");
  app.add_option("--bound", o.bound, "brute-force vertex bound");
  app.add_option("--seed", o.seed, "generator seed");

  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "instance document")->required();
    return sub;
  };
  CLI::App* classify_cmd = file_cmd("classify", "digraph classes and colour conditions");
  CLI::App* solve_cmd = file_cmd("solve", "find an RP-kernel");
  solve_cmd->add_flag("--validate", o.validate, "re-check the kernel");
  CLI::App* closure_cmd = file_cmd("closure", "rainbow closure");
  CLI::App* reach_cmd = file_cmd("reach", "rainbow reachability matrix");
  CLI::App* validate_cmd = file_cmd("validate", "check a vertex set");
  validate_cmd->add_option("--kernel", o.kernel, "comma separated vertex names")->required();
  CLI::App* export_cmd = file_cmd("export-dot", "Graphviz export");
  export_cmd->add_option("-o,--output", o.output, "output file");
  CLI::App* generate_cmd = app.add_subcommand("generate", "write an instance");
  generate_cmd->add_option("--class,--profile", o.cls, "unicyclic|semicomplete|qt|bipartite");
  generate_cmd->add_option("--fixture", o.fixture, "QT4|CB5|TB4|FIG4");
  generate_cmd->add_option("--n", o.n, "vertex count");
  generate_cmd->add_option("--x", o.x, "bipartite part X size");
  generate_cmd->add_option("--y", o.y, "bipartite part Y size");
  generate_cmd->add_option("--colours", o.colours, "injective|repair");
  generate_cmd->add_option("--palette", o.palette, "colours drawn before repair");
  generate_cmd->add_option("-o,--output", o.output, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code::kInputError;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (solve_cmd->parsed()) return cmd_solve(o, out, err);
    if (closure_cmd->parsed()) return cmd_closure(o, out);
    if (reach_cmd->parsed()) return cmd_reach(o, out);
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (generate_cmd->parsed()) return cmd_generate(o, out);
    if (export_cmd->parsed()) return cmd_export_dot(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == Errc::TheoremViolation) return exit_code::kInternal;
    if (e.code() == Errc::PreconditionFailed) return exit_code::kPrecondition;
    return exit_code::kInputError;
  }
  return exit_code::kInputError;
}

}  // namespace rpk
