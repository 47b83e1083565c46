// Command-line front end: solve, approx, verify, mandatory, gadget, gen,
// bench. Reports are JSON ("meg-report/1") with a fixed field order so a
// repeated run over the same input is byte-identical; --timing opts into
// wall-clock fields at the cost of that determinism. Exit codes: 0 success,
// 1 negative decision (budget infeasible, failed verification), 2 bad input.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "megset/approx.hpp"
#include "megset/generators.hpp"
#include "megset/interval.hpp"
#include "megset/io.hpp"
#include "megset/monitor.hpp"
#include "megset/reductions.hpp"

namespace {

using json = nlohmann::ordered_json;
using meg::Graph;

struct OutputOpts {
  bool human = false;
  bool timing = false;
  bool witnesses = false;
  std::string out;
};

void add_output_opts(CLI::App* cmd, OutputOpts& opts, bool with_witnesses) {
  cmd->add_flag("--human", opts.human, "plain text instead of JSON");
  cmd->add_flag("--timing", opts.timing,
                "include wall-clock time (output is no longer byte-reproducible)");
  if (with_witnesses)
    cmd->add_flag("--witnesses", opts.witnesses,
                  "include one monitoring pair per edge");
  cmd->add_option("--out", opts.out, "write the report to this file instead of stdout");
}

class Timer {
 public:
  double ms() const {
    auto dt = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(dt).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

void emit(const OutputOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opts.out, std::ios::binary);
  if (!f) throw meg::invalid_input("cannot open output file: " + opts.out);
  f << text;
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

json instance_json(const std::string& path, const Graph& g) {
  json j = json::object();
  j["path"] = path;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  return j;
}

std::string instance_line(const std::string& path, const Graph& g) {
  std::ostringstream out;
  out << "instance: " << path << " (n=" << g.vertex_count() << ", m=" << g.edge_count()
      << ")\n";
  return out.str();
}

std::string join_ints(const std::vector<int>& v) {
  if (v.empty()) return "(empty)";
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i];
  }
  return out.str();
}

json witnesses_json(const Graph& g, const meg::WitnessMap& w) {
  json arr = json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    json item = json::object();
    item["edge"] = json::array({u, v});
    if (w.by_edge[e])
      item["pair"] = json::array({w.by_edge[e]->first, w.by_edge[e]->second});
    else
      item["pair"] = nullptr;
    arr.push_back(item);
  }
  return arr;
}

void append_witnesses_human(std::ostringstream& out, const Graph& g,
                            const meg::WitnessMap& w) {
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    out << "edge (" << u << "," << v << "): ";
    if (w.by_edge[e])
      out << "pair (" << w.by_edge[e]->first << "," << w.by_edge[e]->second << ")\n";
    else
      out << "unmonitored\n";
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced)
    if (c == ',') c = ' ';
  std::istringstream in(spaced);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t pos = 0;
      int value = std::stoi(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      throw meg::invalid_input("not an integer: '" + token + "'");
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw meg::invalid_input("cannot open output file: " + path);
  f << text;
}

int run_solve(const std::string& path, bool use_interval, const std::string& model_path,
              std::optional<int> budget, int guard, const OutputOpts& opts) {
  Graph g = meg::read_edge_list_file(path);
  Timer timer;
  std::optional<meg::MEGResult> result;
  const char* method = "exact";
  if (use_interval) {
    method = "interval";
    if (!model_path.empty())
      result = meg::interval_min_meg(g, meg::read_interval_model_file(model_path));
    else
      result = meg::interval_min_meg(g);
  } else if (budget) {
    result = meg::min_meg_exact(g, *budget, guard);
  } else {
    result = meg::min_meg_exact(g, guard);
  }
  bool feasible = result.has_value();
  double ms = timer.ms();

  if (opts.human) {
    std::ostringstream out;
    out << instance_line(path, g);
    out << "method: " << method << "\n";
    if (budget)
      out << "budget: " << *budget << "\nfeasible: " << (feasible ? "yes" : "no") << "\n";
    if (result) {
      out << "size: " << result->size << "\n";
      out << "set: " << join_ints(result->meg) << "\n";
      out << "optimal: " << (result->optimal ? "yes" : "no") << "\n";
      if (opts.witnesses) append_witnesses_human(out, g, result->witnesses);
    }
    if (opts.timing) out << "time_ms: " << fmt_fixed(ms, 3) << "\n";
    emit(opts, out.str());
  } else {
    json rep;
    rep["schema"] = "meg-report/1";
    rep["command"] = "solve";
    rep["instance"] = instance_json(path, g);
    rep["method"] = method;
    if (budget) {
      rep["budget"] = *budget;
      rep["feasible"] = feasible;
    }
    if (result) {
      rep["size"] = result->size;
      rep["set"] = result->meg;
      rep["optimal"] = result->optimal;
      if (opts.witnesses) rep["witnesses"] = witnesses_json(g, result->witnesses);
    }
    if (opts.timing) rep["time_ms"] = ms;
    emit(opts, json_text(rep));
  }
  return feasible ? 0 : 1;
}

int run_approx(const std::string& path, const OutputOpts& opts) {
  Graph g = meg::read_edge_list_file(path);
  Timer timer;
  auto cover = meg::greedy_set_cover(meg::build_cover_instance(g));
  auto result = meg::approx_meg(g);
  double ms = timer.ms();
  int n = g.vertex_count();
  int m = g.edge_count();
  double factor = meg::certified_factor(n, m);

  if (opts.human) {
    std::ostringstream out;
    out << instance_line(path, g);
    out << "method: greedy\n";
    out << "size: " << result.size << "\n";
    out << "set: " << join_ints(result.meg) << "\n";
    out << "cover pairs: " << cover.chosen.size() << "\n";
    if (m >= 1) out << "alpha: " << fmt_fixed(meg::greedy_ratio_alpha(m), 6) << "\n";
    out << "certified factor: " << fmt_fixed(factor, 6) << "\n";
    if (opts.witnesses) append_witnesses_human(out, g, result.witnesses);
    if (opts.timing) out << "time_ms: " << fmt_fixed(ms, 3) << "\n";
    emit(opts, out.str());
  } else {
    json rep;
    rep["schema"] = "meg-report/1";
    rep["command"] = "approx";
    rep["instance"] = instance_json(path, g);
    rep["method"] = "greedy";
    rep["size"] = result.size;
    rep["set"] = result.meg;
    rep["optimal"] = false;
    rep["cover_size"] = cover.chosen.size();
    json pairs = json::array();
    for (auto [a, b] : cover.chosen) pairs.push_back(json::array({a, b}));
    rep["cover_pairs"] = pairs;
    if (m >= 1)
      rep["alpha"] = meg::greedy_ratio_alpha(m);
    else
      rep["alpha"] = nullptr;
    rep["certified_factor"] = factor;
    if (opts.witnesses) rep["witnesses"] = witnesses_json(g, result.witnesses);
    if (opts.timing) rep["time_ms"] = ms;
    emit(opts, json_text(rep));
  }
  return 0;
}

int run_verify(const std::string& path, const std::string& set_text,
               const OutputOpts& opts) {
  Graph g = meg::read_edge_list_file(path);
  std::vector<int> set = parse_int_list(set_text);
  Timer timer;
  auto check = meg::is_meg_set(g, set);
  double ms = timer.ms();

  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  std::vector<std::pair<int, int>> uncovered;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!check.witnesses.by_edge[e]) uncovered.push_back(g.edge(e));

  if (opts.human) {
    std::ostringstream out;
    out << instance_line(path, g);
    out << "set: " << join_ints(set) << "\n";
    out << "result: " << (check.ok ? "MEG-set" : "not an MEG-set") << "\n";
    if (!uncovered.empty()) {
      out << "unmonitored edges:";
      for (auto [u, v] : uncovered) out << " (" << u << "," << v << ")";
      out << "\n";
    }
    if (opts.witnesses) append_witnesses_human(out, g, check.witnesses);
    if (opts.timing) out << "time_ms: " << fmt_fixed(ms, 3) << "\n";
    emit(opts, out.str());
  } else {
    json rep;
    rep["schema"] = "meg-report/1";
    rep["command"] = "verify";
    rep["instance"] = instance_json(path, g);
    rep["set"] = set;
    rep["size"] = set.size();
    rep["ok"] = check.ok;
    json unc = json::array();
    for (auto [u, v] : uncovered) unc.push_back(json::array({u, v}));
    rep["uncovered"] = unc;
    if (opts.witnesses) rep["witnesses"] = witnesses_json(g, check.witnesses);
    if (opts.timing) rep["time_ms"] = ms;
    emit(opts, json_text(rep));
  }
  return check.ok ? 0 : 1;
}

int run_mandatory(const std::string& path, bool use_oracle, bool use_interval,
                  const OutputOpts& opts) {
  Graph g = meg::read_edge_list_file(path);
  Timer timer;
  std::vector<int> vertices;
  const char* method = "lemma";
  if (use_oracle) {
    method = "oracle";
    vertices = meg::mandatory_oracle(g);
  } else if (use_interval) {
    method = "interval";
    for (int v = 0; v < g.vertex_count(); ++v)
      if (meg::is_mandatory_interval(g, v)) vertices.push_back(v);
  } else {
    vertices = meg::mandatory_vertices(g);
  }
  double ms = timer.ms();

  if (opts.human) {
    std::ostringstream out;
    out << instance_line(path, g);
    out << "method: " << method << "\n";
    out << "count: " << vertices.size() << "\n";
    out << "vertices: " << join_ints(vertices) << "\n";
    if (opts.timing) out << "time_ms: " << fmt_fixed(ms, 3) << "\n";
    emit(opts, out.str());
  } else {
    json rep;
    rep["schema"] = "meg-report/1";
    rep["command"] = "mandatory";
    rep["instance"] = instance_json(path, g);
    rep["method"] = method;
    rep["count"] = vertices.size();
    rep["vertices"] = vertices;
    if (opts.timing) rep["time_ms"] = ms;
    emit(opts, json_text(rep));
  }
  return 0;
}

int run_gadget(const std::string& path, std::string edges_out, std::string roles_out,
               const OutputOpts& opts) {
  Graph g = meg::read_edge_list_file(path);
  Timer timer;
  auto map = meg::vc_gadget(g);
  double ms = timer.ms();
  if (edges_out.empty()) edges_out = path + ".gadget.edges";
  if (roles_out.empty()) roles_out = path + ".gadget.roles.json";

  write_text_file(edges_out, meg::edge_list_string(map.ghat));

  json sidecar;
  sidecar["schema"] = "meg-gadget/1";
  sidecar["source"] = instance_json(path, g);
  sidecar["n"] = map.ghat.vertex_count();
  sidecar["m"] = map.ghat.edge_count();
  json roles = json::array();
  for (meg::GadgetRole r : map.roles) roles.push_back(meg::role_name(r));
  sidecar["roles"] = roles;
  sidecar["back_map"] = map.back_map;
  write_text_file(roles_out, json_text(sidecar));

  if (opts.human) {
    std::ostringstream out;
    out << instance_line(path, g);
    out << "gadget: n=" << map.ghat.vertex_count() << ", m=" << map.ghat.edge_count()
        << "\n";
    out << "edges: " << edges_out << "\n";
    out << "roles: " << roles_out << "\n";
    if (opts.timing) out << "time_ms: " << fmt_fixed(ms, 3) << "\n";
    emit(opts, out.str());
  } else {
    json rep;
    rep["schema"] = "meg-report/1";
    rep["command"] = "gadget";
    rep["instance"] = instance_json(path, g);
    json gadget = json::object();
    gadget["n"] = map.ghat.vertex_count();
    gadget["m"] = map.ghat.edge_count();
    gadget["edges"] = edges_out;
    gadget["roles"] = roles_out;
    rep["gadget"] = gadget;
    if (opts.timing) rep["time_ms"] = ms;
    emit(opts, json_text(rep));
  }
  return 0;
}

int run_gen(const std::string& family, const std::string& params_text,
            std::uint64_t seed, const std::string& out, const std::string& model_out) {
  meg::GenSpec spec;
  spec.family = meg::family_from_name(family);
  spec.params = parse_int_list(params_text);
  spec.seed = seed;
  Graph g = meg::generate(spec);
  if (!model_out.empty()) {
    if (spec.family != meg::Family::random_interval)
      throw meg::invalid_input("--model-out requires --family random_interval");
    auto model = meg::random_interval_model(spec.params[0], spec.params[1], seed);
    write_text_file(model_out, meg::interval_model_string(model));
  }
  std::string text = meg::edge_list_string(g);
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
  return 0;
}

int run_bench(const std::vector<std::string>& files, const std::string& methods_text,
              int guard, bool timing, const std::string& out) {
  std::vector<std::string> methods;
  {
    std::string spaced = methods_text;
    for (char& c : spaced)
      if (c == ',') c = ' ';
    std::istringstream in(spaced);
    std::string token;
    while (in >> token) {
      if (token != "exact" && token != "interval" && token != "greedy")
        throw meg::invalid_input("unknown method: " + token);
      methods.push_back(token);
    }
  }
  if (methods.empty()) throw meg::invalid_input("no methods requested");

  std::ostringstream csv;
  csv << "instance,method,n,m,size,bound,time_ms\n";
  for (const std::string& file : files) {
    Graph g = meg::read_edge_list_file(file);
    for (const std::string& method : methods) {
      Timer timer;
      int size = 0;
      double bound = 1.0;
      if (method == "exact") {
        size = meg::min_meg_exact(g, guard).size;
      } else if (method == "interval") {
        size = meg::interval_min_meg(g).size;
      } else {
        size = meg::approx_meg(g).size;
        bound = meg::certified_factor(g.vertex_count(), g.edge_count());
      }
      double ms = timing ? timer.ms() : 0.0;
      csv << file << ',' << method << ',' << g.vertex_count() << ',' << g.edge_count()
          << ',' << size << ',' << fmt_fixed(bound, 6) << ',' << fmt_fixed(ms, 3)
          << '\n';
    }
  }
  OutputOpts opts;
  opts.out = out;
  emit(opts, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum monitoring edge-geodetic sets"};
  app.set_version_flag("--version", "megset 0.1.0");
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "minimum MEG-set (exact or interval solver)");
  std::string solve_path, solve_model;
  bool solve_exact = false, solve_interval = false;
  int solve_budget = 0, solve_guard = meg::kExactSolveGuard;
  OutputOpts solve_opts;
  solve->add_option("instance", solve_path, "edge-list file")->required();
  auto* f_exact = solve->add_flag("--exact", solve_exact, "exhaustive solver (default)");
  auto* f_interval =
      solve->add_flag("--interval", solve_interval, "interval-graph solver");
  auto* f_budget = solve->add_option("--budget", solve_budget,
                                     "decision mode: find a set of at most this size");
  f_interval->excludes(f_exact);
  f_interval->excludes(f_budget);
  f_budget->excludes(f_exact);
  solve->add_option("--model", solve_model, "interval model file to validate against")
      ->needs(f_interval);
  solve->add_option("--guard", solve_guard,
                    "vertex-count guard for the exhaustive solver");
  add_output_opts(solve, solve_opts, true);

  // approx
  auto* approx = app.add_subcommand("approx", "greedy MEG-set with a certified factor");
  std::string approx_path;
  OutputOpts approx_opts;
  approx->add_option("instance", approx_path, "edge-list file")->required();
  add_output_opts(approx, approx_opts, true);

  // verify
  auto* verify = app.add_subcommand("verify", "check whether a vertex set is an MEG-set");
  std::string verify_path, verify_set;
  OutputOpts verify_opts;
  verify->add_option("instance", verify_path, "edge-list file")->required();
  verify->add_option("--set", verify_set, "vertex ids, comma or space separated")
      ->required();
  add_output_opts(verify, verify_opts, true);

  // mandatory
  auto* mandatory =
      app.add_subcommand("mandatory", "vertices that belong to every MEG-set");
  std::string mandatory_path;
  bool mand_lemma = false, mand_oracle = false, mand_interval = false;
  OutputOpts mandatory_opts;
  mandatory->add_option("instance", mandatory_path, "edge-list file")->required();
  auto* m_lemma = mandatory->add_flag("--lemma", mand_lemma,
                                      "local neighborhood test (default)");
  auto* m_oracle =
      mandatory->add_flag("--oracle", mand_oracle, "ground truth by re-solving");
  auto* m_interval = mandatory->add_flag("--interval", mand_interval,
                                         "diameter test (exact on interval graphs)");
  m_oracle->excludes(m_lemma);
  m_interval->excludes(m_lemma);
  m_interval->excludes(m_oracle);
  add_output_opts(mandatory, mandatory_opts, false);

  // gadget
  auto* gadget = app.add_subcommand(
      "gadget", "vertex-cover-to-MEG instance with a roles sidecar");
  std::string gadget_path, gadget_edges, gadget_roles;
  OutputOpts gadget_opts;
  gadget->add_option("instance", gadget_path, "edge-list file")->required();
  gadget->add_option("--out", gadget_edges,
                     "gadget edge-list path (default: INPUT.gadget.edges)");
  gadget->add_option("--roles", gadget_roles,
                     "roles sidecar path (default: INPUT.gadget.roles.json)");
  gadget->add_flag("--human", gadget_opts.human, "plain text instead of JSON");
  gadget->add_flag("--timing", gadget_opts.timing,
                   "include wall-clock time (output is no longer byte-reproducible)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string gen_family, gen_params, gen_out, gen_model_out;
  std::uint64_t gen_seed = 0;
  gen->add_option("--family", gen_family,
                  "path | cycle | complete | complete_bipartite | grid | hypercube | "
                  "random_connected | random_interval | random_cubic")
      ->required();
  gen->add_option("--params", gen_params, "family parameters, comma separated")
      ->required();
  gen->add_option("--seed", gen_seed, "random seed (default 0)");
  gen->add_option("--out", gen_out, "write the edge list here instead of stdout");
  gen->add_option("--model-out", gen_model_out,
                  "also write the interval model (random_interval only)");

  // bench
  auto* bench = app.add_subcommand("bench", "CSV of solver sizes over instances");
  std::vector<std::string> bench_files;
  std::string bench_methods = "greedy", bench_out;
  int bench_guard = meg::kExactSolveGuard;
  bool bench_timing = false;
  bench->add_option("instances", bench_files, "edge-list files")->required();
  bench->add_option("--methods", bench_methods,
                    "comma separated subset of exact,interval,greedy (default greedy)");
  bench->add_option("--guard", bench_guard, "vertex-count guard for exact");
  bench->add_flag("--timing", bench_timing, "measure wall-clock time per run");
  bench->add_option("--out", bench_out, "write the CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) {
      std::optional<int> budget;
      if (f_budget->count() > 0) budget = solve_budget;
      return run_solve(solve_path, solve_interval, solve_model, budget, solve_guard,
                       solve_opts);
    }
    if (approx->parsed()) return run_approx(approx_path, approx_opts);
    if (verify->parsed()) return run_verify(verify_path, verify_set, verify_opts);
    if (mandatory->parsed())
      return run_mandatory(mandatory_path, mand_oracle, mand_interval, mandatory_opts);
    if (gadget->parsed())
      return run_gadget(gadget_path, gadget_edges, gadget_roles, gadget_opts);
    if (gen->parsed())
      return run_gen(gen_family, gen_params, gen_seed, gen_out, gen_model_out);
    if (bench->parsed())
      return run_bench(bench_files, bench_methods, bench_guard, bench_timing, bench_out);
  } catch (const meg::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
