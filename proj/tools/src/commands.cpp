#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "nkayles/errors.hpp"
#include "nkayles/generators.hpp"
#include "nkayles/graph_io.hpp"
#include "nkayles/kernel.hpp"
#include "nkayles/kset.hpp"
#include "nkayles/nimber.hpp"
#include "nkayles/structure.hpp"

#ifndef NKAYLES_VERSION
#define NKAYLES_VERSION "0.0.0"
#endif

namespace nkayles::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr std::size_t kSweepMaxVertices = 6;

struct Settings {
  std::size_t max_n = kMaxVertices;
  std::size_t oracle_max_n = kOracleMaxVertices;
  bool mask_timings = false;
  int indent = 2;
};

struct InputOptions {
  std::string path;
  std::string gen;
  std::string format;
};

struct Input {
  Graph graph;
  json descriptor;
};

class Timings {
public:
  explicit Timings(bool masked) : masked_(masked) {}

  template <class F>
  auto measure(const std::string& phase, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<std::invoke_result_t<F>>) {
      f();
      record(phase, start);
    } else {
      auto result = f();
      record(phase, start);
      return result;
    }
  }

  double elapsed_since(std::chrono::steady_clock::time_point start) const {
    if (masked_) return 0.0;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }

  const json& phases() const { return phases_; }

private:
  void record(const std::string& phase, std::chrono::steady_clock::time_point start) {
    phases_[phase] = elapsed_since(start);
  }

  bool masked_;
  json phases_ = json::object();
};

json to_json(VertexSet s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

std::string_view kind_name(ModuleKind k) {
  return k == ModuleKind::clique ? "clique" : "independent";
}

json md_to_json(const MDNode& node) {
  if (node.kind == MDKind::leaf) return {{"kind", "leaf"}, {"vertex", node.vertex}};
  json children = json::array();
  for (const MDNode& c : node.children) children.push_back(md_to_json(c));
  return {{"kind", to_string(node.kind)}, {"vertices", to_json(node.span)}, {"children", children}};
}

void check_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.size() > cap) {
    throw CapExceeded(std::string(what) + ": graph has " + std::to_string(g.size()) +
                      " vertices, cap is " + std::to_string(cap));
  }
}

Input load(const InputOptions& in, const Settings& s) {
  if (!in.path.empty() && !in.gen.empty()) {
    throw ContractViolation("give either an input file or --gen, not both");
  }
  Input out{Graph(0, std::initializer_list<Edge>{}), json::object()};
  if (!in.gen.empty()) {
    const FamilySpec spec = parse_family(in.gen);
    out.graph = generate(spec);
    out.descriptor = {{"kind", "family"}, {"family", describe(spec)}};
  } else if (!in.path.empty()) {
    const GraphFormat f =
        in.format.empty() ? format_from_extension(in.path) : parse_format_name(in.format);
    out.graph = read_graph_file(in.path, f);
    out.descriptor = {{"kind", "file"}, {"path", in.path}, {"format", format_name(f)}};
  } else {
    throw ContractViolation("an input file or --gen family is required");
  }
  out.descriptor["n"] = out.graph.size();
  out.descriptor["m"] = out.graph.edge_count();
  check_cap(out.graph, s.max_n, "--max-n");
  return out;
}

void add_input(CLI::App* sub, InputOptions& in) {
  sub->add_option("input", in.path, "Graph file (.g6 is graph6, anything else an edge list)");
  sub->add_option("--gen", in.gen, "Generate the input from a family, e.g. \"spider 3\"");
  sub->add_option("--format", in.format, "Input format override (edge-list or graph6)");
}

// Nimber computed without the component-splitting engine when small enough.
Nimber reference_nimber(const Graph& g, const Settings& s) {
  if (g.size() <= s.oracle_max_n) return nimber_bruteforce(g, s.oracle_max_n);
  return nimber(g, EngineOptions{s.max_n});
}

const char* reference_method(const Graph& g, const Settings& s) {
  return g.size() <= s.oracle_max_n ? "bruteforce" : "engine";
}

// ---------------------------------------------------------------- solve

struct SolveOptions {
  InputOptions input;
  bool oracle = false;
  bool move = false;
};

json cmd_solve(const SolveOptions& o, const Settings& s, Timings& t, json& descriptor) {
  const Input in = load(o.input, s);
  descriptor = in.descriptor;
  const Graph& g = in.graph;
  const EngineOptions opts{s.max_n};
  MemoTable memo;
  const Nimber v = t.measure("solve", [&] { return nimber(g, memo, opts); });
  const auto stats = memo.stats();

  json r;
  r["nimber"] = v.value();
  r["first_player_wins"] = v.value() > 0;
  if (o.move) {
    const auto m = optimal_move(g, memo, opts);
    r["optimal_move"] = m ? json(*m) : json(nullptr);
  }
  r["memo"] = {{"entries", stats.entries}, {"hits", stats.hits}, {"misses", stats.misses}};
  if (o.oracle) {
    check_cap(g, s.oracle_max_n, "--oracle-max-n");
    const Nimber b = t.measure("oracle", [&] { return nimber_bruteforce(g, s.oracle_max_n); });
    r["oracle_nimber"] = b.value();
    r["oracle_agrees"] = b == v;
  }
  return r;
}

// ---------------------------------------------------------------- params

json cmd_params(const InputOptions& o, const Settings& s, Timings& t, json& descriptor) {
  const Input in = load(o, s);
  descriptor = in.descriptor;
  const Graph& g = in.graph;
  json r;
  const VertexSet cover = t.measure("vertex_cover", [&] { return minimum_vertex_cover(g); });
  r["tau"] = cover.size();
  r["vertex_cover"] = to_json(cover);
  r["mw"] = t.measure("modular_width", [&] { return modular_width(g); });
  const NDPartition nd = t.measure("neighborhood_diversity", [&] { return nd_partition(g); });
  r["nd"] = nd.size();
  json classes = json::array();
  for (const NDClass& c : nd.classes) {
    classes.push_back({{"members", to_json(c.members)}, {"kind", kind_name(c.kind)}});
  }
  r["nd_classes"] = classes;
  r["md_tree"] = g.empty() ? json(nullptr) : md_to_json(modular_decomposition(g));
  return r;
}

// ---------------------------------------------------------------- ksets

struct KsetOptions {
  InputOptions input;
  bool list = false;
  bool dp = false;
};

json cmd_ksets(const KsetOptions& o, const Settings& s, Timings& t, json& descriptor) {
  const Input in = load(o.input, s);
  descriptor = in.descriptor;
  const KSetFamily family = t.measure("enumerate", [&] { return enumerate_ksets(in.graph); });
  json r;
  r["count"] = family.size();
  if (o.dp) {
    const KSetFamily via_dp = t.measure("dp", [&] { return ksets_via_dp(in.graph); });
    r["dp_count"] = via_dp.size();
    r["dp_agrees"] = via_dp == family;
  }
  if (o.list) {
    json sets = json::array();
    for (VertexSet k : family) sets.push_back(to_json(k));
    r["ksets"] = sets;
  }
  return r;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  InputOptions input;
  std::string check;
  std::size_t k_min = 2;
  std::size_t k_max = 5;
  std::size_t sweep_n = kSweepMaxVertices;
  bool failures_only = false;
};

json vc_instance(const Graph& g) {
  const VcBoundReport rep = check_vc_bound(g);
  return {{"graph", to_graph6(g)}, {"n", g.size()}, {"tau", rep.tau}, {"kappa", rep.kappa},
          {"bound", rep.bound}, {"holds", rep.holds}};
}

bool has_input(const InputOptions& in) { return !in.path.empty() || !in.gen.empty(); }

std::vector<json> sweep_vc_bound(const VerifyOptions& o) {
  std::vector<json> out;
  if (o.sweep_n > kSweepMaxVertices) {
    throw CapExceeded("--sweep-n: exhaustive sweep is capped at " +
                      std::to_string(kSweepMaxVertices) + " vertices");
  }
  for (std::size_t n = 0; n <= o.sweep_n; ++n) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) edges.push_back(pairs[i]);
      }
      out.push_back(vc_instance(Graph(n, edges)));
    }
  }
  return out;
}

std::uint64_t spider_closed_form(std::size_t k) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= 3;
  return p + 4 * k;
}

std::vector<json> verify_spider_count(const VerifyOptions& o) {
  if (o.k_min < 1 || o.k_min > o.k_max) throw ContractViolation("need 1 <= --k-min <= --k-max");
  std::vector<json> out;
  for (std::size_t k = o.k_min; k <= o.k_max; ++k) {
    const Graph g = generate(Spider{k});
    const std::uint64_t count = count_ksets(g);
    const std::uint64_t expected = spider_closed_form(k);
    out.push_back({{"k", k}, {"n", g.size()}, {"count", count}, {"expected", expected},
                   {"holds", count == expected}});
  }
  return out;
}

std::vector<json> verify_expansion(const Graph& g) {
  if (g.size() < 2) throw ContractViolation("expansion check needs at least two vertices");
  const std::vector<VertexSet> parts = maximal_modules_partition(g);
  const ExpansionReport rep = check_expansion_decomposition(g, parts);
  json p = json::array();
  for (VertexSet part : parts) p.push_back(to_json(part));
  json inst = {{"graph", to_graph6(g)},
               {"parts", p},
               {"kappa_graph", rep.kappa_graph},
               {"kappa_quotient", rep.kappa_quotient},
               {"kappa_parts", rep.kappa_parts},
               {"membership_holds", rep.membership_holds},
               {"inequality_holds", rep.inequality_holds},
               {"holds", rep.holds()}};
  inst["counterexample"] = rep.counterexample ? to_json(*rep.counterexample) : json(nullptr);
  return {inst};
}

std::vector<json> verify_kernel(const Graph& g, const Settings& s) {
  const Kernel k = kernelize(g);
  const std::size_t nd = neighborhood_diversity(g);
  const Nimber before = reference_nimber(g, s);
  const Nimber after = reference_nimber(k.graph, s);
  const bool holds = before == after && k.graph.size() <= 2 * nd;
  return {{{"graph", to_graph6(g)},
           {"n", g.size()},
           {"nd", nd},
           {"kernel_n", k.graph.size()},
           {"size_bound", 2 * nd},
           {"kernel", to_graph6(k.graph)},
           {"nimber", before.value()},
           {"kernel_nimber", after.value()},
           {"method", reference_method(g, s)},
           {"holds", holds}}};
}

std::vector<json> verify_nimsum(const Graph& g, const Settings& s) {
  check_cap(g, s.oracle_max_n, "--oracle-max-n");
  json parts = json::array();
  Nimber sum;
  for (VertexSet c : connected_components(g)) {
    const Nimber v = nimber(induced_subgraph(g, c).graph, EngineOptions{s.max_n});
    sum = sum ^ v;
    parts.push_back({{"vertices", to_json(c)}, {"nimber", v.value()}});
  }
  const Nimber whole = nimber_bruteforce(g, s.oracle_max_n);
  return {{{"graph", to_graph6(g)},
           {"components", parts},
           {"xor", sum.value()},
           {"nimber", whole.value()},
           {"holds", sum == whole}}};
}

void quotients(const Graph& g, const MDNode& node, std::vector<json>& out) {
  if (node.kind == MDKind::leaf) return;
  const auto sub = induced_subgraph(g, node.span);
  const Graph q = quotient_graph(sub.graph, maximal_modules_partition(sub.graph));
  const bool acyclic = is_forest(q);
  out.push_back({{"module", to_json(node.span)},
                 {"kind", to_string(node.kind)},
                 {"quotient_n", q.size()},
                 {"quotient_m", q.edge_count()},
                 {"holds", acyclic}});
  for (const MDNode& c : node.children) quotients(g, c, out);
}

std::vector<json> verify_tree_quotient(const Graph& g) {
  if (!is_forest(g)) throw ContractViolation("tree-quotient check needs a forest");
  std::vector<json> out;
  if (!g.empty()) quotients(g, modular_decomposition(g), out);
  return out;
}

json cmd_verify(const VerifyOptions& o, const Settings& s, Timings& t, json& descriptor,
                bool& failed) {
  std::vector<json> instances;
  auto single = [&]() {
    const Input in = load(o.input, s);
    descriptor = in.descriptor;
    return in.graph;
  };
  t.measure("verify", [&] {
    if (o.check == "vc-bound") {
      instances = has_input(o.input) ? std::vector<json>{vc_instance(single())} : sweep_vc_bound(o);
    } else if (o.check == "spider-count") {
      instances = verify_spider_count(o);
    } else if (o.check == "expansion") {
      instances = verify_expansion(single());
    } else if (o.check == "kernel") {
      instances = verify_kernel(single(), s);
    } else if (o.check == "nimsum") {
      instances = verify_nimsum(single(), s);
    } else {
      instances = verify_tree_quotient(single());
    }
  });
  if (descriptor.is_null()) descriptor = {{"kind", "sweep"}};

  std::size_t failures = 0;
  json listed = json::array();
  for (json& inst : instances) {
    const bool holds = inst["holds"].get<bool>();
    if (!holds) ++failures;
    if (!holds || !o.failures_only) listed.push_back(std::move(inst));
  }
  failed = failures > 0;
  json r;
  r["check"] = o.check;
  r["checked"] = instances.size();
  r["failed"] = failures;
  r["all_hold"] = failures == 0;
  if (o.check == "spider-count") {
    json counts = json::array();
    for (const json& inst : listed) counts.push_back(inst["count"]);
    if (!o.failures_only) r["counts"] = counts;
  }
  r["instances"] = listed;
  return r;
}

// ---------------------------------------------------------------- kernelize

struct KernelizeOptions {
  InputOptions input;
  bool fixpoint = false;
  std::string output;
  std::string output_format;
};

GraphFormat output_format(const std::string& name, const std::string& path) {
  if (!name.empty()) return parse_format_name(name);
  if (!path.empty()) return format_from_extension(path);
  return GraphFormat::edge_list;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw Error("cannot write '" + path + "'");
}

json cmd_kernelize(const KernelizeOptions& o, const Settings& s, Timings& t, json& descriptor) {
  const Input in = load(o.input, s);
  descriptor = in.descriptor;
  const Graph& g = in.graph;
  const Kernel k =
      t.measure("kernelize", [&] { return o.fixpoint ? kernelize_to_fixpoint(g) : kernelize(g); });
  const std::size_t nd = neighborhood_diversity(g);
  json steps = json::array();
  for (const ReductionStep& step : k.trace.steps) {
    steps.push_back({{"members", to_json(step.members)},
                     {"kind", kind_name(step.kind)},
                     {"survivors", to_json(step.survivors)},
                     {"removed", to_json(step.removed)}});
  }
  const GraphFormat f = output_format(o.output_format, o.output);
  json r;
  r["fixpoint"] = o.fixpoint;
  r["n"] = g.size();
  r["nd"] = nd;
  r["kernel_n"] = k.graph.size();
  r["kernel_m"] = k.graph.edge_count();
  r["size_bound"] = 2 * nd;
  r["to_original"] = k.to_original;
  r["trace"] = steps;
  r["format"] = format_name(f);
  if (o.output.empty()) {
    r["output"] = nullptr;
    r["graph"] = serialize(k.graph, f);
  } else {
    write_file(o.output, serialize(k.graph, f));
    r["output"] = o.output;
  }
  return r;
}

// ---------------------------------------------------------------- generate

struct GenerateOptions {
  std::vector<std::string> family;
  std::optional<std::uint64_t> seed;
  std::string output;
  std::string format;
};

json cmd_generate(const GenerateOptions& o, Timings& t, json& descriptor) {
  std::string text;
  for (const std::string& w : o.family) text += (text.empty() ? "" : " ") + w;
  FamilySpec spec = parse_family(text);
  if (o.seed) {
    if (auto* gnp = std::get_if<Gnp>(&spec)) {
      gnp->seed = *o.seed;
    } else if (auto* tree = std::get_if<RandomTree>(&spec)) {
      tree->seed = *o.seed;
    } else {
      throw InvalidSpec("--seed applies only to gnp and tree families");
    }
  }
  const Graph g = t.measure("generate", [&] { return generate(spec); });
  descriptor = {{"kind", "family"}, {"family", describe(spec)}, {"n", g.size()},
                {"m", g.edge_count()}};
  const GraphFormat f = output_format(o.format, o.output);
  json r;
  r["family"] = describe(spec);
  r["n"] = g.size();
  r["m"] = g.edge_count();
  r["format"] = format_name(f);
  if (o.output.empty()) {
    r["output"] = nullptr;
    r["graph"] = serialize(g, f);
  } else {
    write_file(o.output, serialize(g, f));
    r["output"] = o.output;
  }
  return r;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
  std::string dir;
  bool kernel = false;
  std::string csv;
  std::size_t jobs = 1;
};

struct BenchItem {
  std::string name;
  std::optional<Graph> graph;
  std::string error;
};

std::vector<BenchItem> collect_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) throw Error("'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchItem> items;
  for (const fs::path& p : files) {
    const std::string name = p.filename().string();
    try {
      if (format_from_extension(p) == GraphFormat::graph6) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        const auto graphs = parse_graph6_lines(buf.str());
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          items.push_back({graphs.size() == 1 ? name : name + "#" + std::to_string(i + 1),
                           graphs[i], ""});
        }
      } else {
        items.push_back({name, read_graph_file(p, GraphFormat::edge_list), ""});
      }
    } catch (const Error& e) {
      items.push_back({name, std::nullopt, e.what()});
    }
  }
  return items;
}

json bench_row(const BenchItem& item, const BenchOptions& o, const Settings& s,
               const Timings& clock) {
  json row;
  row["name"] = item.name;
  if (!item.graph) {
    row["error"] = item.error;
    return row;
  }
  const Graph& g = *item.graph;
  row["n"] = g.size();
  row["m"] = g.edge_count();
  try {
    check_cap(g, s.max_n, "--max-n");
    row["nd"] = neighborhood_diversity(g);
    row["mw"] = modular_width(g);
    row["tau"] = g.size() <= kVertexCoverMaxVertices ? json(minimum_vertex_cover(g).size())
                                                     : json(nullptr);
    const Kernel k = kernelize(g);
    row["kernel_n"] = k.graph.size();
    MemoTable memo;
    auto start = std::chrono::steady_clock::now();
    const Nimber v = nimber(g, memo, EngineOptions{s.max_n});
    row["solve_ms"] = clock.elapsed_since(start);
    row["memo_entries"] = memo.stats().entries;
    row["nimber"] = v.value();
    if (o.kernel) {
      start = std::chrono::steady_clock::now();
      const Nimber kv = nimber(k.graph, EngineOptions{s.max_n});
      row["kernel_solve_ms"] = clock.elapsed_since(start);
      row["kernel_nimber"] = kv.value();
      row["kernel_agrees"] = kv == v;
    }
  } catch (const Error& e) {
    row["error"] = e.what();
  }
  return row;
}

std::string csv_cell(const json& row, const char* key) {
  if (!row.contains(key) || row[key].is_null()) return "";
  if (row[key].is_string()) {
    std::string s = row[key].get<std::string>();
    std::string quoted = "\"";
    for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return row[key].dump();
}

std::string bench_csv(const json& rows) {
  static constexpr const char* kColumns[] = {
      "name", "n", "m", "nd", "mw", "tau", "kernel_n", "memo_entries", "nimber",
      "solve_ms", "kernel_solve_ms", "kernel_nimber", "error"};
  std::ostringstream out;
  for (std::size_t i = 0; i < std::size(kColumns); ++i) out << (i ? "," : "") << kColumns[i];
  out << '\n';
  for (const json& row : rows) {
    for (std::size_t i = 0; i < std::size(kColumns); ++i) {
      out << (i ? "," : "") << csv_cell(row, kColumns[i]);
    }
    out << '\n';
  }
  return out.str();
}

json cmd_bench(const BenchOptions& o, const Settings& s, Timings& t, json& descriptor,
               bool& failed) {
  if (o.jobs == 0) throw ContractViolation("--jobs must be positive");
  descriptor = {{"kind", "corpus"}, {"path", o.dir}};
  const std::vector<BenchItem> items = collect_corpus(o.dir);
  std::vector<json> rows(items.size());
  t.measure("bench", [&] {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < items.size(); i = next++) {
        rows[i] = bench_row(items[i], o, s, t);
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < std::min(o.jobs, items.size()); ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  });
  json r;
  r["instances"] = items.size();
  std::size_t errors = 0;
  for (const json& row : rows) {
    if (row.contains("error")) ++errors;
    if (row.contains("kernel_agrees") && !row["kernel_agrees"].get<bool>()) failed = true;
  }
  r["errors"] = errors;
  r["kernel"] = o.kernel;
  r["rows"] = rows;
  r["csv"] = o.csv.empty() ? json(nullptr) : json(o.csv);
  if (!o.csv.empty()) write_file(o.csv, bench_csv(r["rows"]));
  return r;
}

// ---------------------------------------------------------------- driver

json error_object(const char* kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

Invocation run(const std::vector<std::string>& args) {
  Settings settings;
  CLI::App app{"Node Kayles solver and structural analysis toolkit", "nkayles"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", NKAYLES_VERSION);
  app.add_option("--max-n", settings.max_n, "Vertex cap for the solver and parsers")
      ->check(CLI::Range(std::size_t{0}, kMaxVertices));
  app.add_option("--oracle-max-n", settings.oracle_max_n, "Vertex cap for brute-force oracles")
      ->check(CLI::Range(std::size_t{0}, kMaxVertices));
  app.add_flag("--mask-timings", settings.mask_timings, "Report every timing as 0");
  app.add_option("--indent", settings.indent, "JSON indentation, -1 for a single line");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute the nimber and the winner");
  add_input(solve_cmd, solve.input);
  solve_cmd->add_flag("--oracle", solve.oracle, "Cross-check against the brute-force solver");
  solve_cmd->add_flag("--move", solve.move, "Report an optimal first move");

  InputOptions params;
  auto* params_cmd = app.add_subcommand("params", "Vertex cover, modular-width, diversity");
  add_input(params_cmd, params);

  KsetOptions ksets;
  auto* ksets_cmd = app.add_subcommand("ksets", "Count or list K-sets");
  add_input(ksets_cmd, ksets.input);
  ksets_cmd->add_flag("--list", ksets.list, "List every K-set");
  ksets_cmd->add_flag("--dp", ksets.dp, "Compare with the solver's memo keys");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a structural claim");
  verify_cmd->add_option("check", verify.check, "Which check to run")
      ->required()
      ->check(CLI::IsMember(
          {"vc-bound", "spider-count", "expansion", "kernel", "nimsum", "tree-quotient"}));
  add_input(verify_cmd, verify.input);
  verify_cmd->add_option("--k-min", verify.k_min, "Smallest spider (spider-count)");
  verify_cmd->add_option("--k-max", verify.k_max, "Largest spider (spider-count)");
  verify_cmd->add_option("--sweep-n", verify.sweep_n,
                         "Largest n of the exhaustive sweep (vc-bound without input)");
  verify_cmd->add_flag("--failures-only", verify.failures_only, "List failing instances only");

  KernelizeOptions kern;
  auto* kern_cmd = app.add_subcommand("kernelize", "Shrink twin classes, preserving the nimber");
  add_input(kern_cmd, kern.input);
  kern_cmd->add_flag("--fixpoint", kern.fixpoint, "Repeat until nothing changes");
  kern_cmd->add_option("-o,--output", kern.output, "Write the kernel to a file");
  kern_cmd->add_option("--output-format", kern.output_format, "edge-list or graph6");

  GenerateOptions gen;
  auto* gen_cmd = app.add_subcommand("generate", "Generate a graph family");
  gen_cmd->add_option("family", gen.family, "Family and parameters, e.g. spider 3")
      ->required()
      ->expected(1, -1);
  gen_cmd->add_option("--seed", gen.seed, "Seed for gnp and tree");
  gen_cmd->add_option("-o,--output", gen.output, "Write the graph to a file");
  gen_cmd->add_option("--format", gen.format, "edge-list or graph6");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Solve every graph in a directory");
  bench_cmd->add_option("dir", bench.dir, "Corpus directory")->required();
  bench_cmd->add_flag("--kernel", bench.kernel, "Also solve the kernel");
  bench_cmd->add_option("--csv", bench.csv, "Write the rows as CSV");
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads");

  Invocation result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp& e) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::CallForVersion& e) {
    result.out = std::string(NKAYLES_VERSION) + "\n";
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = error_object("usage", e.what()).dump() + "\n";
    result.exit_code = kUsageError;
    return result;
  }

  CLI::App* active = app.get_subcommands().front();
  Timings timings(settings.mask_timings);
  json descriptor;
  bool failed = false;
  try {
    json payload;
    const std::string name = active->get_name();
    if (name == "solve") {
      payload = cmd_solve(solve, settings, timings, descriptor);
    } else if (name == "params") {
      payload = cmd_params(params, settings, timings, descriptor);
    } else if (name == "ksets") {
      payload = cmd_ksets(ksets, settings, timings, descriptor);
    } else if (name == "verify") {
      payload = cmd_verify(verify, settings, timings, descriptor, failed);
    } else if (name == "kernelize") {
      payload = cmd_kernelize(kern, settings, timings, descriptor);
    } else if (name == "generate") {
      payload = cmd_generate(gen, timings, descriptor);
    } else {
      payload = cmd_bench(bench, settings, timings, descriptor, failed);
    }
    json report;
    report["tool"] = "nkayles";
    report["version"] = NKAYLES_VERSION;
    report["command"] = {{"name", name}, {"args", args}};
    report["input"] = descriptor.is_null() ? json(nullptr) : descriptor;
    report["timings_ms"] = timings.phases();
    report["result"] = payload;
    result.out = report.dump(settings.indent) + "\n";
    if (failed) result.exit_code = kVerificationFailed;
  } catch (const ParseError& e) {
    json err = error_object("parse_error", e.what());
    if (e.line() != 0) err["error"]["line"] = e.line();
    result.err = err.dump() + "\n";
    result.exit_code = kUsageError;
  } catch (const CapExceeded& e) {
    result.err = error_object("cap_exceeded", e.what()).dump() + "\n";
    result.exit_code = kCapExceeded;
  } catch (const InvalidSpec& e) {
    result.err = error_object("invalid_spec", e.what()).dump() + "\n";
    result.exit_code = kUsageError;
  } catch (const ContractViolation& e) {
    result.err = error_object("invalid_argument", e.what()).dump() + "\n";
    result.exit_code = kUsageError;
  } catch (const InternalError& e) {
    result.err = error_object("internal_error", e.what()).dump() + "\n";
    result.exit_code = kVerificationFailed;
  } catch (const Error& e) {
    result.err = error_object("io_error", e.what()).dump() + "\n";
    result.exit_code = kUsageError;
  }
  return result;
}

}  // namespace nkayles::cli
