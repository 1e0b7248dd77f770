// Copyright 2026 The radiolabel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <variant>

#include "radiolabel/bounds.hpp"
#include "radiolabel/errors.hpp"
#include "radiolabel/graph.hpp"
#include "radiolabel/io.hpp"
#include "radiolabel/knt.hpp"
#include "radiolabel/labeling.hpp"
#include "radiolabel/search.hpp"

namespace radiolabel::cli {

namespace {

/// Input or output problems that are the caller's fault; they exit with kUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { table, json };

std::size_t size_cap_from_env() {
  const char* raw = std::getenv("RADIOLABEL_SIZE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultSizeCap;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw UsageError(std::string("RADIOLABEL_SIZE_CAP must be a positive integer, got '") + raw + "'");
  }
  return static_cast<std::size_t>(value);
}

std::string read_all(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << stdin_stream.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

std::string vertex_name(VertexId v) { return "v" + std::to_string(v + 1); }

std::string tuple_name(const ProductVertex& x) {
  std::string out = "(";
  for (std::size_t k = 0; k < x.arity(); ++k) {
    if (k > 0) out += ',';
    out += vertex_name(x.coordinates[k]);
  }
  return out + ")";
}

/// Graph reference: a builtin such as "complete:4", "petersen" or
/// "cycle:5^2", a file path, or "-" for an edge list on stdin.
struct ResolvedGraph {
  std::string ref;
  std::optional<Graph> graph;
  std::optional<ProductMetric> product;

  std::size_t vertex_count() const {
    return graph ? graph->vertex_count() : product->vertex_count();
  }

  template <class F>
  decltype(auto) with_metric(F&& f) const {
    if (product && (!graph || graph->vertex_count() > kDenseDistanceCap)) return f(*product);
    return f(graph->distances());
  }
};

std::optional<Graph> builtin_base(const std::string& name, std::optional<std::size_t> n) {
  if (name == "petersen") {
    if (n) throw UsageError("petersen takes no size");
    return petersen_graph();
  }
  if (name != "complete" && name != "path" && name != "cycle" && name != "star") return std::nullopt;
  if (!n) throw UsageError(name + " needs a size");
  if (name == "complete") return complete_graph(*n);
  if (name == "path") return path_graph(*n);
  if (name == "cycle") return cycle_graph(*n);
  return star_graph(*n);
}

ResolvedGraph resolve_graph(const std::string& ref, std::istream& in, bool need_graph,
                            std::size_t size_cap) {
  ResolvedGraph out;
  out.ref = ref;
  static const std::regex builtin_pattern(R"(^([a-z]+)(?::(\d+))?(?:\^(\d+))?$)");
  std::smatch m;
  if (ref != "-" && std::regex_match(ref, m, builtin_pattern)) {
    std::optional<std::size_t> n;
    if (m[2].matched) n = std::stoull(m[2].str());
    if (auto base = builtin_base(m[1].str(), n)) {
      const std::size_t t = m[3].matched ? std::stoull(m[3].str()) : 1;
      if (t == 0) throw UsageError("power must be at least 1");
      if (t == 1) {
        out.graph = std::move(*base);
        return out;
      }
      out.product = ProductMetric::power(std::make_shared<const DistanceMatrix>(base->distances()), t);
      if (need_graph || out.product->vertex_count() <= kDenseDistanceCap) {
        out.graph = cartesian_power(*base, t, size_cap);
      }
      return out;
    }
  }
  std::istringstream text(read_all(ref, in));
  out.graph = read_edge_list(text);
  if (out.graph->vertex_count() > size_cap) {
    throw Error(Errc::size_limit_exceeded, "graph exceeds the size cap");
  }
  return out;
}

std::string table_rows(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [key, _] : rows) width = std::max(width, key.size());
  std::ostringstream out;
  for (const auto& [key, value] : rows) {
    out << std::left << std::setw(static_cast<int>(width + 2)) << key << value << '\n';
  }
  return out.str();
}

std::string join(std::span<const VertexId> seq, bool one_based) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ' ';
    out += one_based ? vertex_name(seq[i]) : std::to_string(seq[i]);
  }
  return out;
}

std::string label_table(const Labeling& labeling) {
  std::vector<std::pair<std::string, std::string>> rows{{"vertex", "label"}};
  for (VertexId v = 0; v < labeling.size(); ++v) {
    rows.emplace_back(vertex_name(v), std::to_string(labeling[v]));
  }
  return table_rows(rows);
}

std::string search_table(const SearchResult& result, const std::string& graph) {
  std::vector<std::pair<std::string, std::string>> rows{
      {"graph:", graph},
      {"status:", std::string(to_string(result.status))},
      {"span:", result.span ? std::to_string(*result.span) : "-"},
      {"examined:", std::to_string(result.orderings_examined)},
  };
  if (result.witness) rows.emplace_back("ordering:", join(result.witness->sequence(), true));
  std::string out = table_rows(rows);
  if (result.labeling) out += label_table(*result.labeling);
  return out;
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  Format format;
  std::size_t size_cap;
};

int cmd_builtin(const Context& ctx, const std::string& name, std::optional<std::size_t> n,
                std::size_t t, const std::string& out_path) {
  auto base = builtin_base(name, n);
  if (!base) throw UsageError("unknown builtin '" + name + "'");
  const Graph g = t == 1 ? std::move(*base) : cartesian_power(*base, t, ctx.size_cap);
  std::ostringstream text;
  write_edge_list(text, g);
  write_output(out_path, text.str(), ctx.out);
  return kOk;
}

int cmd_product(const Context& ctx, const std::string& a, const std::string& b,
                const std::string& out_path) {
  if (a == "-" && b == "-") throw UsageError("only one factor can come from stdin");
  const auto g = resolve_graph(a, ctx.in, true, ctx.size_cap);
  const auto h = resolve_graph(b, ctx.in, true, ctx.size_cap);
  std::ostringstream text;
  write_edge_list(text, cartesian_product(*g.graph, *h.graph, ctx.size_cap));
  write_output(out_path, text.str(), ctx.out);
  return kOk;
}

int cmd_power(const Context& ctx, const std::string& a, std::size_t t, const std::string& out_path) {
  const auto g = resolve_graph(a, ctx.in, true, ctx.size_cap);
  std::ostringstream text;
  write_edge_list(text, cartesian_power(*g.graph, t, ctx.size_cap));
  write_output(out_path, text.str(), ctx.out);
  return kOk;
}

int cmd_order_knt(const Context& ctx, std::size_t n, std::size_t t, const std::string& method,
                  bool flat_only, const std::string& out_path) {
  const auto tuples = method == "recursive" ? knt::ordering_by_recursion(n, t, ctx.size_cap)
                                            : knt::ordering_by_matrices(n, t, ctx.size_cap);
  io::OrderingDocument doc;
  doc.graph = "complete:" + std::to_string(n) + (t > 1 ? "^" + std::to_string(t) : "");
  doc.order = knt::flatten(n, tuples);
  if (!flat_only) doc.tuples = tuples;

  std::string text;
  if (ctx.format == Format::json) {
    text = io::to_json(doc);
  } else {
    std::vector<std::pair<std::string, std::string>> rows{{"graph:", doc.graph}};
    rows.emplace_back("i", flat_only ? "index" : "vertex");
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      rows.emplace_back("x" + std::to_string(i + 1),
                        flat_only ? std::to_string(doc.order[i]) : tuple_name(tuples[i]));
    }
    text = table_rows(rows);
  }
  write_output(out_path, text, ctx.out);
  return kOk;
}

std::string pick_graph_ref(const std::string& flag, const std::string& from_doc) {
  if (!flag.empty()) return flag;
  if (from_doc.empty()) throw UsageError("no graph given: pass --graph or set \"graph\" in the input");
  return from_doc;
}

int cmd_induce(const Context& ctx, const std::string& input, const std::string& graph_flag,
               const std::string& out_path) {
  const auto doc = io::parse_ordering(read_all(input, ctx.in));
  const std::string ref = pick_graph_ref(graph_flag, doc.graph);
  if (input == "-" && ref == "-") throw UsageError("ordering and graph cannot both come from stdin");
  const auto g = resolve_graph(ref, ctx.in, false, ctx.size_cap);
  io::LabelingDocument out;
  out.graph = ref;
  g.with_metric([&](const auto& metric) {
    out.labeling = induced_labeling(metric, doc.order);
    out.consecutive = is_consecutive(metric, out.labeling);
  });
  std::string text;
  if (ctx.format == Format::json) {
    text = io::to_json(out);
  } else {
    text = table_rows({{"graph:", ref},
                       {"span:", std::to_string(out.labeling.span())},
                       {"consecutive:", *out.consecutive ? "true" : "false"}}) +
           label_table(out.labeling);
  }
  write_output(out_path, text, ctx.out);
  return kOk;
}

int cmd_verify(const Context& ctx, const std::string& input, const std::string& graph_flag,
               std::optional<Distance> k, bool all) {
  const auto doc = io::parse_labeling(read_all(input, ctx.in));
  const std::string ref = pick_graph_ref(graph_flag, doc.graph);
  if (input == "-" && ref == "-") throw UsageError("labeling and graph cannot both come from stdin");
  const auto g = resolve_graph(ref, ctx.in, false, ctx.size_cap);
  const auto mode = all ? ViolationReport::exhaustive : ViolationReport::first;
  std::vector<Violation> violations;
  Distance used_k = 0;
  bool consecutive = false;
  g.with_metric([&](const auto& metric) {
    used_k = k.value_or(metric.diameter());
    violations = k ? check_k_radio(metric, doc.labeling, *k, mode)
                   : check_radio(metric, doc.labeling, mode);
    consecutive = violations.empty() && is_consecutive(metric, doc.labeling);
  });

  if (ctx.format == Format::json) {
    nlohmann::ordered_json out;
    out["graph"] = ref;
    out["k"] = used_k;
    out["valid"] = violations.empty();
    out["span"] = doc.labeling.span();
    out["consecutive"] = consecutive;
    auto list = nlohmann::ordered_json::array();
    for (const auto& v : violations) {
      list.push_back({{"u", v.u}, {"v", v.v}, {"required_gap", v.required_gap},
                      {"actual_gap", v.actual_gap}});
    }
    out["violations"] = std::move(list);
    ctx.out << out.dump() << '\n';
  } else {
    ctx.out << table_rows({{"graph:", ref},
                           {"k:", std::to_string(used_k)},
                           {"valid:", violations.empty() ? "true" : "false"},
                           {"span:", std::to_string(doc.labeling.span())},
                           {"consecutive:", consecutive ? "true" : "false"}});
    for (const auto& v : violations) {
      ctx.out << "violation  " << vertex_name(v.u) << ' ' << vertex_name(v.v) << "  gap "
              << v.actual_gap << " < required " << v.required_gap << '\n';
    }
  }
  return violations.empty() ? kOk : kInvalid;
}

int cmd_radio_number(const Context& ctx, const std::string& ref, const ExactSearchOptions& options) {
  const auto g = resolve_graph(ref, ctx.in, true, ctx.size_cap);
  SearchResult result;
  try {
    result = exact_radio_number(*g.graph, options);
  } catch (const Error& e) {
    if (e.code() != Errc::too_large) throw;
    ctx.err << "error: " << e.what() << "; try search-consecutive for a budgeted witness search\n";
    return kInvalid;
  }
  ctx.out << (ctx.format == Format::json ? io::to_json(result, ref) : search_table(result, ref));
  return kOk;
}

int cmd_search_consecutive(const Context& ctx, const std::string& ref,
                           const ConsecutiveSearchOptions& options) {
  const auto g = resolve_graph(ref, ctx.in, true, ctx.size_cap);
  const SearchResult result = find_consecutive_ordering(*g.graph, options);
  ctx.out << (ctx.format == Format::json ? io::to_json(result, ref) : search_table(result, ref));
  return result.status == SearchStatus::witness_found ? kOk : kInvalid;
}

int cmd_threshold(const Context& ctx, std::optional<std::uint64_t> n,
                  std::optional<std::uint64_t> diam, const std::string& graph_ref,
                  const std::vector<std::uint64_t>& powers) {
  ThresholdReport report;
  if (!graph_ref.empty()) {
    if (n || diam) throw UsageError("use either --graph or --n/--diam");
    const auto g = resolve_graph(graph_ref, ctx.in, true, ctx.size_cap);
    report = threshold_report(*g.graph, powers);
  } else {
    if (!n || !diam) throw UsageError("threshold needs --n and --diam, or --graph");
    report = threshold_report(*n, *diam, powers);
  }
  if (ctx.format == Format::json) {
    ctx.out << io::to_json(report);
    return kOk;
  }
  std::vector<std::pair<std::string, std::string>> rows{
      {"n:", std::to_string(report.n)},
      {"diam:", std::to_string(report.diam)},
      {"s:", std::to_string(report.s)},
  };
  if (report.closed_form_s) rows.emplace_back("closed-form s:", std::to_string(*report.closed_form_s));
  std::string text = table_rows(rows);
  if (!report.entries.empty()) {
    std::vector<std::pair<std::string, std::string>> verdicts{{"t", "verdict"}};
    for (const auto& e : report.entries) {
      verdicts.emplace_back(std::to_string(e.t), std::string(to_string(e.verdict)));
    }
    text += table_rows(verdicts);
  }
  ctx.out << text;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams streams) {
  CLI::App app{"Radio labelings of graphs and Cartesian powers", "radiolabel"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "json"}));

  std::function<int(const Context&)> action;

  // builtin
  std::string builtin_name;
  std::optional<std::size_t> builtin_n;
  std::size_t builtin_t = 1;
  std::string out_path;
  auto* builtin = app.add_subcommand("builtin", "Emit a named graph as an edge list");
  builtin->add_option("name", builtin_name, "complete | path | cycle | star | petersen")->required();
  builtin->add_option("n", builtin_n, "Size parameter");
  builtin->add_option("--t", builtin_t, "Cartesian power")->check(CLI::PositiveNumber);
  builtin->add_option("--out", out_path, "Output file");
  builtin->callback([&] {
    action = [&](const Context& c) { return cmd_builtin(c, builtin_name, builtin_n, builtin_t, out_path); };
  });

  // product / power
  std::string graph_a;
  std::string graph_b;
  std::size_t power_t = 1;
  auto* product = app.add_subcommand("product", "Cartesian product of two graphs");
  product->add_option("first", graph_a, "Graph file or builtin reference")->required();
  product->add_option("second", graph_b, "Graph file or builtin reference")->required();
  product->add_option("--out", out_path, "Output file");
  product->callback([&] {
    action = [&](const Context& c) { return cmd_product(c, graph_a, graph_b, out_path); };
  });
  auto* power = app.add_subcommand("power", "Cartesian power of a graph");
  power->add_option("graph", graph_a, "Graph file or builtin reference")->required();
  power->add_option("--t", power_t, "Number of factors")->required()->check(CLI::PositiveNumber);
  power->add_option("--out", out_path, "Output file");
  power->callback([&] {
    action = [&](const Context& c) { return cmd_power(c, graph_a, power_t, out_path); };
  });

  // verify / induce
  std::string input = "-";
  std::string graph_flag;
  std::optional<Distance> k;
  bool all_violations = false;
  auto* verify = app.add_subcommand("verify", "Check a labeling against the radio condition");
  verify->add_option("labeling", input, "Labeling JSON (default: stdin)");
  verify->add_option("--graph", graph_flag, "Graph file or builtin reference");
  verify->add_option("--k", k, "Check the k-radio condition instead")->check(CLI::PositiveNumber);
  verify->add_flag("--all", all_violations, "Report every violating pair");
  verify->callback([&] {
    action = [&](const Context& c) { return cmd_verify(c, input, graph_flag, k, all_violations); };
  });
  auto* induce = app.add_subcommand("induce", "Labeling induced by an ordering");
  induce->add_option("ordering", input, "Ordering JSON (default: stdin)");
  induce->add_option("--graph", graph_flag, "Graph file or builtin reference");
  induce->add_option("--out", out_path, "Output file");
  induce->callback([&] {
    action = [&](const Context& c) { return cmd_induce(c, input, graph_flag, out_path); };
  });

  // order-knt
  std::size_t knt_n = 0;
  std::size_t knt_t = 0;
  std::string method = "matrix";
  bool flat_only = false;
  auto* order = app.add_subcommand("order-knt", "Consecutive ordering of K_n^t");
  order->add_option("--n", knt_n, "Vertices of K_n")->required();
  order->add_option("--t", knt_t, "Power")->required();
  order->add_option("--method", method, "matrix | recursive")->check(CLI::IsMember({"matrix", "recursive"}));
  order->add_flag("--flat", flat_only, "Emit flat indices only");
  order->add_option("--out", out_path, "Output file");
  order->callback([&] {
    action = [&](const Context& c) { return cmd_order_knt(c, knt_n, knt_t, method, flat_only, out_path); };
  });

  // radio-number
  ExactSearchOptions exact;
  bool no_prune = false;
  auto* radio = app.add_subcommand("radio-number", "Exact radio number by exhaustive search");
  radio->add_option("graph", graph_a, "Graph file or builtin reference")->required();
  radio->add_flag("--no-prune", no_prune, "Disable branch and bound");
  radio->add_option("--limit", exact.limit, "Largest vertex count searched");
  radio->add_option("--threads", exact.threads, "Worker threads (0 = all cores)");
  radio->add_flag("--symmetry", exact.symmetry_reduction, "Start only at orbit representatives");
  radio->callback([&] {
    exact.prune = !no_prune;
    action = [&](const Context& c) { return cmd_radio_number(c, graph_a, exact); };
  });

  // search-consecutive
  ConsecutiveSearchOptions consecutive;
  double budget_seconds = 30.0;
  auto* search = app.add_subcommand("search-consecutive", "Backtracking search for a consecutive labeling");
  search->add_option("graph", graph_a, "Graph file or builtin reference")->required();
  search->add_option("--budget", budget_seconds, "Time budget in seconds")->check(CLI::NonNegativeNumber);
  search->add_option("--complete-bound", consecutive.complete_bound,
                     "Largest graph searched in plain index order");
  search->callback([&] {
    consecutive.budget = std::chrono::milliseconds(static_cast<long long>(budget_seconds * 1000.0));
    action = [&](const Context& c) { return cmd_search_consecutive(c, graph_a, consecutive); };
  });

  // threshold
  std::optional<std::uint64_t> th_n;
  std::optional<std::uint64_t> th_diam;
  std::vector<std::uint64_t> powers;
  auto* threshold = app.add_subcommand("threshold", "Power beyond which no consecutive labeling exists");
  threshold->add_option("--n", th_n, "Base vertex count");
  threshold->add_option("--diam", th_diam, "Base diameter");
  threshold->add_option("--graph", graph_flag, "Base graph file or builtin reference");
  threshold->add_option("--t", powers, "Powers to classify")->check(CLI::PositiveNumber);
  threshold->callback([&] {
    action = [&](const Context& c) { return cmd_threshold(c, th_n, th_diam, graph_flag, powers); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const bool help = e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success);
    app.exit(e, streams.out, streams.err);
    return help ? kOk : kUsage;
  }

  try {
    Format format = streams.interactive ? Format::table : Format::json;
    if (!format_name.empty()) format = format_name == "json" ? Format::json : Format::table;
    const Context ctx{streams.in, streams.out, streams.err, format, size_cap_from_env()};
    return action(ctx);
  } catch (const UsageError& e) {
    streams.err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    streams.err << "error: " << e.what() << '\n';
    return e.code() == Errc::parse_error ? kUsage : kInvalid;
  }
}

}  // namespace radiolabel::cli
