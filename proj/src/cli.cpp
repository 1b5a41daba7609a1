#include "dkc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

namespace dkc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

// Node-score histogram in power-of-two buckets: "0:3,1:4,2-3:7,...".
std::string score_histogram(const std::vector<std::uint64_t>& scores) {
  std::map<int, std::size_t> buckets;
  for (std::uint64_t s : scores) buckets[s == 0 ? -1 : std::bit_width(s) - 1]++;
  std::string out;
  for (auto [b, count] : buckets) {
    if (!out.empty()) out += ',';
    if (b < 0) {
      out += "0";
    } else {
      std::uint64_t lo = 1ull << b, hi = (lo << 1) - 1;
      out += lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi);
    }
    out += ':' + std::to_string(count);
  }
  return out;
}

}  // namespace

FileParseError::FileParseError(const std::string& path, const ParseError& cause)
    : std::runtime_error(path + ": " + cause.what()) {}

LatencySummary summarize_latencies(std::vector<std::uint64_t> latency_ns) {
  LatencySummary s;
  if (latency_ns.empty()) return s;
  std::sort(latency_ns.begin(), latency_ns.end());
  auto at = [&](double q) {
    auto i = static_cast<std::size_t>(q * static_cast<double>(latency_ns.size() - 1) + 0.5);
    return static_cast<double>(latency_ns[i]) / 1000.0;
  };
  s.p50_us = at(0.5);
  s.p90_us = at(0.9);
  s.p99_us = at(0.99);
  s.max_us = static_cast<double>(latency_ns.back()) / 1000.0;
  double total = std::accumulate(latency_ns.begin(), latency_ns.end(), 0.0);
  s.mean_us = total / static_cast<double>(latency_ns.size()) / 1000.0;
  return s;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["algorithm"] = algorithm;
  j["k"] = k;
  j["n"] = n;
  j["m"] = m;
  if (tau) j["tau"] = *tau;
  if (solution_size) j["solution_size"] = *solution_size;
  j["wall_time"] = {{"load", load_seconds}, {"score", score_seconds}, {"solve", solve_seconds}};
  j["peak_rss_bytes"] = peak_rss_bytes;
  if (latency)
    j["latency_us"] = {{"p50", latency->p50_us}, {"p90", latency->p90_us},
                       {"p99", latency->p99_us}, {"max", latency->max_us},
                       {"mean", latency->mean_us}};
  if (!size_trajectory.empty()) j["size_trajectory"] = size_trajectory;
  for (const auto& [key, value] : extra) j[key] = value;
  return j;
}

void RunReport::write_key_values(std::ostream& out) const {
  out << "algorithm=" << algorithm << '\n'
      << "k=" << k << '\n'
      << "n=" << n << '\n'
      << "m=" << m << '\n';
  if (tau) out << "tau=" << *tau << '\n';
  if (solution_size) out << "solution_size=" << *solution_size << '\n';
  out << "load_seconds=" << load_seconds << '\n'
      << "score_seconds=" << score_seconds << '\n'
      << "solve_seconds=" << solve_seconds << '\n'
      << "peak_rss_bytes=" << peak_rss_bytes << '\n';
  if (latency)
    out << "latency_p50_us=" << latency->p50_us << '\n'
        << "latency_p90_us=" << latency->p90_us << '\n'
        << "latency_p99_us=" << latency->p99_us << '\n'
        << "latency_max_us=" << latency->max_us << '\n'
        << "latency_mean_us=" << latency->mean_us << '\n';
  if (!size_trajectory.empty()) out << "size_trajectory=" << join(size_trajectory) << '\n';
  for (const auto& [key, value] : extra) out << key << '=' << value << '\n';
}

std::uint64_t peak_rss_bytes() {
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line)) {
    if (line.rfind("VmHWM:", 0) != 0) continue;
    std::istringstream fields(line.substr(6));
    std::uint64_t kb = 0;
    fields >> kb;
    return kb * 1024;
  }
  return 0;
}

Graph generate_watts_strogatz(std::size_t n, std::size_t mean_degree, double rewire_prob,
                              std::uint64_t seed) {
  if (mean_degree % 2 != 0) throw std::invalid_argument("mean degree must be even");
  if (n == 0 || mean_degree >= n) throw std::invalid_argument("mean degree must be below n");
  if (!(rewire_prob >= 0.0 && rewire_prob <= 1.0))
    throw std::invalid_argument("rewire probability must lie in [0, 1]");

  std::vector<std::unordered_set<NodeId>> adj(n);
  const std::size_t half = mean_degree / 2;
  for (NodeId u = 0; u < n; ++u)
    for (std::size_t j = 1; j <= half; ++j) {
      auto v = static_cast<NodeId>((u + j) % n);
      adj[u].insert(v);
      adj[v].insert(u);
    }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  for (std::size_t j = 1; j <= half; ++j)
    for (NodeId u = 0; u < n; ++u) {
      auto v = static_cast<NodeId>((u + j) % n);
      if (coin(rng) >= rewire_prob) continue;
      if (adj[u].size() >= n - 1) continue;  // nowhere to go
      NodeId w;
      do {
        w = pick(rng);
      } while (w == u || adj[u].count(w));
      adj[u].erase(v);
      adj[v].erase(u);
      adj[u].insert(w);
      adj[w].insert(u);
    }

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n * half);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, edges);
}

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::hg: return "hg";
    case Algorithm::gc: return "gc";
    case Algorithm::l: return "l";
    case Algorithm::lp: return "lp";
    case Algorithm::opt: return "opt";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& text) {
  for (Algorithm a : {Algorithm::hg, Algorithm::gc, Algorithm::l, Algorithm::lp, Algorithm::opt})
    if (text == to_string(a)) return a;
  return std::nullopt;
}

Graph load_graph(const std::string& path) {
  try {
    return load_edge_list_file(path);
  } catch (const ParseError& e) {
    throw FileParseError(path, e);
  }
}

RunReport cmd_count(const std::string& graph_path, int k, unsigned threads) {
  require_valid_k(k);
  RunReport report;
  report.algorithm = "count";
  report.k = k;
  auto start = Clock::now();
  Graph g = load_graph(graph_path);
  report.load_seconds = seconds_since(start);
  report.n = g.n();
  report.m = g.m();

  start = Clock::now();
  OrientedGraph og = orient(g, build_ordering(g, OrderingKind::degree));
  NodeScoreTable table = compute_node_scores(og, k, threads);
  report.score_seconds = seconds_since(start);
  report.tau = table.tau;

  const auto& s = table.node_score;
  std::uint64_t max = s.empty() ? 0 : *std::max_element(s.begin(), s.end());
  double mean = s.empty() ? 0.0
                          : static_cast<double>(std::accumulate(s.begin(), s.end(), 0ull)) /
                                static_cast<double>(s.size());
  std::size_t covered = static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](std::uint64_t x) { return x > 0; }));
  report.extra["node_score_max"] = std::to_string(max);
  std::ostringstream mean_text;
  mean_text << mean;
  report.extra["node_score_mean"] = mean_text.str();
  report.extra["nodes_in_cliques"] = std::to_string(covered);
  report.extra["node_score_histogram"] = score_histogram(s);
  report.peak_rss_bytes = peak_rss_bytes();
  return report;
}

SolveOutcome solve_loaded(Graph g, const SolveRequest& request, RunReport report) {
  require_valid_k(request.k);
  report.algorithm = to_string(request.algorithm);
  report.k = request.k;
  report.n = g.n();
  report.m = g.m();

  SolveStats stats;
  SolutionSet s;
  auto start = Clock::now();
  switch (request.algorithm) {
    case Algorithm::hg: {
      NodeOrdering ordering;
      if (request.ordering == OrderingKind::node_score) {
        OrientedGraph og = orient(g, build_ordering(g, OrderingKind::degree));
        NodeScoreTable table = compute_node_scores(og, request.k, request.threads);
        ordering = build_ordering(g, OrderingKind::node_score, table.node_score);
        report.tau = table.tau;
        report.score_seconds = seconds_since(start);
      } else {
        ordering = build_ordering(g, request.ordering);
      }
      s = solve_hg(g, request.k, ordering);
      report.extra["ordering"] = to_string(request.ordering);
      break;
    }
    case Algorithm::gc:
      s = solve_gc(g, request.k, {request.gc_cap_bytes, request.ties, request.threads}, &stats);
      report.tau = stats.tau;
      report.score_seconds = stats.score_seconds;
      break;
    case Algorithm::l:
    case Algorithm::lp: {
      LpOptions options;
      options.pruning = request.algorithm == Algorithm::lp && request.pruning;
      options.threads = request.threads;
      options.ties = request.ties;
      s = solve_lp(g, request.k, options, &stats);
      report.tau = stats.tau;
      report.score_seconds = stats.score_seconds;
      report.extra["heap_pops"] = std::to_string(stats.heap_pops);
      report.extra["recomputations"] = std::to_string(stats.recomputations);
      break;
    }
    case Algorithm::opt: {
      CliqueGraph cg = build_clique_graph(g, request.k, request.opt_cap);
      report.tau = cg.size();
      report.score_seconds = seconds_since(start);
      s = exact_mis(cg, request.opt_budget);
      break;
    }
  }
  report.solve_seconds = seconds_since(start) - report.score_seconds;
  report.solution_size = s.size();
  report.peak_rss_bytes = peak_rss_bytes();
  return {std::move(report), std::move(g), std::move(s)};
}

SolveOutcome cmd_solve(const SolveRequest& request) {
  require_valid_k(request.k);
  RunReport report;
  auto start = Clock::now();
  Graph g = load_graph(request.graph_path);
  report.load_seconds = seconds_since(start);
  return solve_loaded(std::move(g), request, std::move(report));
}

SolveOutcome cmd_dynamic(const DynamicRequest& request) {
  require_valid_k(request.k);
  RunReport report;
  report.algorithm = "dynamic";
  report.k = request.k;
  auto start = Clock::now();
  Graph g = load_graph(request.graph_path);
  std::vector<LabeledUpdate> labeled;
  {
    std::ifstream in(request.stream_path);
    if (!in) throw std::runtime_error("cannot open " + request.stream_path);
    try {
      labeled = parse_update_stream(in);
    } catch (const ParseError& e) {
      throw FileParseError(request.stream_path, e);
    }
  }
  std::vector<UpdateOp> ops = resolve_updates(g, labeled);
  report.load_seconds = seconds_since(start);

  start = Clock::now();
  LpOptions options;
  options.threads = request.threads;
  SolveStats stats;
  SolutionSet initial = solve_lp(g, request.k, options, &stats);
  report.score_seconds = stats.score_seconds;
  report.extra["initial_size"] = std::to_string(initial.size());
  DynamicSolver solver(std::move(g), request.k, std::move(initial));
  report.extra["initial_index_size"] = std::to_string(solver.index().size());
  report.extra["build_seconds"] = std::to_string(seconds_since(start));

  start = Clock::now();
  ReplayMetrics metrics = replay(solver, ops, {request.verify});
  report.solve_seconds = seconds_since(start);

  report.n = solver.graph().n();
  report.m = solver.graph().m();
  report.solution_size = solver.solution().size();
  report.size_trajectory = metrics.solution_size;
  report.latency = summarize_latencies(metrics.latency_ns);
  report.extra["ops"] = std::to_string(ops.size());
  report.extra["applied"] = std::to_string(metrics.applied);
  report.extra["unchanged"] = std::to_string(metrics.unchanged);
  report.extra["op_errors"] = std::to_string(metrics.errors.size());
  report.extra["swaps"] = std::to_string(solver.stats().swaps);
  report.extra["swap_attempts"] = std::to_string(solver.stats().swap_attempts);
  report.extra["direct_additions"] = std::to_string(solver.stats().direct_additions);
  report.extra["dissolved"] = std::to_string(solver.stats().dissolved);
  report.extra["final_index_size"] = std::to_string(solver.index().size());
  if (request.verify) report.extra["verify_failures"] = std::to_string(metrics.verify_failures);
  for (const OpError& e : metrics.errors) {
    std::size_t line = labeled[e.op].line;
    report.extra["op_error_line_" + std::to_string(line)] = e.message;
  }
  report.peak_rss_bytes = peak_rss_bytes();
  return {std::move(report), solver.graph(), solver.solution()};
}

void cmd_gen(std::ostream& out, std::size_t n, std::size_t mean_degree, double rewire_prob,
             std::uint64_t seed) {
  write_edge_list(out, generate_watts_strogatz(n, mean_degree, rewire_prob, seed));
}

}  // namespace dkc
