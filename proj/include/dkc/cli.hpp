#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dkc/dynamic.hpp"
#include "dkc/oracle.hpp"
#include "dkc/solvers.hpp"

namespace dkc {

/// Parse failure with the offending file attached.
class FileParseError : public std::runtime_error {
public:
  FileParseError(const std::string& path, const ParseError& cause);
};

struct LatencySummary {
  double p50_us = 0;
  double p90_us = 0;
  double p99_us = 0;
  double max_us = 0;
  double mean_us = 0;
};

LatencySummary summarize_latencies(std::vector<std::uint64_t> latency_ns);

struct RunReport {
  std::string algorithm;
  int k = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::uint64_t> tau;
  std::optional<std::size_t> solution_size;
  double load_seconds = 0;
  double score_seconds = 0;
  double solve_seconds = 0;
  std::uint64_t peak_rss_bytes = 0;
  std::optional<LatencySummary> latency;
  std::vector<std::size_t> size_trajectory;
  /// Command-specific fields, printed after the common ones.
  std::map<std::string, std::string> extra;

  nlohmann::json to_json() const;
  /// One key=value per line.
  void write_key_values(std::ostream& out) const;
};

/// Peak resident set size of this process, 0 where unavailable.
std::uint64_t peak_rss_bytes();

/// Ring lattice where every node links to its mean_degree/2 successors, then
/// each lattice edge is rewired to a uniform random endpoint with probability
/// rewire_prob. Throws std::invalid_argument on bad parameters.
Graph generate_watts_strogatz(std::size_t n, std::size_t mean_degree, double rewire_prob,
                              std::uint64_t seed);

inline constexpr double kDefaultRewireProb = 0.1;

enum class Algorithm { hg, gc, l, lp, opt };

const char* to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& text);

struct SolveRequest {
  std::string graph_path;
  int k = 3;
  Algorithm algorithm = Algorithm::lp;
  OrderingKind ordering = OrderingKind::degree;
  bool pruning = true;
  TieBreak ties = TieBreak::strict;
  unsigned threads = 1;
  std::uint64_t gc_cap_bytes = kDefaultGcCapBytes;
  std::chrono::milliseconds opt_budget = kDefaultOracleBudget;
  std::uint64_t opt_cap = kDefaultOracleCap;
};

struct SolveOutcome {
  RunReport report;
  Graph graph;
  SolutionSet solution;
};

/// Loads a graph file; wraps ParseError in FileParseError.
Graph load_graph(const std::string& path);

/// Counts k-cliques and summarizes node scores.
RunReport cmd_count(const std::string& graph_path, int k, unsigned threads = 1);

/// Runs one solver. Errors from the memory guard and the oracle propagate.
SolveOutcome cmd_solve(const SolveRequest& request);
SolveOutcome solve_loaded(Graph g, const SolveRequest& request, RunReport report);

struct DynamicRequest {
  std::string graph_path;
  std::string stream_path;
  int k = 3;
  unsigned threads = 1;
  bool verify = false;
};

/// Builds the initial set with lp, replays the stream and reports the final
/// set. Verification failures are counted in the report.
SolveOutcome cmd_dynamic(const DynamicRequest& request);

/// Writes the generated graph as an edge list.
void cmd_gen(std::ostream& out, std::size_t n, std::size_t mean_degree, double rewire_prob,
             std::uint64_t seed);

}  // namespace dkc
