#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dkc/cli.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;

void emit(const dkc::RunReport& report, bool json) {
  if (json)
    std::cout << report.to_json().dump(2) << '\n';
  else
    report.write_key_values(std::cout);
}

void write_solution_file(const std::string& path, const dkc::SolveOutcome& outcome) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  dkc::write_solution(out, outcome.graph, outcome.solution);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disjoint k-clique listing and maintenance"};
  app.require_subcommand(1);

  int k = 3;
  unsigned threads = 1;
  bool json = false;
  std::string graph_path, output_path;

  auto* count = app.add_subcommand("count", "Count k-cliques and summarize node scores");
  count->add_option("graph", graph_path, "Edge-list file")->required();
  count->add_option("--k", k, "Clique size")->check(CLI::Range(3, 64));
  count->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  count->add_flag("--json", json, "Print the report as JSON");

  std::string algo = "lp", ordering = "degree";
  bool no_prune = false, relaxed = false;
  std::uint64_t gc_cap = dkc::kDefaultGcCapBytes;
  double opt_timeout = 60.0;
  auto* solve = app.add_subcommand("solve", "Compute a disjoint k-clique set");
  solve->add_option("graph", graph_path, "Edge-list file")->required();
  solve->add_option("--k", k, "Clique size")->check(CLI::Range(3, 64));
  solve->add_option("--algo", algo, "hg, gc, l, lp or opt")
      ->check(CLI::IsMember({"hg", "gc", "l", "lp", "opt"}));
  solve->add_option("--ordering", ordering, "Node ordering for hg: degree, score or natural")
      ->check(CLI::IsMember({"degree", "score", "node-score", "natural"}));
  solve->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  solve->add_flag("--no-prune", no_prune, "Disable score pruning in lp");
  solve->add_flag("--relaxed-ties", relaxed, "Break score ties by discovery order");
  solve->add_option("--gc-cap-bytes", gc_cap, "Memory cap for gc");
  solve->add_option("--opt-timeout-secs", opt_timeout, "Time budget for opt")
      ->check(CLI::PositiveNumber);
  solve->add_option("-o,--output", output_path, "Solution file");
  solve->add_flag("--json", json, "Print the report as JSON");

  std::string stream_path;
  bool verify = false;
  auto* dynamic = app.add_subcommand("dynamic", "Maintain a solution under an update stream");
  dynamic->add_option("graph", graph_path, "Edge-list file")->required();
  dynamic->add_option("--stream", stream_path, "Update stream ('+ u v' / '- u v')")->required();
  dynamic->add_option("--k", k, "Clique size")->check(CLI::Range(3, 64));
  dynamic->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  dynamic->add_flag("--verify", verify, "Cross-check the index after every op");
  dynamic->add_option("-o,--output", output_path, "Solution file");
  dynamic->add_flag("--json", json, "Print the report as JSON");

  std::size_t n = 1000, mean_degree = 8;
  double rewire = dkc::kDefaultRewireProb;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a Watts-Strogatz graph");
  gen->add_option("--n", n, "Node count")->required();
  gen->add_option("--mean-degree", mean_degree, "Even mean degree below n")->required();
  gen->add_option("--rewire-prob", rewire, "Rewiring probability");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("-o,--output", output_path, "Edge-list file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (count->parsed()) {
      emit(dkc::cmd_count(graph_path, k, threads), json);
    } else if (solve->parsed()) {
      dkc::SolveRequest request;
      request.graph_path = graph_path;
      request.k = k;
      request.algorithm = *dkc::parse_algorithm(algo);
      request.ordering = *dkc::parse_ordering_kind(ordering);
      request.pruning = !no_prune;
      request.ties = relaxed ? dkc::TieBreak::relaxed : dkc::TieBreak::strict;
      request.threads = threads;
      request.gc_cap_bytes = gc_cap;
      request.opt_budget = std::chrono::milliseconds(static_cast<long long>(opt_timeout * 1000));
      dkc::SolveOutcome outcome = dkc::cmd_solve(request);
      write_solution_file(output_path, outcome);
      emit(outcome.report, json);
    } else if (dynamic->parsed()) {
      dkc::SolveOutcome outcome =
          dkc::cmd_dynamic({graph_path, stream_path, k, threads, verify});
      write_solution_file(output_path, outcome);
      emit(outcome.report, json);
      auto failures = outcome.report.extra.find("verify_failures");
      if (failures != outcome.report.extra.end() && failures->second != "0") {
        std::cerr << "error: " << failures->second << " verification failures\n";
        return kExitFailure;
      }
    } else if (gen->parsed()) {
      if (output_path.empty()) {
        dkc::cmd_gen(std::cout, n, mean_degree, rewire, seed);
      } else {
        std::ofstream out(output_path);
        if (!out) throw std::runtime_error("cannot write " + output_path);
        dkc::cmd_gen(out, n, mean_degree, rewire, seed);
      }
    }
  } catch (const dkc::FileParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const dkc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const dkc::MemoryGuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const dkc::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const dkc::TimeoutError& e) {
    std::cerr << "error: " << e.what() << "; best set found has " << e.incumbent().size()
              << " cliques\n";
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
