// metdim: batch front end over graph6 streams. Output is JSON-lines (or TSV)
// on stdout in input order; notices go to stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "metdim/distance.hpp"
#include "metdim/errors.hpp"
#include "metdim/generate.hpp"
#include "metdim/graph6.hpp"
#include "metdim/parallel.hpp"
#include "metdim/report.hpp"
#include "metdim/verify.hpp"

namespace {

using namespace metdim;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitIo = 3;

struct IoFailure {
  std::string message;
};

std::vector<std::string> read_lines(const std::string& path) {
  std::vector<std::string> lines;
  std::string line;
  if (path == "-") {
    while (std::getline(std::cin, line)) lines.push_back(line);
    if (std::cin.bad()) throw IoFailure{"error reading stdin"};
    return lines;
  }
  std::ifstream in(path);
  if (!in) throw IoFailure{"cannot open " + path};
  while (std::getline(in, line)) lines.push_back(line);
  if (in.bad()) throw IoFailure{"error reading " + path};
  return lines;
}

void emit(const std::string& line) {
  std::fwrite(line.data(), 1, line.size(), stdout);
  std::fputc('\n', stdout);
  std::fflush(stdout);
}

struct Globals {
  unsigned jobs = default_jobs();
  int cap = kDefaultPrunedCap;
  bool quiet = false;
  std::string format = "json";

  OutputFormat output_format() const {
    return format == "tsv" ? OutputFormat::Tsv : OutputFormat::Json;
  }
};

int run_per_line(const Globals& g, const std::string& input, Command command) {
  const auto lines = read_lines(input);
  const RunOptions options{g.jobs, g.cap, g.output_format()};
  for (const auto& out : process_lines(lines, command, options)) emit(out);
  return kExitOk;
}

int run_enumerate(int n) {
  for (const auto& form : enumerate_n_minus_3(n)) emit(form.str());
  return kExitOk;
}

int run_connected(int n) {
  for (const auto& g : connected_graphs(n)) emit(to_graph6(g));
  return kExitOk;
}

int run_verify(const Globals& g, int max_n, int min_n, const std::string& stream,
               bool cross_check) {
  std::vector<Graph> graphs;
  if (!stream.empty()) {
    const auto lines = read_lines(stream);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const auto& text = lines[i];
      if (text.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      try {
        Graph graph = parse_graph6(text);
        if (graph.order() < min_n) continue;
        if (graph.order() < 2 || !is_connected(graph)) {
          if (!g.quiet) std::cerr << "line " << i + 1 << ": skipped, not connected\n";
          continue;
        }
        graphs.push_back(std::move(graph));
      } catch (const ParseError& e) {
        if (!g.quiet) std::cerr << "line " << i + 1 << ": skipped, " << e.what() << "\n";
      }
    }
  } else {
    for (int n = std::max(min_n, 2); n <= max_n; ++n) {
      auto level = connected_graphs(n);
      graphs.insert(graphs.end(), level.begin(), level.end());
    }
  }

  const VerifyReport report = verify_graphs(graphs, {g.jobs, g.cap, cross_check});
  const auto fmt = g.output_format();
  for (const auto& v : report.failures) emit(render(verdict_record(v), fmt));
  if (!g.quiet) {
    for (const auto& [key, count] : report.hits) {
      Record r;
      r["n"] = key.n;
      r["family"] = std::string(to_string(key.family));
      r["structure"] = std::string(to_string(key.structure));
      r["hits"] = count;
      emit(render(r, fmt));
    }
  }
  Record summary;
  summary["checked"] = report.checked;
  summary["mismatches"] = report.mismatches;
  summary["inconsistent"] = report.inconsistent;
  summary["bound_violations"] = report.bound_violations;
  summary["cross_check_failures"] = report.cross_check_failures;
  emit(render(summary, fmt));
  return report.mismatches == 0 && report.inconsistent == 0 ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric dimension, twin graphs and structural characterisation"};
  app.require_subcommand(1);

  Globals globals;
  app.add_option("--jobs", globals.jobs, "Worker threads")
      ->envname("METDIM_JOBS")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap", globals.cap, "Largest order accepted by the exact search")
      ->envname("METDIM_CAP")
      ->check(CLI::Range(1, kMaxOrder));
  app.add_flag("--quiet", globals.quiet, "Suppress notices and hit counts")->envname("METDIM_QUIET");
  app.add_option("--format", globals.format, "Output format")
      ->envname("METDIM_FORMAT")
      ->check(CLI::IsMember({"json", "tsv"}));

  std::string input = "-";
  struct PerLine {
    const char* name;
    const char* help;
    Command command;
  };
  const PerLine per_line[] = {
      {"dim", "Metric dimension of each graph", Command::Dim},
      {"basis", "Metric dimension and a basis", Command::Basis},
      {"twin", "Twin classes, types and twin graph", Command::Twin},
      {"classify", "Structural prediction of the metric dimension", Command::Classify},
  };
  std::vector<std::pair<CLI::App*, Command>> per_line_apps;
  for (const auto& p : per_line) {
    auto* sub = app.add_subcommand(p.name, p.help);
    sub->add_option("input", input, "graph6 file, '-' for stdin");
    per_line_apps.emplace_back(sub, p.command);
  }

  int enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "All graphs of order n with dimension n-3");
  enumerate->add_option("--n", enum_n, "Order")->required();

  int conn_n = 0;
  auto* connected = app.add_subcommand("connected", "All connected graphs of order n");
  connected->add_option("--n", conn_n, "Order")->required();

  int max_n = 0;
  int min_n = 2;
  std::string stream;
  bool cross_check = false;
  auto* verify = app.add_subcommand("verify", "Check the characterisation against the exact search");
  auto* max_opt = verify->add_option("--max-n", max_n, "Self-enumerate orders up to N")
                      ->check(CLI::Range(2, 7));
  auto* stream_opt = verify->add_option("--stream", stream, "graph6 corpus to check");
  max_opt->excludes(stream_opt);
  verify->add_option("--min-n", min_n, "Skip orders below this")->check(CLI::Range(1, kMaxOrder));
  verify->add_flag("--cross-check", cross_check, "Also run the unpruned search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (const auto& [sub, command] : per_line_apps)
      if (sub->parsed()) return run_per_line(globals, input, command);
    if (enumerate->parsed()) return run_enumerate(enum_n);
    if (connected->parsed()) return run_connected(conn_n);
    if (verify->parsed()) {
      if (max_opt->count() == 0 && stream_opt->count() == 0) {
        std::cerr << "verify: one of --max-n or --stream is required\n";
        return kExitUsage;
      }
      return run_verify(globals, max_n, min_n, stream, cross_check);
    }
  } catch (const IoFailure& e) {
    std::cerr << "metdim: " << e.message << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "metdim: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
