#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "metdim/graph.hpp"
#include "metdim/resolving.hpp"
#include "metdim/verify.hpp"

namespace metdim {

/// One output object; keys keep insertion order so output is stable.
using Record = nlohmann::ordered_json;

enum class OutputFormat { Json, Tsv };
enum class Command { Dim, Basis, Twin, Classify };

Record error_record(std::size_t line, std::string_view message);
Record dim_record(std::size_t line, const Graph& g, int cap = kDefaultPrunedCap);
Record basis_record(std::size_t line, const Graph& g, int cap = kDefaultPrunedCap);
Record twin_record(std::size_t line, const Graph& g);
Record classify_record(std::size_t line, const Graph& g);
Record verdict_record(const GraphVerdict& v);

/// Compact JSON, or the values tab-separated in key order.
std::string render(const Record& r, OutputFormat format);

struct RunOptions {
  unsigned jobs = 1;
  int cap = kDefaultPrunedCap;
  OutputFormat format = OutputFormat::Json;
};

/// Handles a batch of graph6 lines (1-based line numbers). Blank lines are
/// skipped; a line that fails to parse, is disconnected, or exceeds the cap
/// yields an error record and processing continues. Output follows input
/// order regardless of `jobs`.
std::vector<std::string> process_lines(std::span<const std::string> lines, Command command,
                                       const RunOptions& options);

}  // namespace metdim
