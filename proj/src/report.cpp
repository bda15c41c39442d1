#include "metdim/report.hpp"

#include <optional>

#include "metdim/characterize.hpp"
#include "metdim/distance.hpp"
#include "metdim/errors.hpp"
#include "metdim/graph6.hpp"
#include "metdim/parallel.hpp"
#include "metdim/twin.hpp"

namespace metdim {
namespace {

Record header(std::size_t line, const Graph& g) {
  Record r;
  r["line"] = line;
  r["graph6"] = to_graph6(g);
  r["n"] = g.order();
  return r;
}

std::string bounds_status(const Graph& g, const BasisResult& b) {
  if (g.order() < 2) return "ok";
  return verify_bounds(g, b) ? "ok" : "VIOLATION";
}

Record prediction_record(const Prediction& p) {
  Record r;
  r["structure"] = std::string(to_string(p.id));
  r["family"] = std::string(to_string(family_of(p.id)));
  r["beta"] = p.beta;
  if (p.params) r["params"] = {{"s", p.params->first}, {"t", p.params->second}};
  if (!p.roles.roles.empty()) {
    Record roles = Record::object();
    for (const auto& [role, cls] : p.roles.roles) roles[std::string(role)] = cls;
    r["roles"] = std::move(roles);
  }
  return r;
}

std::string tsv_field(const Record& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

Record error_record(std::size_t line, std::string_view message) {
  Record r;
  r["line"] = line;
  r["error"] = std::string(message);
  return r;
}

Record dim_record(std::size_t line, const Graph& g, int cap) {
  const BasisResult b = metric_dimension(g, cap);
  Record r = header(line, g);
  r["beta"] = b.beta;
  r["status"] = bounds_status(g, b);
  return r;
}

Record basis_record(std::size_t line, const Graph& g, int cap) {
  const BasisResult b = metric_dimension(g, cap);
  Record r = header(line, g);
  r["diameter"] = diameter(g);
  r["beta"] = b.beta;
  r["basis"] = b.basis;
  r["explored"] = b.explored;
  r["status"] = bounds_status(g, b);
  return r;
}

Record twin_record(std::size_t line, const Graph& g) {
  const TwinDecomposition td = twin_decomposition(g);
  Record r = header(line, g);
  Record classes = Record::array();
  Record members = Record::array();
  for (int c = 0; c < td.class_count(); ++c) {
    const auto type = td.types[c];
    classes.push_back(type == VertexType::One
                          ? std::string("1")
                          : std::to_string(td.class_size(c)) + ":" + std::string(to_string(type)));
    members.push_back(td.classes[c]);
  }
  r["classes"] = std::move(classes);
  r["members"] = std::move(members);
  r["quotient"] = to_graph6(td.quotient);
  r["alpha"] = td.alpha;
  return r;
}

Record classify_record(std::size_t line, const Graph& g) {
  const Classification c = classify(g);
  Record r = header(line, g);
  r["diameter"] = diameter(g);
  Record matches = Record::array();
  for (const auto& p : c.predicted) matches.push_back(prediction_record(p));
  r["matches"] = std::move(matches);
  r["consistent"] = c.consistent;
  return r;
}

Record verdict_record(const GraphVerdict& v) {
  Record r;
  r["graph6"] = v.graph6;
  r["n"] = v.n;
  r["diameter"] = v.diameter;
  r["beta"] = v.oracle.beta;
  r["basis"] = v.oracle.basis;
  Record matches = Record::array();
  for (const auto& p : v.classification.predicted) matches.push_back(prediction_record(p));
  r["matches"] = std::move(matches);
  Record fams = Record::array();
  for (Family f : v.mismatched) fams.push_back(std::string(to_string(f)));
  r["mismatched"] = std::move(fams);
  r["consistent"] = v.classification.consistent;
  r["bounds"] = v.bounds_ok ? "ok" : "VIOLATION";
  r["cross_check"] = v.cross_check_ok;
  return r;
}

std::string render(const Record& r, OutputFormat format) {
  if (format == OutputFormat::Json) return r.dump();
  std::string out;
  bool first = true;
  for (const auto& [key, value] : r.items()) {
    if (!first) out += '\t';
    out += tsv_field(value);
    first = false;
  }
  return out;
}

std::vector<std::string> process_lines(std::span<const std::string> lines, Command command,
                                       const RunOptions& options) {
  std::vector<std::optional<std::string>> out(lines.size());
  parallel_for(lines.size(), options.jobs, [&](std::size_t i) {
    const std::string& text = lines[i];
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return;
    const std::size_t line = i + 1;
    Record r;
    try {
      const Graph g = parse_graph6(text);
      if (!is_connected(g)) throw ConnectivityError("graph is disconnected");
      switch (command) {
        case Command::Dim: r = dim_record(line, g, options.cap); break;
        case Command::Basis: r = basis_record(line, g, options.cap); break;
        case Command::Twin: r = twin_record(line, g); break;
        case Command::Classify:
          if (g.order() < 2) throw InvalidArgument("classification needs n >= 2");
          r = classify_record(line, g);
          break;
      }
    } catch (const Error& e) {
      r = error_record(line, e.what());
    }
    out[i] = render(r, options.format);
  });
  std::vector<std::string> result;
  for (auto& o : out)
    if (o) result.push_back(std::move(*o));
  return result;
}

}  // namespace metdim
