#include "kpvc/io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "kpvc/error.hpp"

namespace kpvc {

namespace {

constexpr std::int64_t kMaxCount = 10'000'000;

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
      ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::int64_t to_int(std::string_view field, std::size_t line) {
  std::int64_t value = 0;
  const char *end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw Error(ErrorCode::Syntax, "expected integer, got '" + std::string(field) + "'",
                line);
  return value;
}

struct PendingEdge {
  Vertex u;
  Vertex v;
  std::size_t line;
};

std::string join(const std::vector<std::int64_t> &values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string join(const VertexSet &values, char sep) {
  return join(std::vector<std::int64_t>(values.begin(), values.end()), sep);
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

} // namespace

Instance parse_instance(std::string_view text) {
  bool have_header = false;
  Vertex n = 0;
  std::int64_t m = 0;
  PartId k = 0;
  std::vector<PartId> part_of;
  std::vector<std::int64_t> budgets;
  std::vector<char> budget_seen;
  std::vector<PendingEdge> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    const auto line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;

    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    const std::string_view tag = fields[0];
    if (tag == "c") continue;

    auto expect_fields = [&](std::size_t count) {
      if (fields.size() != count)
        throw Error(ErrorCode::Syntax,
                    "'" + std::string(tag) + "' record takes " +
                        std::to_string(count - 1) + " fields",
                    line_no);
    };

    if (tag == "p") {
      if (have_header) throw Error(ErrorCode::DuplicateRecord, "second p line", line_no);
      expect_fields(5);
      if (fields[1] != "kpvc")
        throw Error(ErrorCode::Syntax, "problem tag must be 'kpvc'", line_no);
      const std::int64_t nn = to_int(fields[2], line_no);
      m = to_int(fields[3], line_no);
      const std::int64_t kk = to_int(fields[4], line_no);
      if (nn < 1 || m < 0 || kk < 1 || nn > kMaxCount || kk > kMaxCount)
        throw Error(ErrorCode::Syntax, "need n >= 1, m >= 0, k >= 1", line_no);
      n = static_cast<Vertex>(nn);
      k = static_cast<PartId>(kk);
      part_of.assign(static_cast<std::size_t>(n), 0);
      budgets.assign(static_cast<std::size_t>(k), 0);
      budget_seen.assign(static_cast<std::size_t>(k), 0);
      have_header = true;
      continue;
    }
    if (!have_header)
      throw Error(ErrorCode::Syntax, "record before the p line", line_no);

    if (tag == "v") {
      expect_fields(3);
      const std::int64_t v = to_int(fields[1], line_no);
      const std::int64_t p = to_int(fields[2], line_no);
      if (v < 1 || v > n)
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v), line_no);
      if (p < 1 || p > k)
        throw Error(ErrorCode::Syntax, "part " + std::to_string(p) + " outside 1..k",
                    line_no);
      if (part_of[v - 1] != 0)
        throw Error(ErrorCode::DuplicateRecord,
                    "vertex " + std::to_string(v) + " assigned twice", line_no);
      part_of[v - 1] = static_cast<PartId>(p);
    } else if (tag == "b") {
      expect_fields(3);
      const std::int64_t p = to_int(fields[1], line_no);
      const std::int64_t b = to_int(fields[2], line_no);
      if (p < 1 || p > k)
        throw Error(ErrorCode::Syntax, "part " + std::to_string(p) + " outside 1..k",
                    line_no);
      if (b < 0) throw Error(ErrorCode::Syntax, "negative budget", line_no);
      if (budget_seen[p - 1])
        throw Error(ErrorCode::DuplicateRecord,
                    "budget for part " + std::to_string(p) + " given twice", line_no);
      budget_seen[p - 1] = 1;
      budgets[p - 1] = b;
    } else if (tag == "e") {
      expect_fields(3);
      const std::int64_t u = to_int(fields[1], line_no);
      const std::int64_t v = to_int(fields[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n)
        throw Error(ErrorCode::VertexOutOfRange,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ")",
                    line_no);
      if (u == v)
        throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(u), line_no);
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), line_no});
    } else {
      throw Error(ErrorCode::Syntax, "unknown record '" + std::string(tag) + "'",
                  line_no);
    }
  }

  const std::size_t last_line = std::max<std::size_t>(line_no, 1);
  if (!have_header) throw Error(ErrorCode::Syntax, "missing p line", last_line);
  if (static_cast<std::int64_t>(edges.size()) != m)
    throw Error(ErrorCode::CountMismatch,
                "header declares " + std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()),
                last_line);
  for (Vertex v = 1; v <= n; ++v)
    if (part_of[v - 1] == 0)
      throw Error(ErrorCode::MissingVertexAssignment,
                  "vertex " + std::to_string(v) + " has no v record", last_line);
  for (PartId p = 1; p <= k; ++p)
    if (!budget_seen[p - 1])
      throw Error(ErrorCode::MissingBudget,
                  "part " + std::to_string(p) + " has no b record", last_line);
  for (const auto &e : edges)
    if (part_of[e.u - 1] == part_of[e.v - 1])
      throw Error(ErrorCode::IntraPartEdge,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") inside part " + std::to_string(part_of[e.u - 1]),
                  e.line);

  std::vector<Edge> edge_list;
  edge_list.reserve(edges.size());
  for (const auto &e : edges) edge_list.emplace_back(e.u, e.v);
  return {Graph(n, std::span<const Edge>(edge_list)), KPartition(k, std::move(part_of)),
          Budgets{std::move(budgets)}};
}

std::string serialize_instance(const Instance &inst) {
  require_valid(inst);
  const Graph &g = inst.graph;
  std::string out;
  out.reserve(32 * (g.edge_count() + static_cast<std::size_t>(g.vertex_count())));
  out += "p kpvc " + std::to_string(g.vertex_count()) + ' ' +
         std::to_string(g.edge_count()) + ' ' +
         std::to_string(inst.partition.part_count()) + '\n';
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    out += "v " + std::to_string(v) + ' ' + std::to_string(inst.partition.part_of(v)) + '\n';
  for (PartId p = 1; p <= inst.partition.part_count(); ++p)
    out += "b " + std::to_string(p) + ' ' + std::to_string(inst.budgets.limit(p)) + '\n';
  for (const Edge &e : g.edges())
    out += "e " + std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
  return out;
}

SolveReport make_report(const CoverResult &result, double wall_ms) {
  SolveReport r;
  r.algo = "cvck";
  r.status = result.success() ? "Success" : "HeuristicFailure";
  r.cover = result.cover;
  if (result.success()) r.size = result.cover.size();
  r.per_part_usage = result.per_part_usage;
  r.effort = result.op_count;
  r.wall_ms = wall_ms;
  return r;
}

SolveReport make_report(const ExactResult &result, const Instance &inst,
                        double wall_ms) {
  SolveReport r;
  r.algo = "exact";
  r.status = result.feasible() ? "Feasible" : "Infeasible";
  if (result.feasible()) {
    r.cover = result.cover;
    r.size = result.cover.size();
  }
  r.per_part_usage = part_usage(inst, r.cover);
  r.effort_name = "nodes_explored";
  r.effort = static_cast<std::uint64_t>(result.nodes_explored);
  r.wall_ms = wall_ms;
  return r;
}

SolveReport make_report(const MatchingCover &result, const Instance &inst,
                        double wall_ms) {
  SolveReport r;
  r.algo = "2approx";
  r.status = "Success";
  r.cover = result.cover;
  r.size = result.cover.size();
  r.per_part_usage = part_usage(inst, r.cover);
  r.effort = result.op_count;
  r.wall_ms = wall_ms;
  r.within_budgets = respects_budgets(inst, r.cover);
  return r;
}

std::string_view result_csv_header() {
  return "algo,status,cover,size,per_part_usage,op_count,wall_ms\n";
}

std::string emit_result(const SolveReport &report, OutputFormat format) {
  switch (format) {
  case OutputFormat::Json: {
    nlohmann::ordered_json j;
    j["algo"] = report.algo;
    j["status"] = report.status;
    j["cover"] = report.cover;
    j["size"] = report.size ? nlohmann::ordered_json(*report.size) : nullptr;
    j["per_part_usage"] = report.per_part_usage;
    j[report.effort_name] = report.effort;
    j["wall_ms"] = report.wall_ms;
    if (report.within_budgets) j["within_budgets"] = *report.within_budgets;
    return j.dump() + '\n';
  }
  case OutputFormat::Csv:
    return report.algo + ',' + report.status + ',' + join(report.cover, ';') + ',' +
           (report.size ? std::to_string(*report.size) : std::string()) + ',' +
           join(report.per_part_usage, ';') + ',' + std::to_string(report.effort) +
           ',' + format_ms(report.wall_ms) + '\n';
  case OutputFormat::Text: {
    std::ostringstream out;
    out << "algo: " << report.algo << '\n'
        << "status: " << report.status << '\n'
        << "size: " << (report.size ? std::to_string(*report.size) : "-") << '\n'
        << "cover: " << join(report.cover, ' ') << '\n'
        << "per_part_usage: " << join(report.per_part_usage, ' ') << '\n'
        << report.effort_name << ": " << report.effort << '\n'
        << "wall_ms: " << format_ms(report.wall_ms) << '\n';
    if (report.within_budgets)
      out << "within_budgets: " << (*report.within_budgets ? "yes" : "no") << '\n';
    return out.str();
  }
  }
  return {};
}

void ResultCsvWriter::write(const SolveReport &report) {
  if (!header_written_) {
    out_ << result_csv_header();
    header_written_ = true;
  }
  out_ << emit_result(report, OutputFormat::Csv);
}

} // namespace kpvc
