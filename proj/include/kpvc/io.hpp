#pragma once

// Instance text format (UTF-8, LF line endings, ASCII decimal integers):
//
//   c <anything>             comment
//   p kpvc <n> <m> <k>       header, first non-comment line, exactly once
//   v <vertex> <part>        one per vertex 1..n
//   b <part> <budget>        one per part 1..k
//   e <u> <v>                m lines, u != v
//
// v/b/e records may interleave after the header. Serialization is canonical:
// header, v lines by vertex, b lines by part, e lines sorted with u < v.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "kpvc/approx.hpp"
#include "kpvc/exact.hpp"
#include "kpvc/graph.hpp"
#include "kpvc/heuristic.hpp"

namespace kpvc {

/// Throws Error with the offending 1-based line number. Intra-part edges are
/// rejected here (IntraPartEdge) with the line of the e record.
Instance parse_instance(std::string_view text);

/// Throws Error(InstanceInvalid).
std::string serialize_instance(const Instance &inst);

/// Uniform view of any solver's outcome for printing.
struct SolveReport {
  std::string algo;
  std::string status;
  VertexSet cover;
  std::optional<std::size_t> size; // set only when `cover` is a valid answer
  std::vector<std::int64_t> per_part_usage;
  std::string effort_name = "op_count"; // or "nodes_explored"
  std::uint64_t effort = 0;
  double wall_ms = 0.0;
  std::optional<bool> within_budgets; // budget-blind baselines only
};

SolveReport make_report(const CoverResult &result, double wall_ms);
SolveReport make_report(const ExactResult &result, const Instance &inst,
                        double wall_ms);
SolveReport make_report(const MatchingCover &result, const Instance &inst,
                        double wall_ms);

enum class OutputFormat { Json, Csv, Text };

/// JSON object, CSV row (no header) or a short human-readable block; each
/// newline-terminated. CSV joins id lists with ';'.
std::string emit_result(const SolveReport &report, OutputFormat format);

/// CSV column names matching emit_result's CSV rows.
std::string_view result_csv_header();

/// Appends result rows to a stream, writing the header before the first row.
class ResultCsvWriter {
public:
  explicit ResultCsvWriter(std::ostream &out) : out_(out) {}
  void write(const SolveReport &report);

private:
  std::ostream &out_;
  bool header_written_ = false;
};

} // namespace kpvc
