#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kpvc {

enum class ErrorCode {
  SelfLoop,
  VertexOutOfRange,
  InstanceInvalid,
  InstanceTooLarge,
  KOutOfRange,
  NotAClique,
  NotACover,
  SpecInvalid,
  // parser
  Syntax,
  CountMismatch,
  MissingVertexAssignment,
  MissingBudget,
  IntraPartEdge,
  DuplicateRecord,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. Parser errors carry the 1-based line
/// they were detected on.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

} // namespace kpvc
