#include "kpvc/error.hpp"

namespace kpvc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::SelfLoop: return "SelfLoop";
  case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
  case ErrorCode::InstanceInvalid: return "InstanceInvalid";
  case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
  case ErrorCode::KOutOfRange: return "KOutOfRange";
  case ErrorCode::NotAClique: return "NotAClique";
  case ErrorCode::NotACover: return "NotACover";
  case ErrorCode::SpecInvalid: return "SpecInvalid";
  case ErrorCode::Syntax: return "Syntax";
  case ErrorCode::CountMismatch: return "CountMismatch";
  case ErrorCode::MissingVertexAssignment: return "MissingVertexAssignment";
  case ErrorCode::MissingBudget: return "MissingBudget";
  case ErrorCode::IntraPartEdge: return "IntraPartEdge";
  case ErrorCode::DuplicateRecord: return "DuplicateRecord";
  }
  return "Unknown";
}

namespace {
std::string decorate(ErrorCode code, const std::string &what,
                     std::optional<std::size_t> line) {
  std::string msg(to_string(code));
  if (line) msg += " at line " + std::to_string(*line);
  if (!what.empty()) msg += ": " + what;
  return msg;
}
} // namespace

Error::Error(ErrorCode code, const std::string &what,
             std::optional<std::size_t> line)
    : std::runtime_error(decorate(code, what, line)), code_(code), line_(line) {}

} // namespace kpvc
