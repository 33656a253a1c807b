#include "ringlab/error.hpp"

#include <sstream>

namespace ringlab {

namespace {

std::string render(ParseError::Kind kind, const SourceSpan& where, const std::string& message,
                   const std::vector<std::string>& expected) {
  std::ostringstream os;
  switch (kind) {
    case ParseError::Kind::lexical: os << "lexical error"; break;
    case ParseError::Kind::syntax: os << "syntax error"; break;
    case ParseError::Kind::arity: os << "arity error"; break;
  }
  os << " at line " << where.line << ", column " << where.column << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i != 0) os << (i + 1 == expected.size() ? " or " : ", ");
      os << expected[i];
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(Kind kind, SourceSpan where, std::string message,
                       std::vector<std::string> expected)
    : Error(render(kind, where, message, expected)),
      kind_(kind),
      where_(where),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

PositionedConstructionError::PositionedConstructionError(SourceSpan where,
                                                         const std::string& message)
    : ConstructionError("construction error at line " + std::to_string(where.line) +
                        ", column " + std::to_string(where.column) + ": " + message),
      where_(where) {}

}  // namespace ringlab
