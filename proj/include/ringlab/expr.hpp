#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/error.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Parsed ring expression. One node type; the fields used depend on kind.
///
///   zmod    Zmod(n)              number = n
///   prod    prod(a, b, ...)      children = factors
///   gring   gring(R, C2*C3)      children = {R}, integers = group factors
///   matrix  M(k, R)              number = k, children = {R}
///   polyq   polyq(R, [c0,...])   children = {R}, integers = coefficients
///   series  series(R, m)         number = m, children = {R}
///   quot    quot(R, [i,...])     children = {R}, integers = element indices
struct RingExpr {
  enum class Kind { zmod, prod, gring, matrix, polyq, series, quot };

  Kind kind = Kind::zmod;
  SourceSpan span;
  std::int64_t number = 0;
  std::vector<RingExpr> children;
  std::vector<std::int64_t> integers;
  /// Spans of the entries of `integers`, for positioned diagnostics.
  std::vector<SourceSpan> integer_spans;
  SourceSpan number_span;
};

std::string_view to_string(RingExpr::Kind kind) noexcept;

/// Throws ParseError (lexical, syntax or arity) with line, column and the
/// set of tokens that would have been accepted.
RingExpr parse_ring_expr(std::string_view text);

/// Canonical text: no whitespace except after commas.
std::string print_ring_expr(const RingExpr& e);

/// Equality of kinds and parameters, ignoring source spans.
bool structurally_equal(const RingExpr& a, const RingExpr& b);

/// Builds the ring. Constructor failures are rethrown as
/// PositionedConstructionError pointing at the offending node.
Ring build_ring(const RingExpr& e);

/// parse_ring_expr followed by build_ring.
Ring parse_ring(std::string_view text);

}  // namespace ringlab
