#include "ringlab/expr.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>

#include "ringlab/constructors.hpp"

namespace ringlab {

std::string_view to_string(RingExpr::Kind kind) noexcept {
  switch (kind) {
    case RingExpr::Kind::zmod: return "Zmod";
    case RingExpr::Kind::prod: return "prod";
    case RingExpr::Kind::gring: return "gring";
    case RingExpr::Kind::matrix: return "M";
    case RingExpr::Kind::polyq: return "polyq";
    case RingExpr::Kind::series: return "series";
    case RingExpr::Kind::quot: return "quot";
  }
  return "?";
}

namespace {

// ---- lexer ------------------------------------------------------------------

enum class Tok { ident, integer, lparen, rparen, lbracket, rbracket, comma, star, minus, plus, end };

std::string describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::integer: return "integer";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::comma: return "','";
    case Tok::star: return "'*'";
    case Tok::minus: return "'-'";
    case Tok::plus: return "'+'";
    case Tok::end: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::end;
  std::string_view text;
  SourceSpan span;
  std::uint64_t value = 0;  // magnitude of an integer token
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.span = here(0);
      if (pos_ == src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) advance();
        t.kind = Tok::ident;
        t.text = src_.substr(start, pos_ - start);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
        t.kind = Tok::integer;
        t.text = src_.substr(start, pos_ - start);
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
        if (ec != std::errc{} || t.value > std::uint64_t(std::numeric_limits<std::int64_t>::max())) {
          t.span.length = t.text.size();
          throw ParseError(ParseError::Kind::lexical, t.span, "integer literal out of range");
        }
      } else {
        switch (c) {
          case '(': t.kind = Tok::lparen; break;
          case ')': t.kind = Tok::rparen; break;
          case '[': t.kind = Tok::lbracket; break;
          case ']': t.kind = Tok::rbracket; break;
          case ',': t.kind = Tok::comma; break;
          case '*': t.kind = Tok::star; break;
          case '-': t.kind = Tok::minus; break;
          case '+': t.kind = Tok::plus; break;
          default: {
            t.span.length = 1;
            std::string shown = std::isprint(static_cast<unsigned char>(c))
                                    ? std::string("'") + c + "'"
                                    : "byte " + std::to_string(static_cast<unsigned char>(c));
            throw ParseError(ParseError::Kind::lexical, t.span, "unexpected character " + shown);
          }
        }
        t.text = src_.substr(pos_, 1);
        advance();
      }
      t.span.length = t.text.size();
      out.push_back(t);
    }
  }

 private:
  SourceSpan here(std::size_t length) const { return SourceSpan{pos_, length, line_, column_}; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// ---- parser -----------------------------------------------------------------

const std::vector<std::string>& constructor_names() {
  static const std::vector<std::string> names{"Zmod", "prod", "gring", "M",
                                              "polyq", "series", "quot"};
  return names;
}

std::optional<RingExpr::Kind> constructor_kind(std::string_view name) {
  using K = RingExpr::Kind;
  if (name == "Zmod") return K::zmod;
  if (name == "prod") return K::prod;
  if (name == "gring") return K::gring;
  if (name == "M") return K::matrix;
  if (name == "polyq") return K::polyq;
  if (name == "series") return K::series;
  if (name == "quot") return K::quot;
  return std::nullopt;
}

std::size_t arity(RingExpr::Kind k) { return k == RingExpr::Kind::zmod ? 1 : 2; }

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  RingExpr parse() {
    RingExpr e = expr();
    if (peek().kind != Tok::end) fail(peek(), "trailing input after expression", {describe(Tok::end)});
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& at, const std::string& msg, std::vector<std::string> expected,
                         ParseError::Kind kind = ParseError::Kind::syntax) const {
    SourceSpan where = at.span;
    if (where.length == 0) where.length = 1;
    throw ParseError(kind, where, msg, std::move(expected));
  }

  std::string found(const Token& t) const {
    if (t.kind == Tok::end) return "end of input";
    return describe(t.kind) + " '" + std::string(t.text) + "'";
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) fail(peek(), "unexpected " + found(peek()), {describe(kind)});
    return take();
  }

  // Separator between arguments; ')' here means too few arguments.
  void separator(const RingExpr& node, std::size_t given) {
    if (peek().kind == Tok::rparen) {
      fail(peek(),
           std::string(to_string(node.kind)) + " takes " + std::to_string(arity(node.kind)) +
               " arguments, got " + std::to_string(given),
           {describe(Tok::comma)}, ParseError::Kind::arity);
    }
    expect(Tok::comma);
  }

  // Closing parenthesis; ',' here means too many arguments.
  void close(RingExpr& node, const Token& open_name) {
    if (peek().kind == Tok::comma) {
      const std::size_t n = arity(node.kind);
      fail(peek(),
           std::string(to_string(node.kind)) + " takes " + std::to_string(n) +
               (n == 1 ? " argument" : " arguments"),
           {describe(Tok::rparen)}, ParseError::Kind::arity);
    }
    const Token& r = expect(Tok::rparen);
    node.span = open_name.span;
    node.span.length = r.span.offset + r.span.length - open_name.span.offset;
  }

  std::int64_t integer(SourceSpan* span = nullptr) {
    const Token& first = peek();
    bool negative = false;
    if (first.kind == Tok::minus || first.kind == Tok::plus) {
      negative = first.kind == Tok::minus;
      take();
    }
    if (peek().kind != Tok::integer) {
      fail(peek(), "unexpected " + found(peek()), {describe(Tok::integer)});
    }
    const Token& digits = take();
    if (span) {
      *span = first.span;
      span->length = digits.span.offset + digits.span.length - first.span.offset;
    }
    const auto v = static_cast<std::int64_t>(digits.value);
    return negative ? -v : v;
  }

  void integer_list(RingExpr& node) {
    expect(Tok::lbracket);
    for (;;) {
      SourceSpan s;
      node.integers.push_back(integer(&s));
      node.integer_spans.push_back(s);
      if (peek().kind == Tok::rbracket) break;
      if (peek().kind != Tok::comma) {
        fail(peek(), "unexpected " + found(peek()), {describe(Tok::comma), describe(Tok::rbracket)});
      }
      take();
    }
    take();
  }

  void group(RingExpr& node) {
    for (;;) {
      const Token& c = peek();
      if (c.kind != Tok::ident || c.text != "C") fail(c, "unexpected " + found(c), {"'C'"});
      take();
      SourceSpan s;
      node.integers.push_back(integer(&s));
      s.length += s.offset - c.span.offset;
      s.offset = c.span.offset;
      s.line = c.span.line;
      s.column = c.span.column;
      node.integer_spans.push_back(s);
      if (peek().kind != Tok::star) break;
      take();
    }
  }

  RingExpr expr() {
    const Token& name = peek();
    if (name.kind != Tok::ident) {
      std::vector<std::string> expected;
      for (const auto& n : constructor_names()) expected.push_back("'" + n + "'");
      fail(name, "unexpected " + found(name) + ", expected a ring constructor", expected);
    }
    const auto kind = constructor_kind(name.text);
    if (!kind) {
      std::vector<std::string> expected;
      for (const auto& n : constructor_names()) expected.push_back("'" + n + "'");
      fail(name, "unknown ring constructor '" + std::string(name.text) + "'", expected);
    }
    take();
    expect(Tok::lparen);
    RingExpr node;
    node.kind = *kind;
    using K = RingExpr::Kind;
    switch (*kind) {
      case K::zmod:
        node.number = integer(&node.number_span);
        break;
      case K::prod:
        node.children.push_back(expr());
        while (peek().kind == Tok::comma) {
          take();
          node.children.push_back(expr());
        }
        if (peek().kind != Tok::rparen) {
          fail(peek(), "unexpected " + found(peek()), {describe(Tok::comma), describe(Tok::rparen)});
        }
        break;
      case K::gring:
        node.children.push_back(expr());
        separator(node, 1);
        group(node);
        break;
      case K::matrix:
        node.number = integer(&node.number_span);
        separator(node, 1);
        node.children.push_back(expr());
        break;
      case K::polyq:
      case K::quot:
        node.children.push_back(expr());
        separator(node, 1);
        integer_list(node);
        break;
      case K::series:
        node.children.push_back(expr());
        separator(node, 1);
        node.number = integer(&node.number_span);
        break;
    }
    close(node, name);
    return node;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---- printer ----------------------------------------------------------------

void print(const RingExpr& e, std::string& out) {
  using K = RingExpr::Kind;
  auto list = [&](const std::vector<std::int64_t>& xs) {
    out += '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(xs[i]);
    }
    out += ']';
  };
  out += to_string(e.kind);
  out += '(';
  switch (e.kind) {
    case K::zmod: out += std::to_string(e.number); break;
    case K::prod:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += ',';
        print(e.children[i], out);
      }
      break;
    case K::gring:
      print(e.children.front(), out);
      out += ',';
      for (std::size_t i = 0; i < e.integers.size(); ++i) {
        if (i) out += '*';
        out += 'C' + std::to_string(e.integers[i]);
      }
      break;
    case K::matrix:
      out += std::to_string(e.number) + ',';
      print(e.children.front(), out);
      break;
    case K::polyq:
    case K::quot:
      print(e.children.front(), out);
      out += ',';
      list(e.integers);
      break;
    case K::series:
      print(e.children.front(), out);
      out += ',' + std::to_string(e.number);
      break;
  }
  out += ')';
}

// ---- builder ----------------------------------------------------------------

template <class F>
Ring at(const SourceSpan& where, F&& build) {
  try {
    return build();
  } catch (const PositionedConstructionError&) {
    throw;
  } catch (const ConstructionError& e) {
    throw PositionedConstructionError(where, e.what());
  } catch (const UnsupportedError& e) {
    throw PositionedConstructionError(where, e.what());
  } catch (const PreconditionError& e) {
    throw PositionedConstructionError(where, e.what());
  }
}

Index positive_index(const SourceSpan& where, std::int64_t v, const char* what) {
  if (v < 1 || v > std::int64_t(std::numeric_limits<Index>::max())) {
    throw PositionedConstructionError(where, std::string(what) + " must be a positive integer, got " +
                                                 std::to_string(v));
  }
  return static_cast<Index>(v);
}

}  // namespace

RingExpr parse_ring_expr(std::string_view text) {
  return Parser(Lexer(text).run()).parse();
}

std::string print_ring_expr(const RingExpr& e) {
  std::string out;
  print(e, out);
  return out;
}

bool structurally_equal(const RingExpr& a, const RingExpr& b) {
  if (a.kind != b.kind || a.number != b.number || a.integers != b.integers ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!structurally_equal(a.children[i], b.children[i])) return false;
  }
  return true;
}

Ring build_ring(const RingExpr& e) {
  using K = RingExpr::Kind;
  switch (e.kind) {
    case K::zmod:
      return at(e.number_span, [&] { return zmod(e.number); });
    case K::prod: {
      std::vector<Ring> factors;
      for (const auto& c : e.children) factors.push_back(build_ring(c));
      return at(e.span, [&] { return direct_product(factors); });
    }
    case K::gring: {
      const Ring base = build_ring(e.children.front());
      GroupSpec g;
      for (std::size_t i = 0; i < e.integers.size(); ++i) {
        const Index f = positive_index(e.integer_spans[i], e.integers[i], "cyclic group order");
        if (f > 1) g.factors.push_back(f);  // C1 is the trivial group
      }
      return at(e.span, [&] { return group_ring(base, g); });
    }
    case K::matrix: {
      const Index k = positive_index(e.number_span, e.number, "matrix dimension");
      const Ring base = build_ring(e.children.front());
      return at(e.span, [&] { return matrix_ring(k, base); });
    }
    case K::polyq: {
      const Ring base = build_ring(e.children.front());
      return at(e.span, [&] {
        return poly_quotient(base, MonicPoly::from_integers(base, e.integers));
      });
    }
    case K::series: {
      const Ring base = build_ring(e.children.front());
      const Index m = positive_index(e.number_span, e.number, "truncation order");
      return at(e.span, [&] { return truncated_series(base, m); });
    }
    case K::quot: {
      const Ring base = build_ring(e.children.front());
      std::vector<Element> gens;
      for (std::size_t i = 0; i < e.integers.size(); ++i) {
        const std::int64_t v = e.integers[i];
        if (v < 0 || v >= std::int64_t(base.size())) {
          throw PositionedConstructionError(
              e.integer_spans[i], "element index " + std::to_string(v) + " outside [0, " +
                                      std::to_string(base.size()) + ")");
        }
        gens.push_back(base.element(static_cast<Index>(v)));
      }
      return at(e.span, [&] {
        return quotient_ring(base, ideal_closure(base, gens)).ring;
      });
    }
  }
  throw std::logic_error("unhandled ring expression kind");
}

Ring parse_ring(std::string_view text) { return build_ring(parse_ring_expr(text)); }

}  // namespace ringlab
