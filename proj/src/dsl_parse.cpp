#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "circdiv/dsl.hpp"
#include "circdiv/errors.hpp"

namespace circdiv::dsl {

namespace {

constexpr std::array<std::string_view, 10> kKeywords = {
    "point", "line", "circle", "intersect", "divide", "angle", "radius", "pick", "pi", "sqrt3",
};

struct Token {
  enum class Kind { ident, number, lparen, rparen, comma, equals, plus, minus, end };
  Kind kind;
  std::string_view text;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.kind == Token::Kind::end) return "end of line";
  return "'" + std::string(t.text) + "'";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto single = [&](Token::Kind kind) {
      out.push_back({kind, line.substr(start, 1), start + 1});
      ++i;
    };
    if (ident_start(c)) {
      while (i < line.size() && ident_char(line[i])) ++i;
      out.push_back({Token::Kind::ident, line.substr(start, i - start), start + 1});
    } else if (digit(c) || (c == '.' && i + 1 < line.size() && digit(line[i + 1]))) {
      while (i < line.size() && digit(line[i])) ++i;
      if (i < line.size() && line[i] == '.') {
        ++i;
        while (i < line.size() && digit(line[i])) ++i;
      }
      if (i < line.size() && (line[i] == 'e' || line[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < line.size() && (line[j] == '+' || line[j] == '-')) ++j;
        if (j < line.size() && digit(line[j])) {
          i = j;
          while (i < line.size() && digit(line[i])) ++i;
        }
      }
      out.push_back({Token::Kind::number, line.substr(start, i - start), start + 1});
    } else if (c == '(') {
      single(Token::Kind::lparen);
    } else if (c == ')') {
      single(Token::Kind::rparen);
    } else if (c == ',') {
      single(Token::Kind::comma);
    } else if (c == '=') {
      single(Token::Kind::equals);
    } else if (c == '+') {
      single(Token::Kind::plus);
    } else if (c == '-') {
      single(Token::Kind::minus);
    } else {
      throw ParseError(line_no, start + 1,
                       "unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::Kind::end, {}, line.size() + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no)
      : tokens_(std::move(tokens)), line_(line_no) {}

  Statement statement() {
    const Token& head = peek();
    if (head.kind != Token::Kind::ident) fail(head, "expected a statement keyword");
    Statement st = dispatch(next());
    if (peek().kind != Token::Kind::end) fail(peek(), "unexpected " + describe(peek()));
    return st;
  }

 private:
  Statement dispatch(const Token& head) {
    if (head.text == "point") return point_def();
    if (head.text == "line") return line_def();
    if (head.text == "circle") return circle_def();
    if (head.text == "intersect") return intersect_def();
    if (head.text == "divide") return divide_def();
    if (head.text == "angle") return angle_def();
    fail(head, "unknown statement " + describe(head));
  }

  const Token& peek() const { return tokens_[pos_]; }

  const Token& next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::end) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(line_, at.column, message);
  }

  void expect(Token::Kind kind, std::string_view what) {
    if (peek().kind != kind) fail(peek(), "expected " + std::string(what) + ", found " + describe(peek()));
    next();
  }

  bool at_word(std::string_view word) const {
    return peek().kind == Token::Kind::ident && peek().text == word;
  }

  std::string name() {
    const Token& t = peek();
    if (t.kind != Token::Kind::ident) fail(t, "expected a name, found " + describe(t));
    if (is_keyword(t.text)) fail(t, describe(t) + " is a reserved word");
    next();
    return std::string(t.text);
  }

  Number number() {
    bool negative = false;
    if (peek().kind == Token::Kind::minus || peek().kind == Token::Kind::plus) {
      negative = next().kind == Token::Kind::minus;
    }
    const Token& t = peek();
    if (t.kind == Token::Kind::ident && t.text == "pi") {
      next();
      return Number::pi(negative);
    }
    if (t.kind == Token::Kind::ident && t.text == "sqrt3") {
      next();
      return Number::sqrt3(negative);
    }
    if (t.kind != Token::Kind::number) fail(t, "expected a number, found " + describe(t));
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || !std::isfinite(value)) {
      fail(t, "number " + describe(t) + " is out of range");
    }
    next();
    return Number::decimal(negative ? -value : value);
  }

  long integer() {
    const Token& t = peek();
    const bool all_digits =
        t.kind == Token::Kind::number &&
        std::all_of(t.text.begin(), t.text.end(), [](char c) { return digit(c); });
    if (!all_digits) fail(t, "expected a non-negative integer, found " + describe(t));
    long value = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc()) fail(t, "integer " + describe(t) + " is out of range");
    next();
    return value;
  }

  PointDef point_def() {
    PointDef d;
    d.name = name();
    expect(Token::Kind::equals, "'='");
    expect(Token::Kind::lparen, "'('");
    d.x = number();
    expect(Token::Kind::comma, "','");
    d.y = number();
    expect(Token::Kind::rparen, "')'");
    return d;
  }

  LineDef line_def() {
    LineDef d;
    d.name = name();
    expect(Token::Kind::equals, "'='");
    d.a = name();
    d.b = name();
    return d;
  }

  Statement circle_def() {
    std::string n = name();
    expect(Token::Kind::equals, "'='");
    std::string center = name();
    if (at_word("radius")) {
      next();
      CircleRadDef d{std::move(n), std::move(center), {}, {}};
      d.rad_from = name();
      d.rad_to = name();
      return d;
    }
    return CircleDef{std::move(n), std::move(center), name()};
  }

  IntersectDef intersect_def() {
    IntersectDef d;
    d.names.push_back(name());
    if (peek().kind != Token::Kind::equals) d.names.push_back(name());
    expect(Token::Kind::equals, "'='");
    d.a = name();
    d.b = name();
    d.pick.kind = d.names.size() == 2 ? Selector::Kind::both : Selector::Kind::first;
    if (at_word("pick")) {
      next();
      const Token& sel = peek();
      d.pick = selector();
      const bool both = d.pick.kind == Selector::Kind::both;
      if (both && d.names.size() != 2) fail(sel, "selector 'both' needs two names");
      if (!both && d.names.size() == 2) fail(sel, "two names need selector 'both'");
    }
    return d;
  }

  Selector selector() {
    const Token& t = peek();
    if (t.kind != Token::Kind::ident) fail(t, "expected a selector, found " + describe(t));
    Selector s;
    if (t.text == "first") {
      s.kind = Selector::Kind::first;
    } else if (t.text == "second") {
      s.kind = Selector::Kind::second;
    } else if (t.text == "upper") {
      s.kind = Selector::Kind::upper;
    } else if (t.text == "lower") {
      s.kind = Selector::Kind::lower;
    } else if (t.text == "left") {
      s.kind = Selector::Kind::left;
    } else if (t.text == "right") {
      s.kind = Selector::Kind::right;
    } else if (t.text == "both") {
      s.kind = Selector::Kind::both;
    } else if (t.text == "near") {
      next();
      s.kind = Selector::Kind::near;
      s.near = name();
      return s;
    } else {
      fail(t, "unknown selector " + describe(t));
    }
    next();
    return s;
  }

  DivideDef divide_def() {
    DivideDef d;
    d.name = name();
    expect(Token::Kind::equals, "'='");
    d.from = name();
    d.to = name();
    d.n = integer();
    d.k = integer();
    return d;
  }

  AngleDef angle_def() {
    AngleDef d;
    d.name = name();
    expect(Token::Kind::equals, "'='");
    d.vertex = name();
    d.p = name();
    d.q = name();
    return d;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

}  // namespace

Number Number::pi(bool negative) {
  return {Kind::pi, negative ? -std::numbers::pi : std::numbers::pi};
}

Number Number::sqrt3(bool negative) {
  return {Kind::sqrt3, negative ? -std::numbers::sqrt3 : std::numbers::sqrt3};
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

Program parse(std::string_view text) {
  Program program;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);

    auto tokens = tokenize(line, line_no);
    if (tokens.size() > 1) {
      program.statements.push_back(LineParser(std::move(tokens), line_no).statement());
    }
    start = end + 1;
  }
  if (program.statements.empty()) throw ParseError(1, 1, "program has no statements");
  return program;
}

}  // namespace circdiv::dsl
