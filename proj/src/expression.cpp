#include "leavitt/expression.hpp"

#include <cctype>

#include "leavitt/errors.hpp"

namespace leavitt {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const LeavittAlgebra& algebra, std::string_view text) : algebra_(algebra), text_(text) {}

  RawElement parse() {
    RawElement out;
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    term(negate, out);
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      term(c == '-', out);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  std::string_view coefficient_token() {
    std::size_t start = pos_;
    if (peek() == '(') {
      while (!at_end() && peek() != ')') ++pos_;
      if (at_end()) fail("unterminated tuple coefficient");
      ++pos_;
      return text_.substr(start, pos_ - start);
    }
    auto digits = [&] {
      std::size_t s = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (s == pos_) fail("expected digits");
    };
    digits();
    if (peek() == '/') {
      ++pos_;
      digits();
    }
    return text_.substr(start, pos_ - start);
  }

  void term(bool negate, RawElement& out) {
    skip_ws();
    RawTerm t{algebra_.ring().one(), {}};
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
      std::size_t at = pos_;
      auto tok = coefficient_token();
      try {
        t.coefficient = algebra_.ring().parse_value(tok);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), 1, at + 1);
      }
      if (negate) t.coefficient = -t.coefficient;
      skip_ws();
      if (peek() != '*') {
        // Bare coefficient: c * 1 = sum over vertices of c * v.
        for (VertexId v = 0; v < algebra_.graph().vertex_count(); ++v)
          out.push_back(RawTerm{t.coefficient, {Generator{Generator::Kind::vertex, v}}});
        return;
      }
      ++pos_;
    } else if (negate) {
      t.coefficient = -t.coefficient;
    }
    t.word.push_back(factor());
    while (true) {
      skip_ws();
      if (peek() != '.') break;
      ++pos_;
      t.word.push_back(factor());
    }
    out.push_back(std::move(t));
  }

  Generator factor() {
    skip_ws();
    std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a vertex or edge name");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    bool ghost = false;
    if (text_.substr(pos_, 2) == "^*") {
      ghost = true;
      pos_ += 2;
    }
    const Graph& g = algebra_.graph();
    if (auto e = g.find_edge(name)) return Generator{ghost ? Generator::Kind::ghost : Generator::Kind::edge, *e};
    if (auto v = g.find_vertex(name)) {
      if (ghost) throw ParseError("'^*' applied to vertex '" + std::string(name) + "'", 1, start + 1);
      return Generator{Generator::Kind::vertex, *v};
    }
    throw ParseError("unknown generator '" + std::string(name) + "'", 1, start + 1);
  }

  const LeavittAlgebra& algebra_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RawElement parse_expression(const LeavittAlgebra& algebra, std::string_view text) {
  return ExpressionParser(algebra, text).parse();
}

NormalElement parse_element(const LeavittAlgebra& algebra, std::string_view text) {
  return algebra.normal_form(parse_expression(algebra, text));
}

}  // namespace leavitt
