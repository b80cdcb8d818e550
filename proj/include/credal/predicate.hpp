// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cctype>
#include <cstdlib>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "credal/errors.hpp"
#include "credal/grid.hpp"
#include "credal/hypothesis.hpp"

namespace credal {

/// Boolean predicate over a grid point's coordinates, parsed from a small
/// expression language: comparisons between coordinates (x0, x1, ...) and
/// numeric literals, combined with !, &&, || (or not/and/or) and parentheses.
/// Examples: "x0 == 0.5", "x0 <= x1", "x0 > 0.2 && !(x1 < 0)".
class coordinate_predicate {
public:
  static coordinate_predicate parse(std::string_view text) {
    parser p(text);
    auto fn = p.parse_expression();
    p.skip_spaces();
    if (!p.done())
      throw config_error("trailing input in predicate '" + std::string(text) +
                         "'");
    return coordinate_predicate(std::string(text), std::move(fn));
  }

  bool evaluate(std::span<const double> coords) const { return fn_(coords); }

  const std::string& text() const { return text_; }

private:
  using bool_fn = std::function<bool(std::span<const double>)>;
  using value_fn = std::function<double(std::span<const double>)>;

  struct parser {
    std::string_view input;
    std::size_t pos = 0;

    explicit parser(std::string_view text) : input(text) {}

    bool done() const { return pos >= input.size(); }
    char peek() const { return done() ? '\0' : input[pos]; }

    void skip_spaces() {
      while (!done() && std::isspace(static_cast<unsigned char>(input[pos])))
        ++pos;
    }

    bool eat(std::string_view token) {
      skip_spaces();
      if (input.substr(pos, token.size()) != token) return false;
      // Word tokens must not run into an identifier tail.
      if (std::isalpha(static_cast<unsigned char>(token[0]))) {
        const std::size_t next = pos + token.size();
        if (next < input.size() &&
            (std::isalnum(static_cast<unsigned char>(input[next])) ||
             input[next] == '_'))
          return false;
      }
      pos += token.size();
      return true;
    }

    [[noreturn]] void fail(const std::string& what) {
      throw config_error("predicate parse error at position " +
                         std::to_string(pos) + ": " + what);
    }

    bool_fn parse_expression() { return parse_or(); }

    bool_fn parse_or() {
      bool_fn lhs = parse_and();
      while (eat("||") || eat("or")) {
        bool_fn rhs = parse_and();
        lhs = [l = std::move(lhs), r = std::move(rhs)](auto c) {
          return l(c) || r(c);
        };
      }
      return lhs;
    }

    bool_fn parse_and() {
      bool_fn lhs = parse_unary();
      while (eat("&&") || eat("and")) {
        bool_fn rhs = parse_unary();
        lhs = [l = std::move(lhs), r = std::move(rhs)](auto c) {
          return l(c) && r(c);
        };
      }
      return lhs;
    }

    bool_fn parse_unary() {
      if (eat("!") || eat("not")) {
        bool_fn inner = parse_unary();
        return [f = std::move(inner)](auto c) { return !f(c); };
      }
      return parse_primary();
    }

    bool_fn parse_primary() {
      skip_spaces();
      if (peek() == '(') {
        ++pos;
        bool_fn inner = parse_expression();
        skip_spaces();
        if (peek() != ')') fail("expected ')'");
        ++pos;
        return inner;
      }
      return parse_comparison();
    }

    bool_fn parse_comparison() {
      value_fn lhs = parse_operand();
      skip_spaces();
      std::function<bool(double, double)> cmp;
      if (eat("==")) cmp = [](double a, double b) { return a == b; };
      else if (eat("!=")) cmp = [](double a, double b) { return a != b; };
      else if (eat("<=")) cmp = [](double a, double b) { return a <= b; };
      else if (eat(">=")) cmp = [](double a, double b) { return a >= b; };
      else if (eat("<")) cmp = [](double a, double b) { return a < b; };
      else if (eat(">")) cmp = [](double a, double b) { return a > b; };
      else fail("expected a comparison operator");
      value_fn rhs = parse_operand();
      return [l = std::move(lhs), r = std::move(rhs), cmp](auto c) {
        return cmp(l(c), r(c));
      };
    }

    value_fn parse_operand() {
      skip_spaces();
      if (peek() == 'x') {
        const std::size_t start = ++pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(input[pos])))
          ++pos;
        if (pos == start) fail("expected a coordinate index after 'x'");
        const std::size_t index =
            std::strtoull(std::string(input.substr(start, pos - start)).c_str(),
                          nullptr, 10);
        return [index](std::span<const double> c) {
          if (index >= c.size())
            throw evaluation_error("grid point has no coordinate x" +
                                   std::to_string(index));
          return c[index];
        };
      }
      // Numeric literal.
      const std::size_t start = pos;
      if (peek() == '+' || peek() == '-') ++pos;
      bool digits = false;
      while (!done() && (std::isdigit(static_cast<unsigned char>(input[pos])) ||
                         input[pos] == '.')) {
        digits = digits || std::isdigit(static_cast<unsigned char>(input[pos]));
        ++pos;
      }
      if (!digits) fail("expected a number or a coordinate");
      const double value = std::strtod(
          std::string(input.substr(start, pos - start)).c_str(), nullptr);
      return [value](std::span<const double>) { return value; };
    }
  };

  coordinate_predicate(std::string text, bool_fn fn)
      : text_(std::move(text)), fn_(std::move(fn)) {}

  std::string text_;
  bool_fn fn_;
};

/// The hypothesis of all grid points satisfying a coordinate predicate.
inline hypothesis hypothesis_from_predicate(const parameter_grid& grid,
                                            const coordinate_predicate& pred) {
  hypothesis h(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (pred.evaluate(grid.point(i).coord)) h.add(i);
  return h;
}

} // namespace credal
