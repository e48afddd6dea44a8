#include "skw/dsl.hpp"

#include <cctype>
#include <limits>

#include "skw/error.hpp"

namespace skw {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::map<std::string, Point>& points, const Curve& E)
      : s_(text), points_(points), E_(E) {}

  Divisor parse() {
    Divisor out;
    skip();
    if (at_end()) fail("empty divisor expression");
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    term(out, sign);
    for (skip(); !at_end(); skip()) {
      char op = peek();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      ++pos_;
      term(out, op == '+' ? 1 : -1);
    }
    return out;
  }

 private:
  void term(Divisor& out, int sign) {
    skip();
    std::int64_t mult = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      mult = number();
      skip();
      if (at_end() || peek() != '*') fail("expected '*' after multiplicity");
      ++pos_;
      skip();
    }
    std::size_t start = pos_;
    std::string name = identifier();
    auto it = points_.find(name);
    if (it == points_.end()) throw Error(Errc::UnknownPoint, "unknown point '" + name + "' at column " + std::to_string(start + 1));
    Point p = it->second;
    skip();
    if (!at_end() && peek() == '@') {
      ++pos_;
      skip();
      int tsign = 1;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        tsign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      p = E_.sigma_pow(p, tsign * number());
    }
    out.add_term(p, sign * mult);
  }

  std::int64_t number() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail("number too large");
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  std::string identifier() {
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected a point name");
    std::size_t b = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return s_.substr(b, pos_ - b);
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(static_cast<int>(pos_ + 1), msg + " at column " + std::to_string(pos_ + 1));
  }

  const std::string& s_;
  const std::map<std::string, Point>& points_;
  const Curve& E_;
  std::size_t pos_ = 0;
};

}  // namespace

Divisor parse_divisor(const std::string& expr, const std::map<std::string, Point>& points, const Curve& E) {
  return Parser(expr, points, E).parse();
}

}  // namespace skw
