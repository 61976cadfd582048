#include "dist3/parser.hpp"

#include <cctype>

namespace dist3 {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  QQPoly run() {
    QQPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  QQPoly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = get() == '-';
    QQPoly p = term();
    if (negate) p = -p;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      get();
      QQPoly q = term();
      p = c == '+' ? p + q : p - q;
    }
    return p;
  }

  QQPoly term() {
    QQPoly p = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      get();
      p = p * factor();
    }
    return p;
  }

  QQPoly factor() {
    QQPoly base = atom();
    skip_ws();
    if (peek() != '^') return base;
    get();
    skip_ws();
    if (!is_digit_c(peek())) fail("expected exponent");
    unsigned long n = natural_small();
    QQPoly p = QQPoly::constant(field_, 1);
    for (unsigned long i = 0; i < n; ++i) p = p * base;
    return p;
  }

  QQPoly atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      QQPoly p = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      get();
      return p;
    }
    if (c == 'x') return variable();
    if (is_digit_c(c)) return rational();
    if (is_alpha_c(c)) fail("unknown variable name");
    fail("expected a variable, number, or '('");
    return {};
  }

  QQPoly variable() {
    std::size_t start = pos_;
    get();  // 'x'
    if (!is_digit_c(peek())) fail_at("unknown variable name", start);
    std::string digits = digit_run();
    if (digits.size() != 1 || digits[0] > '3')
      fail_at("unknown variable name x" + digits, start);
    return QQPoly::variable(field_, digits[0] - '0');
  }

  QQPoly rational() {
    mpz_class num(digit_run());
    skip_ws();
    if (peek() == '/') {
      get();
      skip_ws();
      std::size_t dpos = pos_;
      if (!is_digit_c(peek())) fail("expected denominator");
      mpz_class den(digit_run());
      if (den == 0) fail_at("zero denominator", dpos);
      mpq_class q(num, den);
      q.canonicalize();
      return QQPoly::constant(field_, q);
    }
    return QQPoly::constant(field_, mpq_class(num));
  }

  std::string digit_run() {
    std::string s;
    while (is_digit_c(peek())) s += get();
    return s;
  }

  unsigned long natural_small() {
    std::size_t start = pos_;
    std::string s = digit_run();
    if (s.size() > 4) fail_at("exponent too large", start);
    return std::stoul(s);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  static bool is_digit_c(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool is_alpha_c(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) const {
    throw ParseError(msg, pos);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  RationalField field_;
};

}  // namespace

QQPoly parse_polynomial(const std::string& text) { return Parser(text).run(); }

}  // namespace dist3
