#include "socle/expr.hpp"

#include <cctype>
#include <string>

#include "socle/error.hpp"

namespace socle::expr {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Sum parse_all() {
    Sum s = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  long long parse_integer() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000LL) fail("integer too large");
      ++pos_;
    }
    return v;
  }

  Sum parse_sum() {
    Sum s;
    bool negative = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negative = (c == '-');
      ++pos_;
    }
    s.terms.push_back(parse_term(negative));
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      s.terms.push_back(parse_term(c == '-'));
    }
    return s;
  }

  Term parse_term(bool negative) {
    Term t;
    t.negative = negative;
    t.factors.push_back(parse_factor());
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        t.factors.push_back(parse_factor());
      } else if (starts_factor(c)) {
        t.factors.push_back(parse_factor());
      } else {
        break;
      }
    }
    return t;
  }

  Factor parse_factor() {
    Factor f;
    char c = peek();
    if (c == '(') {
      ++pos_;
      f.kind = Factor::Kind::Paren;
      f.inner = std::make_shared<const Sum>(parse_sum());
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      f.kind = Factor::Kind::Integer;
      f.value = parse_integer();
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      f.kind = Factor::Kind::Symbol;
      f.letter = c;
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        long long idx = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          idx = idx * 10 + (text_[pos_] - '0');
          if (idx > 1'000'000) fail("symbol index too large");
          ++pos_;
        }
        f.index = static_cast<int>(idx);
      }
    } else {
      fail("expected factor");
    }
    if (peek() == '^') {
      ++pos_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      f.exponent = parse_integer();
      if (neg) f.exponent = -f.exponent;
    }
    return f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Sum parse(std::string_view text) { return Parser(text).parse_all(); }

std::string trim(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(text.substr(start)));
  return out;
}

}  // namespace socle::expr
