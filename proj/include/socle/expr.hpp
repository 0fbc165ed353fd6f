#pragma once

// Tokenizer and parser for the small polynomial-expression language shared by
// the field literal, algebra literal, group word and substitution grammars:
//
//   sum    := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*          juxtaposition multiplies
//   factor := (integer | symbol | '(' sum ')') ['^' ['-'] integer]
//   symbol := letter digits*                   e.g. t, g3, x12
//
// Consumers decide which symbols are meaningful.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace socle::expr {

struct Sum;

struct Factor {
  enum class Kind { Integer, Symbol, Paren };
  Kind kind = Kind::Integer;
  long long value = 0;   // Integer
  char letter = 0;       // Symbol
  int index = 0;         // Symbol; 0 when no digits follow the letter
  std::shared_ptr<const Sum> inner;  // Paren
  long long exponent = 1;
};

struct Term {
  bool negative = false;
  std::vector<Factor> factors;
};

struct Sum {
  std::vector<Term> terms;
};

/// Throws ParseError with the offending position.
Sum parse(std::string_view text);

/// Splits on `sep` at parenthesis depth zero, trimming whitespace.
std::vector<std::string> split_top_level(std::string_view text, char sep);

std::string trim(std::string_view text);

}  // namespace socle::expr
