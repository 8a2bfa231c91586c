#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "axcheck/formula.hpp"

namespace axcheck::detail {

enum class Tok {
  end,
  ident,
  number,
  literal,  // #k
  lparen,
  rparen,
  lbrace,
  rbrace,
  comma,
  colon,
  semicolon,
  dot,
  defines,  // :=
  eq,
  neq,
  tilde,
  amp,
  bar,
  arrow,
  iff,
  kw_forall,
  kw_exists,
  kw_exists_unique,
  kw_in,
  kw_notin,
  kw_true,
  kw_false,
  kw_system,
  kw_vars,
  kw_func,
  kw_define,
  kw_axiom,
};

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::uint64_t number = 0;
  SourceLocation loc;
};

std::string describe(const Token& token);
std::string describe(Tok kind);

// Throws ParseError on malformed input (bad characters, invalid UTF-8,
// oversized numbers).
std::vector<Token> tokenize(std::string_view text);

}  // namespace axcheck::detail
