#include "lexer.hpp"

#include <array>
#include <cctype>
#include <utility>

#include "axcheck/errors.hpp"

namespace axcheck::detail {
namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct UnicodeToken {
  std::string_view bytes;
  Tok kind;
};

constexpr std::array kUnicode{
    UnicodeToken{"∃!", Tok::kw_exists_unique},
    UnicodeToken{"∀", Tok::kw_forall},
    UnicodeToken{"∃", Tok::kw_exists},
    UnicodeToken{"¬", Tok::tilde},
    UnicodeToken{"∧", Tok::amp},
    UnicodeToken{"∨", Tok::bar},
    UnicodeToken{"→", Tok::arrow},
    UnicodeToken{"↔", Tok::iff},
    UnicodeToken{"≠", Tok::neq},
    UnicodeToken{"∈", Tok::kw_in},
    UnicodeToken{"∉", Tok::kw_notin},
};

struct Keyword {
  std::string_view text;
  Tok kind;
};

constexpr std::array kKeywords{
    Keyword{"forall", Tok::kw_forall}, Keyword{"exists", Tok::kw_exists},
    Keyword{"in", Tok::kw_in},         Keyword{"notin", Tok::kw_notin},
    Keyword{"true", Tok::kw_true},     Keyword{"false", Tok::kw_false},
    Keyword{"system", Tok::kw_system}, Keyword{"vars", Tok::kw_vars},
    Keyword{"func", Tok::kw_func},     Keyword{"define", Tok::kw_define},
    Keyword{"axiom", Tok::kw_axiom},
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.loc = {line_, column_};
      if (pos_ >= text_.size()) {
        out.push_back(std::move(t));
        return out;
      }
      scan(t);
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t bytes) {
    for (std::size_t i = 0; i < bytes && pos_ < text_.size(); ++i, ++pos_) {
      const auto c = static_cast<unsigned char>(text_[pos_]);
      if (c == '\n') {
        ++line_;
        column_ = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  void skip_space() {
    for (;;) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < text_.size() && peek() != '\n') advance(1);
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(const std::string& expected, const std::string& found) const {
    throw ParseError(line_, column_, expected, found);
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  void punct(Token& t, Tok kind, std::size_t bytes) {
    t.kind = kind;
    t.text = std::string(text_.substr(pos_, bytes));
    advance(bytes);
  }

  void scan(Token& t) {
    const char c = peek();
    if (ident_start(c)) return identifier(t);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::number;
      t.number = digits(t);
      return;
    }
    switch (c) {
      case '#':
        advance(1);
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("digits after '#'", found());
        t.kind = Tok::literal;
        t.number = digits(t);
        t.text = "#" + t.text;
        return;
      case '(': return punct(t, Tok::lparen, 1);
      case ')': return punct(t, Tok::rparen, 1);
      case '{': return punct(t, Tok::lbrace, 1);
      case '}': return punct(t, Tok::rbrace, 1);
      case ',': return punct(t, Tok::comma, 1);
      case ';': return punct(t, Tok::semicolon, 1);
      case '.': return punct(t, Tok::dot, 1);
      case '=': return punct(t, Tok::eq, 1);
      case '~': return punct(t, Tok::tilde, 1);
      case '&': return punct(t, Tok::amp, 1);
      case '|': return punct(t, Tok::bar, 1);
      case ':':
        return peek(1) == '=' ? punct(t, Tok::defines, 2) : punct(t, Tok::colon, 1);
      case '!':
        if (peek(1) == '=') return punct(t, Tok::neq, 2);
        break;
      case '-':
        if (peek(1) == '>') return punct(t, Tok::arrow, 2);
        break;
      case '<':
        if (peek(1) == '-' && peek(2) == '>') return punct(t, Tok::iff, 3);
        break;
      default:
        break;
    }
    for (const auto& u : kUnicode) {
      if (starts_with(u.bytes)) return punct(t, u.kind, u.bytes.size());
    }
    fail("a token", found());
  }

  std::string found() const {
    const auto c = static_cast<unsigned char>(peek());
    if (pos_ >= text_.size()) return "end of input";
    if (c >= 0x20 && c < 0x7F) return std::string("'") + static_cast<char>(c) + "'";
    static constexpr char kHex[] = "0123456789abcdef";
    return std::string("byte 0x") + kHex[c >> 4] + kHex[c & 0xF];
  }

  std::uint64_t digits(Token& t) {
    std::uint64_t value = 0;
    std::string text;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > 0xFFFFFFFFULL) fail("a number below 2^32", "an oversized number");
      text += peek();
      advance(1);
    }
    t.text = std::move(text);
    return value;
  }

  void identifier(Token& t) {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    std::string word(text_.substr(start, end - start));
    auto followed_by = [&](std::string_view suffix) {
      return text_.substr(end).starts_with(suffix) &&
             (end + suffix.size() >= text_.size() || !ident_char(text_[end + suffix.size()]));
    };
    t.kind = Tok::ident;
    if (word == "inter" && followed_by("-empty")) {
      word = "inter-empty";
    } else if (word == "exists" && followed_by("-unique")) {
      word = "exists-unique";
      t.kind = Tok::kw_exists_unique;
    } else if (word == "exists" && end < text_.size() && text_[end] == '!' &&
               (end + 1 >= text_.size() || text_[end + 1] != '=')) {
      word = "exists!";
      t.kind = Tok::kw_exists_unique;
    }
    if (t.kind == Tok::ident) {
      for (const auto& k : kKeywords) {
        if (k.text == word) t.kind = k.kind;
      }
    }
    advance(word.size());
    t.text = std::move(word);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t column_ = 1;
};

}  // namespace

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::end: return "end of input";
    case Tok::ident: return "identifier";
    case Tok::number: return "number";
    case Tok::literal: return "literal";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::comma: return "','";
    case Tok::colon: return "':'";
    case Tok::semicolon: return "';'";
    case Tok::dot: return "'.'";
    case Tok::defines: return "':='";
    case Tok::eq: return "'='";
    case Tok::neq: return "'!='";
    case Tok::tilde: return "'~'";
    case Tok::amp: return "'&'";
    case Tok::bar: return "'|'";
    case Tok::arrow: return "'->'";
    case Tok::iff: return "'<->'";
    case Tok::kw_forall: return "'forall'";
    case Tok::kw_exists: return "'exists'";
    case Tok::kw_exists_unique: return "'exists!'";
    case Tok::kw_in: return "'in'";
    case Tok::kw_notin: return "'notin'";
    case Tok::kw_true: return "'true'";
    case Tok::kw_false: return "'false'";
    case Tok::kw_system: return "'system'";
    case Tok::kw_vars: return "'vars'";
    case Tok::kw_func: return "'func'";
    case Tok::kw_define: return "'define'";
    case Tok::kw_axiom: return "'axiom'";
  }
  return "token";
}

std::string describe(const Token& token) {
  if (token.kind == Tok::end) return "end of input";
  return "'" + token.text + "'";
}

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace axcheck::detail
