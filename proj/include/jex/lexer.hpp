#pragma once

#include <deque>
#include <stdexcept>
#include <string>

namespace jex {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int line_, int col_, const std::string& msg)
      : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_), col(col_) {}
};

enum class Tok {
  Ident,     // lowercase word; may contain interior hyphens (builder names)
  Ex,        // Ex / ∃
  OCap,      // O (lax circle)
  Let, In,
  Def, Check, Normalize, Trace, Translate, Derive, Derivation,
  LParen, RParen,
  LBrack, RBrack, RBrackJ,
  Lambda, LambdaJ,  // \ λ, \j λj
  AtJ,              // @j
  Dot, Colon, ColonColon, Equals, Comma,
  Arrow, Lolli, FatArrow,
  String,           // "..." (derivation fixtures)
  End,
};

struct Token {
  Tok tok;
  std::string text;
  int line, col;
};

// On-demand tokenizer. Comments run from -- to end of line; LF and CRLF both
// end lines; the unicode forms ∃ → λ ⊸ ⟨ ⟩ lex like their ascii spellings.
class Lexer {
 public:
  explicit Lexer(std::string source);

  const Token& peek(size_t ahead = 0);
  Token next();

  // With a '(' as the next token, consumes and returns the raw balanced
  // parenthesis span, including the outer parens.
  std::string rawBalanced();

 private:
  Token lex();
  std::string src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  std::deque<Token> buffer_;

  char cur() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char at(size_t off) const { return pos_ + off < src_.size() ? src_[pos_ + off] : '\0'; }
  void advance(size_t n = 1);
  bool eatUtf8(const char* seq);
};

}  // namespace jex
