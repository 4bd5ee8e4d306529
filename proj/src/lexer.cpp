#include "jex/lexer.hpp"

#include <cctype>
#include <cstring>

namespace jex {

Lexer::Lexer(std::string source) : src_(std::move(source)) {}

void Lexer::advance(size_t n) {
  for (size_t i = 0; i < n && pos_ < src_.size(); ++i) {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
}

bool Lexer::eatUtf8(const char* seq) {
  size_t n = std::strlen(seq);
  if (src_.compare(pos_, n, seq) != 0) return false;
  pos_ += n;
  col_ += 1;  // count one column per code point
  return true;
}

const Token& Lexer::peek(size_t ahead) {
  while (buffer_.size() <= ahead) buffer_.push_back(lex());
  return buffer_[ahead];
}

Token Lexer::next() {
  peek();
  Token t = buffer_.front();
  buffer_.pop_front();
  return t;
}

namespace {

bool identStart(char c) { return (c >= 'a' && c <= 'z') || c == '_'; }
bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Tok keywordOrIdent(const std::string& word, Tok fallback) {
  if (word == "let") return Tok::Let;
  if (word == "in") return Tok::In;
  if (word == "def") return Tok::Def;
  if (word == "check") return Tok::Check;
  if (word == "normalize") return Tok::Normalize;
  if (word == "trace") return Tok::Trace;
  if (word == "translate") return Tok::Translate;
  if (word == "derive") return Tok::Derive;
  if (word == "derivation") return Tok::Derivation;
  return fallback;
}

}  // namespace

Token Lexer::lex() {
  for (;;) {
    while (cur() == ' ' || cur() == '\t' || cur() == '\r' || cur() == '\n') advance();
    if (cur() == '-' && at(1) == '-') {
      while (cur() != '\0' && cur() != '\n') advance();
      continue;
    }
    break;
  }

  int line = line_, col = col_;
  auto make = [&](Tok tok, std::string text = {}) { return Token{tok, std::move(text), line, col}; };

  char c = cur();
  if (c == '\0') return make(Tok::End);

  if (identStart(c)) {
    std::string word;
    while (identChar(cur())) {
      word.push_back(cur());
      advance();
    }
    // Interior hyphens glue words together (trunc-intro, prop-6), except when
    // the hyphen starts a -o operator.
    while (cur() == '-' && identChar(at(1)) && !(at(1) == 'o' && !identChar(at(2)))) {
      word.push_back('-');
      advance();
      while (identChar(cur())) {
        word.push_back(cur());
        advance();
      }
    }
    return make(keywordOrIdent(word, Tok::Ident), word);
  }

  if (c == 'E' && at(1) == 'x' && !identChar(at(2))) {
    advance(2);
    return make(Tok::Ex, "Ex");
  }
  if (c == 'O' && !identChar(at(1))) {
    advance();
    return make(Tok::OCap, "O");
  }

  switch (c) {
    case '(':
      advance();
      return make(Tok::LParen, "(");
    case ')':
      advance();
      return make(Tok::RParen, ")");
    case '[':
      advance();
      return make(Tok::LBrack, "[");
    case ']':
      advance();
      if (cur() == 'j' && !identChar(at(1))) {
        advance();
        return make(Tok::RBrackJ, "]j");
      }
      return make(Tok::RBrack, "]");
    case '\\':
      advance();
      if (cur() == 'j' && !identChar(at(1))) {
        advance();
        return make(Tok::LambdaJ, "\\j");
      }
      return make(Tok::Lambda, "\\");
    case '@':
      advance();
      if (cur() == 'j' && !identChar(at(1))) {
        advance();
        return make(Tok::AtJ, "@j");
      }
      throw ParseError(line, col, "expected 'j' after '@'");
    case '.':
      advance();
      return make(Tok::Dot, ".");
    case ':':
      advance();
      if (cur() == ':') {
        advance();
        return make(Tok::ColonColon, "::");
      }
      return make(Tok::Colon, ":");
    case ',':
      advance();
      return make(Tok::Comma, ",");
    case '-':
      if (at(1) == '>') {
        advance(2);
        return make(Tok::Arrow, "->");
      }
      if (at(1) == 'o' && !identChar(at(2))) {
        advance(2);
        return make(Tok::Lolli, "-o");
      }
      throw ParseError(line, col, "stray '-'");
    case '=':
      if (at(1) == '>') {
        advance(2);
        return make(Tok::FatArrow, "=>");
      }
      advance();
      return make(Tok::Equals, "=");
    case '"': {
      advance();
      std::string text;
      while (cur() != '"') {
        if (cur() == '\0' || cur() == '\n') throw ParseError(line, col, "unterminated string");
        if (cur() == '\\') {
          advance();
          char esc = cur();
          if (esc == 'n') text.push_back('\n');
          else if (esc == 't') text.push_back('\t');
          else text.push_back(esc);
          advance();
          continue;
        }
        text.push_back(cur());
        advance();
      }
      advance();
      return make(Tok::String, text);
    }
    default:
      break;
  }

  // unicode spellings
  if (eatUtf8("∃")) return make(Tok::Ex, "Ex");                 // ∃
  if (eatUtf8("→")) return make(Tok::Arrow, "->");              // →
  if (eatUtf8("⊸")) return make(Tok::Lolli, "-o");              // ⊸
  if (eatUtf8("λ")) {                                           // λ
    if (cur() == 'j' && !identChar(at(1))) {
      advance();
      return make(Tok::LambdaJ, "\\j");
    }
    return make(Tok::Lambda, "\\");
  }
  if (eatUtf8("⟨")) return make(Tok::LBrack, "[");              // ⟨
  if (eatUtf8("⟩")) {                                           // ⟩
    if (cur() == 'j' && !identChar(at(1))) {
      advance();
      return make(Tok::RBrackJ, "]j");
    }
    return make(Tok::RBrack, "]");
  }

  throw ParseError(line, col, std::string("unexpected character '") + c + "'");
}

std::string Lexer::rawBalanced() {
  const Token& open = peek();
  if (open.tok != Tok::LParen)
    throw ParseError(open.line, open.col, "expected '('");
  if (buffer_.size() > 1)
    throw ParseError(open.line, open.col, "internal: lookahead past raw span");
  buffer_.clear();

  size_t start = pos_ - 1;  // the '(' was a single-character token
  size_t i = start;
  int depth = 0;
  while (i < src_.size()) {
    char c = src_[i];
    if (c == '"') {
      ++i;
      while (i < src_.size() && src_[i] != '"') i += (src_[i] == '\\') ? 2 : 1;
      if (i < src_.size()) ++i;
      continue;
    }
    if (c == '-' && i + 1 < src_.size() && src_[i + 1] == '-') {
      while (i < src_.size() && src_[i] != '\n') ++i;
      continue;
    }
    if (c == '(') ++depth;
    if (c == ')' && --depth == 0) {
      ++i;
      break;
    }
    ++i;
  }
  if (depth != 0) throw ParseError(open.line, open.col, "unbalanced parentheses");

  // re-sync position/line/col to the end of the span
  std::string out = src_.substr(start, i - start);
  while (pos_ < i) {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  return out;
}

}  // namespace jex
