#pragma once

#include "jex/lax.hpp"
#include "jex/lexer.hpp"
#include "jex/logic.hpp"
#include "jex/syntax.hpp"

namespace jex {

PropPtr parseProp(const std::string& text);
LaxPropPtr parseLaxProp(const std::string& text);

// Binders come out globally distinct (freshenBinders runs on the result).
ExprPtr parseExpr(const std::string& text);

// "x:p, y:q -> r"; empty and all-blank accepted.
Context parseContext(const std::string& text);

// One declaration of a .jex file.
struct Decl {
  enum class Tag { Def, Check, Normalize, Trace, Translate, Derive, Derivation };
  Tag tag;
  int line = 0, col = 0;
  std::string name;            // def: defined name; derive: builder; derivation: label
  ExprPtr expr;                // def / check / normalize / trace
  PropPtr prop;                // check / translate
  Kind kind = Kind::Relevant;  // check (: or ::)
  std::vector<PropPtr> args;   // derive
  LDerivPtr logical;           // derivation (one of the two is set)
  DerivPtr typing;
};

struct SourceFile {
  std::vector<Decl> decls;
};

SourceFile parseSource(const std::string& text);

}  // namespace jex
