#pragma once

#include "jex/logic.hpp"
#include "jex/typing.hpp"

namespace jex {

// Derivation fixture form, one s-expression per tree:
//
//   logical node:   (rule (("hyp" ...) "goal" true|just) premise*)
//   typing node:    (rule (((x "A") ...) "expr" :|:: "A") premise*)
//
// Rule symbols are the lruleName/ruleName spellings. Propositions and
// expressions are quoted in the concrete syntax.
struct ParsedDerivation {
  LDerivPtr logical;  // exactly one of the two is non-null
  DerivPtr typing;
};

ParsedDerivation parseDerivationSexpr(const std::string& text);

std::string printLogicalSexpr(const LDerivPtr& d, int indent = 0);
std::string printTypingSexpr(const DerivPtr& d, int indent = 0);

}  // namespace jex
