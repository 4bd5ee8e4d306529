#pragma once

#include "jex/syntax.hpp"

namespace jex {

enum class Rule {
  Hyp,
  Just,
  ArrowI,
  ArrowE,
  ArrowIj,
  ArrowEj,
  ExistsI,
  ExistsE,
  ExistsIj,
  ExistsEj,
};

const char* ruleName(Rule r);

struct Derivation;
using DerivPtr = std::shared_ptr<const Derivation>;

// Rule-tagged tree over typing judgments ctx |- expr kind type, checkable
// node by node with replayDerivation.
struct Derivation {
  Rule rule;
  Context ctx;
  ExprPtr expr;
  Kind kind;
  PropPtr type;
  std::vector<DerivPtr> premises;
};

DerivPtr derivation(Rule rule, Context ctx, ExprPtr expr, Kind kind, PropPtr type,
                    std::vector<DerivPtr> premises = {});

struct TypeError : std::runtime_error {
  enum class Code {
    UnboundVariable,
    NotATerm,
    ArrowExpected,
    ArgMismatch,
    ExistsExpected,
    NonTermArgument,
    TypeMismatch,
    HeadMismatch,
    IllTyped,
  };
  Code code;
  PropPtr expected;  // TypeMismatch / ArgMismatch
  PropPtr found;

  TypeError(Code c, std::string msg, PropPtr exp = nullptr, PropPtr fnd = nullptr)
      : std::runtime_error(std::move(msg)), code(c), expected(std::move(exp)), found(std::move(fnd)) {}
};

struct Typing {
  PropPtr type;
  DerivPtr deriv;
};

// Infers the unique A with ctx |- e : A. Only terms inhabit the relevant
// judgment; box bodies are checked irrelevantly.
Typing inferRelevant(const Context& ctx, const ExprPtr& e);

// Infers ctx |- e :: A. Syntax-directed; a bare term goes through
// inferRelevant and the just coercion.
Typing inferIrrelevant(const Context& ctx, const ExprPtr& e);

Typing infer(const Context& ctx, const ExprPtr& e, Kind kind);

// Inference followed by structural equality against the announced type.
DerivPtr checkAgainst(const Context& ctx, const ExprPtr& e, Kind kind, const PropPtr& type);

// Validates a (possibly hand-built) derivation node by node, independently of
// inference. On failure `why`, when given, receives the first failing node's
// path and rule.
bool replayDerivation(const DerivPtr& d, std::string* why = nullptr);

}  // namespace jex
