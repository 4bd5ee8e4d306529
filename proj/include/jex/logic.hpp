#pragma once

#include "jex/typing.hpp"

namespace jex {

// Rules of the pure logical variant. Structural rules are explicit nodes so
// printed proof trees transcribe as-is; Assume marks a premise schema leaf
// (a judgment taken as given, which a hypothesis cannot express for
// just-true judgments).
enum class LRule {
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
  LolliI,
  LolliE,
  LolliIj,
  LolliEj,
  Sub1,
  Sub2,
  Weaken,
  Exchange,
  Contract,
  R,
  Assume,
};

const char* lruleName(LRule r);

// hyps |- goal kind, all hypotheses implicitly `true`.
struct LogicalJudgment {
  std::vector<PropPtr> hyps;
  PropPtr goal;
  Kind kind;
};

bool judgmentEq(const LogicalJudgment& a, const LogicalJudgment& b);
std::string printJudgment(const LogicalJudgment& j);

struct LogicalDerivation;
using LDerivPtr = std::shared_ptr<const LogicalDerivation>;

struct LogicalDerivation {
  LRule rule;
  LogicalJudgment conclusion;
  std::vector<LDerivPtr> premises;
};

LDerivPtr lnode(LRule rule, LogicalJudgment conclusion, std::vector<LDerivPtr> premises = {});

// True iff every node is a correct instance of its rule. Assume leaves are
// accepted as given. On failure `why` receives the first failing node's path,
// rule, and judgments.
bool checkLogical(const LDerivPtr& d, std::string* why = nullptr);

// Collects the judgments of all Assume leaves.
std::vector<LogicalJudgment> assumptions(const LDerivPtr& d);

bool containsJRule(const LDerivPtr& d);

// Drops proof expressions from a typing derivation: ctx |- e : A becomes
// hyps |- A true and ctx |- e :: A becomes hyps |- A just true, node by node
// with the same rule tags.
LDerivPtr erase(const DerivPtr& d);

// Rewrites every ->Ij / ->Ej / ExIj / ExEj node into its derived tree over
// the true-variant rules, structural rules, and rule R; -o nodes are first
// unfolded into their defining -> / Ex trees. The conclusion is unchanged.
LDerivPtr elaborateJ(const LDerivPtr& d);

}  // namespace jex
