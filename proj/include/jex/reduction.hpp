#pragma once

#include "jex/typing.hpp"

#include <optional>

namespace jex {

enum class StepKind {
  BetaArrow,          // ap(\x.t, t')         => [t'/x]t
  BetaArrowJ,         // apj(\j x.e, t)       => [t/x]e
  BetaExists,         // let [x] = [e'] in e  => [[e'/x]]e
  BetaExistsJ,        // let [x]j = [e']j in e => [[e'/x]]e   (also fires on a
                      // plain-box scrutinee, which is the canonical term case)
  CongApHead,
  CongApJHead,
  CongLetScrutinee,
  CongLetJScrutinee,
};

const char* stepKindName(StepKind k);

struct Step {
  ExprPtr expr;
  StepKind kind;
};

// One step of weak leftmost-outermost reduction: beta at the root, else into
// an application head, else into a let scrutinee. Nothing steps under a
// binder or inside a box. Deterministic; nullopt on normal forms.
std::optional<Step> step(const ExprPtr& e);

struct TraceEntry {
  StepKind kind;
  ExprPtr expr;  // expression after the step
};

struct NormalizeResult {
  ExprPtr expr;
  std::vector<TraceEntry> trace;
};

struct FuelExhausted : std::runtime_error {
  ExprPtr last;
  std::vector<TraceEntry> partial;
  FuelExhausted(ExprPtr l, std::vector<TraceEntry> t)
      : std::runtime_error("fuel exhausted before reaching a normal form"),
        last(std::move(l)), partial(std::move(t)) {}
};

constexpr long kDefaultFuel = 100000;

// Iterates step until no redex remains; throws FuelExhausted (with the
// partial trace) if fuel runs out first. Well-typed input always terminates.
NormalizeResult normalize(const ExprPtr& e, long fuel = kDefaultFuel);

// True for the canonical forms \x.t, \j x.e, [e], [e]j.
bool isCanonical(const ExprPtr& e);

// One-step eta expansion at the given type and judgment kind:
//   arrow:  e => \x. ap(e, x)          resp.  \j x. apj(e, x)
//   exists: e => [let [x] = e in x]    resp.  [let [x]j = e in x]j
// The input must be typable at (kind, type); the expansion checks at the
// same judgment.
ExprPtr etaExpand(const Context& ctx, const ExprPtr& e, const PropPtr& type, Kind kind);

}  // namespace jex
