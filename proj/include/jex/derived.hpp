#pragma once

#include "jex/logic.hpp"
#include "jex/typing.hpp"

namespace jex {

struct DerivedResult {
  ExprPtr expr;
  DerivPtr deriv;
};

// For t : A, builds [t] : Ex A (just; ExI).
DerivedResult truncIntro(const Context& ctx, const ExprPtr& t);

// For f :: A -> B, builds \j(y:Ex A). let [x] = y in f @j x  ::  Ex A -> B.
DerivedResult truncElim(const Context& ctx, const ExprPtr& f);

// Closed witnesses for the lax modality axioms:
//   I    \(x:A). [x]                                  :  A -> Ex A
//   II   \(y:Ex Ex A). [let [z] = y in let [x] = z in x]  :  Ex Ex A -> Ex A
//   III  \(f:A -> B). \(y:Ex A). [let [x] = y in f x] :  (A -> B) -> Ex A -> Ex B
enum class LaxAxiom { I, II, III };
DerivedResult laxAxiom(LaxAxiom which, const PropPtr& a, const PropPtr& b = nullptr);

// Transcriptions of the printed proof trees relating -> and Ex; the stated
// premise of each direction appears as an assume leaf. P4L/P4R compose the
// trees of 1 and 3.
enum class PropWitness { P1L, P1R, P2L, P2R, P3L, P3R, P4L, P4R, P5, P6 };
LDerivPtr propositionWitness(PropWitness which, const PropPtr& a, const PropPtr& b = nullptr);

}  // namespace jex
