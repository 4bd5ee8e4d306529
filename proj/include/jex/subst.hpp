#pragma once

#include "jex/syntax.hpp"

namespace jex {

// Standard capture-avoiding substitution [t/x]e. Rejects a non-term t:
// substituting a full expression for a variable goes through substExpr.
ExprPtr substTerm(const ExprPtr& t, const std::string& x, const ExprPtr& e);

// Expression substitution [[e/x]]e', defined by recursion on the structure
// of the substituted expression e, not of the target e':
//
//   [[t/x]]e'                         = [t/x]e'
//   [[let [y] = t in e2 /x]]e'       = let [y] = t in [[e2/x]]e'
//   [[let [y]j = e3 in e2 /x]]e'     = let [y]j = e3 in [[e2/x]]e'
//   [[ [e2]j /x]]e'                  = [ [[e2/x]]e' ]       (plain box)
//   [[ \j(y:A). e2 /x]]e'            = \j(y:A). [[e2/x]]e'
//   [[ apj(e2, t) /x]]e'             = apj([[e2/x]]e', t)
//
// In the binding clauses the bound variable is freshened against the free
// variables of e' before recursing.
ExprPtr substExpr(const ExprPtr& e, const std::string& x, const ExprPtr& target);

// Plain capture-avoiding replacement of free occurrences, with no term-hood
// requirement. Used for splicing definitions, not for the judgment-level
// substitution rules.
ExprPtr replaceFree(const ExprPtr& replacement, const std::string& x, const ExprPtr& e);

}  // namespace jex
