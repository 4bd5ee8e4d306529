#pragma once

#include "jex/syntax.hpp"

namespace jex {

struct PrintOpts {
  bool unicodeSyms = false;  // ∃, ⟨⟩, λ, ⊸ instead of Ex, [], \, -o
  bool resugar = false;      // print A -> Ex B as A -o B
};

// parse(printProp(p)) == p and parse(printExpr(e)) alphaEq e.
std::string printProp(const PropPtr& p, PrintOpts opts = {});
std::string printExpr(const ExprPtr& e, PrintOpts opts = {});

// x:A, y:B — accepted back by parseContext.
std::string printContext(const Context& ctx, PrintOpts opts = {});

std::string kindSymbol(Kind k);  // ":" or "::"

}  // namespace jex
