#pragma once

#include "jex/syntax.hpp"

namespace jex {

struct LaxProp;
using LaxPropPtr = std::shared_ptr<const LaxProp>;

// Propositions of the target lax calculus: p | A => B | O A.
struct LaxProp {
  enum class Tag { Atom, Implies, Circle };
  Tag tag;
  std::string name;
  LaxPropPtr lhs, rhs;
};

LaxPropPtr laxAtom(std::string name);
LaxPropPtr laxImplies(LaxPropPtr domain, LaxPropPtr codomain);
LaxPropPtr laxCircle(LaxPropPtr body);

bool laxPropEq(const LaxPropPtr& a, const LaxPropPtr& b);

// A -> B maps to A => B and Ex A to O A, atoms to themselves.
LaxPropPtr toLax(const PropPtr& p);
PropPtr fromLax(const LaxPropPtr& p);

std::string printLaxProp(const LaxPropPtr& p);

}  // namespace jex
