#include "jex/lax.hpp"

#include <sstream>

namespace jex {

LaxPropPtr laxAtom(std::string name) {
  auto p = std::make_shared<LaxProp>();
  p->tag = LaxProp::Tag::Atom;
  p->name = std::move(name);
  return p;
}

LaxPropPtr laxImplies(LaxPropPtr domain, LaxPropPtr codomain) {
  auto p = std::make_shared<LaxProp>();
  p->tag = LaxProp::Tag::Implies;
  p->lhs = std::move(domain);
  p->rhs = std::move(codomain);
  return p;
}

LaxPropPtr laxCircle(LaxPropPtr body) {
  auto p = std::make_shared<LaxProp>();
  p->tag = LaxProp::Tag::Circle;
  p->lhs = std::move(body);
  return p;
}

bool laxPropEq(const LaxPropPtr& a, const LaxPropPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->tag != b->tag) return false;
  switch (a->tag) {
    case LaxProp::Tag::Atom: return a->name == b->name;
    case LaxProp::Tag::Implies: return laxPropEq(a->lhs, b->lhs) && laxPropEq(a->rhs, b->rhs);
    case LaxProp::Tag::Circle: return laxPropEq(a->lhs, b->lhs);
  }
  return false;
}

LaxPropPtr toLax(const PropPtr& p) {
  switch (p->tag) {
    case Prop::Tag::Atom: return laxAtom(p->name);
    case Prop::Tag::Arrow: return laxImplies(toLax(p->lhs), toLax(p->rhs));
    case Prop::Tag::Exists: return laxCircle(toLax(p->lhs));
  }
  throw std::invalid_argument("toLax: malformed proposition");
}

PropPtr fromLax(const LaxPropPtr& p) {
  switch (p->tag) {
    case LaxProp::Tag::Atom: return atom(p->name);
    case LaxProp::Tag::Implies: return arrow(fromLax(p->lhs), fromLax(p->rhs));
    case LaxProp::Tag::Circle: return exists(fromLax(p->lhs));
  }
  throw std::invalid_argument("fromLax: malformed proposition");
}

namespace {

// 0 implies, 1 circle, 2 atom
void render(std::ostream& os, const LaxPropPtr& p, int minPrec) {
  switch (p->tag) {
    case LaxProp::Tag::Atom:
      os << p->name;
      return;
    case LaxProp::Tag::Circle: {
      bool parens = minPrec > 1;
      if (parens) os << "(";
      os << "O ";
      render(os, p->lhs, 2);
      if (parens) os << ")";
      return;
    }
    case LaxProp::Tag::Implies: {
      bool parens = minPrec > 0;
      if (parens) os << "(";
      render(os, p->lhs, 1);
      os << " => ";
      render(os, p->rhs, 0);
      if (parens) os << ")";
      return;
    }
  }
}

}  // namespace

std::string printLaxProp(const LaxPropPtr& p) {
  std::ostringstream os;
  render(os, p, 0);
  return os.str();
}

}  // namespace jex
