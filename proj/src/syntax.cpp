#include "jex/syntax.hpp"

#include <map>
#include <optional>

namespace jex {

PropPtr atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty atom name");
  auto p = std::make_shared<Prop>();
  p->tag = Prop::Tag::Atom;
  p->name = std::move(name);
  return p;
}

PropPtr arrow(PropPtr domain, PropPtr codomain) {
  auto p = std::make_shared<Prop>();
  p->tag = Prop::Tag::Arrow;
  p->lhs = std::move(domain);
  p->rhs = std::move(codomain);
  return p;
}

PropPtr exists(PropPtr body) {
  auto p = std::make_shared<Prop>();
  p->tag = Prop::Tag::Exists;
  p->lhs = std::move(body);
  return p;
}

PropPtr existsArrow(PropPtr domain, PropPtr codomain) {
  return arrow(std::move(domain), exists(std::move(codomain)));
}

bool propEq(const PropPtr& a, const PropPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->tag != b->tag) return false;
  switch (a->tag) {
    case Prop::Tag::Atom:
      return a->name == b->name;
    case Prop::Tag::Arrow:
      return propEq(a->lhs, b->lhs) && propEq(a->rhs, b->rhs);
    case Prop::Tag::Exists:
      return propEq(a->lhs, b->lhs);
  }
  return false;
}

namespace {

ExprPtr mk(Expr::Tag tag, std::string name, PropPtr annot, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<Expr>();
  e->tag = tag;
  e->name = std::move(name);
  e->annot = std::move(annot);
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

}  // namespace

ExprPtr var(std::string name) { return mk(Expr::Tag::Var, std::move(name), nullptr, nullptr, nullptr); }
ExprPtr lam(std::string binder, PropPtr annot, ExprPtr body) {
  return mk(Expr::Tag::Lam, std::move(binder), std::move(annot), std::move(body), nullptr);
}
ExprPtr ap(ExprPtr fun, ExprPtr arg) {
  return mk(Expr::Tag::Ap, {}, nullptr, std::move(fun), std::move(arg));
}
ExprPtr box(ExprPtr body) { return mk(Expr::Tag::Box, {}, nullptr, std::move(body), nullptr); }
ExprPtr letBox(std::string binder, ExprPtr scrutinee, ExprPtr body) {
  return mk(Expr::Tag::LetBox, std::move(binder), nullptr, std::move(scrutinee), std::move(body));
}
ExprPtr lamJ(std::string binder, PropPtr annot, ExprPtr body) {
  return mk(Expr::Tag::LamJ, std::move(binder), std::move(annot), std::move(body), nullptr);
}
ExprPtr apJ(ExprPtr fun, ExprPtr arg) {
  return mk(Expr::Tag::ApJ, {}, nullptr, std::move(fun), std::move(arg));
}
ExprPtr boxJ(ExprPtr body) { return mk(Expr::Tag::BoxJ, {}, nullptr, std::move(body), nullptr); }
ExprPtr letBoxJ(std::string binder, ExprPtr scrutinee, ExprPtr body) {
  return mk(Expr::Tag::LetBoxJ, std::move(binder), nullptr, std::move(scrutinee), std::move(body));
}

bool isTerm(const ExprPtr& e) {
  switch (e->tag) {
    case Expr::Tag::Var:
    case Expr::Tag::Box:  // box bodies may be arbitrary expressions
      return true;
    case Expr::Tag::Lam:
      return isTerm(e->a);
    case Expr::Tag::Ap:
      return isTerm(e->a) && isTerm(e->b);
    default:
      return false;
  }
}

namespace {

void collectFree(const ExprPtr& e, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (e->tag) {
    case Expr::Tag::Var:
      if (!bound.count(e->name)) out.insert(e->name);
      return;
    case Expr::Tag::Lam:
    case Expr::Tag::LamJ: {
      bool wasBound = bound.count(e->name) > 0;
      bound.insert(e->name);
      collectFree(e->a, bound, out);
      if (!wasBound) bound.erase(e->name);
      return;
    }
    case Expr::Tag::Ap:
    case Expr::Tag::ApJ:
      collectFree(e->a, bound, out);
      collectFree(e->b, bound, out);
      return;
    case Expr::Tag::Box:
    case Expr::Tag::BoxJ:
      collectFree(e->a, bound, out);
      return;
    case Expr::Tag::LetBox:
    case Expr::Tag::LetBoxJ: {
      collectFree(e->a, bound, out);
      bool wasBound = bound.count(e->name) > 0;
      bound.insert(e->name);
      collectFree(e->b, bound, out);
      if (!wasBound) bound.erase(e->name);
      return;
    }
  }
}

void collectAll(const ExprPtr& e, std::set<std::string>& out) {
  switch (e->tag) {
    case Expr::Tag::Var:
      out.insert(e->name);
      return;
    case Expr::Tag::Lam:
    case Expr::Tag::LamJ:
      out.insert(e->name);
      collectAll(e->a, out);
      return;
    case Expr::Tag::Ap:
    case Expr::Tag::ApJ:
      collectAll(e->a, out);
      collectAll(e->b, out);
      return;
    case Expr::Tag::Box:
    case Expr::Tag::BoxJ:
      collectAll(e->a, out);
      return;
    case Expr::Tag::LetBox:
    case Expr::Tag::LetBoxJ:
      out.insert(e->name);
      collectAll(e->a, out);
      collectAll(e->b, out);
      return;
  }
}

using RenameMap = std::map<std::string, int>;

bool alphaEqRec(const ExprPtr& x, const ExprPtr& y, RenameMap& lm, RenameMap& rm, int& depth) {
  if (x->tag != y->tag) return false;
  switch (x->tag) {
    case Expr::Tag::Var: {
      auto li = lm.find(x->name);
      auto ri = rm.find(y->name);
      if (li == lm.end() && ri == rm.end()) return x->name == y->name;  // both free
      if (li == lm.end() || ri == rm.end()) return false;
      return li->second == ri->second;
    }
    case Expr::Tag::Lam:
    case Expr::Tag::LamJ: {
      if (!propEq(x->annot, y->annot)) return false;
      int mark = depth++;
      auto lOld = lm.find(x->name) != lm.end() ? std::optional(lm[x->name]) : std::nullopt;
      auto rOld = rm.find(y->name) != rm.end() ? std::optional(rm[y->name]) : std::nullopt;
      lm[x->name] = mark;
      rm[y->name] = mark;
      bool ok = alphaEqRec(x->a, y->a, lm, rm, depth);
      if (lOld) lm[x->name] = *lOld; else lm.erase(x->name);
      if (rOld) rm[y->name] = *rOld; else rm.erase(y->name);
      return ok;
    }
    case Expr::Tag::Ap:
    case Expr::Tag::ApJ:
      return alphaEqRec(x->a, y->a, lm, rm, depth) && alphaEqRec(x->b, y->b, lm, rm, depth);
    case Expr::Tag::Box:
    case Expr::Tag::BoxJ:
      return alphaEqRec(x->a, y->a, lm, rm, depth);
    case Expr::Tag::LetBox:
    case Expr::Tag::LetBoxJ: {
      if (!alphaEqRec(x->a, y->a, lm, rm, depth)) return false;
      int mark = depth++;
      auto lOld = lm.find(x->name) != lm.end() ? std::optional(lm[x->name]) : std::nullopt;
      auto rOld = rm.find(y->name) != rm.end() ? std::optional(rm[y->name]) : std::nullopt;
      lm[x->name] = mark;
      rm[y->name] = mark;
      bool ok = alphaEqRec(x->b, y->b, lm, rm, depth);
      if (lOld) lm[x->name] = *lOld; else lm.erase(x->name);
      if (rOld) rm[y->name] = *rOld; else rm.erase(y->name);
      return ok;
    }
  }
  return false;
}

}  // namespace

std::set<std::string> freeVars(const ExprPtr& e) {
  std::set<std::string> bound, out;
  collectFree(e, bound, out);
  return out;
}

std::set<std::string> allNames(const ExprPtr& e) {
  std::set<std::string> out;
  collectAll(e, out);
  return out;
}

bool alphaEq(const ExprPtr& a, const ExprPtr& b) {
  RenameMap lm, rm;
  int depth = 0;
  return alphaEqRec(a, b, lm, rm, depth);
}

std::string fresh(const std::set<std::string>& avoid, const std::string& hint) {
  if (!avoid.count(hint)) return hint;
  for (int i = 1;; ++i) {
    std::string candidate = hint + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

namespace {

// env maps in-scope binder names to their chosen replacements.
ExprPtr freshenRec(const ExprPtr& e, std::map<std::string, std::string>& env,
                   std::set<std::string>& taken) {
  switch (e->tag) {
    case Expr::Tag::Var: {
      auto it = env.find(e->name);
      return it == env.end() ? e : var(it->second);
    }
    case Expr::Tag::Lam:
    case Expr::Tag::LamJ: {
      std::string nb = fresh(taken, e->name);
      taken.insert(nb);
      auto saved = env.find(e->name) != env.end() ? std::optional(env[e->name]) : std::nullopt;
      env[e->name] = nb;
      ExprPtr body = freshenRec(e->a, env, taken);
      if (saved) env[e->name] = *saved; else env.erase(e->name);
      return e->tag == Expr::Tag::Lam ? lam(nb, e->annot, body) : lamJ(nb, e->annot, body);
    }
    case Expr::Tag::Ap:
      return ap(freshenRec(e->a, env, taken), freshenRec(e->b, env, taken));
    case Expr::Tag::ApJ:
      return apJ(freshenRec(e->a, env, taken), freshenRec(e->b, env, taken));
    case Expr::Tag::Box:
      return box(freshenRec(e->a, env, taken));
    case Expr::Tag::BoxJ:
      return boxJ(freshenRec(e->a, env, taken));
    case Expr::Tag::LetBox:
    case Expr::Tag::LetBoxJ: {
      ExprPtr scrut = freshenRec(e->a, env, taken);
      std::string nb = fresh(taken, e->name);
      taken.insert(nb);
      auto saved = env.find(e->name) != env.end() ? std::optional(env[e->name]) : std::nullopt;
      env[e->name] = nb;
      ExprPtr body = freshenRec(e->b, env, taken);
      if (saved) env[e->name] = *saved; else env.erase(e->name);
      return e->tag == Expr::Tag::LetBox ? letBox(nb, scrut, body) : letBoxJ(nb, scrut, body);
    }
  }
  return e;
}

}  // namespace

ExprPtr freshenBinders(const ExprPtr& e, std::set<std::string> avoid) {
  std::set<std::string> taken = freeVars(e);
  taken.insert(avoid.begin(), avoid.end());
  std::map<std::string, std::string> env;
  return freshenRec(e, env, taken);
}

bool Context::contains(const std::string& name) const {
  return lookup(name) != nullptr;
}

PropPtr Context::lookup(const std::string& name) const {
  for (auto it = items_.rbegin(); it != items_.rend(); ++it)
    if (it->first == name) return it->second;
  return nullptr;
}

Context Context::extended(const std::string& name, PropPtr type) const {
  if (contains(name))
    throw std::invalid_argument("context already binds '" + name + "'");
  Context out = *this;
  out.items_.emplace_back(name, std::move(type));
  return out;
}

std::set<std::string> Context::names() const {
  std::set<std::string> out;
  for (auto& [n, _] : items_) out.insert(n);
  return out;
}

bool Context::operator==(const Context& other) const {
  if (items_.size() != other.items_.size()) return false;
  for (size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].first != other.items_[i].first) return false;
    if (!propEq(items_[i].second, other.items_[i].second)) return false;
  }
  return true;
}

}  // namespace jex
