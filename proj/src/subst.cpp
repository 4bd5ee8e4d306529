#include "jex/subst.hpp"

namespace jex {

namespace {

// Free-occurrence rename with a name known to be fresh for `e`; no capture
// can happen, so a plain walk suffices.
ExprPtr renameFree(const ExprPtr& e, const std::string& from, const std::string& to) {
  switch (e->tag) {
    case Expr::Tag::Var:
      return e->name == from ? var(to) : e;
    case Expr::Tag::Lam:
    case Expr::Tag::LamJ: {
      if (e->name == from) return e;
      ExprPtr body = renameFree(e->a, from, to);
      return e->tag == Expr::Tag::Lam ? lam(e->name, e->annot, body)
                                      : lamJ(e->name, e->annot, body);
    }
    case Expr::Tag::Ap:
      return ap(renameFree(e->a, from, to), renameFree(e->b, from, to));
    case Expr::Tag::ApJ:
      return apJ(renameFree(e->a, from, to), renameFree(e->b, from, to));
    case Expr::Tag::Box:
      return box(renameFree(e->a, from, to));
    case Expr::Tag::BoxJ:
      return boxJ(renameFree(e->a, from, to));
    case Expr::Tag::LetBox:
    case Expr::Tag::LetBoxJ: {
      ExprPtr scrut = renameFree(e->a, from, to);
      ExprPtr body = e->name == from ? e->b : renameFree(e->b, from, to);
      return e->tag == Expr::Tag::LetBox ? letBox(e->name, scrut, body)
                                         : letBoxJ(e->name, scrut, body);
    }
  }
  return e;
}

// Standard capture-avoiding substitution, no term-hood requirement on s.
ExprPtr substCore(const ExprPtr& s, const std::string& x, const ExprPtr& e,
                  const std::set<std::string>& fvS) {
  switch (e->tag) {
    case Expr::Tag::Var:
      return e->name == x ? s : e;
    case Expr::Tag::Lam:
    case Expr::Tag::LamJ: {
      if (e->name == x) return e;  // x shadowed
      if (!freeVars(e).count(x)) return e;
      std::string binder = e->name;
      ExprPtr body = e->a;
      if (fvS.count(binder)) {
        std::set<std::string> avoid = fvS;
        auto names = allNames(body);
        avoid.insert(names.begin(), names.end());
        avoid.insert(x);
        binder = fresh(avoid, e->name);
        body = renameFree(body, e->name, binder);
      }
      body = substCore(s, x, body, fvS);
      return e->tag == Expr::Tag::Lam ? lam(binder, e->annot, body)
                                      : lamJ(binder, e->annot, body);
    }
    case Expr::Tag::Ap:
      return ap(substCore(s, x, e->a, fvS), substCore(s, x, e->b, fvS));
    case Expr::Tag::ApJ:
      return apJ(substCore(s, x, e->a, fvS), substCore(s, x, e->b, fvS));
    case Expr::Tag::Box:
      return box(substCore(s, x, e->a, fvS));
    case Expr::Tag::BoxJ:
      return boxJ(substCore(s, x, e->a, fvS));
    case Expr::Tag::LetBox:
    case Expr::Tag::LetBoxJ: {
      ExprPtr scrut = substCore(s, x, e->a, fvS);
      if (e->name == x)
        return e->tag == Expr::Tag::LetBox ? letBox(e->name, scrut, e->b)
                                           : letBoxJ(e->name, scrut, e->b);
      std::string binder = e->name;
      ExprPtr body = e->b;
      if (freeVars(body).count(x)) {
        if (fvS.count(binder)) {
          std::set<std::string> avoid = fvS;
          auto names = allNames(body);
          avoid.insert(names.begin(), names.end());
          avoid.insert(x);
          binder = fresh(avoid, e->name);
          body = renameFree(body, e->name, binder);
        }
        body = substCore(s, x, body, fvS);
      }
      return e->tag == Expr::Tag::LetBox ? letBox(binder, scrut, body)
                                         : letBoxJ(binder, scrut, body);
    }
  }
  return e;
}

}  // namespace

ExprPtr substTerm(const ExprPtr& t, const std::string& x, const ExprPtr& e) {
  if (!isTerm(t))
    throw std::invalid_argument("substTerm: substitutee is not a term");
  return substCore(t, x, e, freeVars(t));
}

ExprPtr replaceFree(const ExprPtr& replacement, const std::string& x, const ExprPtr& e) {
  return substCore(replacement, x, e, freeVars(replacement));
}

ExprPtr substExpr(const ExprPtr& e, const std::string& x, const ExprPtr& target) {
  switch (e->tag) {
    // Term forms: plain substitution into the target.
    case Expr::Tag::Var:
    case Expr::Tag::Lam:
    case Expr::Tag::Ap:
    case Expr::Tag::Box:
      return substCore(e, x, target, freeVars(e));
    case Expr::Tag::LetBox:
    case Expr::Tag::LetBoxJ: {
      std::string binder = e->name;
      ExprPtr body = e->b;
      auto fvTarget = freeVars(target);
      fvTarget.insert(x);
      if (fvTarget.count(binder)) {
        std::set<std::string> avoid = fvTarget;
        auto names = allNames(body);
        avoid.insert(names.begin(), names.end());
        binder = fresh(avoid, e->name);
        body = renameFree(body, e->name, binder);
      }
      ExprPtr inner = substExpr(body, x, target);
      return e->tag == Expr::Tag::LetBox ? letBox(binder, e->a, inner)
                                         : letBoxJ(binder, e->a, inner);
    }
    case Expr::Tag::BoxJ:
      // The result carries a plain box, exactly as the defining clause reads.
      return box(substExpr(e->a, x, target));
    case Expr::Tag::LamJ: {
      // The defining clause reuses the substitution variable as the binder;
      // we bind a variable kept distinct from it, renaming when needed.
      std::string binder = e->name;
      ExprPtr body = e->a;
      auto fvTarget = freeVars(target);
      fvTarget.insert(x);
      if (fvTarget.count(binder)) {
        std::set<std::string> avoid = fvTarget;
        auto names = allNames(body);
        avoid.insert(names.begin(), names.end());
        binder = fresh(avoid, e->name);
        body = renameFree(body, e->name, binder);
      }
      return lamJ(binder, e->annot, substExpr(body, x, target));
    }
    case Expr::Tag::ApJ:
      return apJ(substExpr(e->a, x, target), e->b);
  }
  return target;
}

}  // namespace jex
