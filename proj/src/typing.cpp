#include "jex/typing.hpp"

#include "jex/printer.hpp"
#include "jex/subst.hpp"

namespace jex {

const char* ruleName(Rule r) {
  switch (r) {
    case Rule::Hyp: return "hyp";
    case Rule::Just: return "just";
    case Rule::ArrowI: return "->I";
    case Rule::ArrowE: return "->E";
    case Rule::ArrowIj: return "->Ij";
    case Rule::ArrowEj: return "->Ej";
    case Rule::ExistsI: return "ExI";
    case Rule::ExistsE: return "ExE";
    case Rule::ExistsIj: return "ExIj";
    case Rule::ExistsEj: return "ExEj";
  }
  return "?";
}

DerivPtr derivation(Rule rule, Context ctx, ExprPtr expr, Kind kind, PropPtr type,
                    std::vector<DerivPtr> premises) {
  auto d = std::make_shared<Derivation>();
  d->rule = rule;
  d->ctx = std::move(ctx);
  d->expr = std::move(expr);
  d->kind = kind;
  d->type = std::move(type);
  d->premises = std::move(premises);
  return d;
}

namespace {

using Code = TypeError::Code;

[[noreturn]] void fail(Code code, const std::string& msg, PropPtr expected = nullptr,
                       PropPtr found = nullptr) {
  throw TypeError(code, msg, std::move(expected), std::move(found));
}

// Extends ctx with the binder, renaming it when the name is already taken so
// the context stays pairwise distinct.
struct BoundBody {
  Context ctx;
  std::string binder;
  ExprPtr body;
};

BoundBody bindFresh(const Context& ctx, const std::string& binder, const PropPtr& type,
                    const ExprPtr& body) {
  if (!ctx.contains(binder)) return {ctx.extended(binder, type), binder, body};
  std::set<std::string> avoid = ctx.names();
  auto names = allNames(body);
  avoid.insert(names.begin(), names.end());
  std::string nb = fresh(avoid, binder);
  return {ctx.extended(nb, type), nb, substTerm(var(nb), binder, body)};
}

}  // namespace

Typing inferRelevant(const Context& ctx, const ExprPtr& e) {
  switch (e->tag) {
    case Expr::Tag::Var: {
      PropPtr ty = ctx.lookup(e->name);
      if (!ty) fail(Code::UnboundVariable, "unbound variable '" + e->name + "'");
      return {ty, derivation(Rule::Hyp, ctx, e, Kind::Relevant, ty)};
    }
    case Expr::Tag::Lam: {
      auto [ctx2, binder, body] = bindFresh(ctx, e->name, e->annot, e->a);
      Typing sub = inferRelevant(ctx2, body);
      PropPtr ty = arrow(e->annot, sub.type);
      return {ty, derivation(Rule::ArrowI, ctx, e, Kind::Relevant, ty, {sub.deriv})};
    }
    case Expr::Tag::Ap: {
      if (!isTerm(e)) fail(Code::NotATerm, "relevant judgment requires a term");
      Typing fun = inferRelevant(ctx, e->a);
      if (fun.type->tag != Prop::Tag::Arrow)
        fail(Code::ArrowExpected, "application head has type " + printProp(fun.type) +
                                      ", an arrow was expected");
      Typing arg = inferRelevant(ctx, e->b);
      if (!propEq(arg.type, fun.type->lhs))
        fail(Code::ArgMismatch,
             "argument has type " + printProp(arg.type) + ", expected " + printProp(fun.type->lhs),
             fun.type->lhs, arg.type);
      return {fun.type->rhs, derivation(Rule::ArrowE, ctx, e, Kind::Relevant, fun.type->rhs,
                                        {fun.deriv, arg.deriv})};
    }
    case Expr::Tag::Box: {
      Typing sub = inferIrrelevant(ctx, e->a);
      PropPtr ty = exists(sub.type);
      return {ty, derivation(Rule::ExistsI, ctx, e, Kind::Relevant, ty, {sub.deriv})};
    }
    default:
      fail(Code::NotATerm, "relevant judgment requires a term");
  }
}

Typing inferIrrelevant(const Context& ctx, const ExprPtr& e) {
  switch (e->tag) {
    case Expr::Tag::Var:
    case Expr::Tag::Lam:
    case Expr::Tag::Ap:
    case Expr::Tag::Box: {
      // Bare term: infer relevantly, then coerce.
      Typing sub = inferRelevant(ctx, e);
      return {sub.type, derivation(Rule::Just, ctx, e, Kind::Irrelevant, sub.type, {sub.deriv})};
    }
    case Expr::Tag::LamJ: {
      auto [ctx2, binder, body] = bindFresh(ctx, e->name, e->annot, e->a);
      Typing sub = inferIrrelevant(ctx2, body);
      PropPtr ty = arrow(e->annot, sub.type);
      return {ty, derivation(Rule::ArrowIj, ctx, e, Kind::Irrelevant, ty, {sub.deriv})};
    }
    case Expr::Tag::ApJ: {
      Typing fun = inferIrrelevant(ctx, e->a);
      if (fun.type->tag != Prop::Tag::Arrow)
        fail(Code::ArrowExpected, "application head has type " + printProp(fun.type) +
                                      ", an arrow was expected");
      if (!isTerm(e->b)) fail(Code::NonTermArgument, "application argument must be a term");
      Typing arg = inferRelevant(ctx, e->b);
      if (!propEq(arg.type, fun.type->lhs))
        fail(Code::ArgMismatch,
             "argument has type " + printProp(arg.type) + ", expected " + printProp(fun.type->lhs),
             fun.type->lhs, arg.type);
      return {fun.type->rhs, derivation(Rule::ArrowEj, ctx, e, Kind::Irrelevant, fun.type->rhs,
                                        {fun.deriv, arg.deriv})};
    }
    case Expr::Tag::BoxJ: {
      Typing sub = inferIrrelevant(ctx, e->a);
      PropPtr ty = exists(sub.type);
      return {ty, derivation(Rule::ExistsIj, ctx, e, Kind::Irrelevant, ty, {sub.deriv})};
    }
    case Expr::Tag::LetBox: {
      if (!isTerm(e->a)) fail(Code::NonTermArgument, "let scrutinee must be a term");
      Typing scrut = inferRelevant(ctx, e->a);
      if (scrut.type->tag != Prop::Tag::Exists)
        fail(Code::ExistsExpected,
             "let scrutinee has type " + printProp(scrut.type) + ", Ex was expected");
      auto [ctx2, binder, body] = bindFresh(ctx, e->name, scrut.type->lhs, e->b);
      Typing sub = inferIrrelevant(ctx2, body);
      return {sub.type, derivation(Rule::ExistsE, ctx, e, Kind::Irrelevant, sub.type,
                                   {scrut.deriv, sub.deriv})};
    }
    case Expr::Tag::LetBoxJ: {
      Typing scrut = inferIrrelevant(ctx, e->a);
      if (scrut.type->tag != Prop::Tag::Exists)
        fail(Code::ExistsExpected,
             "let scrutinee has type " + printProp(scrut.type) + ", Ex was expected");
      auto [ctx2, binder, body] = bindFresh(ctx, e->name, scrut.type->lhs, e->b);
      Typing sub = inferIrrelevant(ctx2, body);
      return {sub.type, derivation(Rule::ExistsEj, ctx, e, Kind::Irrelevant, sub.type,
                                   {scrut.deriv, sub.deriv})};
    }
  }
  fail(Code::IllTyped, "malformed expression");
}

Typing infer(const Context& ctx, const ExprPtr& e, Kind kind) {
  return kind == Kind::Relevant ? inferRelevant(ctx, e) : inferIrrelevant(ctx, e);
}

DerivPtr checkAgainst(const Context& ctx, const ExprPtr& e, Kind kind, const PropPtr& type) {
  Typing t = infer(ctx, e, kind);
  if (!propEq(t.type, type))
    fail(Code::TypeMismatch,
         "expected " + printProp(type) + ", found " + printProp(t.type), type, t.type);
  return t.deriv;
}

namespace {

bool replayFail(std::string* why, const std::string& path, const DerivPtr& d,
                const std::string& detail) {
  if (why) *why = path + " (" + ruleName(d->rule) + "): " + detail;
  return false;
}

// Premise context must extend d->ctx with exactly one fresh binding of the
// given type; the premise expression must be the body with the conclusion's
// binder renamed accordingly.
bool premiseBinds(const DerivPtr& premise, const Context& ctx, const std::string& binder,
                  const PropPtr& type, const ExprPtr& body) {
  const auto& items = premise->ctx.items();
  if (items.size() != ctx.size() + 1) return false;
  for (size_t i = 0; i < ctx.size(); ++i) {
    if (items[i].first != ctx.items()[i].first) return false;
    if (!propEq(items[i].second, ctx.items()[i].second)) return false;
  }
  const auto& [name, ty] = items.back();
  if (!propEq(ty, type)) return false;
  if (ctx.contains(name)) return false;
  ExprPtr renamed = name == binder ? body : substTerm(var(name), binder, body);
  return alphaEq(premise->expr, renamed);
}

bool replayNode(const DerivPtr& d, const std::string& path, std::string* why) {
  auto bad = [&](const std::string& detail) { return replayFail(why, path, d, detail); };
  auto arity = [&](size_t n) { return d->premises.size() == n; };
  const ExprPtr& e = d->expr;

  switch (d->rule) {
    case Rule::Hyp: {
      if (!arity(0)) return bad("hyp takes no premises");
      if (e->tag != Expr::Tag::Var || d->kind != Kind::Relevant) return bad("conclusion is not x : A");
      PropPtr ty = d->ctx.lookup(e->name);
      if (!ty) return bad("variable not bound in context");
      if (!propEq(ty, d->type)) return bad("hypothesis type differs from conclusion");
      break;
    }
    case Rule::Just: {
      if (!arity(1)) return bad("just takes one premise");
      const auto& p = d->premises[0];
      if (d->kind != Kind::Irrelevant || p->kind != Kind::Relevant) return bad("kinds must be : over ::");
      if (!(p->ctx == d->ctx) || !alphaEq(p->expr, e) || !propEq(p->type, d->type))
        return bad("premise judgment differs from conclusion");
      break;
    }
    case Rule::ArrowI:
    case Rule::ArrowIj: {
      bool rel = d->rule == Rule::ArrowI;
      if (!arity(1)) return bad("introduction takes one premise");
      if (e->tag != (rel ? Expr::Tag::Lam : Expr::Tag::LamJ)) return bad("conclusion is not a lambda");
      if (d->kind != (rel ? Kind::Relevant : Kind::Irrelevant)) return bad("wrong judgment kind");
      if (d->type->tag != Prop::Tag::Arrow || !propEq(d->type->lhs, e->annot))
        return bad("conclusion type is not annot -> B");
      const auto& p = d->premises[0];
      if (p->kind != d->kind) return bad("premise kind differs");
      if (!propEq(p->type, d->type->rhs)) return bad("premise type is not the codomain");
      if (!premiseBinds(p, d->ctx, e->name, e->annot, e->a)) return bad("premise context/body mismatch");
      break;
    }
    case Rule::ArrowE:
    case Rule::ArrowEj: {
      bool rel = d->rule == Rule::ArrowE;
      if (!arity(2)) return bad("elimination takes two premises");
      if (e->tag != (rel ? Expr::Tag::Ap : Expr::Tag::ApJ)) return bad("conclusion is not an application");
      if (d->kind != (rel ? Kind::Relevant : Kind::Irrelevant)) return bad("wrong judgment kind");
      const auto& fun = d->premises[0];
      const auto& arg = d->premises[1];
      if (fun->kind != d->kind) return bad("head premise kind differs");
      if (arg->kind != Kind::Relevant) return bad("argument premise must be relevant");
      if (!isTerm(e->b)) return bad("argument must be a term");
      if (!(fun->ctx == d->ctx) || !(arg->ctx == d->ctx)) return bad("premise context differs");
      if (!alphaEq(fun->expr, e->a) || !alphaEq(arg->expr, e->b)) return bad("premise expressions differ");
      if (fun->type->tag != Prop::Tag::Arrow) return bad("head premise is not an arrow");
      if (!propEq(fun->type->lhs, arg->type)) return bad("argument type differs from domain");
      if (!propEq(fun->type->rhs, d->type)) return bad("conclusion type is not the codomain");
      break;
    }
    case Rule::ExistsI:
    case Rule::ExistsIj: {
      bool rel = d->rule == Rule::ExistsI;
      if (!arity(1)) return bad("introduction takes one premise");
      if (e->tag != (rel ? Expr::Tag::Box : Expr::Tag::BoxJ)) return bad("conclusion is not a box");
      if (d->kind != (rel ? Kind::Relevant : Kind::Irrelevant)) return bad("wrong judgment kind");
      if (d->type->tag != Prop::Tag::Exists) return bad("conclusion type is not Ex A");
      const auto& p = d->premises[0];
      if (p->kind != Kind::Irrelevant) return bad("premise must be irrelevant");
      if (!(p->ctx == d->ctx) || !alphaEq(p->expr, e->a) || !propEq(p->type, d->type->lhs))
        return bad("premise judgment mismatch");
      break;
    }
    case Rule::ExistsE:
    case Rule::ExistsEj: {
      bool rel = d->rule == Rule::ExistsE;
      if (!arity(2)) return bad("elimination takes two premises");
      if (e->tag != (rel ? Expr::Tag::LetBox : Expr::Tag::LetBoxJ)) return bad("conclusion is not a let");
      if (d->kind != Kind::Irrelevant) return bad("let concludes irrelevantly");
      const auto& scrut = d->premises[0];
      const auto& body = d->premises[1];
      if (scrut->kind != (rel ? Kind::Relevant : Kind::Irrelevant)) return bad("scrutinee premise kind");
      if (rel && !isTerm(e->a)) return bad("scrutinee must be a term");
      if (!(scrut->ctx == d->ctx) || !alphaEq(scrut->expr, e->a)) return bad("scrutinee premise mismatch");
      if (scrut->type->tag != Prop::Tag::Exists) return bad("scrutinee type is not Ex A");
      if (body->kind != Kind::Irrelevant) return bad("body premise must be irrelevant");
      if (!propEq(body->type, d->type)) return bad("body type differs from conclusion");
      if (!premiseBinds(body, d->ctx, e->name, scrut->type->lhs, e->b))
        return bad("body premise context/body mismatch");
      break;
    }
  }

  for (size_t i = 0; i < d->premises.size(); ++i)
    if (!replayNode(d->premises[i], path + "." + std::to_string(i), why)) return false;
  return true;
}

}  // namespace

bool replayDerivation(const DerivPtr& d, std::string* why) {
  return replayNode(d, "root", why);
}

}  // namespace jex
