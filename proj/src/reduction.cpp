#include "jex/reduction.hpp"

#include "jex/printer.hpp"
#include "jex/subst.hpp"

namespace jex {

const char* stepKindName(StepKind k) {
  switch (k) {
    case StepKind::BetaArrow: return "->C";
    case StepKind::BetaArrowJ: return "->Cj";
    case StepKind::BetaExists: return "ExC";
    case StepKind::BetaExistsJ: return "ExCj";
    case StepKind::CongApHead: return "apC";
    case StepKind::CongApJHead: return "apCj";
    case StepKind::CongLetScrutinee: return "letC";
    case StepKind::CongLetJScrutinee: return "letCj";
  }
  return "?";
}

std::optional<Step> step(const ExprPtr& e) {
  switch (e->tag) {
    case Expr::Tag::Ap:
      if (e->a->tag == Expr::Tag::Lam && isTerm(e->b))
        return Step{substTerm(e->b, e->a->name, e->a->a), StepKind::BetaArrow};
      if (auto inner = step(e->a))
        return Step{ap(inner->expr, e->b), StepKind::CongApHead};
      return std::nullopt;
    case Expr::Tag::ApJ:
      if (e->a->tag == Expr::Tag::LamJ && isTerm(e->b))
        return Step{substTerm(e->b, e->a->name, e->a->a), StepKind::BetaArrowJ};
      if (auto inner = step(e->a))
        return Step{apJ(inner->expr, e->b), StepKind::CongApJHead};
      return std::nullopt;
    case Expr::Tag::LetBox:
      if (e->a->tag == Expr::Tag::Box)
        return Step{substExpr(e->a->a, e->name, e->b), StepKind::BetaExists};
      if (auto inner = step(e->a))
        return Step{letBox(e->name, inner->expr, e->b), StepKind::CongLetScrutinee};
      return std::nullopt;
    case Expr::Tag::LetBoxJ:
      // An irrelevantly typed scrutinee may reach either box flavor: [e']j
      // directly, or [e'] through the just coercion. Both carry an e' :: A
      // body, so both contract by expression substitution.
      if (e->a->tag == Expr::Tag::BoxJ || e->a->tag == Expr::Tag::Box)
        return Step{substExpr(e->a->a, e->name, e->b), StepKind::BetaExistsJ};
      if (auto inner = step(e->a))
        return Step{letBoxJ(e->name, inner->expr, e->b), StepKind::CongLetJScrutinee};
      return std::nullopt;
    default:
      // Var and the canonical forms: no weak redex.
      return std::nullopt;
  }
}

NormalizeResult normalize(const ExprPtr& e, long fuel) {
  if (fuel < 1) throw std::invalid_argument("normalize: fuel must be positive");
  ExprPtr cur = e;
  std::vector<TraceEntry> trace;
  for (long i = 0; i < fuel; ++i) {
    auto next = step(cur);
    if (!next) return {cur, std::move(trace)};
    cur = next->expr;
    trace.push_back({next->kind, cur});
  }
  if (!step(cur)) return {cur, std::move(trace)};
  throw FuelExhausted(cur, std::move(trace));
}

bool isCanonical(const ExprPtr& e) {
  switch (e->tag) {
    case Expr::Tag::Lam:
    case Expr::Tag::LamJ:
    case Expr::Tag::Box:
    case Expr::Tag::BoxJ:
      return true;
    default:
      return false;
  }
}

ExprPtr etaExpand(const Context& ctx, const ExprPtr& e, const PropPtr& type, Kind kind) {
  try {
    checkAgainst(ctx, e, kind, type);
  } catch (const TypeError& err) {
    throw TypeError(TypeError::Code::IllTyped,
                    std::string("etaExpand: input is not typable at the stated judgment: ") +
                        err.what());
  }
  std::set<std::string> avoid = ctx.names();
  auto names = allNames(e);
  avoid.insert(names.begin(), names.end());
  std::string x = fresh(avoid, "x");
  switch (type->tag) {
    case Prop::Tag::Arrow:
      return kind == Kind::Relevant ? lam(x, type->lhs, ap(e, var(x)))
                                    : lamJ(x, type->lhs, apJ(e, var(x)));
    case Prop::Tag::Exists:
      return kind == Kind::Relevant ? box(letBox(x, e, var(x)))
                                    : boxJ(letBoxJ(x, e, var(x)));
    case Prop::Tag::Atom:
      throw TypeError(TypeError::Code::HeadMismatch,
                      "etaExpand: no expansion at atomic type " + printProp(type));
  }
  throw TypeError(TypeError::Code::HeadMismatch, "etaExpand: unsupported type");
}

}  // namespace jex
