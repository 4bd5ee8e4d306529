#include "jex/derived.hpp"

#include "jex/printer.hpp"

namespace jex {

DerivedResult truncIntro(const Context& ctx, const ExprPtr& t) {
  inferRelevant(ctx, t);  // propagate typing errors against t itself
  ExprPtr boxed = box(t);
  Typing ty = inferRelevant(ctx, boxed);
  return {boxed, ty.deriv};
}

DerivedResult truncElim(const Context& ctx, const ExprPtr& f) {
  Typing ft = inferIrrelevant(ctx, f);
  if (ft.type->tag != Prop::Tag::Arrow)
    throw TypeError(TypeError::Code::ArrowExpected,
                    "truncElim: expected an arrow, found " + printProp(ft.type));
  std::set<std::string> avoid = ctx.names();
  auto names = allNames(f);
  avoid.insert(names.begin(), names.end());
  std::string y = fresh(avoid, "y");
  avoid.insert(y);
  std::string x = fresh(avoid, "x");
  ExprPtr g = lamJ(y, exists(ft.type->lhs), letBox(x, var(y), apJ(f, var(x))));
  Typing gt = inferIrrelevant(ctx, g);
  return {g, gt.deriv};
}

DerivedResult laxAxiom(LaxAxiom which, const PropPtr& a, const PropPtr& b) {
  ExprPtr witness;
  switch (which) {
    case LaxAxiom::I:
      witness = lam("x", a, box(var("x")));
      break;
    case LaxAxiom::II:
      witness = lam("y", exists(exists(a)),
                    box(letBox("z", var("y"), letBox("x", var("z"), var("x")))));
      break;
    case LaxAxiom::III:
      if (!b) throw std::invalid_argument("laxAxiom: axiom III takes two propositions");
      witness = lam("f", arrow(a, b),
                    lam("y", exists(a), box(letBox("x", var("y"), ap(var("f"), var("x"))))));
      break;
  }
  Typing ty = inferRelevant(Context(), witness);
  return {witness, ty.deriv};
}

namespace {

using Hyps = std::vector<PropPtr>;

Hyps plus(Hyps hs, const PropPtr& p) {
  hs.push_back(p);
  return hs;
}

// Replaces every assume leaf with the given conclusion by a derivation of it.
LDerivPtr plugAssume(const LDerivPtr& d, const LogicalJudgment& hole, const LDerivPtr& proof) {
  if (d->rule == LRule::Assume && judgmentEq(d->conclusion, hole)) return proof;
  std::vector<LDerivPtr> ps;
  ps.reserve(d->premises.size());
  for (auto& p : d->premises) ps.push_back(plugAssume(p, hole, proof));
  return lnode(d->rule, d->conclusion, std::move(ps));
}

// Premise of the given direction: the tree turns an assumed judgment into
// the stated conclusion, exactly as printed.
LDerivPtr witness1L(const PropPtr& a, const PropPtr& b) {
  PropPtr lolli = existsArrow(a, b);
  auto assume = lnode(LRule::Assume, {{}, lolli, Kind::Relevant});
  auto w = lnode(LRule::Weaken, {{a}, lolli, Kind::Relevant}, {assume});
  auto hyp = lnode(LRule::Hyp, {{a}, a, Kind::Relevant});
  auto e = lnode(LRule::LolliE, {{a}, b, Kind::Irrelevant}, {w, hyp});
  return lnode(LRule::ArrowIj, {{}, arrow(a, b), Kind::Irrelevant}, {e});
}

LDerivPtr witness1R(const PropPtr& a, const PropPtr& b) {
  PropPtr ab = arrow(a, b);
  auto assume = lnode(LRule::Assume, {{}, ab, Kind::Irrelevant});
  auto w = lnode(LRule::Weaken, {{a}, ab, Kind::Irrelevant}, {assume});
  auto hyp = lnode(LRule::Hyp, {{a}, a, Kind::Relevant});
  auto e = lnode(LRule::ArrowEj, {{a}, b, Kind::Irrelevant}, {w, hyp});
  return lnode(LRule::LolliI, {{}, existsArrow(a, b), Kind::Relevant}, {e});
}

LDerivPtr witness2L(const PropPtr& a, const PropPtr& b) {
  PropPtr prem = arrow(a, exists(b));
  auto h1 = lnode(LRule::Hyp, {{exists(a)}, exists(a), Kind::Relevant});
  auto assume = lnode(LRule::Assume, {{}, prem, Kind::Relevant});
  auto w = lnode(LRule::Weaken, {{a}, prem, Kind::Relevant}, {assume});
  auto h2 = lnode(LRule::Hyp, {{a}, a, Kind::Relevant});
  auto e1 = lnode(LRule::ArrowE, {{a}, exists(b), Kind::Relevant}, {w, h2});
  auto h3 = lnode(LRule::Hyp, {{b}, b, Kind::Relevant});
  auto w2 = lnode(LRule::Weaken, {{b, a}, b, Kind::Relevant}, {h3});
  auto x1 = lnode(LRule::Exchange, {{a, b}, b, Kind::Relevant}, {w2});
  auto j1 = lnode(LRule::Just, {{a, b}, b, Kind::Irrelevant}, {x1});
  auto e2 = lnode(LRule::ExistsE, {{a}, b, Kind::Irrelevant}, {e1, j1});
  auto w3 = lnode(LRule::Weaken, {{a, exists(a)}, b, Kind::Irrelevant}, {e2});
  auto x2 = lnode(LRule::Exchange, {{exists(a), a}, b, Kind::Irrelevant}, {w3});
  auto e3 = lnode(LRule::ExistsE, {{exists(a)}, b, Kind::Irrelevant}, {h1, x2});
  auto i1 = lnode(LRule::ExistsI, {{exists(a)}, exists(b), Kind::Relevant}, {e3});
  return lnode(LRule::ArrowI, {{}, arrow(exists(a), exists(b)), Kind::Relevant}, {i1});
}

LDerivPtr witness2R(const PropPtr& a, const PropPtr& b) {
  PropPtr prem = arrow(exists(a), exists(b));
  auto assume = lnode(LRule::Assume, {{}, prem, Kind::Relevant});
  auto w = lnode(LRule::Weaken, {{a}, prem, Kind::Relevant}, {assume});
  auto hyp = lnode(LRule::Hyp, {{a}, a, Kind::Relevant});
  auto j = lnode(LRule::Just, {{a}, a, Kind::Irrelevant}, {hyp});
  auto i = lnode(LRule::ExistsI, {{a}, exists(a), Kind::Relevant}, {j});
  auto e = lnode(LRule::ArrowE, {{a}, exists(b), Kind::Relevant}, {w, i});
  return lnode(LRule::ArrowI, {{}, arrow(a, exists(b)), Kind::Relevant}, {e});
}

LDerivPtr witness3L(const PropPtr& a, const PropPtr& b) {
  PropPtr lolli = existsArrow(a, b);
  auto h1 = lnode(LRule::Hyp, {{exists(a)}, exists(a), Kind::Relevant});
  auto assume = lnode(LRule::Assume, {{}, lolli, Kind::Relevant});
  auto w = lnode(LRule::Weaken, {{a}, lolli, Kind::Relevant}, {assume});
  auto h2 = lnode(LRule::Hyp, {{a}, a, Kind::Relevant});
  auto e1 = lnode(LRule::LolliE, {{a}, b, Kind::Irrelevant}, {w, h2});
  auto w2 = lnode(LRule::Weaken, {{a, exists(a)}, b, Kind::Irrelevant}, {e1});
  auto x = lnode(LRule::Exchange, {{exists(a), a}, b, Kind::Irrelevant}, {w2});
  auto e2 = lnode(LRule::ExistsE, {{exists(a)}, b, Kind::Irrelevant}, {h1, x});
  return lnode(LRule::ArrowIj, {{}, arrow(exists(a), b), Kind::Irrelevant}, {e2});
}

LDerivPtr witness3R(const PropPtr& a, const PropPtr& b) {
  PropPtr prem = arrow(exists(a), b);
  auto assume = lnode(LRule::Assume, {{}, prem, Kind::Irrelevant});
  auto w = lnode(LRule::Weaken, {{a}, prem, Kind::Irrelevant}, {assume});
  auto hyp = lnode(LRule::Hyp, {{a}, a, Kind::Relevant});
  auto j = lnode(LRule::Just, {{a}, a, Kind::Irrelevant}, {hyp});
  auto i1 = lnode(LRule::ExistsI, {{a}, exists(a), Kind::Relevant}, {j});
  auto e = lnode(LRule::ArrowEj, {{a}, b, Kind::Irrelevant}, {w, i1});
  return lnode(LRule::LolliI, {{}, existsArrow(a, b), Kind::Relevant}, {e});
}

LDerivPtr witness5(const PropPtr& a, const PropPtr& b) {
  PropPtr ab = arrow(a, b);
  auto h1 = lnode(LRule::Hyp, {{exists(a)}, exists(a), Kind::Relevant});
  auto assume = lnode(LRule::Assume, {{}, exists(ab), Kind::Relevant});
  auto w1 = lnode(LRule::Weaken, {{a}, exists(ab), Kind::Relevant}, {assume});
  auto h2 = lnode(LRule::Hyp, {{ab}, ab, Kind::Relevant});
  auto w2 = lnode(LRule::Weaken, {{ab, a}, ab, Kind::Relevant}, {h2});
  auto x1 = lnode(LRule::Exchange, {{a, ab}, ab, Kind::Relevant}, {w2});
  auto h3 = lnode(LRule::Hyp, {{a}, a, Kind::Relevant});
  auto w3 = lnode(LRule::Weaken, {{a, ab}, a, Kind::Relevant}, {h3});
  auto e1 = lnode(LRule::ArrowE, {{a, ab}, b, Kind::Relevant}, {x1, w3});
  auto j1 = lnode(LRule::Just, {{a, ab}, b, Kind::Irrelevant}, {e1});
  auto e2 = lnode(LRule::ExistsE, {{a}, b, Kind::Irrelevant}, {w1, j1});
  auto w4 = lnode(LRule::Weaken, {{a, exists(a)}, b, Kind::Irrelevant}, {e2});
  auto x2 = lnode(LRule::Exchange, {{exists(a), a}, b, Kind::Irrelevant}, {w4});
  auto e3 = lnode(LRule::ExistsE, {{exists(a)}, b, Kind::Irrelevant}, {h1, x2});
  auto i1 = lnode(LRule::ExistsI, {{exists(a)}, exists(b), Kind::Relevant}, {e3});
  return lnode(LRule::ArrowI, {{}, arrow(exists(a), exists(b)), Kind::Relevant}, {i1});
}

LDerivPtr witness6(const PropPtr& a) {
  PropPtr exA = exists(a);
  PropPtr exExA = exists(exA);
  auto h1 = lnode(LRule::Hyp, {{exExA}, exExA, Kind::Relevant});
  auto h2 = lnode(LRule::Hyp, {{exA}, exA, Kind::Relevant});
  auto h3 = lnode(LRule::Hyp, {{a}, a, Kind::Relevant});
  auto j1 = lnode(LRule::Just, {{a}, a, Kind::Irrelevant}, {h3});
  auto w1 = lnode(LRule::Weaken, {{a, exA}, a, Kind::Irrelevant}, {j1});
  auto x1 = lnode(LRule::Exchange, {{exA, a}, a, Kind::Irrelevant}, {w1});
  auto e1 = lnode(LRule::ExistsE, {{exA}, a, Kind::Irrelevant}, {h2, x1});
  auto w2 = lnode(LRule::Weaken, {{exA, exExA}, a, Kind::Irrelevant}, {e1});
  auto x2 = lnode(LRule::Exchange, {{exExA, exA}, a, Kind::Irrelevant}, {w2});
  auto e2 = lnode(LRule::ExistsE, {{exExA}, a, Kind::Irrelevant}, {h1, x2});
  auto i1 = lnode(LRule::ExistsI, {{exExA}, exA, Kind::Relevant}, {e2});
  return lnode(LRule::ArrowI, {{}, arrow(exExA, exA), Kind::Relevant}, {i1});
}

}  // namespace

LDerivPtr propositionWitness(PropWitness which, const PropPtr& a, const PropPtr& b) {
  switch (which) {
    case PropWitness::P1L: return witness1L(a, b);
    case PropWitness::P1R: return witness1R(a, b);
    case PropWitness::P2L: return witness2L(a, b);
    case PropWitness::P2R: return witness2R(a, b);
    case PropWitness::P3L: return witness3L(a, b);
    case PropWitness::P3R: return witness3R(a, b);
    case PropWitness::P4L: {
      // arrow just true in, composed through the lolli form via 1R then 3L
      auto to = witness3L(a, b);
      return plugAssume(to, {{}, existsArrow(a, b), Kind::Relevant}, witness1R(a, b));
    }
    case PropWitness::P4R: {
      auto to = witness1L(a, b);
      return plugAssume(to, {{}, existsArrow(a, b), Kind::Relevant}, witness3R(a, b));
    }
    case PropWitness::P5: return witness5(a, b);
    case PropWitness::P6: return witness6(a);
  }
  throw std::invalid_argument("propositionWitness: unknown selector");
}

}  // namespace jex
