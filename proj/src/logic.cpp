#include "jex/logic.hpp"

#include "jex/printer.hpp"

#include <algorithm>
#include <sstream>

namespace jex {

const char* lruleName(LRule r) {
  switch (r) {
    case LRule::Hyp: return "hyp";
    case LRule::Just: return "just";
    case LRule::ArrowI: return "->I";
    case LRule::ArrowE: return "->E";
    case LRule::ArrowIj: return "->Ij";
    case LRule::ArrowEj: return "->Ej";
    case LRule::ExistsI: return "ExI";
    case LRule::ExistsE: return "ExE";
    case LRule::ExistsIj: return "ExIj";
    case LRule::ExistsEj: return "ExEj";
    case LRule::LolliI: return "-oI";
    case LRule::LolliE: return "-oE";
    case LRule::LolliIj: return "-oIj";
    case LRule::LolliEj: return "-oEj";
    case LRule::Sub1: return "sub1";
    case LRule::Sub2: return "sub2";
    case LRule::Weaken: return "w";
    case LRule::Exchange: return "ex";
    case LRule::Contract: return "contr";
    case LRule::R: return "R";
    case LRule::Assume: return "assume";
  }
  return "?";
}

bool judgmentEq(const LogicalJudgment& a, const LogicalJudgment& b) {
  if (a.kind != b.kind || a.hyps.size() != b.hyps.size()) return false;
  if (!propEq(a.goal, b.goal)) return false;
  for (size_t i = 0; i < a.hyps.size(); ++i)
    if (!propEq(a.hyps[i], b.hyps[i])) return false;
  return true;
}

std::string printJudgment(const LogicalJudgment& j) {
  std::ostringstream os;
  bool first = true;
  for (auto& h : j.hyps) {
    if (!first) os << ", ";
    first = false;
    os << printProp(h);
  }
  if (!j.hyps.empty()) os << " ";
  os << "|- " << printProp(j.goal) << (j.kind == Kind::Relevant ? " true" : " just true");
  return os.str();
}

LDerivPtr lnode(LRule rule, LogicalJudgment conclusion, std::vector<LDerivPtr> premises) {
  auto d = std::make_shared<LogicalDerivation>();
  d->rule = rule;
  d->conclusion = std::move(conclusion);
  d->premises = std::move(premises);
  return d;
}

namespace {

bool hypsEq(const std::vector<PropPtr>& a, const std::vector<PropPtr>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!propEq(a[i], b[i])) return false;
  return true;
}

// premise hyps == conclusion hyps plus one entry appended at the end
bool extendsByOne(const std::vector<PropPtr>& shorter, const std::vector<PropPtr>& longer,
                  PropPtr* added = nullptr) {
  if (longer.size() != shorter.size() + 1) return false;
  for (size_t i = 0; i < shorter.size(); ++i)
    if (!propEq(shorter[i], longer[i])) return false;
  if (added) *added = longer.back();
  return true;
}

bool isPermutation(const std::vector<PropPtr>& a, const std::vector<PropPtr>& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::string> ka, kb;
  ka.reserve(a.size());
  kb.reserve(b.size());
  for (auto& p : a) ka.push_back(printProp(p));
  for (auto& p : b) kb.push_back(printProp(p));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

bool checkNode(const LDerivPtr& d, const std::string& path, std::string* why) {
  auto bad = [&](const std::string& detail) {
    if (why)
      *why = path + " (" + lruleName(d->rule) + "): " + detail + " at [" +
             printJudgment(d->conclusion) + "]";
    return false;
  };
  auto arity = [&](size_t n) { return d->premises.size() == n; };
  const LogicalJudgment& c = d->conclusion;

  switch (d->rule) {
    case LRule::Assume:
      if (!arity(0)) return bad("assume takes no premises");
      break;
    case LRule::Hyp: {
      if (!arity(0)) return bad("hyp takes no premises");
      if (c.kind != Kind::Relevant) return bad("hyp concludes a true judgment");
      bool found = false;
      for (auto& h : c.hyps) found = found || propEq(h, c.goal);
      if (!found) return bad("goal is not among the hypotheses");
      break;
    }
    case LRule::Just: {
      if (!arity(1)) return bad("just takes one premise");
      const auto& p = d->premises[0]->conclusion;
      if (c.kind != Kind::Irrelevant || p.kind != Kind::Relevant)
        return bad("just turns true into just true");
      if (!hypsEq(p.hyps, c.hyps) || !propEq(p.goal, c.goal)) return bad("judgment mismatch");
      break;
    }
    case LRule::ArrowI:
    case LRule::ArrowIj: {
      if (!arity(1)) return bad("introduction takes one premise");
      Kind star = d->rule == LRule::ArrowI ? Kind::Relevant : Kind::Irrelevant;
      if (c.kind != star) return bad("conclusion kind disagrees with the rule");
      if (c.goal->tag != Prop::Tag::Arrow) return bad("goal is not an arrow");
      const auto& p = d->premises[0]->conclusion;
      if (p.kind != star) return bad("premise kind disagrees with the rule");
      PropPtr added;
      if (!extendsByOne(c.hyps, p.hyps, &added)) return bad("premise must add one hypothesis");
      if (!propEq(added, c.goal->lhs)) return bad("added hypothesis is not the domain");
      if (!propEq(p.goal, c.goal->rhs)) return bad("premise goal is not the codomain");
      break;
    }
    case LRule::ArrowE:
    case LRule::ArrowEj: {
      if (!arity(2)) return bad("elimination takes two premises");
      Kind star = d->rule == LRule::ArrowE ? Kind::Relevant : Kind::Irrelevant;
      if (c.kind != star) return bad("conclusion kind disagrees with the rule");
      const auto& fun = d->premises[0]->conclusion;
      const auto& arg = d->premises[1]->conclusion;
      if (fun.kind != star) return bad("major premise kind disagrees with the rule");
      if (arg.kind != Kind::Relevant) return bad("minor premise must be true");
      if (!hypsEq(fun.hyps, c.hyps) || !hypsEq(arg.hyps, c.hyps))
        return bad("premise hypotheses differ");
      if (fun.goal->tag != Prop::Tag::Arrow) return bad("major premise is not an arrow");
      if (!propEq(fun.goal->lhs, arg.goal)) return bad("argument does not match the domain");
      if (!propEq(fun.goal->rhs, c.goal)) return bad("conclusion is not the codomain");
      break;
    }
    case LRule::ExistsI:
    case LRule::ExistsIj: {
      if (!arity(1)) return bad("introduction takes one premise");
      Kind star = d->rule == LRule::ExistsI ? Kind::Relevant : Kind::Irrelevant;
      if (c.kind != star) return bad("conclusion kind disagrees with the rule");
      if (c.goal->tag != Prop::Tag::Exists) return bad("goal is not Ex A");
      const auto& p = d->premises[0]->conclusion;
      if (p.kind != Kind::Irrelevant) return bad("premise must be just true");
      if (!hypsEq(p.hyps, c.hyps) || !propEq(p.goal, c.goal->lhs))
        return bad("premise judgment mismatch");
      break;
    }
    case LRule::ExistsE:
    case LRule::ExistsEj: {
      if (!arity(2)) return bad("elimination takes two premises");
      Kind star = d->rule == LRule::ExistsE ? Kind::Relevant : Kind::Irrelevant;
      if (c.kind != Kind::Irrelevant) return bad("conclusion must be just true");
      const auto& major = d->premises[0]->conclusion;
      const auto& minor = d->premises[1]->conclusion;
      if (major.kind != star) return bad("major premise kind disagrees with the rule");
      if (major.goal->tag != Prop::Tag::Exists) return bad("major premise is not Ex A");
      if (!hypsEq(major.hyps, c.hyps)) return bad("major premise hypotheses differ");
      if (minor.kind != Kind::Irrelevant) return bad("minor premise must be just true");
      PropPtr added;
      if (!extendsByOne(c.hyps, minor.hyps, &added)) return bad("minor premise must add one hypothesis");
      if (!propEq(added, major.goal->lhs)) return bad("added hypothesis is not the witness type");
      if (!propEq(minor.goal, c.goal)) return bad("minor premise goal differs");
      break;
    }
    case LRule::LolliI:
    case LRule::LolliIj: {
      if (!arity(1)) return bad("introduction takes one premise");
      Kind star = d->rule == LRule::LolliI ? Kind::Relevant : Kind::Irrelevant;
      if (c.kind != star) return bad("conclusion kind disagrees with the rule");
      if (c.goal->tag != Prop::Tag::Arrow || c.goal->rhs->tag != Prop::Tag::Exists)
        return bad("goal is not of the shape A -o B");
      const auto& p = d->premises[0]->conclusion;
      if (p.kind != Kind::Irrelevant) return bad("premise must be just true");
      PropPtr added;
      if (!extendsByOne(c.hyps, p.hyps, &added)) return bad("premise must add one hypothesis");
      if (!propEq(added, c.goal->lhs)) return bad("added hypothesis is not the domain");
      if (!propEq(p.goal, c.goal->rhs->lhs)) return bad("premise goal is not the codomain");
      break;
    }
    case LRule::LolliE:
    case LRule::LolliEj: {
      if (!arity(2)) return bad("elimination takes two premises");
      Kind star = d->rule == LRule::LolliE ? Kind::Relevant : Kind::Irrelevant;
      if (c.kind != Kind::Irrelevant) return bad("conclusion must be just true");
      const auto& fun = d->premises[0]->conclusion;
      const auto& arg = d->premises[1]->conclusion;
      if (fun.kind != star) return bad("major premise kind disagrees with the rule");
      if (arg.kind != Kind::Relevant) return bad("minor premise must be true");
      if (!hypsEq(fun.hyps, c.hyps) || !hypsEq(arg.hyps, c.hyps))
        return bad("premise hypotheses differ");
      if (fun.goal->tag != Prop::Tag::Arrow || fun.goal->rhs->tag != Prop::Tag::Exists)
        return bad("major premise is not of the shape A -o B");
      if (!propEq(fun.goal->lhs, arg.goal)) return bad("argument does not match the domain");
      if (!propEq(fun.goal->rhs->lhs, c.goal)) return bad("conclusion is not the codomain");
      break;
    }
    case LRule::Sub1: {
      if (!arity(2)) return bad("sub1 takes two premises");
      const auto& p1 = d->premises[0]->conclusion;
      const auto& p2 = d->premises[1]->conclusion;
      if (p1.kind != c.kind || p2.kind != c.kind) return bad("star must be consistent");
      if (!hypsEq(p1.hyps, c.hyps)) return bad("first premise hypotheses differ");
      PropPtr added;
      if (!extendsByOne(c.hyps, p2.hyps, &added)) return bad("second premise must add one hypothesis");
      if (!propEq(added, p1.goal)) return bad("cut formula mismatch");
      if (!propEq(p2.goal, c.goal)) return bad("second premise goal differs");
      break;
    }
    case LRule::Sub2: {
      if (!arity(2)) return bad("sub2 takes two premises");
      const auto& p1 = d->premises[0]->conclusion;
      const auto& p2 = d->premises[1]->conclusion;
      if (c.kind != Kind::Irrelevant) return bad("conclusion must be just true");
      if (p1.kind != Kind::Relevant) return bad("first premise must be true");
      if (p2.kind != Kind::Irrelevant) return bad("second premise must be just true");
      if (!hypsEq(p1.hyps, c.hyps)) return bad("first premise hypotheses differ");
      PropPtr added;
      if (!extendsByOne(c.hyps, p2.hyps, &added)) return bad("second premise must add one hypothesis");
      if (!propEq(added, p1.goal)) return bad("cut formula mismatch");
      if (!propEq(p2.goal, c.goal)) return bad("second premise goal differs");
      break;
    }
    case LRule::Weaken: {
      if (!arity(1)) return bad("weakening takes one premise");
      const auto& p = d->premises[0]->conclusion;
      if (p.kind != c.kind || !propEq(p.goal, c.goal)) return bad("judgment changed");
      if (!extendsByOne(p.hyps, c.hyps)) return bad("conclusion must add one hypothesis at the end");
      break;
    }
    case LRule::Exchange: {
      if (!arity(1)) return bad("exchange takes one premise");
      const auto& p = d->premises[0]->conclusion;
      if (p.kind != c.kind || !propEq(p.goal, c.goal)) return bad("judgment changed");
      if (!isPermutation(p.hyps, c.hyps)) return bad("hypotheses are not a permutation");
      break;
    }
    case LRule::Contract: {
      if (!arity(1)) return bad("contraction takes one premise");
      const auto& p = d->premises[0]->conclusion;
      if (p.kind != c.kind || !propEq(p.goal, c.goal)) return bad("judgment changed");
      if (p.hyps.size() != c.hyps.size() + 1) return bad("premise must have one extra hypothesis");
      if (!extendsByOne(c.hyps, p.hyps)) return bad("hypotheses differ");
      if (c.hyps.empty() || !propEq(p.hyps.back(), c.hyps.back()))
        return bad("contracted hypotheses must agree");
      break;
    }
    case LRule::R: {
      if (!arity(1)) return bad("R takes one premise");
      const auto& p = d->premises[0]->conclusion;
      if (p.kind != Kind::Relevant) return bad("premise must be true");
      if (c.kind != Kind::Irrelevant) return bad("conclusion must be just true");
      if (!hypsEq(p.hyps, c.hyps)) return bad("hypotheses differ");
      if (p.goal->tag != Prop::Tag::Arrow || p.goal->rhs->tag != Prop::Tag::Exists)
        return bad("premise is not of the shape A -> Ex B");
      if (c.goal->tag != Prop::Tag::Arrow) return bad("conclusion is not an arrow");
      if (!propEq(p.goal->lhs, c.goal->lhs) || !propEq(p.goal->rhs->lhs, c.goal->rhs))
        return bad("conclusion does not strip the Ex");
      break;
    }
  }

  for (size_t i = 0; i < d->premises.size(); ++i)
    if (!checkNode(d->premises[i], path + "." + std::to_string(i), why)) return false;
  return true;
}

}  // namespace

bool checkLogical(const LDerivPtr& d, std::string* why) { return checkNode(d, "root", why); }

std::vector<LogicalJudgment> assumptions(const LDerivPtr& d) {
  std::vector<LogicalJudgment> out;
  if (d->rule == LRule::Assume) out.push_back(d->conclusion);
  for (auto& p : d->premises) {
    auto sub = assumptions(p);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

bool containsJRule(const LDerivPtr& d) {
  switch (d->rule) {
    case LRule::ArrowIj:
    case LRule::ArrowEj:
    case LRule::ExistsIj:
    case LRule::ExistsEj:
      return true;
    default:
      break;
  }
  for (auto& p : d->premises)
    if (containsJRule(p)) return true;
  return false;
}

namespace {

LRule eraseRule(Rule r) {
  switch (r) {
    case Rule::Hyp: return LRule::Hyp;
    case Rule::Just: return LRule::Just;
    case Rule::ArrowI: return LRule::ArrowI;
    case Rule::ArrowE: return LRule::ArrowE;
    case Rule::ArrowIj: return LRule::ArrowIj;
    case Rule::ArrowEj: return LRule::ArrowEj;
    case Rule::ExistsI: return LRule::ExistsI;
    case Rule::ExistsE: return LRule::ExistsE;
    case Rule::ExistsIj: return LRule::ExistsIj;
    case Rule::ExistsEj: return LRule::ExistsEj;
  }
  return LRule::Assume;
}

LDerivPtr eraseRec(const DerivPtr& d) {
  LogicalJudgment j;
  for (auto& [name, ty] : d->ctx.items()) j.hyps.push_back(ty);
  j.goal = d->type;
  j.kind = d->kind;
  std::vector<LDerivPtr> premises;
  premises.reserve(d->premises.size());
  for (auto& p : d->premises) premises.push_back(eraseRec(p));
  return lnode(eraseRule(d->rule), std::move(j), std::move(premises));
}

}  // namespace

LDerivPtr erase(const DerivPtr& d) {
  std::string why;
  if (!replayDerivation(d, &why))
    throw std::invalid_argument("erase: derivation does not replay: " + why);
  return eraseRec(d);
}

namespace {

std::vector<PropPtr> withHyp(std::vector<PropPtr> hyps, const PropPtr& extra) {
  hyps.push_back(extra);
  return hyps;
}

LDerivPtr expandNode(const LDerivPtr& d);

LDerivPtr expandPremises(const LDerivPtr& d) {
  std::vector<LDerivPtr> ps;
  ps.reserve(d->premises.size());
  bool changed = false;
  for (auto& p : d->premises) {
    ps.push_back(expandNode(p));
    changed = changed || ps.back() != p;
  }
  if (!changed) return d;
  return lnode(d->rule, d->conclusion, std::move(ps));
}

LDerivPtr expandNode(const LDerivPtr& d) {
  LDerivPtr node = expandPremises(d);
  const auto& c = node->conclusion;
  switch (node->rule) {
    case LRule::ArrowIj: {
      // D :: G,A |- B just  ~~>  ExI; ->I; R
      const auto& body = node->premises[0];
      PropPtr a = c.goal->lhs, b = c.goal->rhs;
      auto exI = lnode(LRule::ExistsI, {withHyp(c.hyps, a), exists(b), Kind::Relevant}, {body});
      auto arrI = lnode(LRule::ArrowI, {c.hyps, arrow(a, exists(b)), Kind::Relevant}, {exI});
      return lnode(LRule::R, c, {arrI});
    }
    case LRule::ArrowEj: {
      // D1 :: G |- A->B just, D2 :: G |- A true  ~~>  ExI; hyp/w/->E/just; ExE
      const auto& fun = node->premises[0];
      const auto& arg = node->premises[1];
      PropPtr ab = fun->conclusion.goal;
      auto exI = lnode(LRule::ExistsI, {c.hyps, exists(ab), Kind::Relevant}, {fun});
      auto inner = withHyp(c.hyps, ab);
      auto hyp = lnode(LRule::Hyp, {inner, ab, Kind::Relevant});
      auto w = lnode(LRule::Weaken, {inner, arg->conclusion.goal, Kind::Relevant}, {arg});
      auto arrE = lnode(LRule::ArrowE, {inner, ab->rhs, Kind::Relevant}, {hyp, w});
      auto just = lnode(LRule::Just, {inner, ab->rhs, Kind::Irrelevant}, {arrE});
      return lnode(LRule::ExistsE, c, {exI, just});
    }
    case LRule::ExistsIj: {
      // D :: G |- A just  ~~>  ExI; just
      const auto& body = node->premises[0];
      auto exI = lnode(LRule::ExistsI, {c.hyps, c.goal, Kind::Relevant}, {body});
      return lnode(LRule::Just, c, {exI});
    }
    case LRule::ExistsEj: {
      // D1 :: G |- Ex A just, D2 :: G,A |- C just  ~~>  ExI; hyp/w/ex; ExE; ExE
      const auto& major = node->premises[0];
      const auto& minor = node->premises[1];
      PropPtr exA = major->conclusion.goal;
      PropPtr a = exA->lhs;
      auto exI = lnode(LRule::ExistsI, {c.hyps, exists(exA), Kind::Relevant}, {major});
      auto inner = withHyp(c.hyps, exA);
      auto hyp = lnode(LRule::Hyp, {inner, exA, Kind::Relevant});
      auto w = lnode(LRule::Weaken, {withHyp(withHyp(c.hyps, a), exA), c.goal, Kind::Irrelevant},
                     {minor});
      auto ex = lnode(LRule::Exchange, {withHyp(inner, a), c.goal, Kind::Irrelevant}, {w});
      auto exE1 = lnode(LRule::ExistsE, {inner, c.goal, Kind::Irrelevant}, {hyp, ex});
      return lnode(LRule::ExistsE, c, {exI, exE1});
    }
    case LRule::LolliI:
    case LRule::LolliIj: {
      // unfold the definition A -o B := A -> Ex B, then expand any j-rules
      bool rel = node->rule == LRule::LolliI;
      const auto& body = node->premises[0];
      PropPtr a = c.goal->lhs, exB = c.goal->rhs;
      Kind star = rel ? Kind::Relevant : Kind::Irrelevant;
      auto exI = lnode(rel ? LRule::ExistsI : LRule::ExistsIj, {withHyp(c.hyps, a), exB, star},
                       {body});
      auto arrI = lnode(rel ? LRule::ArrowI : LRule::ArrowIj, {c.hyps, c.goal, star}, {exI});
      return rel ? arrI : expandNode(arrI);
    }
    case LRule::LolliE:
    case LRule::LolliEj: {
      bool rel = node->rule == LRule::LolliE;
      const auto& fun = node->premises[0];
      const auto& arg = node->premises[1];
      PropPtr exB = fun->conclusion.goal->rhs;
      Kind star = rel ? Kind::Relevant : Kind::Irrelevant;
      auto arrE = lnode(rel ? LRule::ArrowE : LRule::ArrowEj, {c.hyps, exB, star}, {fun, arg});
      auto inner = withHyp(c.hyps, c.goal);
      auto hyp = lnode(LRule::Hyp, {inner, c.goal, Kind::Relevant});
      auto just = lnode(LRule::Just, {inner, c.goal, Kind::Irrelevant}, {hyp});
      auto exE = lnode(rel ? LRule::ExistsE : LRule::ExistsEj, c, {arrE, just});
      return rel ? exE : expandNode(exE);
    }
    default:
      return node;
  }
}

}  // namespace

LDerivPtr elaborateJ(const LDerivPtr& d) {
  std::string why;
  if (!checkLogical(d, &why))
    throw std::invalid_argument("elaborateJ: derivation does not check: " + why);
  return expandNode(d);
}

}  // namespace jex
