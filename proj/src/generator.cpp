#include "jex/generator.hpp"

#include <functional>
#include <random>

namespace jex {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Rng = std::mt19937_64;

Rng rngFor(uint64_t seed, uint64_t index, uint64_t salt) {
  return Rng(splitmix64(splitmix64(seed ^ 0x6a09e667f3bcc908ULL) ^ splitmix64(index) ^ salt));
}

size_t pickWeighted(Rng& rng, const std::vector<double>& ws) {
  std::discrete_distribution<size_t> dist(ws.begin(), ws.end());
  return dist(rng);
}

bool chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

size_t below(Rng& rng, size_t n) {
  return std::uniform_int_distribution<size_t>(0, n - 1)(rng);
}

// Conservative inhabitation: hypotheses plus introduction rules. Monotone in
// the hypothesis list, which keeps every recursive generation goal safe.
bool fin(const std::vector<PropPtr>& have, const PropPtr& goal) {
  for (auto& h : have)
    if (propEq(h, goal)) return true;
  switch (goal->tag) {
    case Prop::Tag::Atom:
      return false;
    case Prop::Tag::Arrow: {
      std::vector<PropPtr> extended = have;
      extended.push_back(goal->lhs);
      return fin(extended, goal->rhs);
    }
    case Prop::Tag::Exists:
      return fin(have, goal->lhs);
  }
  return false;
}

struct Gen {
  const GenConfig& cfg;
  Rng& rng;
  std::set<std::string> used;

  double weight(Expr::Tag tag) const {
    auto it = cfg.weights.find(tag);
    return it == cfg.weights.end() ? 1.0 : it->second;
  }

  std::vector<PropPtr> types(const Context& ctx) const {
    std::vector<PropPtr> out;
    for (auto& [_, ty] : ctx.items()) out.push_back(ty);
    return out;
  }

  PropPtr genProp(int depth) {
    if (depth <= 0) return atom(cfg.atomPool[below(rng, cfg.atomPool.size())]);
    switch (pickWeighted(rng, {2.0, 1.5, 1.5})) {
      case 1:
        return arrow(genProp(depth - 1), genProp(depth - 1));
      case 2:
        return exists(genProp(depth - 1));
      default:
        return atom(cfg.atomPool[below(rng, cfg.atomPool.size())]);
    }
  }

  std::string freshName(const std::string& hint) {
    std::string name = fresh(used, hint);
    used.insert(name);
    return name;
  }

  // Deterministic minimal inhabitant: a term, valid at both judgments.
  // Requires fin(ctx, goal).
  ExprPtr finish(const Context& ctx, const PropPtr& goal) {
    for (auto it = ctx.items().rbegin(); it != ctx.items().rend(); ++it)
      if (propEq(it->second, goal)) return var(it->first);
    switch (goal->tag) {
      case Prop::Tag::Arrow: {
        std::string x = freshName("x");
        return lam(x, goal->lhs, finish(ctx.extended(x, goal->lhs), goal->rhs));
      }
      case Prop::Tag::Exists:
        return box(finish(ctx, goal->lhs));
      case Prop::Tag::Atom:
        throw std::logic_error("generator: uninhabitable goal slipped through");
    }
    throw std::logic_error("generator: malformed goal");
  }

  // An elimination domain A that is itself inhabitable; null if none found.
  PropPtr pickDomain(const Context& ctx) {
    auto have = types(ctx);
    for (int attempt = 0; attempt < 4; ++attempt) {
      PropPtr a;
      if (!ctx.items().empty() && chance(rng, 0.6))
        a = ctx.items()[below(rng, ctx.items().size())].second;
      else
        a = genProp(2);
      if (fin(have, a)) return a;
    }
    return nullptr;
  }

  ExprPtr genRelevant(const Context& ctx, const PropPtr& goal, int depth) {
    if (depth <= 0) return finish(ctx, goal);
    auto have = types(ctx);

    enum Choice { VarC, LamC, BoxC, ApC };
    std::vector<Choice> choices;
    std::vector<double> ws;
    std::vector<std::string> hits;
    for (auto& [name, ty] : ctx.items())
      if (propEq(ty, goal)) hits.push_back(name);
    if (!hits.empty()) {
      choices.push_back(VarC);
      ws.push_back(weight(Expr::Tag::Var));
    }
    if (goal->tag == Prop::Tag::Arrow) {
      std::vector<PropPtr> inner = have;
      inner.push_back(goal->lhs);
      if (fin(inner, goal->rhs)) {
        choices.push_back(LamC);
        ws.push_back(weight(Expr::Tag::Lam));
      }
    }
    if (goal->tag == Prop::Tag::Exists && fin(have, goal->lhs)) {
      choices.push_back(BoxC);
      ws.push_back(weight(Expr::Tag::Box));
    }
    if (depth >= 2) {
      choices.push_back(ApC);
      ws.push_back(weight(Expr::Tag::Ap));
    }
    if (choices.empty()) return finish(ctx, goal);

    switch (choices[pickWeighted(rng, ws)]) {
      case VarC:
        return var(hits[below(rng, hits.size())]);
      case LamC: {
        std::string x = freshName("x");
        return lam(x, goal->lhs, genRelevant(ctx.extended(x, goal->lhs), goal->rhs, depth - 1));
      }
      case BoxC:
        return box(genIrrelevant(ctx, goal->lhs, depth - 1));
      case ApC: {
        PropPtr a = pickDomain(ctx);
        if (!a) return finish(ctx, goal);
        // fin(have + a, goal) holds by monotonicity, so the head goal is safe
        ExprPtr fun = genRelevant(ctx, arrow(a, goal), depth - 1);
        ExprPtr arg = genRelevant(ctx, a, depth - 1);
        return ap(fun, arg);
      }
    }
    return finish(ctx, goal);
  }

  ExprPtr genIrrelevant(const Context& ctx, const PropPtr& goal, int depth) {
    if (depth <= 0) return finish(ctx, goal);
    auto have = types(ctx);

    enum Choice { TermC, LamJC, BoxJC, ApJC, LetC, LetJC };
    std::vector<Choice> choices{TermC};
    std::vector<double> ws{1.2};
    if (goal->tag == Prop::Tag::Arrow) {
      std::vector<PropPtr> inner = have;
      inner.push_back(goal->lhs);
      if (fin(inner, goal->rhs)) {
        choices.push_back(LamJC);
        ws.push_back(weight(Expr::Tag::LamJ));
      }
    }
    if (goal->tag == Prop::Tag::Exists && fin(have, goal->lhs)) {
      choices.push_back(BoxJC);
      ws.push_back(weight(Expr::Tag::BoxJ));
    }
    if (depth >= 2) {
      choices.push_back(ApJC);
      ws.push_back(weight(Expr::Tag::ApJ));
      choices.push_back(LetC);
      ws.push_back(weight(Expr::Tag::LetBox));
      choices.push_back(LetJC);
      ws.push_back(weight(Expr::Tag::LetBoxJ));
    }

    switch (choices[pickWeighted(rng, ws)]) {
      case TermC:
        return genRelevant(ctx, goal, depth);
      case LamJC: {
        std::string x = freshName("x");
        return lamJ(x, goal->lhs, genIrrelevant(ctx.extended(x, goal->lhs), goal->rhs, depth - 1));
      }
      case BoxJC:
        return boxJ(genIrrelevant(ctx, goal->lhs, depth - 1));
      case ApJC: {
        PropPtr a = pickDomain(ctx);
        if (!a) return genRelevant(ctx, goal, depth);
        ExprPtr fun = genIrrelevant(ctx, arrow(a, goal), depth - 1);
        ExprPtr arg = genRelevant(ctx, a, depth - 1);
        return apJ(fun, arg);
      }
      case LetC: {
        PropPtr a = pickDomain(ctx);
        if (!a) return genRelevant(ctx, goal, depth);
        ExprPtr scrut = genRelevant(ctx, exists(a), depth - 1);
        std::string x = freshName("x");
        return letBox(x, scrut, genIrrelevant(ctx.extended(x, a), goal, depth - 1));
      }
      case LetJC: {
        PropPtr a = pickDomain(ctx);
        if (!a) return genRelevant(ctx, goal, depth);
        ExprPtr scrut = genIrrelevant(ctx, exists(a), depth - 1);
        std::string x = freshName("x");
        return letBoxJ(x, scrut, genIrrelevant(ctx.extended(x, a), goal, depth - 1));
      }
    }
    return finish(ctx, goal);
  }

  Context genContext() {
    Context ctx;
    if (chance(rng, 0.5)) {
      size_t n = 1 + below(rng, 3);
      for (size_t i = 0; i < n; ++i) {
        std::string name = freshName("h");
        ctx = ctx.extended(name, genProp(static_cast<int>(below(rng, 3))));
      }
    }
    return ctx;
  }

  PropPtr genGoal(const Context& ctx, int depthCap) {
    auto have = types(ctx);
    for (int attempt = 0; attempt < 8; ++attempt) {
      PropPtr goal = genProp(depthCap);
      if (fin(have, goal)) return goal;
    }
    if (!ctx.items().empty()) return ctx.items()[below(rng, ctx.items().size())].second;
    PropPtr a = atom(cfg.atomPool[below(rng, cfg.atomPool.size())]);
    return arrow(a, a);
  }
};

}  // namespace

Sample Generator::sample(uint64_t index, Kind kind) const {
  Rng rng = rngFor(cfg_.seed, index, kind == Kind::Relevant ? 0x52454cULL : 0x495252ULL);
  Gen g{cfg_, rng, {}};
  Context ctx = g.genContext();
  PropPtr goal = g.genGoal(ctx, std::min(4, cfg_.maxDepth));
  int depth = 1 + static_cast<int>(below(rng, static_cast<size_t>(cfg_.maxDepth)));
  ExprPtr e = kind == Kind::Relevant ? g.genRelevant(ctx, goal, depth)
                                     : g.genIrrelevant(ctx, goal, depth);
  return {ctx, e, goal, kind};
}

PropPtr Generator::sampleProp(uint64_t index) const {
  Rng rng = rngFor(cfg_.seed, index, 0x50524f50ULL);
  Gen g{cfg_, rng, {}};
  return g.genProp(std::min(8, cfg_.maxDepth));
}

Generator::SubstPair Generator::sampleSubstPair(uint64_t index) const {
  Rng rng = rngFor(cfg_.seed, index, 0x53554232ULL);
  Gen g{cfg_, rng, {}};
  Context ctx = g.genContext();
  PropPtr a = g.genGoal(ctx, 3);
  ExprPtr t = g.genRelevant(ctx, a, 4 + static_cast<int>(below(rng, 4)));
  std::string x = g.freshName("s");
  Context inner = ctx.extended(x, a);
  PropPtr c = g.genGoal(inner, 3);
  ExprPtr e = g.genIrrelevant(inner, c, 4 + static_cast<int>(below(rng, 4)));
  return {ctx, t, a, x, e, c};
}

Generator::SubstPair Generator::sampleLetSpinePair(uint64_t index) const {
  Rng rng = rngFor(cfg_.seed, index, 0x53554231ULL);
  Gen g{cfg_, rng, {}};
  Context ctx = g.genContext();
  PropPtr a = g.genGoal(ctx, 3);

  // term leaf | let [_] = t in spine | let [_]j = e in spine
  std::function<ExprPtr(const Context&, int)> spine = [&](const Context& c0, int depth) -> ExprPtr {
    if (depth <= 0 || chance(g.rng, 0.4)) return g.genRelevant(c0, a, 3);
    PropPtr w = g.pickDomain(c0);
    if (!w) return g.genRelevant(c0, a, 3);
    std::string y = g.freshName("y");
    if (chance(g.rng, 0.5)) {
      ExprPtr scrut = g.genRelevant(c0, exists(w), 3);
      return letBox(y, scrut, spine(c0.extended(y, w), depth - 1));
    }
    ExprPtr scrut = g.genIrrelevant(c0, exists(w), 3);
    return letBoxJ(y, scrut, spine(c0.extended(y, w), depth - 1));
  };
  ExprPtr substitutee = spine(ctx, 3);

  std::string x = g.freshName("s");
  Context inner = ctx.extended(x, a);
  PropPtr c = g.genGoal(inner, 3);
  ExprPtr e = g.genIrrelevant(inner, c, 4 + static_cast<int>(below(rng, 4)));
  return {ctx, substitutee, a, x, e, c};
}

}  // namespace jex
