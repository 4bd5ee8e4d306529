#include "jex/driver.hpp"

#include "jex/derived.hpp"
#include "jex/lax.hpp"
#include "jex/logic.hpp"
#include "jex/printer.hpp"
#include "jex/sexpr.hpp"
#include "jex/subst.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <sstream>

namespace jex {

namespace {

using Json = nlohmann::ordered_json;

PrintOpts printOpts(const RunOptions& o) { return {o.unicodeSyms, o.resugar}; }

std::string stepsWord(size_t n) {
  return "[" + std::to_string(n) + (n == 1 ? " step]" : " steps]");
}

std::string declName(Decl::Tag tag) {
  switch (tag) {
    case Decl::Tag::Def: return "def";
    case Decl::Tag::Check: return "check";
    case Decl::Tag::Normalize: return "normalize";
    case Decl::Tag::Trace: return "trace";
    case Decl::Tag::Translate: return "translate";
    case Decl::Tag::Derive: return "derive";
    case Decl::Tag::Derivation: return "derivation";
  }
  return "?";
}

struct BuilderOutput {
  std::vector<std::string> lines;
};

[[noreturn]] void builderUsage(const std::string& builder, const std::string& expected) {
  throw std::invalid_argument("derive " + builder + " expects " + expected);
}

BuilderOutput buildDerive(const std::string& builder, const std::vector<PropPtr>& args,
                          const PrintOpts& po) {
  BuilderOutput out;
  auto emitComputational = [&](const Context& ctx, const DerivedResult& r, Kind kind,
                               const PropPtr& type) {
    if (!ctx.items().empty()) out.lines.push_back("ctx: " + printContext(ctx, po));
    out.lines.push_back("term: " + printExpr(r.expr, po));
    out.lines.push_back("type: " + printProp(type, po) + "  [" + kindSymbol(kind) + "]");
    out.lines.push_back("derivation:");
    out.lines.push_back(printTypingSexpr(r.deriv));
  };
  auto emitLogical = [&](const LDerivPtr& d) {
    out.lines.push_back("conclusion: " + printJudgment(d->conclusion));
    for (auto& a : assumptions(d)) out.lines.push_back("assumes: " + printJudgment(a));
    out.lines.push_back("derivation:");
    out.lines.push_back(printLogicalSexpr(d));
  };
  auto need = [&](size_t n, const std::string& what) {
    if (args.size() != n) builderUsage(builder, what);
  };

  if (builder == "trunc-intro") {
    need(1, "one proposition");
    Context ctx = Context().extended("x", args[0]);
    DerivedResult r = truncIntro(ctx, var("x"));
    emitComputational(ctx, r, Kind::Relevant, exists(args[0]));
  } else if (builder == "trunc-elim") {
    need(2, "two propositions");
    Context ctx = Context().extended("f", arrow(args[0], args[1]));
    DerivedResult r = truncElim(ctx, var("f"));
    emitComputational(ctx, r, Kind::Irrelevant, arrow(exists(args[0]), args[1]));
  } else if (builder == "lax-i") {
    need(1, "one proposition");
    DerivedResult r = laxAxiom(LaxAxiom::I, args[0]);
    emitComputational(Context(), r, Kind::Relevant, arrow(args[0], exists(args[0])));
  } else if (builder == "lax-ii") {
    need(1, "one proposition");
    DerivedResult r = laxAxiom(LaxAxiom::II, args[0]);
    emitComputational(Context(), r, Kind::Relevant,
                      arrow(exists(exists(args[0])), exists(args[0])));
  } else if (builder == "lax-iii") {
    need(2, "two propositions");
    DerivedResult r = laxAxiom(LaxAxiom::III, args[0], args[1]);
    emitComputational(Context(), r, Kind::Relevant,
                      arrow(arrow(args[0], args[1]),
                            arrow(exists(args[0]), exists(args[1]))));
  } else {
    static const std::map<std::string, PropWitness> witnesses = {
        {"prop-1l", PropWitness::P1L}, {"prop-1r", PropWitness::P1R},
        {"prop-2l", PropWitness::P2L}, {"prop-2r", PropWitness::P2R},
        {"prop-3l", PropWitness::P3L}, {"prop-3r", PropWitness::P3R},
        {"prop-4l", PropWitness::P4L}, {"prop-4r", PropWitness::P4R},
        {"prop-5", PropWitness::P5},   {"prop-6", PropWitness::P6},
    };
    auto it = witnesses.find(builder);
    if (it == witnesses.end())
      throw std::invalid_argument("unknown builder '" + builder + "'");
    bool unary = it->second == PropWitness::P6;
    if (unary)
      need(1, "one proposition");
    else
      need(2, "two propositions");
    LDerivPtr d = propositionWitness(it->second, args[0], unary ? nullptr : args[1]);
    std::string why;
    if (!checkLogical(d, &why))
      throw std::logic_error("witness for " + builder + " does not check: " + why);
    emitLogical(d);
  }
  return out;
}

struct DeclOutcome {
  bool ok = true;
  bool fuel = false;
  std::string statusLine;
  std::vector<std::string> extraLines;
  Json json;
};

class SourceRunner {
 public:
  SourceRunner(const RunOptions& opts) : opts_(opts), po_(printOpts(opts)) {}

  DeclOutcome run(const Decl& d) {
    DeclOutcome out;
    out.json["line"] = d.line;
    out.json["decl"] = declName(d.tag);
    try {
      switch (d.tag) {
        case Decl::Tag::Def: return runDef(d);
        case Decl::Tag::Check: return runCheck(d);
        case Decl::Tag::Normalize: return runNormalize(d);
        case Decl::Tag::Trace: return runTrace(d);
        case Decl::Tag::Translate: return runTranslateDecl(d);
        case Decl::Tag::Derive: return runDeriveDecl(d);
        case Decl::Tag::Derivation: return runDerivationDecl(d);
      }
    } catch (const FuelExhausted& e) {
      out.ok = false;
      out.fuel = true;
      out.statusLine = fail(d, std::string(e.what()) + " " + stepsWord(e.partial.size()));
      out.json["status"] = "fuel";
      return out;
    } catch (const std::exception& e) {
      out.ok = false;
      out.statusLine = fail(d, e.what());
      out.json["status"] = "fail";
      out.json["detail"] = e.what();
      return out;
    }
    return out;
  }

 private:
  std::string head(const Decl& d) { return declName(d.tag) + "@" + std::to_string(d.line); }
  std::string ok(const Decl& d, const std::string& rest) {
    return head(d) + ": ok" + (rest.empty() ? "" : "  " + rest);
  }
  std::string fail(const Decl& d, const std::string& rest) {
    return head(d) + ": FAIL  " + rest;
  }

  ExprPtr resolve(const ExprPtr& e) {
    ExprPtr cur = e;
    for (auto& [name, body] : env_)
      if (freeVars(cur).count(name)) cur = replaceFree(body, name, cur);
    return cur;
  }

  DeclOutcome runDef(const Decl& d) {
    DeclOutcome out;
    out.json["line"] = d.line;
    out.json["decl"] = "def";
    if (env_.count(d.name)) {
      out.ok = false;
      out.statusLine = fail(d, "redefinition of '" + d.name + "'");
      out.json["status"] = "fail";
      out.json["detail"] = "redefinition";
      return out;
    }
    env_[d.name] = resolve(d.expr);
    out.statusLine = ok(d, d.name);
    out.json["status"] = "ok";
    return out;
  }

  DeclOutcome runCheck(const Decl& d) {
    DeclOutcome out;
    out.json["line"] = d.line;
    out.json["decl"] = "check";
    ExprPtr e = resolve(d.expr);
    std::string judgment =
        printExpr(e, po_) + " " + kindSymbol(d.kind) + " " + printProp(d.prop, po_);
    out.json["judgment"] = judgment;
    try {
      checkAgainst(Context(), e, d.kind, d.prop);
      out.statusLine = ok(d, judgment);
      out.json["status"] = "ok";
    } catch (const TypeError& err) {
      out.ok = false;
      out.statusLine = fail(d, err.what());
      out.json["status"] = "fail";
      out.json["detail"] = err.what();
    }
    return out;
  }

  DeclOutcome runNormalize(const Decl& d) {
    DeclOutcome out;
    out.json["line"] = d.line;
    out.json["decl"] = "normalize";
    ExprPtr e = resolve(d.expr);
    NormalizeResult r = normalize(e, opts_.fuel);  // FuelExhausted handled by caller
    std::string rest;
    if (opts_.printNormalForms)
      rest = printExpr(e, po_) + " ==> " + printExpr(r.expr, po_) + "  " + stepsWord(r.trace.size());
    else
      rest = "==> " + printExpr(r.expr, po_) + "  " + stepsWord(r.trace.size());
    out.statusLine = ok(d, rest);
    out.json["status"] = "ok";
    out.json["steps"] = r.trace.size();
    out.json["normal_form"] = printExpr(r.expr, po_);
    return out;
  }

  DeclOutcome runTrace(const Decl& d) {
    DeclOutcome out;
    out.json["line"] = d.line;
    out.json["decl"] = "trace";
    ExprPtr e = resolve(d.expr);
    NormalizeResult r = normalize(e, opts_.fuel);
    out.statusLine = ok(d, stepsWord(r.trace.size()));
    out.extraLines.push_back("  " + printExpr(e, po_));
    for (auto& entry : r.trace)
      out.extraLines.push_back("  ==[" + std::string(stepKindName(entry.kind)) + "]==> " +
                               printExpr(entry.expr, po_));
    out.json["status"] = "ok";
    out.json["steps"] = r.trace.size();
    return out;
  }

  DeclOutcome runTranslateDecl(const Decl& d) {
    DeclOutcome out;
    out.json["line"] = d.line;
    out.json["decl"] = "translate";
    std::string lax = printLaxProp(toLax(d.prop));
    out.statusLine = ok(d, printProp(d.prop, po_) + "  ~>  " + lax);
    out.json["status"] = "ok";
    out.json["lax"] = lax;
    return out;
  }

  DeclOutcome runDeriveDecl(const Decl& d) {
    DeclOutcome out;
    out.json["line"] = d.line;
    out.json["decl"] = "derive";
    BuilderOutput b = buildDerive(d.name, d.args, po_);
    std::string argText;
    for (auto& a : d.args) argText += " " + printProp(a, po_);
    out.statusLine = ok(d, d.name + argText);
    for (auto& line : b.lines) {
      std::istringstream is(line);
      std::string sub;
      while (std::getline(is, sub)) out.extraLines.push_back("  " + sub);
    }
    out.json["status"] = "ok";
    return out;
  }

  DeclOutcome runDerivationDecl(const Decl& d) {
    DeclOutcome out;
    out.json["line"] = d.line;
    out.json["decl"] = "derivation";
    std::string label = d.name.empty() ? "(unnamed)" : d.name;
    std::string why;
    bool valid = d.logical ? checkLogical(d.logical, &why) : replayDerivation(d.typing, &why);
    if (valid) {
      out.statusLine = ok(d, label);
      out.json["status"] = "ok";
    } else {
      out.ok = false;
      out.statusLine = fail(d, label + ": " + why);
      out.json["status"] = "fail";
      out.json["detail"] = why;
    }
    out.json["judgment"] =
        d.logical ? printJudgment(d.logical->conclusion)
                  : printExpr(d.typing->expr, po_) + " " + kindSymbol(d.typing->kind) + " " +
                        printProp(d.typing->type, po_);
    return out;
  }

  const RunOptions& opts_;
  PrintOpts po_;
  std::map<std::string, ExprPtr> env_;
};

}  // namespace

RunResult runSource(const std::string& source, const RunOptions& opts) {
  SourceFile file;
  try {
    file = parseSource(source);
  } catch (const ParseError& e) {
    if (opts.json) {
      Json j;
      j["status"] = "syntax-error";
      j["detail"] = e.what();
      return {j.dump(2) + "\n", kExitSyntaxError};
    }
    return {std::string("syntax error: ") + e.what() + "\n", kExitSyntaxError};
  }

  SourceRunner runner(opts);
  std::ostringstream os;
  Json decls = Json::array();
  size_t failed = 0, fuelFailures = 0;
  for (auto& d : file.decls) {
    DeclOutcome out = runner.run(d);
    if (!out.ok) {
      ++failed;
      if (out.fuel) ++fuelFailures;
    }
    os << out.statusLine << "\n";
    for (auto& line : out.extraLines) os << line << "\n";
    decls.push_back(out.json);
  }
  int exit = kExitOk;
  if (failed > 0) exit = failed == fuelFailures ? kExitFuelExhausted : kExitCheckFailed;

  if (opts.json) {
    Json j;
    j["status"] = failed == 0 ? "ok" : "fail";
    j["declarations"] = decls;
    j["failed"] = failed;
    return {j.dump(2) + "\n", exit};
  }
  if (failed == 0)
    os << "result: ok (" << file.decls.size() << " declarations)\n";
  else
    os << "result: FAIL (" << failed << " of " << file.decls.size() << " declarations)\n";
  return {os.str(), exit};
}

RunResult runTraceExpr(const std::string& exprText, const RunOptions& opts) {
  PrintOpts po = printOpts(opts);
  ExprPtr e;
  try {
    e = parseExpr(exprText);
  } catch (const ParseError& err) {
    return {std::string("syntax error: ") + err.what() + "\n", kExitSyntaxError};
  }
  std::ostringstream os;
  os << printExpr(e, po) << "\n";
  try {
    NormalizeResult r = normalize(e, opts.fuel);
    for (auto& entry : r.trace)
      os << "==[" << stepKindName(entry.kind) << "]==> " << printExpr(entry.expr, po) << "\n";
    os << stepsWord(r.trace.size()) << "\n";
    return {os.str(), kExitOk};
  } catch (const FuelExhausted& fe) {
    for (auto& entry : fe.partial)
      os << "==[" << stepKindName(entry.kind) << "]==> " << printExpr(entry.expr, po) << "\n";
    os << "fuel exhausted " << stepsWord(fe.partial.size()) << "\n";
    return {os.str(), kExitFuelExhausted};
  }
}

RunResult runTranslate(const std::string& propText, bool toLaxDirection, const RunOptions& opts) {
  try {
    if (toLaxDirection) {
      PropPtr p = parseProp(propText);
      return {printLaxProp(toLax(p)) + "\n", kExitOk};
    }
    LaxPropPtr p = parseLaxProp(propText);
    return {printProp(fromLax(p), printOpts(opts)) + "\n", kExitOk};
  } catch (const ParseError& e) {
    return {std::string("syntax error: ") + e.what() + "\n", kExitSyntaxError};
  }
}

RunResult runDerive(const std::string& builder, const std::vector<std::string>& args,
                    const RunOptions& opts) {
  std::vector<PropPtr> props;
  try {
    for (auto& a : args) props.push_back(parseProp(a));
  } catch (const ParseError& e) {
    return {std::string("syntax error: ") + e.what() + "\n", kExitSyntaxError};
  }
  try {
    BuilderOutput b = buildDerive(builder, props, printOpts(opts));
    std::ostringstream os;
    for (auto& line : b.lines) os << line << "\n";
    return {os.str(), kExitOk};
  } catch (const std::exception& e) {
    return {std::string("error: ") + e.what() + "\n", kExitCheckFailed};
  }
}

namespace {

struct Counterexample {
  uint64_t index;
  std::string reason;
  Sample sample;
  ExprPtr shrunk;
};

// Property interface: returns empty string when the sample passes, else the
// failure reason.
using Property = std::function<std::string(const Context&, const ExprPtr&, Kind)>;

std::string checkSubjectReduction(const Context& ctx, const ExprPtr& e, Kind kind, long fuel) {
  Typing t;
  try {
    t = infer(ctx, e, kind);
  } catch (const TypeError& err) {
    return std::string("sample does not infer: ") + err.what();
  }
  ExprPtr cur = e;
  for (long i = 0; i < fuel; ++i) {
    auto next = step(cur);
    if (!next) return {};
    cur = next->expr;
    try {
      checkAgainst(ctx, cur, kind, t.type);
    } catch (const TypeError& err) {
      return std::string("step ") + stepKindName(next->kind) +
             " broke preservation: " + err.what();
    }
  }
  return "fuel exhausted";
}

std::string checkNormalization(const Context& ctx, const ExprPtr& e, Kind kind, long fuel) {
  PropPtr type;
  try {
    type = infer(ctx, e, kind).type;
  } catch (const TypeError& err) {
    return std::string("sample does not infer: ") + err.what();
  }
  NormalizeResult first;
  try {
    first = normalize(e, fuel);
  } catch (const FuelExhausted&) {
    return "fuel exhausted";
  }
  if (ctx.items().empty()) {
    bool okShape = false;
    switch (type->tag) {
      case Prop::Tag::Arrow:
        okShape = first.expr->tag == Expr::Tag::Lam || first.expr->tag == Expr::Tag::LamJ;
        break;
      case Prop::Tag::Exists:
        okShape = first.expr->tag == Expr::Tag::Box || first.expr->tag == Expr::Tag::BoxJ;
        break;
      case Prop::Tag::Atom:
        okShape = false;
        break;
    }
    if (!okShape) return "closed normal form is not canonical for its type";
  }
  // determinism: the trace replays identically
  NormalizeResult second = normalize(e, fuel);
  if (first.trace.size() != second.trace.size()) return "trace replay changed length";
  for (size_t i = 0; i < first.trace.size(); ++i) {
    if (first.trace[i].kind != second.trace[i].kind) return "trace replay changed a step kind";
    if (!alphaEq(first.trace[i].expr, second.trace[i].expr))
      return "trace replay changed an expression";
  }
  return {};
}

std::string checkRoundtrip(const Context& ctx, const ExprPtr& e, Kind kind) {
  (void)ctx;
  (void)kind;
  for (PrintOpts po : {PrintOpts{false, false}, PrintOpts{true, false}, PrintOpts{false, true}}) {
    std::string text = printExpr(e, po);
    ExprPtr back;
    try {
      back = parseExpr(text);
    } catch (const ParseError& err) {
      return "printed form does not parse: " + text + " (" + err.what() + ")";
    }
    if (!alphaEq(back, e)) return "round trip is not alpha-equal: " + text;
  }
  return {};
}

// Greedy structural shrinking: keep replacing the expression by an immediate
// subexpression that still fails the property.
ExprPtr shrink(const Context& ctx, ExprPtr e, Kind kind,
               const std::function<std::string(const Context&, const ExprPtr&, Kind)>& prop) {
  for (;;) {
    std::vector<ExprPtr> subs;
    if (e->a) subs.push_back(e->a);
    if (e->b) subs.push_back(e->b);
    ExprPtr next;
    for (auto& s : subs) {
      for (Kind k : {kind, kind == Kind::Relevant ? Kind::Irrelevant : Kind::Relevant}) {
        try {
          infer(ctx, s, k);
        } catch (...) {
          continue;
        }
        if (!prop(ctx, s, k).empty()) {
          next = s;
          kind = k;
          break;
        }
      }
      if (next) break;
    }
    if (!next) return e;
    e = next;
  }
}

}  // namespace

RunResult runFuzz(const std::string& suite, uint64_t seed, long count, int maxDepth,
                  const RunOptions& opts) {
  std::function<std::string(const Context&, const ExprPtr&, Kind)> property;
  if (suite == "subject-reduction")
    property = [&](const Context& c, const ExprPtr& e, Kind k) {
      return checkSubjectReduction(c, e, k, opts.fuel);
    };
  else if (suite == "normalization")
    property = [&](const Context& c, const ExprPtr& e, Kind k) {
      return checkNormalization(c, e, k, opts.fuel);
    };
  else if (suite == "roundtrip")
    property = checkRoundtrip;
  else
    return {"error: unknown suite '" + suite + "'\n", kExitCheckFailed};

  GenConfig cfg;
  cfg.seed = seed;
  cfg.maxDepth = maxDepth;
  Generator gen(cfg);

  std::ostringstream os;
  os << "fuzz " << suite << ": seed=" << seed << " count=" << count << " depth<=" << maxDepth
     << " fuel=" << opts.fuel << "\n";

  for (long i = 0; i < count; ++i) {
    Kind kind = (i % 2 == 0) ? Kind::Irrelevant : Kind::Relevant;
    Sample s = gen.sample(static_cast<uint64_t>(i), kind);
    std::string reason = property(s.ctx, s.expr, s.kind);
    if (reason.empty()) continue;

    ExprPtr small = shrink(s.ctx, s.expr, s.kind, property);
    PrintOpts po = printOpts(opts);
    if (opts.json) {
      Json j;
      j["status"] = "counterexample";
      j["suite"] = suite;
      j["seed"] = seed;
      j["count"] = count;
      j["counterexample"] = Json{{"index", i},
                                 {"ctx", printContext(s.ctx, po)},
                                 {"expr", printExpr(s.expr, po)},
                                 {"kind", kindSymbol(s.kind)},
                                 {"reason", reason},
                                 {"shrunk", printExpr(small, po)}};
      return {j.dump(2) + "\n", kExitCounterexample};
    }
    os << "counterexample (index " << i << "):\n";
    os << "  ctx:  " << printContext(s.ctx, po) << "\n";
    os << "  expr: " << printExpr(s.expr, po) << "\n";
    os << "  kind: " << kindSymbol(s.kind) << "\n";
    os << "  reason: " << reason << "\n";
    os << "  shrunk: " << printExpr(small, po) << "\n";
    return {os.str(), kExitCounterexample};
  }

  if (opts.json) {
    Json j;
    j["status"] = "ok";
    j["suite"] = suite;
    j["seed"] = seed;
    j["count"] = count;
    j["counterexample"] = nullptr;
    return {j.dump(2) + "\n", kExitOk};
  }
  os << "ok: no counterexample found\n";
  return {os.str(), kExitOk};
}

}  // namespace jex
