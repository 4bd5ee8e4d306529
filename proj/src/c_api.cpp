#include "jex/jex.h"

#include "jex/driver.hpp"
#include "jex/lax.hpp"
#include "jex/logic.hpp"
#include "jex/parser.hpp"
#include "jex/printer.hpp"
#include "jex/reduction.hpp"
#include "jex/sexpr.hpp"

#include <cstring>
#include <string>

using namespace jex;

struct jex_prop {
  PropPtr value;
};
struct jex_expr {
  ExprPtr value;
};
struct jex_deriv {
  DerivPtr value;
};
struct jex_lderiv {
  LDerivPtr value;
};
struct jex_trace {
  std::vector<TraceEntry> entries;
};

namespace {

thread_local std::string g_lastError;

void setError(const std::string& msg) { g_lastError = msg; }

char* copyString(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

PrintOpts optsFrom(unsigned flags) {
  return {(flags & JEX_FMT_UNICODE) != 0, (flags & JEX_FMT_RESUGAR) != 0};
}

jex_status classify(const std::exception& e) {
  setError(e.what());
  if (dynamic_cast<const ParseError*>(&e)) return JEX_ERR_PARSE;
  if (dynamic_cast<const FuelExhausted*>(&e)) return JEX_ERR_FUEL;
  return JEX_ERR_CHECK;
}

template <typename F>
jex_status guard(F&& body) {
  try {
    g_lastError.clear();
    return body();
  } catch (const std::exception& e) {
    return classify(e);
  } catch (...) {
    setError("unknown error");
    return JEX_ERR_CHECK;
  }
}

jex_status parseCtx(const char* ctx_text, Context& out) {
  out = ctx_text && *ctx_text ? parseContext(ctx_text) : Context();
  return JEX_OK;
}

jex_status reportResult(const RunResult& r, char** out_report) {
  if (out_report) *out_report = copyString(r.report);
  if (r.exitCode != kExitOk) setError("see report");
  return static_cast<jex_status>(r.exitCode);
}

}  // namespace

extern "C" {

const char* jex_last_error(void) { return g_lastError.c_str(); }

void jex_string_free(char* s) { delete[] s; }

jex_status jex_prop_parse(const char* text, jex_prop** out) {
  if (!text || !out) return setError("null argument"), JEX_ERR_ARG;
  return guard([&] {
    *out = new jex_prop{parseProp(text)};
    return JEX_OK;
  });
}

jex_status jex_expr_parse(const char* text, jex_expr** out) {
  if (!text || !out) return setError("null argument"), JEX_ERR_ARG;
  return guard([&] {
    *out = new jex_expr{parseExpr(text)};
    return JEX_OK;
  });
}

void jex_prop_free(jex_prop* p) { delete p; }
void jex_expr_free(jex_expr* e) { delete e; }

char* jex_prop_format(const jex_prop* p, unsigned flags) {
  if (!p) return nullptr;
  return copyString(printProp(p->value, optsFrom(flags)));
}

char* jex_expr_format(const jex_expr* e, unsigned flags) {
  if (!e) return nullptr;
  return copyString(printExpr(e->value, optsFrom(flags)));
}

int jex_prop_equal(const jex_prop* a, const jex_prop* b) {
  return a && b && propEq(a->value, b->value) ? 1 : 0;
}

int jex_expr_alpha_equal(const jex_expr* a, const jex_expr* b) {
  return a && b && alphaEq(a->value, b->value) ? 1 : 0;
}

int jex_expr_is_term(const jex_expr* e) { return e && isTerm(e->value) ? 1 : 0; }

jex_status jex_infer(const char* ctx_text, const jex_expr* e, int kind, jex_prop** out_type,
                     jex_deriv** out_deriv) {
  if (!e) return setError("null expression"), JEX_ERR_ARG;
  return guard([&] {
    Context ctx;
    parseCtx(ctx_text, ctx);
    Typing t = infer(ctx, e->value, kind == JEX_RELEVANT ? Kind::Relevant : Kind::Irrelevant);
    if (out_type) *out_type = new jex_prop{t.type};
    if (out_deriv) *out_deriv = new jex_deriv{t.deriv};
    return JEX_OK;
  });
}

jex_status jex_check(const char* ctx_text, const jex_expr* e, int kind, const jex_prop* type,
                     jex_deriv** out_deriv) {
  if (!e || !type) return setError("null argument"), JEX_ERR_ARG;
  return guard([&] {
    Context ctx;
    parseCtx(ctx_text, ctx);
    DerivPtr d = checkAgainst(ctx, e->value,
                              kind == JEX_RELEVANT ? Kind::Relevant : Kind::Irrelevant,
                              type->value);
    if (out_deriv) *out_deriv = new jex_deriv{d};
    return JEX_OK;
  });
}

void jex_deriv_free(jex_deriv* d) { delete d; }

int jex_deriv_replay(const jex_deriv* d) {
  if (!d) return 0;
  std::string why;
  if (replayDerivation(d->value, &why)) return 1;
  setError(why);
  return 0;
}

char* jex_deriv_format(const jex_deriv* d) {
  if (!d) return nullptr;
  return copyString(printTypingSexpr(d->value));
}

void jex_lderiv_free(jex_lderiv* d) { delete d; }

jex_status jex_deriv_erase(const jex_deriv* d, jex_lderiv** out) {
  if (!d || !out) return setError("null argument"), JEX_ERR_ARG;
  return guard([&] {
    *out = new jex_lderiv{erase(d->value)};
    return JEX_OK;
  });
}

int jex_lderiv_check(const jex_lderiv* d) {
  if (!d) return 0;
  std::string why;
  if (checkLogical(d->value, &why)) return 1;
  setError(why);
  return 0;
}

jex_status jex_lderiv_elaborate(const jex_lderiv* d, jex_lderiv** out) {
  if (!d || !out) return setError("null argument"), JEX_ERR_ARG;
  return guard([&] {
    *out = new jex_lderiv{elaborateJ(d->value)};
    return JEX_OK;
  });
}

char* jex_lderiv_format(const jex_lderiv* d) {
  if (!d) return nullptr;
  return copyString(printLogicalSexpr(d->value));
}

jex_status jex_lderiv_parse(const char* sexpr, jex_lderiv** out) {
  if (!sexpr || !out) return setError("null argument"), JEX_ERR_ARG;
  return guard([&] {
    ParsedDerivation parsed = parseDerivationSexpr(sexpr);
    if (!parsed.logical) {
      setError("not a logical derivation");
      return JEX_ERR_PARSE;
    }
    *out = new jex_lderiv{parsed.logical};
    return JEX_OK;
  });
}

jex_status jex_step(const jex_expr* e, jex_expr** out, int* out_step_kind) {
  if (!e || !out) return setError("null argument"), JEX_ERR_ARG;
  return guard([&] {
    auto next = step(e->value);
    if (!next) {
      *out = nullptr;
      if (out_step_kind) *out_step_kind = -1;
      return JEX_OK;
    }
    *out = new jex_expr{next->expr};
    if (out_step_kind) *out_step_kind = static_cast<int>(next->kind);
    return JEX_OK;
  });
}

jex_status jex_normalize(const jex_expr* e, long fuel, jex_expr** out, jex_trace** out_trace) {
  if (!e || !out) return setError("null argument"), JEX_ERR_ARG;
  try {
    g_lastError.clear();
    NormalizeResult r = normalize(e->value, fuel);
    *out = new jex_expr{r.expr};
    if (out_trace) *out_trace = new jex_trace{std::move(r.trace)};
    return JEX_OK;
  } catch (const FuelExhausted& fe) {
    setError(fe.what());
    *out = new jex_expr{fe.last};
    if (out_trace) *out_trace = new jex_trace{fe.partial};
    return JEX_ERR_FUEL;
  } catch (const std::exception& e2) {
    return classify(e2);
  }
}

void jex_trace_free(jex_trace* t) { delete t; }

size_t jex_trace_size(const jex_trace* t) { return t ? t->entries.size() : 0; }

const char* jex_trace_kind_name(const jex_trace* t, size_t i) {
  if (!t || i >= t->entries.size()) return nullptr;
  return stepKindName(t->entries[i].kind);
}

char* jex_trace_expr_format(const jex_trace* t, size_t i, unsigned flags) {
  if (!t || i >= t->entries.size()) return nullptr;
  return copyString(printExpr(t->entries[i].expr, optsFrom(flags)));
}

jex_status jex_eta_expand(const char* ctx_text, const jex_expr* e, const jex_prop* type, int kind,
                          jex_expr** out) {
  if (!e || !type || !out) return setError("null argument"), JEX_ERR_ARG;
  return guard([&] {
    Context ctx;
    parseCtx(ctx_text, ctx);
    *out = new jex_expr{etaExpand(ctx, e->value, type->value,
                                  kind == JEX_RELEVANT ? Kind::Relevant : Kind::Irrelevant)};
    return JEX_OK;
  });
}

jex_status jex_prop_to_lax(const jex_prop* p, char** out_text) {
  if (!p || !out_text) return setError("null argument"), JEX_ERR_ARG;
  return guard([&] {
    *out_text = copyString(printLaxProp(toLax(p->value)));
    return JEX_OK;
  });
}

jex_status jex_lax_parse(const char* lax_text, jex_prop** out) {
  if (!lax_text || !out) return setError("null argument"), JEX_ERR_ARG;
  return guard([&] {
    *out = new jex_prop{fromLax(parseLaxProp(lax_text))};
    return JEX_OK;
  });
}

jex_status jex_run_source(const char* source, long fuel, int normalize_mode, unsigned flags,
                          char** out_report) {
  if (!source) return setError("null source"), JEX_ERR_ARG;
  return guard([&] {
    RunOptions opts;
    opts.fuel = fuel > 0 ? fuel : kDefaultFuel;
    opts.json = (flags & JEX_FMT_JSON) != 0;
    opts.unicodeSyms = (flags & JEX_FMT_UNICODE) != 0;
    opts.resugar = (flags & JEX_FMT_RESUGAR) != 0;
    opts.printNormalForms = normalize_mode != 0;
    return reportResult(runSource(source, opts), out_report);
  });
}

jex_status jex_trace_source(const char* expr_text, long fuel, unsigned flags, char** out_report) {
  if (!expr_text) return setError("null expression"), JEX_ERR_ARG;
  return guard([&] {
    RunOptions opts;
    opts.fuel = fuel > 0 ? fuel : kDefaultFuel;
    opts.unicodeSyms = (flags & JEX_FMT_UNICODE) != 0;
    opts.resugar = (flags & JEX_FMT_RESUGAR) != 0;
    return reportResult(runTraceExpr(expr_text, opts), out_report);
  });
}

jex_status jex_translate(const char* prop_text, int to_lax, unsigned flags, char** out_report) {
  if (!prop_text) return setError("null proposition"), JEX_ERR_ARG;
  return guard([&] {
    RunOptions opts;
    opts.unicodeSyms = (flags & JEX_FMT_UNICODE) != 0;
    opts.resugar = (flags & JEX_FMT_RESUGAR) != 0;
    return reportResult(runTranslate(prop_text, to_lax != 0, opts), out_report);
  });
}

jex_status jex_derive(const char* builder, const char* const* props, size_t nprops, unsigned flags,
                      char** out_report) {
  if (!builder) return setError("null builder"), JEX_ERR_ARG;
  return guard([&] {
    std::vector<std::string> args;
    for (size_t i = 0; i < nprops; ++i) args.emplace_back(props[i]);
    RunOptions opts;
    opts.unicodeSyms = (flags & JEX_FMT_UNICODE) != 0;
    opts.resugar = (flags & JEX_FMT_RESUGAR) != 0;
    return reportResult(runDerive(builder, args, opts), out_report);
  });
}

jex_status jex_fuzz(const char* suite, unsigned long long seed, long count, int max_depth,
                    long fuel, unsigned flags, char** out_report) {
  if (!suite) return setError("null suite"), JEX_ERR_ARG;
  return guard([&] {
    RunOptions opts;
    opts.fuel = fuel > 0 ? fuel : kDefaultFuel;
    opts.json = (flags & JEX_FMT_JSON) != 0;
    return reportResult(runFuzz(suite, seed, count, max_depth > 0 ? max_depth : 12, opts),
                        out_report);
  });
}

}  // extern "C"
