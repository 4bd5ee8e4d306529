/* C interface to the jex kernel: propositions, expressions, typing
 * derivations, reduction, the lax-logic translation, and the batch drivers
 * used by the command line tool.
 *
 * Conventions: every object is an opaque handle released with the matching
 * _free function; functions return jex_status (0 on success); returned
 * strings are heap copies released with jex_string_free; on failure
 * jex_last_error() describes the most recent error in the calling thread.
 */
#ifndef JEX_H
#define JEX_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  JEX_OK = 0,
  JEX_ERR_CHECK = 1,   /* type/check failure */
  JEX_ERR_PARSE = 2,   /* syntax error */
  JEX_ERR_COUNTEREXAMPLE = 3,
  JEX_ERR_FUEL = 4,    /* fuel exhausted before a normal form */
  JEX_ERR_ARG = 5,     /* null pointer or bad argument */
} jex_status;

enum {
  JEX_RELEVANT = 0,   /* t : A  */
  JEX_IRRELEVANT = 1, /* e :: A */
};

/* formatting flags */
enum {
  JEX_FMT_UNICODE = 1, /* ∃, ⟨⟩, λ instead of Ex, [], \ */
  JEX_FMT_RESUGAR = 2, /* print A -> Ex B as A -o B */
  JEX_FMT_JSON = 4,    /* drivers: machine-readable reports */
};

typedef struct jex_prop jex_prop;
typedef struct jex_expr jex_expr;
typedef struct jex_deriv jex_deriv;   /* typing derivation */
typedef struct jex_lderiv jex_lderiv; /* logical derivation */
typedef struct jex_trace jex_trace;   /* reduction trace */

const char* jex_last_error(void);
void jex_string_free(char* s);

/* parsing and printing */
jex_status jex_prop_parse(const char* text, jex_prop** out);
jex_status jex_expr_parse(const char* text, jex_expr** out);
void jex_prop_free(jex_prop* p);
void jex_expr_free(jex_expr* e);
char* jex_prop_format(const jex_prop* p, unsigned flags);
char* jex_expr_format(const jex_expr* e, unsigned flags);
int jex_prop_equal(const jex_prop* a, const jex_prop* b);
int jex_expr_alpha_equal(const jex_expr* a, const jex_expr* b);
int jex_expr_is_term(const jex_expr* e);

/* typing; ctx_text is "x:p, y:q -> r" or NULL for the empty context */
jex_status jex_infer(const char* ctx_text, const jex_expr* e, int kind, jex_prop** out_type,
                     jex_deriv** out_deriv);
jex_status jex_check(const char* ctx_text, const jex_expr* e, int kind, const jex_prop* type,
                     jex_deriv** out_deriv);
void jex_deriv_free(jex_deriv* d);
int jex_deriv_replay(const jex_deriv* d);
char* jex_deriv_format(const jex_deriv* d);

/* logical derivations */
void jex_lderiv_free(jex_lderiv* d);
jex_status jex_deriv_erase(const jex_deriv* d, jex_lderiv** out);
int jex_lderiv_check(const jex_lderiv* d);
jex_status jex_lderiv_elaborate(const jex_lderiv* d, jex_lderiv** out);
char* jex_lderiv_format(const jex_lderiv* d);
jex_status jex_lderiv_parse(const char* sexpr, jex_lderiv** out);

/* reduction; *out is NULL when e is already a normal form */
jex_status jex_step(const jex_expr* e, jex_expr** out, int* out_step_kind);
jex_status jex_normalize(const jex_expr* e, long fuel, jex_expr** out, jex_trace** out_trace);
void jex_trace_free(jex_trace* t);
size_t jex_trace_size(const jex_trace* t);
const char* jex_trace_kind_name(const jex_trace* t, size_t i);
char* jex_trace_expr_format(const jex_trace* t, size_t i, unsigned flags);
jex_status jex_eta_expand(const char* ctx_text, const jex_expr* e, const jex_prop* type, int kind,
                          jex_expr** out);

/* lax bridge */
jex_status jex_prop_to_lax(const jex_prop* p, char** out_text);
jex_status jex_lax_parse(const char* lax_text, jex_prop** out);

/* batch drivers; out_report receives the full textual (or JSON) report and
 * the return value doubles as the suggested process exit code */
jex_status jex_run_source(const char* source, long fuel, int normalize_mode, unsigned flags,
                          char** out_report);
jex_status jex_trace_source(const char* expr_text, long fuel, unsigned flags, char** out_report);
jex_status jex_translate(const char* prop_text, int to_lax, unsigned flags, char** out_report);
jex_status jex_derive(const char* builder, const char* const* props, size_t nprops, unsigned flags,
                      char** out_report);
jex_status jex_fuzz(const char* suite, unsigned long long seed, long count, int max_depth,
                    long fuel, unsigned flags, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* JEX_H */
