/*
 * C interface to the regproc library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Strings returned through `char**` out-parameters
 * are heap allocated and must be released with rp_string_free. Every
 * function returning rp_status leaves its out-parameters untouched on
 * failure; rp_last_error() then describes the failure (per thread).
 */
#ifndef REGPROC_H
#define REGPROC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(REGPROC_BUILDING)
#    define RP_API __declspec(dllexport)
#  else
#    define RP_API __declspec(dllimport)
#  endif
#else
#  define RP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rp_status {
  RP_OK = 0,
  RP_ERR_PARSE = 1,
  RP_ERR_FORMAT = 2,
  RP_ERR_STATE_LIMIT = 3,
  RP_ERR_UNSUPPORTED = 4,
  RP_ERR_INVALID_AUTOMATON = 5,
  RP_ERR_INVALID_ARGUMENT = 6,
  RP_ERR_INTERNAL = 7
} rp_status;

typedef enum rp_theory { RP_THEORY_BPA = 0, RP_THEORY_PA = 1, RP_THEORY_ACP = 2 } rp_theory;

typedef enum rp_property { RP_PROPERTY_BPA = 0, RP_PROPERTY_PA = 1 } rp_property;

typedef enum rp_format { RP_FORMAT_TEXT = 0, RP_FORMAT_JSON = 1 } rp_format;

/* Default cap on derived states. */
#define RP_DEFAULT_MAX_STATES ((size_t)100000)

typedef struct rp_expr rp_expr;
typedef struct rp_gamma rp_gamma;
typedef struct rp_automaton rp_automaton;
typedef struct rp_encoding rp_encoding;

RP_API const char* rp_last_error(void);
RP_API const char* rp_status_name(rp_status status);
RP_API void rp_string_free(char* s);

/* Expressions */
RP_API rp_status rp_expr_parse(const char* text, rp_expr** out);
RP_API rp_status rp_expr_random(rp_theory theory, unsigned max_depth, uint64_t seed, rp_expr** out);
RP_API rp_status rp_expr_render(const rp_expr* e, char** out);
RP_API rp_status rp_expr_classify(const rp_expr* e, rp_theory* out);
/* RP_ERR_UNSUPPORTED on encapsulation. */
RP_API rp_status rp_expr_oc(const rp_expr* e, size_t* out);
RP_API void rp_expr_free(rp_expr* e);

/* Communication functions, in the `a b -> c` line format */
RP_API rp_status rp_gamma_parse(const char* text, rp_gamma** out);
RP_API rp_status rp_gamma_render(const rp_gamma* g, char** out);
/* Writes the validation report as JSON when `report` is non-null. */
RP_API rp_status rp_gamma_validate(const rp_gamma* g, int* associative, int* handshaking,
                                   char** report);
RP_API void rp_gamma_free(rp_gamma* g);

/* Automata. A null gamma means the everywhere-undefined function. */
RP_API rp_status rp_automaton_derive(const rp_expr* e, const rp_gamma* g, size_t max_states,
                                     rp_automaton** out);
RP_API rp_status rp_automaton_from_json(const char* text, rp_automaton** out);
RP_API rp_status rp_automaton_to_json(const rp_automaton* a, char** out);
RP_API rp_status rp_automaton_to_dot(const rp_automaton* a, char** out);
RP_API size_t rp_automaton_num_states(const rp_automaton* a);
RP_API size_t rp_automaton_num_transitions(const rp_automaton* a);
RP_API void rp_automaton_free(rp_automaton* a);

/* Analyses. Verdict out-parameters receive 1 for true, 0 for false. */
RP_API rp_status rp_scc(const rp_automaton* a, rp_format format, char** report);
RP_API rp_status rp_check_property(const rp_automaton* a, rp_property property, rp_format format,
                                   int* holds, char** report);
RP_API rp_status rp_bisimilar(const rp_automaton* a, const rp_automaton* b, rp_format format,
                              int* bisimilar, char** report);
RP_API rp_status rp_isomorphic(const rp_automaton* a, const rp_automaton* b, rp_format format,
                               int* isomorphic, char** report);
RP_API rp_status rp_minimize(const rp_automaton* a, rp_automaton** out);

/* Encoding of finite automata */
RP_API rp_status rp_encode(const rp_automaton* fa, rp_encoding** out);
RP_API rp_status rp_encoding_expression(const rp_encoding* enc, char** out);
RP_API rp_status rp_encoding_gamma(const rp_encoding* enc, char** out);
RP_API rp_status rp_encoding_manifest(const rp_encoding* enc, char** out);
RP_API void rp_encoding_free(rp_encoding* enc);
RP_API rp_status rp_verify_encoding(const rp_automaton* fa, size_t max_states, rp_format format,
                                    int* isomorphic, char** report);

#ifdef __cplusplus
}
#endif

#endif /* REGPROC_H */
