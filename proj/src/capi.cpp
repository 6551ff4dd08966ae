#include "regproc/regproc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "regproc/analysis.hpp"
#include "regproc/encoding.hpp"
#include "regproc/equivalence.hpp"
#include "regproc/error.hpp"
#include "regproc/io.hpp"
#include "regproc/semantics.hpp"
#include "regproc/syntax.hpp"

struct rp_expr {
  regproc::Expression value;
};

struct rp_gamma {
  regproc::CommFn value;
};

struct rp_automaton {
  regproc::Automaton value;
};

struct rp_encoding {
  regproc::EncodingResult value;
};

namespace {

thread_local std::string g_last_error;

rp_status status_of(regproc::ErrorKind k) {
  using regproc::ErrorKind;
  switch (k) {
    case ErrorKind::Parse: return RP_ERR_PARSE;
    case ErrorKind::Format: return RP_ERR_FORMAT;
    case ErrorKind::StateLimitExceeded: return RP_ERR_STATE_LIMIT;
    case ErrorKind::UnsupportedExpression: return RP_ERR_UNSUPPORTED;
    case ErrorKind::InvalidAutomaton: return RP_ERR_INVALID_AUTOMATON;
    case ErrorKind::InvalidArgument: return RP_ERR_INVALID_ARGUMENT;
  }
  return RP_ERR_INTERNAL;
}

// Runs `f`, translating exceptions into status codes.
template <class F>
rp_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return RP_OK;
  } catch (const regproc::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RP_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw regproc::InvalidArgument(std::string("null ") + what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const regproc::CommFn& gamma_or_empty(const rp_gamma* g) {
  static const regproc::CommFn empty;
  return g ? g->value : empty;
}

}  // namespace

extern "C" {

const char* rp_last_error(void) { return g_last_error.c_str(); }

const char* rp_status_name(rp_status status) {
  switch (status) {
    case RP_OK: return "ok";
    case RP_ERR_PARSE: return "parse error";
    case RP_ERR_FORMAT: return "format error";
    case RP_ERR_STATE_LIMIT: return "state limit exceeded";
    case RP_ERR_UNSUPPORTED: return "unsupported expression";
    case RP_ERR_INVALID_AUTOMATON: return "invalid automaton";
    case RP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void rp_string_free(char* s) { std::free(s); }

// --- expressions -----------------------------------------------------------

rp_status rp_expr_parse(const char* text, rp_expr** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new rp_expr{regproc::parse_expression(text)};
  });
}

rp_status rp_expr_random(rp_theory theory, unsigned max_depth, uint64_t seed, rp_expr** out) {
  return guarded([&] {
    require(out, "output");
    auto t = theory == RP_THEORY_BPA ? regproc::Theory::BPA
             : theory == RP_THEORY_PA ? regproc::Theory::PA
                                      : regproc::Theory::ACP;
    *out = new rp_expr{regproc::generate_random_expression(t, max_depth, seed)};
  });
}

rp_status rp_expr_render(const rp_expr* e, char** out) {
  return guarded([&] {
    require(e, "expression");
    require(out, "output");
    *out = dup_string(regproc::render_expression(e->value));
  });
}

rp_status rp_expr_classify(const rp_expr* e, rp_theory* out) {
  return guarded([&] {
    require(e, "expression");
    require(out, "output");
    switch (regproc::classify_theory(e->value)) {
      case regproc::Theory::BPA: *out = RP_THEORY_BPA; break;
      case regproc::Theory::PA: *out = RP_THEORY_PA; break;
      case regproc::Theory::ACP: *out = RP_THEORY_ACP; break;
    }
  });
}

rp_status rp_expr_oc(const rp_expr* e, size_t* out) {
  return guarded([&] {
    require(e, "expression");
    require(out, "output");
    *out = regproc::oc_measure(e->value);
  });
}

void rp_expr_free(rp_expr* e) { delete e; }

// --- communication functions -----------------------------------------------

rp_status rp_gamma_parse(const char* text, rp_gamma** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new rp_gamma{regproc::parse_comm_fn(text)};
  });
}

rp_status rp_gamma_render(const rp_gamma* g, char** out) {
  return guarded([&] {
    require(g, "gamma");
    require(out, "output");
    *out = dup_string(regproc::render_comm_fn(g->value));
  });
}

rp_status rp_gamma_validate(const rp_gamma* g, int* associative, int* handshaking, char** report) {
  return guarded([&] {
    require(g, "gamma");
    auto v = regproc::validate_comm_fn(g->value);
    char* text = report ? dup_string(regproc::comm_validation_to_json(v)) : nullptr;
    if (associative) *associative = v.associative;
    if (handshaking) *handshaking = v.handshaking;
    if (report) *report = text;
  });
}

void rp_gamma_free(rp_gamma* g) { delete g; }

// --- automata --------------------------------------------------------------

rp_status rp_automaton_derive(const rp_expr* e, const rp_gamma* g, size_t max_states,
                              rp_automaton** out) {
  return guarded([&] {
    require(e, "expression");
    require(out, "output");
    *out = new rp_automaton{regproc::derive_automaton(e->value, gamma_or_empty(g), max_states)};
  });
}

rp_status rp_automaton_from_json(const char* text, rp_automaton** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    *out = new rp_automaton{regproc::automaton_from_json(text)};
  });
}

rp_status rp_automaton_to_json(const rp_automaton* a, char** out) {
  return guarded([&] {
    require(a, "automaton");
    require(out, "output");
    *out = dup_string(regproc::automaton_to_json(a->value));
  });
}

rp_status rp_automaton_to_dot(const rp_automaton* a, char** out) {
  return guarded([&] {
    require(a, "automaton");
    require(out, "output");
    *out = dup_string(regproc::automaton_to_dot(a->value));
  });
}

size_t rp_automaton_num_states(const rp_automaton* a) { return a ? a->value.num_states() : 0; }

size_t rp_automaton_num_transitions(const rp_automaton* a) {
  return a ? a->value.transitions().size() : 0;
}

void rp_automaton_free(rp_automaton* a) { delete a; }

// --- analyses --------------------------------------------------------------

rp_status rp_scc(const rp_automaton* a, rp_format format, char** report) {
  return guarded([&] {
    require(a, "automaton");
    require(report, "output");
    auto d = regproc::scc_decompose(a->value);
    *report = dup_string(format == RP_FORMAT_JSON ? regproc::scc_to_json(a->value, d)
                                                  : regproc::scc_to_text(a->value, d));
  });
}

rp_status rp_check_property(const rp_automaton* a, rp_property property, rp_format format,
                            int* holds, char** report) {
  return guarded([&] {
    require(a, "automaton");
    auto p = property == RP_PROPERTY_BPA ? regproc::Property::Bpa : regproc::Property::Pa;
    auto r = regproc::check_property(a->value, p);
    char* text = nullptr;
    if (report)
      text = dup_string(format == RP_FORMAT_JSON ? regproc::report_to_json(a->value, r)
                                                 : regproc::report_to_text(a->value, r));
    if (holds) *holds = r.holds;
    if (report) *report = text;
  });
}

rp_status rp_bisimilar(const rp_automaton* a, const rp_automaton* b, rp_format format,
                       int* bisimilar, char** report) {
  return guarded([&] {
    require(a, "automaton");
    require(b, "automaton");
    auto r = regproc::bisimilar(a->value, b->value);
    char* text = nullptr;
    if (report)
      text = dup_string(format == RP_FORMAT_JSON ? regproc::bisim_to_json(r) : regproc::bisim_to_text(r));
    if (bisimilar) *bisimilar = r.bisimilar;
    if (report) *report = text;
  });
}

rp_status rp_isomorphic(const rp_automaton* a, const rp_automaton* b, rp_format format,
                        int* isomorphic, char** report) {
  return guarded([&] {
    require(a, "automaton");
    require(b, "automaton");
    auto r = regproc::isomorphic(a->value, b->value);
    char* text = nullptr;
    if (report)
      text = dup_string(format == RP_FORMAT_JSON ? regproc::iso_to_json(r) : regproc::iso_to_text(r));
    if (isomorphic) *isomorphic = r.isomorphic;
    if (report) *report = text;
  });
}

rp_status rp_minimize(const rp_automaton* a, rp_automaton** out) {
  return guarded([&] {
    require(a, "automaton");
    require(out, "output");
    *out = new rp_automaton{regproc::minimize(a->value)};
  });
}

// --- encoding --------------------------------------------------------------

rp_status rp_encode(const rp_automaton* fa, rp_encoding** out) {
  return guarded([&] {
    require(fa, "automaton");
    require(out, "output");
    *out = new rp_encoding{regproc::encode_fa(fa->value)};
  });
}

rp_status rp_encoding_expression(const rp_encoding* enc, char** out) {
  return guarded([&] {
    require(enc, "encoding");
    require(out, "output");
    *out = dup_string(regproc::render_expression(enc->value.expression));
  });
}

rp_status rp_encoding_gamma(const rp_encoding* enc, char** out) {
  return guarded([&] {
    require(enc, "encoding");
    require(out, "output");
    *out = dup_string(regproc::render_comm_fn(enc->value.gamma));
  });
}

rp_status rp_encoding_manifest(const rp_encoding* enc, char** out) {
  return guarded([&] {
    require(enc, "encoding");
    require(out, "output");
    *out = dup_string(regproc::encoding_manifest_json(enc->value));
  });
}

void rp_encoding_free(rp_encoding* enc) { delete enc; }

rp_status rp_verify_encoding(const rp_automaton* fa, size_t max_states, rp_format format,
                             int* isomorphic, char** report) {
  return guarded([&] {
    require(fa, "automaton");
    auto enc = regproc::encode_fa(fa->value);
    auto derived = regproc::derive_automaton(enc.expression, enc.gamma, max_states);
    auto r = regproc::isomorphic(fa->value, derived);
    const auto n = fa->value.num_states();
    const auto m = derived.num_states();
    char* text = nullptr;
    if (report)
      text = dup_string(format == RP_FORMAT_JSON ? regproc::encoding_check_to_json(r, n, m)
                                                 : regproc::encoding_check_to_text(r, n, m));
    if (isomorphic) *isomorphic = r.isomorphic;
    if (report) *report = text;
  });
}

}  // extern "C"
