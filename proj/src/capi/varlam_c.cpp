#include "varlam/varlam.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "varlam/bracket.hpp"
#include "varlam/engine.hpp"
#include "varlam/env.hpp"
#include "varlam/error.hpp"
#include "varlam/metagen.hpp"
#include "varlam/prelude.hpp"
#include "varlam/stack.hpp"
#include "varlam/syntax.hpp"
#include "varlam/variadic.hpp"

struct vl_env {
  varlam::Env env;
};

struct vl_term {
  varlam::Term term;
};

namespace {

thread_local std::string last_error;

vl_status from_code(varlam::ErrorCode c) {
  using varlam::ErrorCode;
  switch (c) {
    case ErrorCode::Parse: return VL_ERR_PARSE;
    case ErrorCode::UnboundName: return VL_ERR_UNBOUND_NAME;
    case ErrorCode::UnexpandedConstant: return VL_ERR_UNEXPANDED_CONSTANT;
    case ErrorCode::DuplicateDefinition: return VL_ERR_DUPLICATE_DEFINITION;
    case ErrorCode::OpenDefinition: return VL_ERR_OPEN_DEFINITION;
    case ErrorCode::IndexOutOfRange: return VL_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::UnknownFamily: return VL_ERR_UNKNOWN_FAMILY;
    case ErrorCode::UnknownSequence: return VL_ERR_UNKNOWN_SEQUENCE;
    case ErrorCode::MixedSequenceUse: return VL_ERR_MIXED_SEQUENCE_USE;
    case ErrorCode::NotANumeral: return VL_ERR_NOT_A_NUMERAL;
    case ErrorCode::Reduction: return VL_ERR_REDUCTION;
    case ErrorCode::Io: return VL_ERR_IO;
    case ErrorCode::InvalidArgument: return VL_ERR_INVALID_ARGUMENT;
  }
  return VL_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes and the thread-local message.
template <typename F>
vl_status guard(F body) {
  last_error.clear();
  try {
    varlam::with_large_stack(body);
    return VL_OK;
  } catch (const varlam::Error& e) {
    last_error = e.what();
    return from_code(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return VL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return VL_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw varlam::Error(varlam::ErrorCode::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

vl_term* wrap(varlam::Term t) { return new vl_term{std::move(t)}; }

varlam::ReductionConfig config(const vl_config* cfg) {
  varlam::ReductionConfig out;
  if (cfg) {
    out.fuel = cfg->fuel;
    out.max_term_size = cfg->max_term_size;
    out.eta = cfg->eta != 0;
  }
  return out;
}

const varlam::Env& env_or_empty(const vl_env* env) {
  static const varlam::Env empty;
  return env ? env->env : empty;
}

}  // namespace

extern "C" {

const char* vl_version(void) { return "0.1.0"; }

void vl_config_default(vl_config* cfg) {
  if (!cfg) return;
  varlam::ReductionConfig d;
  cfg->fuel = d.fuel;
  cfg->max_term_size = d.max_term_size;
  cfg->eta = d.eta ? 1 : 0;
}

const char* vl_status_name(vl_status status) {
  switch (status) {
    case VL_OK: return "ok";
    case VL_ERR_PARSE: return "parse error";
    case VL_ERR_UNBOUND_NAME: return "unbound name";
    case VL_ERR_UNEXPANDED_CONSTANT: return "unexpanded constant";
    case VL_ERR_DUPLICATE_DEFINITION: return "duplicate definition";
    case VL_ERR_OPEN_DEFINITION: return "open definition";
    case VL_ERR_INDEX_OUT_OF_RANGE: return "index out of range";
    case VL_ERR_UNKNOWN_FAMILY: return "unknown family";
    case VL_ERR_UNKNOWN_SEQUENCE: return "unknown sequence";
    case VL_ERR_MIXED_SEQUENCE_USE: return "mixed sequence use";
    case VL_ERR_NOT_A_NUMERAL: return "not a numeral";
    case VL_ERR_REDUCTION: return "reduction limit";
    case VL_ERR_IO: return "i/o error";
    case VL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case VL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* vl_last_error(void) { return last_error.c_str(); }

void vl_string_free(char* s) { std::free(s); }

vl_status vl_env_create(int with_prelude, vl_env** out) {
  return guard([&] {
    require(out, "null output pointer");
    *out = new vl_env{with_prelude ? varlam::Env::standard() : varlam::Env::empty()};
  });
}

void vl_env_destroy(vl_env* env) { delete env; }

vl_status vl_env_load_file(vl_env* env, const char* path) {
  return guard([&] {
    require(env && path, "null argument");
    env->env.load_file(path);
  });
}

vl_status vl_env_load_source(vl_env* env, const char* source, const char* provenance) {
  return guard([&] {
    require(env && source, "null argument");
    env->env.load_source(source, provenance ? provenance : "<source>");
  });
}

vl_status vl_env_define(vl_env* env, const char* name, const char* source) {
  return guard([&] {
    require(env && name && source, "null argument");
    require(varlam::is_upper_ident_start(name[0]), "definition names start with an uppercase letter");
    env->env.define(name, varlam::parse(source, env->env), "<define>");
  });
}

int vl_env_contains(const vl_env* env, const char* name) {
  return env && name && env->env.contains(name) ? 1 : 0;
}

vl_status vl_parse(const vl_env* env, const char* source, vl_term** out) {
  return guard([&] {
    require(source && out, "null argument");
    *out = wrap(varlam::parse(source, env ? &env->env : nullptr));
  });
}

void vl_term_destroy(vl_term* term) {
  if (!term) return;
  try {
    varlam::with_large_stack([term] { delete term; });
  } catch (...) {
  }
}

vl_status vl_term_print(const vl_term* term, int sugar, char** out) {
  return guard([&] {
    require(term && out, "null argument");
    *out = copy_string(varlam::print(term->term, sugar != 0));
  });
}

vl_status vl_term_alpha_eq(const vl_term* a, const vl_term* b, int* out) {
  return guard([&] {
    require(a && b && out, "null argument");
    *out = varlam::alpha_eq(a->term, b->term) ? 1 : 0;
  });
}

vl_status vl_apply(const vl_term* fun, const vl_term* arg, vl_term** out) {
  return guard([&] {
    require(fun && arg && out, "null argument");
    *out = wrap(varlam::Term::app(fun->term, arg->term));
  });
}

vl_status vl_normalize(const vl_env* env, const vl_term* term, const vl_config* cfg,
                       vl_term** out, vl_reduction_status* status, uint64_t* steps) {
  return guard([&] {
    require(term && out, "null argument");
    auto r = varlam::normalize(term->term, env_or_empty(env), config(cfg));
    *out = wrap(r.result);
    if (status) *status = static_cast<vl_reduction_status>(r.status);
    if (steps) *steps = r.steps;
  });
}

vl_status vl_trace(const vl_env* env, const vl_term* term, const vl_config* cfg, int sugar,
                   char** out) {
  return guard([&] {
    require(term && out, "null argument");
    std::string text;
    for (const auto& t : varlam::trace(term->term, env_or_empty(env), config(cfg)))
      text += varlam::print(t, sugar != 0) + "\n";
    *out = copy_string(text);
  });
}

vl_status vl_equal(const vl_env* env, const vl_term* a, const vl_term* b, const vl_config* cfg,
                   vl_verdict* out) {
  return guard([&] {
    require(a && b && out, "null argument");
    *out = static_cast<vl_verdict>(
        varlam::beta_eta_equal(a->term, b->term, env_or_empty(env), config(cfg)));
  });
}

vl_status vl_bracket_turner(const vl_env* env, const vl_term* term, vl_term** out) {
  return guard([&] {
    require(term && out, "null argument");
    *out = wrap(varlam::turner(env ? varlam::expand_consts(term->term, env->env) : term->term));
  });
}

vl_status vl_bracket_extended(const char* meta_source, vl_term** out) {
  return guard([&] {
    require(meta_source && out, "null argument");
    *out = wrap(varlam::extended_closed(varlam::parse_meta(meta_source)));
  });
}

vl_status vl_expand_meta(const char* meta_source, unsigned n, vl_term** out) {
  return guard([&] {
    require(meta_source && out, "null argument");
    *out = wrap(varlam::expand(varlam::parse_meta(meta_source), n));
  });
}

vl_status vl_family(const char* name, unsigned k, unsigned n, vl_term** out) {
  return guard([&] {
    require(name && out, "null argument");
    varlam::FamilyInstance inst{name, n, std::nullopt};
    if (varlam::family_requires_k(name)) inst.k = k;
    else require(k == 0, "this family takes no index k");
    *out = wrap(varlam::family(inst));
  });
}

vl_status vl_family_names(char** out) {
  return guard([&] {
    require(out, "null argument");
    std::string text;
    for (const auto& f : varlam::family_names()) text += (text.empty() ? "" : ",") + f;
    *out = copy_string(text);
  });
}

vl_status vl_church(unsigned n, vl_term** out) {
  return guard([&] {
    require(out, "null argument");
    *out = wrap(varlam::church(n));
  });
}

vl_status vl_unchurch(const vl_env* env, const vl_term* term, const vl_config* cfg,
                      unsigned* out) {
  return guard([&] {
    require(term && out, "null argument");
    *out = varlam::unchurch(term->term, env_or_empty(env), config(cfg));
  });
}

vl_status vl_check(const vl_env* env, const char* suite, unsigned max_n, const vl_config* cfg,
                   char** report, int* passed) {
  return guard([&] {
    require(env && suite && report && passed, "null argument");
    varlam::SuiteOptions opts;
    opts.max_n = max_n;
    opts.cfg = config(cfg);
    auto r = varlam::run_suite(env->env, suite, opts);
    *report = copy_string(r.render());
    *passed = r.passed() ? 1 : 0;
  });
}

}  // extern "C"
