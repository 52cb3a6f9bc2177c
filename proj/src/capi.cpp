// C boundary: exceptions become status codes, strings cross as malloc'd
// copies, the last error message lives in thread-local storage.
#include "gorhom.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "gorhom/scenario.hpp"
#include "gorhom/workspace.hpp"

using gorhom::Error;

struct gh_session {
  gorhom::Session impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int status_of(const Error& e) {
  switch (e.kind) {
    case Error::Kind::Check:
      return GH_CHECK_FAIL;
    case Error::Kind::Input:
    case Error::Kind::Parse:
      return GH_INPUT_ERROR;
    case Error::Kind::Internal:
      break;
  }
  return GH_INPUT_ERROR;
}

// run `fn`, translating exceptions; `fn` must fill its outputs only on success
template <class Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GH_INPUT_ERROR;
  }
}

int require(const void* p, const char* what) {
  if (p) return GH_OK;
  g_last_error = std::string("null ") + what;
  return GH_INPUT_ERROR;
}

}  // namespace

extern "C" {

const char* gh_version(void) { return "1.0.0"; }

const char* gh_last_error(void) { return g_last_error.c_str(); }

void gh_free(char* s) { std::free(s); }

int gh_session_open(const char* path, gh_session** out) {
  if (int rc = require(path, "path"); rc != GH_OK) return rc;
  if (int rc = require(out, "output handle"); rc != GH_OK) return rc;
  return guarded([&] {
    *out = new gh_session{gorhom::Session(gorhom::load_document(path))};
    return GH_OK;
  });
}

int gh_session_open_text(const char* json_text, gh_session** out) {
  if (int rc = require(json_text, "document text"); rc != GH_OK) return rc;
  if (int rc = require(out, "output handle"); rc != GH_OK) return rc;
  return guarded([&] {
    *out = new gh_session{gorhom::Session(gorhom::parse_document(json_text))};
    return GH_OK;
  });
}

void gh_session_close(gh_session* s) { delete s; }

int gh_document_json(gh_session* s, char** out) {
  if (int rc = require(s, "session"); rc != GH_OK) return rc;
  if (int rc = require(out, "output"); rc != GH_OK) return rc;
  return guarded([&] {
    *out = dup_string(gorhom::serialize_document(s->impl.doc()));
    return GH_OK;
  });
}

int gh_algebra_info(gh_session* s, char** out) {
  if (int rc = require(s, "session"); rc != GH_OK) return rc;
  if (int rc = require(out, "output"); rc != GH_OK) return rc;
  return guarded([&] {
    *out = dup_string(s->impl.algebra_info());
    return GH_OK;
  });
}

int gh_resolve(gh_session* s, const char* module, int steps, const char* series, char** csv_out,
               char** verdict_out) {
  if (int rc = require(s, "session"); rc != GH_OK) return rc;
  if (int rc = require(module, "module name"); rc != GH_OK) return rc;
  if (int rc = require(csv_out, "csv output"); rc != GH_OK) return rc;
  if (int rc = require(verdict_out, "verdict output"); rc != GH_OK) return rc;
  return guarded([&] {
    auto r = s->impl.resolve(module, steps, series ? series : "");
    *csv_out = dup_string(r.csv);
    *verdict_out = dup_string(r.verdict);
    return r.series_checked && !r.series_match ? GH_CHECK_FAIL : GH_OK;
  });
}

int gh_table(gh_session* s, const char* functor, const char* m, const char* n, int steps,
             int bigraded, char** csv_out) {
  if (int rc = require(s, "session"); rc != GH_OK) return rc;
  if (int rc = require(functor, "functor"); rc != GH_OK) return rc;
  if (int rc = require(m, "module name"); rc != GH_OK) return rc;
  if (int rc = require(n, "module name"); rc != GH_OK) return rc;
  if (int rc = require(csv_out, "csv output"); rc != GH_OK) return rc;
  return guarded([&] {
    *csv_out = dup_string(s->impl.table_csv(functor, m, n, steps, bigraded != 0));
    return GH_OK;
  });
}

int gh_tate(gh_session* s, const char* functor, const char* family, const char* n, int window,
            char** csv_out) {
  if (int rc = require(s, "session"); rc != GH_OK) return rc;
  if (int rc = require(functor, "functor"); rc != GH_OK) return rc;
  if (int rc = require(family, "family name"); rc != GH_OK) return rc;
  if (int rc = require(n, "module name"); rc != GH_OK) return rc;
  if (int rc = require(csv_out, "csv output"); rc != GH_OK) return rc;
  return guarded([&] {
    *csv_out = dup_string(s->impl.tate_csv(functor, family, n, window));
    return GH_OK;
  });
}

int gh_scan(gh_session* s, const char* family, const char* m, long long q_lo, long long q_hi,
            int steps, char** out) {
  if (int rc = require(s, "session"); rc != GH_OK) return rc;
  if (int rc = require(family, "family name"); rc != GH_OK) return rc;
  if (int rc = require(m, "module name"); rc != GH_OK) return rc;
  if (int rc = require(out, "output"); rc != GH_OK) return rc;
  return guarded([&] {
    *out = dup_string(s->impl.scan_lines(family, m, q_lo, q_hi, steps));
    return GH_OK;
  });
}

int gh_reproduce(const char* field, const char* alpha, int steps, int window, int full,
                 char** json_out) {
  if (int rc = require(field, "field"); rc != GH_OK) return rc;
  if (int rc = require(alpha, "alpha"); rc != GH_OK) return rc;
  if (int rc = require(json_out, "output"); rc != GH_OK) return rc;
  return guarded([&] {
    auto rep = gorhom::run_reproduction(field, alpha, steps, window, full != 0);
    *json_out = dup_string(gorhom::report_json(rep));
    if (rep.all_pass()) return GH_OK;
    g_last_error = "reproduction checklist has failing checks";
    return GH_CHECK_FAIL;
  });
}

}  // extern "C"
