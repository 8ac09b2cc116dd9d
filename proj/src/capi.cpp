#include "paracurv.h"

#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "paracurv/catalog.hpp"
#include "paracurv/errors.hpp"
#include "paracurv/report.hpp"

using namespace paracurv;

struct pcv_model {
  ModelSpec spec;
};

struct pcv_run {
  RunReport report;
};

namespace {

thread_local std::string g_last_error;

pcv_status fail(pcv_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

char* copy_out(const std::string& s) {
  char* buf = new char[s.size() + 1];
  std::memcpy(buf, s.data(), s.size() + 1);
  return buf;
}

std::vector<std::string> split_csv(const char* csv) {
  std::vector<std::string> out;
  if (!csv) return out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename Fn>
pcv_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return fail(PCV_ERROR_PARSE, e.what());
  } catch (const DuplicateEntryError& e) {
    return fail(PCV_ERROR_PARSE, e.what());
  } catch (const DimensionMismatchError& e) {
    return fail(PCV_ERROR_PARSE, e.what());
  } catch (const UnknownModelError& e) {
    return fail(PCV_ERROR_UNKNOWN_MODEL, e.what());
  } catch (const Error& e) {
    return fail(PCV_ERROR_VALIDATION, e.what());
  } catch (const std::exception& e) {
    return fail(PCV_ERROR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* pcv_last_error(void) { return g_last_error.c_str(); }

void pcv_string_free(char* s) { delete[] s; }

int pcv_builtin_count(void) { return static_cast<int>(builtin_names().size()); }

const char* pcv_builtin_name(int index) {
  const auto& names = builtin_names();
  if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
  return names[static_cast<std::size_t>(index)].c_str();
}

pcv_status pcv_model_builtin(const char* name, pcv_model** out) {
  if (!name || !out) return fail(PCV_ERROR_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    *out = new pcv_model{builtin(name)};
    return PCV_OK;
  });
}

pcv_status pcv_model_load(const char* path, pcv_model** out) {
  if (!path || !out) return fail(PCV_ERROR_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    *out = new pcv_model{load_model(path)};
    return PCV_OK;
  });
}

pcv_status pcv_model_parse(const char* text, pcv_model** out) {
  if (!text || !out) return fail(PCV_ERROR_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    *out = new pcv_model{parse_model(text)};
    return PCV_OK;
  });
}

void pcv_model_free(pcv_model* m) { delete m; }

pcv_status pcv_model_canonical(const pcv_model* m, char** out) {
  if (!m || !out) return fail(PCV_ERROR_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_out(canonical_model(m->spec));
    return PCV_OK;
  });
}

pcv_status pcv_check(const pcv_model* m, const char* identities_csv,
                     const char* expects_csv, pcv_run** out) {
  if (!m || !out) return fail(PCV_ERROR_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  RunOptions opts;
  opts.identities = split_csv(identities_csv);
  for (const auto& item : split_csv(expects_csv)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      return fail(PCV_ERROR_INVALID_ARGUMENT,
                  "expectation must look like flag=true or flag=false: " + item);
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (value != "true" && value != "false")
      return fail(PCV_ERROR_INVALID_ARGUMENT,
                  "expectation value must be true or false: " + item);
    opts.expectations.push_back({key, value == "true"});
  }
  return guarded([&] {
    *out = new pcv_run{run_check(m->spec, opts)};
    return PCV_OK;
  });
}

int pcv_run_overall(const pcv_run* r) {
  if (!r) return -1;
  return r->report.overall ? 1 : 0;
}

pcv_status pcv_run_render(const pcv_run* r, const char* format, char** out) {
  if (!r || !format || !out) return fail(PCV_ERROR_INVALID_ARGUMENT, "NULL argument");
  *out = nullptr;
  const std::string fmt = format;
  if (fmt != "text" && fmt != "machine")
    return fail(PCV_ERROR_INVALID_ARGUMENT, "unknown report format: " + fmt);
  return guarded([&] {
    *out = copy_out(fmt == "text" ? render_text(r->report) : render_json(r->report));
    return PCV_OK;
  });
}

void pcv_run_free(pcv_run* r) { delete r; }

}  // extern "C"
