#include "artin/artin.h"

#include <functional>
#include <new>
#include <string>
#include <vector>

#include "artin/commands.hpp"

struct artin_workspace {
  artin::Workspace ws;
  std::vector<std::string> names;
};

struct artin_report {
  artin_status status = ARTIN_OK;
  std::string json;
  std::string summary;
};

namespace {

artin_report* make_report(artin_status status, const artin::Json& j, std::string summary) {
  auto* r = new (std::nothrow) artin_report;
  if (!r) return nullptr;
  r->status = status;
  r->json = j.dump(2);
  r->summary = std::move(summary);
  return r;
}

artin::Json error_json(const char* status, const std::string& what, const std::string* pointer) {
  artin::Json j;
  j["tool"] = "artin";
  j["version"] = artin::kToolVersion;
  j["status"] = status;
  j["error"] = what;
  if (pointer) j["pointer"] = *pointer;
  return j;
}

template <class F>
artin_status guarded(artin_report** report, F&& f) {
  artin_status st = ARTIN_INTERNAL_ERROR;
  artin::Json j;
  std::string summary;
  try {
    return f();
  } catch (const artin::InputError& e) {
    st = ARTIN_INPUT_ERROR;
    j = error_json("input_error", e.what(), &e.pointer());
    summary = std::string("input error") + (e.pointer().empty() ? "" : " at " + e.pointer()) + ": " + e.what();
  } catch (const std::exception& e) {
    j = error_json("internal_error", e.what(), nullptr);
    summary = std::string("internal error: ") + e.what();
  } catch (...) {
    j = error_json("internal_error", "unknown exception", nullptr);
    summary = "internal error";
  }
  if (report) *report = make_report(st, j, summary);
  return st;
}

artin_status open_workspace(artin_workspace** out, artin_report** error, const std::function<artin::Workspace()>& load) {
  if (out) *out = nullptr;
  if (error) *error = nullptr;
  return guarded(error, [&] {
    auto* w = new artin_workspace{load(), {}};
    for (const auto& [name, m] : w->ws.modules) w->names.push_back(name);
    if (out) *out = w;
    else delete w;
    return ARTIN_OK;
  });
}

}  // namespace

extern "C" {

const char* artin_version(void) { return artin::kToolVersion; }

artin_status artin_workspace_parse(const char* json, artin_workspace** out, artin_report** error) {
  std::string text = json ? json : "";
  return open_workspace(out, error, [&] { return artin::parse_workspace_text(text); });
}

artin_status artin_workspace_load(const char* path, artin_workspace** out, artin_report** error) {
  std::string p = path ? path : "";
  return open_workspace(out, error, [&] { return artin::load_workspace(p); });
}

void artin_workspace_free(artin_workspace* ws) { delete ws; }

size_t artin_workspace_module_count(const artin_workspace* ws) { return ws ? ws->names.size() : 0; }

const char* artin_workspace_module_name(const artin_workspace* ws, size_t index) {
  if (!ws || index >= ws->names.size()) return nullptr;
  return ws->names[index].c_str();
}

artin_status artin_run(const artin_workspace* ws, const char* request_json, artin_report** out) {
  if (out) *out = nullptr;
  return guarded(out, [&] {
    artin::Json req;
    try {
      req = artin::Json::parse(request_json ? request_json : "");
    } catch (const artin::Json::parse_error& e) {
      throw artin::InputError(std::string("invalid request JSON: ") + e.what(), "");
    }
    artin::CommandResult res = artin::run_command(ws ? &ws->ws : nullptr, req);
    auto st = static_cast<artin_status>(res.status);
    if (out) *out = make_report(st, res.report, res.summary);
    return st;
  });
}

artin_status artin_corpus_run(const char* filter, artin_report** out) {
  artin::Json req{{"command", "corpus_run"}};
  if (filter && *filter) req["filter"] = filter;
  return artin_run(nullptr, req.dump().c_str(), out);
}

artin_status artin_report_status(const artin_report* report) {
  return report ? report->status : ARTIN_INTERNAL_ERROR;
}

const char* artin_report_json(const artin_report* report) { return report ? report->json.c_str() : ""; }

const char* artin_report_summary(const artin_report* report) { return report ? report->summary.c_str() : ""; }

void artin_report_free(artin_report* report) { delete report; }

}  // extern "C"
