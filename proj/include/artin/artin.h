/* C interface to the artin library: workspaces in, JSON reports out. */
#ifndef ARTIN_ARTIN_H
#define ARTIN_ARTIN_H

#include <stddef.h>

#if defined(_WIN32)
#define ARTIN_API __declspec(dllexport)
#else
#define ARTIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum artin_status {
  ARTIN_OK = 0,
  ARTIN_REJECTED = 1,     /* the command ran; the answer is negative (reject, fail, not found) */
  ARTIN_INPUT_ERROR = 2,  /* malformed workspace or request; the report carries a JSON pointer */
  ARTIN_INTERNAL_ERROR = 3
} artin_status;

typedef struct artin_workspace artin_workspace;
typedef struct artin_report artin_report;

ARTIN_API const char* artin_version(void);

/* On failure *out is NULL and *error (if non-NULL) receives an error report. */
ARTIN_API artin_status artin_workspace_parse(const char* json, artin_workspace** out, artin_report** error);
ARTIN_API artin_status artin_workspace_load(const char* path, artin_workspace** out, artin_report** error);
ARTIN_API void artin_workspace_free(artin_workspace* ws);

ARTIN_API size_t artin_workspace_module_count(const artin_workspace* ws);
/* NULL when index is out of range. Valid while ws lives. */
ARTIN_API const char* artin_workspace_module_name(const artin_workspace* ws, size_t index);

/* Runs a request such as {"command":"resolve","module":"k","window":4}.
 * ws may be NULL for corpus_run. A report is always produced when out is non-NULL. */
ARTIN_API artin_status artin_run(const artin_workspace* ws, const char* request_json, artin_report** out);
/* Same as artin_run with {"command":"corpus_run","filter":filter}; filter may be NULL. */
ARTIN_API artin_status artin_corpus_run(const char* filter, artin_report** out);

ARTIN_API artin_status artin_report_status(const artin_report* report);
/* Pretty-printed JSON, valid while report lives. */
ARTIN_API const char* artin_report_json(const artin_report* report);
/* Human-readable summary, valid while report lives. */
ARTIN_API const char* artin_report_summary(const artin_report* report);
ARTIN_API void artin_report_free(artin_report* report);

#ifdef __cplusplus
}
#endif

#endif
