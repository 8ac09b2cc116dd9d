#ifndef PARACURV_H
#define PARACURV_H

/* C interface to the paracurv engine.
 *
 * All functions returning pcv_status report PCV_OK on success. On any other
 * status, pcv_last_error() holds a message describing what went wrong (the
 * buffer is thread local and valid until the next failing call on the same
 * thread). Strings returned through char** out-parameters are owned by the
 * caller and must be released with pcv_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pcv_status {
  PCV_OK = 0,
  PCV_ERROR_INVALID_ARGUMENT = 1, /* NULL handle, bad format name, ... */
  PCV_ERROR_PARSE = 2,            /* unreadable file or malformed model */
  PCV_ERROR_UNKNOWN_MODEL = 3,    /* no builtin with that name */
  PCV_ERROR_VALIDATION = 4,       /* model loaded but is not a valid frame */
  PCV_ERROR_INTERNAL = 5
} pcv_status;

typedef struct pcv_model pcv_model;
typedef struct pcv_run pcv_run;

const char* pcv_last_error(void);
void pcv_string_free(char* s);

/* Builtin catalog. Indices run from 0 to pcv_builtin_count()-1;
 * pcv_builtin_name returns NULL for an index out of range. */
int pcv_builtin_count(void);
const char* pcv_builtin_name(int index);

pcv_status pcv_model_builtin(const char* name, pcv_model** out);
pcv_status pcv_model_load(const char* path, pcv_model** out);
pcv_status pcv_model_parse(const char* text, pcv_model** out);
void pcv_model_free(pcv_model* m);

/* Canonical JSON serialization of the model. Loading the result yields a
 * model that serializes to the identical bytes. */
pcv_status pcv_model_canonical(const pcv_model* m, char** out);

/* Run the full analysis.
 *
 * identities_csv: comma separated identity keys to restrict the run, or
 * NULL/"" /"all" for everything (implication checks run only in that case).
 * expects_csv: optional comma separated "flag=true"/"flag=false" entries
 * naming classification flags; a mismatch makes the run fail overall.
 */
pcv_status pcv_check(const pcv_model* m, const char* identities_csv,
                     const char* expects_csv, pcv_run** out);

/* 1 if every required check passed, 0 if something failed, -1 on NULL. */
int pcv_run_overall(const pcv_run* r);

/* format is "text" or "machine" (deterministic JSON). */
pcv_status pcv_run_render(const pcv_run* r, const char* format, char** out);
void pcv_run_free(pcv_run* r);

#ifdef __cplusplus
}
#endif

#endif /* PARACURV_H */
