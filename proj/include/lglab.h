#ifndef LGLAB_H
#define LGLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lglab_status {
  LGLAB_OK = 0,
  LGLAB_ERR_PARSE = 1,
  LGLAB_ERR_PARAMETER = 2,
  LGLAB_ERR_DOMAIN = 3,
  LGLAB_ERR_NOT_FOUND = 4,
  LGLAB_ERR_UNSUPPORTED = 5,
  LGLAB_ERR_IO = 6,
  LGLAB_ERR_INVALID = 7,
  LGLAB_ERR_INTERNAL = 8,
  LGLAB_ERR_NULL = 9
} lglab_status;

typedef struct lglab_laurent lglab_laurent;
typedef struct lglab_operator lglab_operator;
typedef struct lglab_catalog lglab_catalog;
typedef struct lglab_annotations lglab_annotations;

/* Search bounds. max_order 0 selects the built-in staged search; terms 0
 * computes as many period terms as the bounds need. */
typedef struct lglab_search_options {
  int terms;
  int max_order;
  int max_degree;
  int guard;
  uint64_t seed;
} lglab_search_options;

void lglab_search_options_init(lglab_search_options* options);

/* Message of the last failed call on this thread, "" after success. */
const char* lglab_last_error(void);
/* Byte offset into the input expression for parse errors, -1 otherwise. */
long lglab_last_error_position(void);

/* Every char** output is owned by the caller. */
void lglab_string_free(char* s);

/* Assignments are "name=value" strings with rational values. */
lglab_status lglab_laurent_parse(const char* text, const char* const* parameters, size_t parameter_count,
                                 lglab_laurent** out);
lglab_status lglab_laurent_specialize(const lglab_laurent* f, const char* const* assignments, size_t count,
                                      lglab_laurent** out);
lglab_status lglab_laurent_to_string(const lglab_laurent* f, char** out);
void lglab_laurent_free(lglab_laurent* f);

/* JSON array of the first terms + 1 period coefficients of f - shift.
 * shift may be NULL. */
lglab_status lglab_period_json(const lglab_laurent* f, int terms, const char* shift, char** out);

lglab_status lglab_picard_fuchs(const lglab_laurent* f, const lglab_search_options* options, const char* shift,
                                lglab_operator** out);
lglab_status lglab_operator_json(const lglab_operator* op, char** out);
/* at selects an operator point ("inf" or a rational t), fiber a fiber value
 * lambda; both NULL reports every singular point. */
lglab_status lglab_monodromy_json(const lglab_operator* op, const char* at, const char* fiber, char** out);
void lglab_operator_free(lglab_operator* op);

lglab_status lglab_pencil_json(const lglab_laurent* f, char** out);
/* annotations and family may be NULL. */
lglab_status lglab_fiber_json(const lglab_laurent* f, const char* lambda, const lglab_annotations* annotations,
                              const char* family, char** out);

lglab_status lglab_catalog_load(const char* path, lglab_catalog** out);
lglab_status lglab_catalog_list_json(const lglab_catalog* catalog, char** out);
/* Specialized polynomial of a family; shift receives the period shift when
 * not NULL. */
lglab_status lglab_catalog_family(const lglab_catalog* catalog, const char* id, const char* const* assignments,
                                  size_t count, lglab_laurent** out, char** shift);
void lglab_catalog_free(lglab_catalog* catalog);

lglab_status lglab_annotations_load(const char* path, lglab_annotations** out);
void lglab_annotations_free(lglab_annotations* annotations);

/* indeterminate is set to 1 for an Indeterminate verdict. annotations may be
 * NULL, in which case point contributions count as incomplete. */
lglab_status lglab_classify_json(const lglab_catalog* catalog, const char* id, const char* const* assignments,
                                 size_t count, const lglab_search_options* options,
                                 const lglab_annotations* annotations, char** out, int* indeterminate);

/* axes are "name=v1,v2,..." strings; the grid is their product in the given
 * order. monodromy 0 compares pencil data only. */
lglab_status lglab_sweep_json(const lglab_catalog* catalog, const char* id, const char* const* axes,
                              size_t axis_count, const lglab_search_options* options,
                              const lglab_annotations* annotations, int monodromy, char** out);

#ifdef __cplusplus
}
#endif

#endif
