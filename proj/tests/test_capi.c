#include "lglab.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define CHECK(cond)                                         \
  do {                                                      \
    if (!(cond)) {                                          \
      printf("FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                           \
    }                                                       \
  } while (0)

static void parse_and_periods(void) {
  lglab_laurent* f = NULL;
  CHECK(lglab_laurent_parse("(x+y+1)^3/(x*y*z)+z", NULL, 0, &f) == LGLAB_OK);
  CHECK(strcmp(lglab_last_error(), "") == 0);
  char* s = NULL;
  CHECK(lglab_period_json(f, 4, NULL, &s) == LGLAB_OK);
  CHECK(s && strstr(s, "\"12\"") != NULL);
  lglab_string_free(s);
  CHECK(lglab_period_json(f, -1, NULL, &s) == LGLAB_ERR_PARAMETER);
  lglab_laurent_free(f);

  lglab_laurent* g = NULL;
  CHECK(lglab_laurent_parse("x+y+/z", NULL, 0, &g) == LGLAB_ERR_PARSE);
  CHECK(g == NULL);
  CHECK(lglab_last_error_position() == 4);
  CHECK(strstr(lglab_last_error(), "position 4") != NULL);
  CHECK(lglab_laurent_parse(NULL, NULL, 0, &g) == LGLAB_ERR_NULL);
  CHECK(lglab_last_error_position() == -1);
}

static void parameters(void) {
  const char* names[] = {"a"};
  const char* values[] = {"a=2"};
  const char* bad[] = {"a2"};
  lglab_laurent* f = NULL;
  lglab_laurent* g = NULL;
  CHECK(lglab_laurent_parse("(x+y)*(y+z)*(z+1)*(x+a)/(x*y*z)", names, 1, &f) == LGLAB_OK);
  CHECK(lglab_laurent_specialize(f, bad, 1, &g) == LGLAB_ERR_PARAMETER);
  CHECK(lglab_laurent_specialize(f, values, 1, &g) == LGLAB_OK);
  char* s = NULL;
  CHECK(lglab_laurent_to_string(g, &s) == LGLAB_OK);
  CHECK(s && strchr(s, 'a') == NULL);
  lglab_string_free(s);
  CHECK(lglab_pencil_json(g, &s) == LGLAB_OK);
  CHECK(s && strstr(s, "\"fixed_points\"") != NULL);
  lglab_string_free(s);
  CHECK(lglab_fiber_json(g, "0", NULL, NULL, &s) == LGLAB_OK);
  CHECK(s && strstr(s, "\"rho\": 4") != NULL);
  lglab_string_free(s);
  lglab_laurent_free(g);
  lglab_laurent_free(f);
}

static void operators(void) {
  lglab_laurent* f = NULL;
  CHECK(lglab_laurent_parse("(x+y+1)^3/(x*y*z)+z", NULL, 0, &f) == LGLAB_OK);
  lglab_search_options o;
  lglab_search_options_init(&o);
  lglab_operator* op = NULL;
  CHECK(lglab_picard_fuchs(f, &o, NULL, &op) == LGLAB_OK);
  char* s = NULL;
  CHECK(lglab_operator_json(op, &s) == LGLAB_OK);
  CHECK(s && strstr(s, "\"order\": 3") != NULL);
  lglab_string_free(s);
  CHECK(lglab_monodromy_json(op, "inf", NULL, &s) == LGLAB_OK);
  CHECK(s && strstr(s, "QuasiUnipotentNonUnipotent") != NULL && strstr(s, "\"2/3\"") != NULL);
  lglab_string_free(s);
  CHECK(lglab_monodromy_json(op, "inf", "0", &s) == LGLAB_ERR_PARAMETER);
  lglab_operator_free(op);

  o.max_order = 2;
  o.max_degree = 1;
  CHECK(lglab_picard_fuchs(f, &o, NULL, &op) == LGLAB_ERR_NOT_FOUND);
  lglab_laurent_free(f);
}

static void catalog(void) {
  lglab_catalog* c = NULL;
  CHECK(lglab_catalog_load("/nonexistent/catalog.json", &c) == LGLAB_ERR_IO);
  CHECK(lglab_catalog_load(LGLAB_DATA_DIR "/catalog.json", &c) == LGLAB_OK);
  lglab_annotations* a = NULL;
  CHECK(lglab_annotations_load(LGLAB_DATA_DIR "/annotations.json", &a) == LGLAB_OK);

  char* s = NULL;
  CHECK(lglab_catalog_list_json(c, &s) == LGLAB_OK);
  CHECK(s && strstr(s, "\"2-12\"") != NULL);
  lglab_string_free(s);

  lglab_laurent* f = NULL;
  char* shift = NULL;
  CHECK(lglab_catalog_family(c, "1-7", NULL, 0, &f, &shift) == LGLAB_OK);
  CHECK(shift && strcmp(shift, "5") == 0);
  lglab_string_free(shift);
  lglab_laurent_free(f);
  CHECK(lglab_catalog_family(c, "no-such", NULL, 0, &f, NULL) == LGLAB_ERR_PARAMETER);

  int indeterminate = -1;
  CHECK(lglab_classify_json(c, "1-2", NULL, 0, NULL, a, &s, &indeterminate) == LGLAB_OK);
  CHECK(indeterminate == 0);
  CHECK(s && strstr(s, "\"theorem2_consistent\": true") != NULL);
  lglab_string_free(s);
  CHECK(lglab_classify_json(c, "1-10", NULL, 0, NULL, a, &s, &indeterminate) == LGLAB_OK);
  CHECK(indeterminate == 1);
  lglab_string_free(s);

  const char* excluded[] = {"a=1"};
  CHECK(lglab_classify_json(c, "2-12", excluded, 1, NULL, a, &s, &indeterminate) == LGLAB_ERR_PARAMETER);

  const char* axes[] = {"a=1,2", "b=1,3"};
  CHECK(lglab_sweep_json(c, "3-2", axes, 2, NULL, a, 0, &s) == LGLAB_OK);
  CHECK(s && strstr(s, "\"constant\": true") != NULL);
  lglab_string_free(s);
  const char* repeated[] = {"a=1", "a=2"};
  CHECK(lglab_sweep_json(c, "3-2", repeated, 2, NULL, a, 0, &s) == LGLAB_ERR_PARAMETER);

  lglab_annotations_free(a);
  lglab_catalog_free(c);
}

int main(void) {
  parse_and_periods();
  parameters();
  operators();
  catalog();
  printf("%s (%d failures)\n", failures ? "FAIL" : "ok", failures);
  return failures ? 1 : 0;
}
