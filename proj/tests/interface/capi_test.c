/* Exercises the public C API from C: handles, ownership, status codes. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "brsieve/brsieve.h"

static int failures = 0;

#define EXPECT(cond)                                                 \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static const char* kIndex2 =
    "model = hyperelliptic\n"
    "base = Q\n"
    "f = [14, 14, 7, 0, 14, 0, 7]\n"
    "label = index2\n";

static void curve_calls(void) {
  brsieve_curve* c = NULL;
  EXPECT(brsieve_curve_parse(kIndex2, &c) == BRSIEVE_OK);
  EXPECT(c != NULL);
  EXPECT(strcmp(brsieve_last_error(), "") == 0);

  unsigned g = 0;
  EXPECT(brsieve_curve_genus(c, &g) == BRSIEVE_OK && g == 2);

  uint64_t n = 0;
  EXPECT(brsieve_curve_count(c, 17, 1, &n) == BRSIEVE_OK && n == 16);

  char* s = NULL;
  EXPECT(brsieve_curve_jacobian_order(c, 3, 1, &s) == BRSIEVE_OK && strcmp(s, "9") == 0);
  brsieve_string_free(s);
  EXPECT(brsieve_curve_jacobian_order(c, 17, 1, &s) == BRSIEVE_OK && strcmp(s, "271") == 0);
  brsieve_string_free(s);
  EXPECT(brsieve_curve_lpolynomial(c, 17, &s) == BRSIEVE_OK && strcmp(s, "[1, -2, 17, -34, 289]") == 0);
  brsieve_string_free(s);

  /* 7 divides the leading coefficient: bad place */
  s = NULL;
  EXPECT(brsieve_curve_jacobian_order(c, 7, 1, &s) == BRSIEVE_INVALID_ARGUMENT);
  EXPECT(s == NULL);
  EXPECT(strstr(brsieve_last_error(), "bad reduction at 7") != NULL);

  char* text = NULL;
  EXPECT(brsieve_curve_serialize(c, &text) == BRSIEVE_OK);
  brsieve_curve* again = NULL;
  EXPECT(brsieve_curve_parse(text, &again) == BRSIEVE_OK);
  char* text2 = NULL;
  EXPECT(brsieve_curve_serialize(again, &text2) == BRSIEVE_OK && strcmp(text, text2) == 0);
  brsieve_string_free(text);
  brsieve_string_free(text2);
  brsieve_curve_free(again);
  brsieve_curve_free(c);

  c = NULL;
  EXPECT(brsieve_curve_parse("model = hyperelliptic\ncolour = red\n", &c) == BRSIEVE_PARSE_ERROR);
  EXPECT(c == NULL);
  EXPECT(strstr(brsieve_last_error(), "line 2, column 1") != NULL);
  EXPECT(brsieve_curve_load("/nonexistent/x.curve", &c) != BRSIEVE_OK);
  EXPECT(brsieve_curve_parse(NULL, &c) == BRSIEVE_INVALID_ARGUMENT);
  brsieve_curve_free(NULL);
}

static void run_calls(const char* curve_path) {
  char cfg[1024];
  snprintf(cfg, sizeof cfg, "{\"curve\": \"%s\", \"places\": \"3,5\"}", curve_path);
  brsieve_report* rep = NULL;
  EXPECT(brsieve_run("curve jac-order", cfg, &rep) == BRSIEVE_OK);
  EXPECT(brsieve_report_exit_code(rep) == 0);
  char* json = NULL;
  EXPECT(brsieve_report_json(rep, -1, &json) == BRSIEVE_OK);
  EXPECT(strstr(json, "\"subcommand\":\"curve jac-order\"") != NULL);
  EXPECT(strstr(json, "\"3\":9") != NULL);
  brsieve_string_free(json);
  char* csv = NULL;
  EXPECT(brsieve_report_csv(rep, &csv) == BRSIEVE_OK && csv[0] != '\0');
  brsieve_string_free(csv);
  brsieve_report_free(rep);

  rep = NULL;
  EXPECT(brsieve_run("curve nonsense", "{}", &rep) != BRSIEVE_OK);
  EXPECT(rep == NULL);
  EXPECT(brsieve_status_exit_code(BRSIEVE_INVALID_ARGUMENT) == 2);
  EXPECT(brsieve_run("curve jac-order", "{not json", &rep) == BRSIEVE_PARSE_ERROR);
  EXPECT(brsieve_status_exit_code(BRSIEVE_PARSE_ERROR) == 2);
  EXPECT(brsieve_status_exit_code(BRSIEVE_BUDGET_EXCEEDED) == 3);
  EXPECT(brsieve_report_exit_code(NULL) == 2);
  brsieve_report_free(NULL);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    fprintf(stderr, "usage: %s path/to/index2.curve\n", argv[0]);
    return 2;
  }
  EXPECT(strlen(brsieve_version()) > 0);
  curve_calls();
  run_calls(argv[1]);
  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("C API: all checks passed\n");
  return failures ? 1 : 0;
}
