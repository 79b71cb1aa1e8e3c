/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "realmot/realmot.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static char* slurp(const char* name) {
  char path[1024];
  snprintf(path, sizeof path, "%s/%s", REALMOT_DATA_DIR, name);
  FILE* f = fopen(path, "rb");
  if (!f) return NULL;
  fseek(f, 0, SEEK_END);
  long n = ftell(f);
  fseek(f, 0, SEEK_SET);
  char* buf = malloc((size_t)n + 1);
  size_t got = fread(buf, 1, (size_t)n, f);
  buf[got] = '\0';
  fclose(f);
  return buf;
}

static int contains(const char* s, const char* needle) { return s && strstr(s, needle) != NULL; }

static void test_milnor(void) {
  char* text = slurp("ex1.json");
  EXPECT(text != NULL);
  rm_datum* d = NULL;
  EXPECT(rm_datum_from_json(text, &d) == RM_OK);
  free(text);
  char* out = NULL;
  EXPECT(rm_milnor_json("dl", NULL, d, NULL, RM_SIGN_PLUS, NULL, &out) == RM_OK);
  EXPECT(contains(out, "\"psi\": \"L + 1\""));
  EXPECT(contains(out, "\"beta\": \"u + 1\""));
  rm_string_free(out);

  rm_options printed = {0, 0, 1};
  EXPECT(rm_milnor_json("dl", NULL, d, NULL, RM_SIGN_PLUS, &printed, &out) == RM_OK);
  EXPECT(contains(out, "5*L - 3"));
  rm_string_free(out);

  rm_series* z = NULL;
  EXPECT(rm_zeta_dl(d, RM_SIGN_PLUS, &z) == RM_OK);
  EXPECT(rm_series_expand_json(z, 4, &out) == RM_OK);
  EXPECT(contains(out, "\"limit\": \"-L - 1\""));
  rm_string_free(out);
  rm_series_free(z);

  rm_poly* f = NULL;
  EXPECT(rm_poly_parse("x^2+y^4", &f) == RM_OK);
  EXPECT(rm_cross_validate_json(f, d, NULL, RM_SIGN_PLUS, NULL, &out) == RM_OK);
  EXPECT(contains(out, "\"verdict\": \"AGREE\""));
  rm_string_free(out);
  EXPECT(rm_milnor_json("wh", f, NULL, NULL, RM_SIGN_PLUS, NULL, &out) == RM_OK);
  EXPECT(contains(out, "\"beta\": \"u + 1\""));
  rm_string_free(out);
  rm_poly_free(f);
  rm_datum_free(d);
}

static void test_errors(void) {
  rm_poly* f = NULL;
  EXPECT(rm_poly_parse("x^^2", &f) == RM_E_PARSE);
  EXPECT(f == NULL);
  EXPECT(strlen(rm_last_error()) > 0);
  EXPECT(strcmp(rm_status_name(RM_E_PARSE), "ParseError") == 0);
  EXPECT(rm_poly_parse(NULL, &f) == RM_E_NULL_ARGUMENT);

  EXPECT(rm_poly_parse("x^2*y+y^3", &f) == RM_OK);
  char* out = NULL;
  EXPECT(rm_milnor_json("wh", f, NULL, NULL, RM_SIGN_PLUS, NULL, &out) == RM_E_NOT_CONVENIENT);
  EXPECT(contains(rm_last_error(), "NotConvenient"));
  EXPECT(rm_milnor_json("magic", f, NULL, NULL, RM_SIGN_PLUS, NULL, &out) == RM_E_INVALID_ARGUMENT);
  rm_poly_free(f);

  rm_datum* d = NULL;
  EXPECT(rm_datum_from_json("{\"components\": 3}", &d) == RM_E_PARSE);
  EXPECT(rm_datum_example("nope", &d) == RM_E_INVALID_ARGUMENT);
}

static void test_constructible(void) {
  char* text = slurp("double_cover.json");
  rm_map* h = NULL;
  EXPECT(rm_map_from_json(text, &h) == RM_OK);
  free(text);
  char* out = NULL;
  EXPECT(rm_cf_apply_json("pi", NULL, h, 0, &out) == RM_OK);
  EXPECT(contains(out, "\"0,1\": 2"));
  rm_string_free(out);
  EXPECT(rm_cf_apply_json("locallink", NULL, h, 1, &out) == RM_OK);
  EXPECT(contains(out, "\"chi_c\": 4"));
  EXPECT(contains(out, "\"link_of_pi\": 4"));
  rm_string_free(out);
  rm_map_free(h);

  rm_complex* k = NULL;
  EXPECT(rm_complex_from_json("{\"simplices\": [[0, 1, 2]]}", &k) == RM_OK);
  rm_cfun* one = NULL;
  EXPECT(rm_cfun_constant(k, 1, &one) == RM_OK);
  EXPECT(rm_cf_apply_json("integrate", one, NULL, 0, &out) == RM_OK);
  EXPECT(contains(out, "\"value\": 1"));
  rm_string_free(out);
  rm_cfun* v = NULL;
  EXPECT(rm_cfun_from_json(k, "{\"values\": {\"1\": 1}}", &v) == RM_OK);
  EXPECT(rm_cf_apply_json("dual", v, NULL, 0, &out) == RM_OK);
  EXPECT(contains(out, "\"1\": 1"));
  rm_string_free(out);
  rm_cfun_free(v);
  rm_cfun_free(one);
  rm_complex_free(k);
}

static void test_surface(void) {
  rm_surface* m = NULL;
  EXPECT(rm_surface_torus(&m) == RM_OK);
  char* out = NULL;
  EXPECT(rm_level_set_json(m, "-1", &out) == RM_OK);
  EXPECT(contains(out, "\"beta\": \"u\""));
  EXPECT(contains(out, "\"beta_link\": \"3*u + 3\""));
  rm_string_free(out);
  EXPECT(rm_level_set_json(m, "1/0", &out) != RM_OK);
  rm_surface_free(m);
}

static void test_validate(void) {
  char* out = NULL;
  int fails = -1;
  EXPECT(rm_validate_json("torus", NULL, &out, &fails) == RM_OK);
  EXPECT(fails == 0);
  EXPECT(contains(out, "\"pass\": 10"));
  rm_string_free(out);
  EXPECT(rm_validate_json("bogus", NULL, &out, &fails) == RM_E_INVALID_ARGUMENT);
}

int main(void) {
  test_milnor();
  test_errors();
  test_constructible();
  test_surface();
  test_validate();
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("capi_test: all checks passed (%s)\n", rm_version());
  return 0;
}
