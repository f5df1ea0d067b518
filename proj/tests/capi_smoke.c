/*
   Copyright 2026 The libual Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <stdio.h>
#include <string.h>

#include "ual/ual.h"

static int failures = 0;

static void expect(int cond, const char* what) {
  if (!cond) {
    fprintf(stderr, "FAILED: %s (%s)\n", what, ual_last_error());
    ++failures;
  }
}

int main(void) {
  ual_algebra* aff = NULL;
  ual_presentation* pres = NULL;
  ual_budget budget;
  char* out = NULL;

  expect(strlen(ual_version()) > 0, "version");
  expect(ual_algebra_builtin("aff2", 2, &aff) == UAL_OK, "builtin");
  expect(ual_algebra_dim(aff) == 2, "dim");
  expect(ual_algebra_characteristic(aff) == 2, "characteristic");
  expect(ual_presentation_build(aff, NULL, UAL_ORDER_DEGREVLEX, &pres) == UAL_OK, "presentation");
  ual_budget_default(&budget);
  expect(ual_characters(pres, &budget, &out) == UAL_OK, "characters");
  expect(out != NULL && strstr(out, "\"count\":6") != NULL, "six characters");
  ual_string_free(out);
  out = NULL;
  expect(ual_endomorphisms(aff, 1, &budget, &out) == UAL_OK, "automorphisms");
  expect(out != NULL && strstr(out, "\"count\":2") != NULL, "two automorphisms");
  ual_string_free(out);
  expect(ual_check(NULL, &out) == UAL_INPUT_ERROR, "null argument");
  expect(strlen(ual_last_error()) > 0, "error message");

  ual_presentation_free(pres);
  ual_algebra_free(aff);
  if (failures == 0) printf("capi smoke: ok\n");
  return failures == 0 ? 0 : 1;
}
