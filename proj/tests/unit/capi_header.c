/* Copyright 2026 The mpcode Authors
 * SPDX-License-Identifier: Apache-2.0 */

/* The public header must compile as C and link against the shared library. */

#include <stdio.h>

#include "mpcode/mpcode.h"

int main(void) {
  mpc_code* code = NULL;
  size_t n = 0;
  size_t k = 0;
  int value = 0;
  int lower = 0;
  if (mpc_code_rm1(4, &code) != MPC_OK) return 1;
  if (mpc_code_shape(code, &n, &k) != MPC_OK || n != 16 || k != 5) return 1;
  if (mpc_code_dual_distance(code, 6, &value, &lower) != MPC_OK || value != 4 || lower != 0) return 1;
  mpc_code_free(code);
  printf("%s\n", mpc_version());
  return 0;
}
