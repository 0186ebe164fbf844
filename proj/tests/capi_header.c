/*
 * Copyright 2026 The matusita authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * The public header must compile as C.
 */
#include <math.h>
#include <stdio.h>

#include "matusita/matusita.h"

int main(void) {
  mt_normal a = {0.0, 1.0};
  mt_normal b = {3.0, 1.0};
  double rho = 0.0;
  if (mt_rho_general(a, b, &rho) != MT_OK) {
    fprintf(stderr, "%s\n", mt_last_error());
    return 1;
  }
  return fabs(rho - 0.324652) < 1e-6 ? 0 : 1;
}
