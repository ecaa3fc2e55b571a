#pragma once

#include <vector>

#include "eidepth/field.hpp"

namespace eidepth {

/// Dense integer matrix, row-major. Entries are exact integers; all rank
/// computations on top of it are exact as well.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMatrix identity(int n);
};

/// Exact rank of an integer matrix over the given field.
///
/// Over the rationals this is fraction-free (Bareiss) elimination; the fast
/// path runs in 64-bit arithmetic and falls back to arbitrary-precision
/// integers if an intermediate minor overflows. Over GF(p) it is ordinary
/// modular elimination.
int rank(const IntMatrix& m, const FieldSpec& k);

}  // namespace eidepth
