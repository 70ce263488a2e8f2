#pragma once

#include <map>
#include <vector>

#include "hymcg/bigint.hpp"

namespace hymcg {

/// Sparse integer matrix, row-major map storage. Only what Smith normal form
/// needs; not a general linear algebra type.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::map<int, BigInt>> rowData;

  SparseIntMatrix(int r, int c) : rows(r), cols(c), rowData(r) {}

  void set(int r, int c, BigInt v) {
    if (v == 0)
      rowData[r].erase(c);
    else
      rowData[r][c] = std::move(v);
  }
};

struct SmithResult {
  int rank = 0;
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  std::vector<BigInt> invariantFactors;
};

/// Diagonalization by unimodular row/column operations with small-pivot
/// selection, exact arbitrary-precision arithmetic throughout.
SmithResult smithNormalForm(SparseIntMatrix m);

}  // namespace hymcg
