#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hymcg/snf.hpp"

using namespace hymcg;

namespace {

SparseIntMatrix fromRows(const std::vector<std::vector<int>>& rows) {
  SparseIntMatrix m(static_cast<int>(rows.size()),
                    rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.set(r, c, rows[r][c]);
  return m;
}

}  // namespace

TEST_CASE("identity and zero matrices") {
  auto id = smithNormalForm(fromRows({{1, 0}, {0, 1}}));
  CHECK(id.rank == 2);
  CHECK(id.invariantFactors == std::vector<BigInt>{1, 1});
  auto zero = smithNormalForm(SparseIntMatrix(3, 4));
  CHECK(zero.rank == 0);
}

TEST_CASE("classic 2x2 example") {
  // det = -8, gcd of entries 2, so d1 = 2, d2 = 4.
  auto r = smithNormalForm(fromRows({{2, 4}, {6, 8}}));
  CHECK(r.rank == 2);
  CHECK(r.invariantFactors == std::vector<BigInt>{2, 4});
}

TEST_CASE("rectangular and rank-deficient") {
  auto r = smithNormalForm(fromRows({{1, 2, 3}, {2, 4, 6}}));
  CHECK(r.rank == 1);
  CHECK(r.invariantFactors == std::vector<BigInt>{1});

  auto t = smithNormalForm(fromRows({{2, 0, 0}, {0, 3, 0}}));
  CHECK(t.rank == 2);
  CHECK(t.invariantFactors == std::vector<BigInt>{1, 6});  // divisibility chain
}

TEST_CASE("torsion example") {
  // diag(2, 2) is already in normal form.
  auto r = smithNormalForm(fromRows({{2, 0}, {0, 2}}));
  CHECK(r.invariantFactors == std::vector<BigInt>{2, 2});
}

TEST_CASE("random matrices: rank matches fraction-free Gaussian elimination") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<long long>> dense(rows,
                                              std::vector<long long>(cols));
    SparseIntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        const int v = static_cast<int>(rng() % 7) - 3;
        dense[r][c] = v;
        m.set(r, c, v);
      }

    // Independent rank oracle: rational Gaussian elimination on doubles is
    // unreliable, so run fraction-free elimination with long double guards
    // replaced by exact BigInt arithmetic.
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) a[r][c] = dense[r][c];
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
      int pivot = -1;
      for (int r = rank; r < rows; ++r)
        if (a[r][c] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(a[rank], a[pivot]);
      for (int r = rank + 1; r < rows; ++r) {
        if (a[r][c] == 0) continue;
        const BigInt f = a[r][c], p = a[rank][c];
        for (int k = 0; k < cols; ++k) a[r][k] = a[r][k] * p - a[rank][k] * f;
      }
      ++rank;
    }

    CHECK(smithNormalForm(std::move(m)).rank == rank);
  }
}
