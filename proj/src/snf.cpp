#include "hymcg/snf.hpp"

#include <algorithm>
#include <set>

namespace hymcg {

namespace {

// Column index maintained alongside rows so column operations stay cheap.
struct WorkMatrix {
  int rows, cols;
  std::vector<std::map<int, BigInt>> row;      // row -> (col -> value)
  std::vector<std::set<int>> colRows;          // col -> rows with a nonzero

  explicit WorkMatrix(SparseIntMatrix m)
      : rows(m.rows), cols(m.cols), row(std::move(m.rowData)), colRows(m.cols) {
    for (int r = 0; r < rows; ++r)
      for (const auto& [c, v] : row[r]) colRows[c].insert(r);
  }

  void setEntry(int r, int c, BigInt v) {
    if (v == 0) {
      row[r].erase(c);
      colRows[c].erase(r);
    } else {
      if (row[r].find(c) == row[r].end()) colRows[c].insert(r);
      row[r][c] = std::move(v);
    }
  }

  const BigInt* entry(int r, int c) const {
    auto it = row[r].find(c);
    return it == row[r].end() ? nullptr : &it->second;
  }

  // row[dst] += q * row[src]
  void addRow(int dst, int src, const BigInt& q) {
    if (q == 0) return;
    for (const auto& [c, v] : row[src]) {
      BigInt nv = q * v;
      auto it = row[dst].find(c);
      if (it != row[dst].end()) nv += it->second;
      setEntry(dst, c, std::move(nv));
    }
  }

  // col[dst] += q * col[src]
  void addCol(int dst, int src, const BigInt& q) {
    if (q == 0) return;
    const std::set<int> src_rows = colRows[src];
    for (int r : src_rows) {
      BigInt nv = q * (*entry(r, src));
      auto it = row[r].find(dst);
      if (it != row[r].end()) nv += it->second;
      setEntry(r, dst, std::move(nv));
    }
  }

  void swapRows(int a, int b) {
    if (a == b) return;
    for (const auto& [c, v] : row[a]) colRows[c].erase(a);
    for (const auto& [c, v] : row[b]) colRows[c].erase(b);
    std::swap(row[a], row[b]);
    for (const auto& [c, v] : row[a]) colRows[c].insert(a);
    for (const auto& [c, v] : row[b]) colRows[c].insert(b);
  }

  void swapCols(int a, int b) {
    if (a == b) return;
    const std::set<int> touched = [&] {
      std::set<int> t = colRows[a];
      t.insert(colRows[b].begin(), colRows[b].end());
      return t;
    }();
    for (int r : touched) {
      BigInt va = 0, vb = 0;
      if (const BigInt* p = entry(r, a)) va = *p;
      if (const BigInt* p = entry(r, b)) vb = *p;
      setEntry(r, a, vb);
      setEntry(r, b, va);
    }
  }
};

}  // namespace

SmithResult smithNormalForm(SparseIntMatrix input) {
  WorkMatrix m(std::move(input));
  const int bound = std::min(m.rows, m.cols);
  std::vector<BigInt> diag;

  for (int t = 0; t < bound; ++t) {
    // Smallest nonzero entry in the remaining block as pivot.
    int pr = -1, pc = -1;
    BigInt best = 0;
    for (int r = t; r < m.rows; ++r) {
      for (const auto& [c, v] : m.row[r]) {
        if (c < t) continue;
        const BigInt a = abs(v);
        if (pr < 0 || a < best) {
          best = a;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;  // remaining block is zero

    m.swapRows(t, pr);
    m.swapCols(t, pc);

    // Clear row and column t; repeat until clean (remainders may refill).
    bool dirty = true;
    while (dirty) {
      dirty = false;
      const std::set<int> col_rows = m.colRows[t];
      for (int r : col_rows) {
        if (r <= t) continue;
        const BigInt pivot = *m.entry(t, t);
        const BigInt v = *m.entry(r, t);
        const BigInt q = v / pivot;
        m.addRow(r, t, -q);
        if (const BigInt* rem = m.entry(r, t); rem && *rem != 0) {
          // Remainder smaller than the pivot: promote it and restart.
          m.swapRows(t, r);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      const std::map<int, BigInt> row_t = m.row[t];
      for (const auto& [c, v] : row_t) {
        if (c <= t) continue;
        const BigInt pivot = *m.entry(t, t);
        const BigInt q = v / pivot;
        m.addCol(c, t, -q);
        if (const BigInt* rem = m.entry(t, c); rem && *rem != 0) {
          m.swapCols(t, c);
          dirty = true;
          break;
        }
      }
    }
    diag.push_back(abs(*m.entry(t, t)));
  }

  // Divisibility chain d_i | d_{i+1}: fold neighboring pairs.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i + 1] % diag[i] != 0) {
        const BigInt g = gcd(diag[i], diag[i + 1]);
        diag[i + 1] = diag[i] / g * diag[i + 1];
        diag[i] = g;
        changed = true;
      }
    }
  }

  SmithResult out;
  out.rank = static_cast<int>(diag.size());
  out.invariantFactors = std::move(diag);
  return out;
}

}  // namespace hymcg
