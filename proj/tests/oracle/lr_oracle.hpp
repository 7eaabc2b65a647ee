#pragma once

// Littlewood-Richardson coefficients by brute-force tableau counting.
// Test-only; shares no code with the library engine.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Shape = std::vector<int>;

inline int size(const Shape& s) {
  int n = 0;
  for (int x : s) n += x;
  return n;
}

inline bool contains(const Shape& outer, const Shape& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

// Number of semistandard fillings of nu/lambda with content mu whose reverse
// reading word (rows top to bottom, each right to left) is a lattice word.
inline std::int64_t lr(const Shape& lambda, const Shape& mu, const Shape& nu) {
  if (size(lambda) + size(mu) != size(nu) || !contains(nu, lambda)) return 0;
  const int rows = static_cast<int>(nu.size());
  auto inner = [&](int r) { return r < static_cast<int>(lambda.size()) ? lambda[r] : 0; };

  // Cells in reading order: row by row, right to left.
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < rows; ++r) {
    for (int c = nu[r] - 1; c >= inner(r); --c) cells.emplace_back(r, c);
  }
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(nu[r], 0);
  std::vector<int> used(mu.size() + 1, 0);

  std::int64_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[i];
    for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
      if (used[v - 1] >= mu[v - 1]) continue;
      // Lattice: after placing v, count(v) <= count(v-1).
      if (v > 1 && used[v - 1] + 1 > used[v - 2]) continue;
      // Rows weakly increase left to right; we fill right to left.
      if (c + 1 < nu[r] && t[r][c + 1] < v) continue;
      // Columns strictly increase downwards.
      if (r > 0 && c >= inner(r - 1) && t[r - 1][c] >= v) continue;
      t[r][c] = v;
      ++used[v - 1];
      go(i + 1);
      --used[v - 1];
      t[r][c] = 0;
    }
  };
  go(0);
  return count;
}

// All partitions in a k x w box.
inline std::vector<Shape> box_shapes(int k, int w) {
  std::vector<Shape> out;
  Shape cur;
  std::function<void(int, int)> go = [&](int row, int bound) {
    out.push_back(cur);
    if (row == k) return;
    for (int v = 1; v <= bound; ++v) {
      cur.push_back(v);
      go(row + 1, v);
      cur.pop_back();
    }
  };
  go(0, w);
  return out;
}

// sigma_lambda * sigma_mu in the k x w box: nu -> c.
inline std::map<Shape, std::int64_t> product(const Shape& lambda, const Shape& mu, int k, int w) {
  std::map<Shape, std::int64_t> out;
  for (const auto& nu : box_shapes(k, w)) {
    if (const auto c = lr(lambda, mu, nu); c != 0) out[nu] = c;
  }
  return out;
}

}  // namespace oracle
