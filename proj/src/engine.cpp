#include "engine.hpp"

#include <algorithm>
#include <mutex>

#include "schubert/error.hpp"

namespace schubert::detail {

namespace {

void enumerate_rows(int k, int row, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (row == k) {
    out.push_back(current);
    return;
  }
  for (int v = 0; v <= max_part; ++v) {
    current[static_cast<std::size_t>(row)] = v;
    enumerate_rows(k, row + 1, v, current, out);
  }
}

template <class Ring>
struct RowPieri {
  const FrameIndex& idx;
  std::span<const int> a;
  typename Ring::T c;
  Dense<Ring>& out;

  void go(int r, int remaining, std::size_t rank) const {
    const int k = idx.frame().k;
    if (r == k) {
      if (remaining == 0) out[rank] = Ring::add(out[rank], c);
      return;
    }
    const int lo = a[static_cast<std::size_t>(r)];
    const int hi = r == 0 ? idx.frame().w : a[static_cast<std::size_t>(r - 1)];
    // Boxes that the rows below r can still absorb.
    const int below = r + 1 < k ? lo - a[static_cast<std::size_t>(k - 1)] : 0;
    const int max_add = std::min(hi - lo, remaining);
    for (int t = std::max(0, remaining - below); t <= max_add; ++t) {
      go(r + 1, remaining - t, rank + idx.weight(r, lo + t));
    }
  }
};

template <class Ring>
struct ColPieri {
  const FrameIndex& idx;
  std::span<const int> a;
  typename Ring::T c;
  Dense<Ring>& out;

  void go(int r, int remaining, int prev, std::size_t rank) const {
    const int k = idx.frame().k;
    if (remaining > k - r) return;
    if (r == k) {
      out[rank] = Ring::add(out[rank], c);
      return;
    }
    const int v = a[static_cast<std::size_t>(r)];
    go(r + 1, remaining, v, rank + idx.weight(r, v));
    if (remaining > 0 && v + 1 <= idx.frame().w && v + 1 <= prev) {
      go(r + 1, remaining - 1, v + 1, rank + idx.weight(r, v + 1));
    }
  }
};

// Expands det(h_{a_i + j - i}) row by row, skipping vanishing entries.
void expand_determinant(const Partition& p, int max_index, int row, std::vector<bool>& used, std::vector<int>& mono,
                        int sign, SpecialPoly& out) {
  const int len = p.length();
  if (row == len) {
    std::vector<int> key(mono);
    std::sort(key.begin(), key.end());
    Int& slot = out[key];
    slot = checked_add(slot, sign);
    return;
  }
  int inversions = 0;  // number of used columns greater than j, counted below
  for (int j = len - 1; j >= 0; --j) {
    if (used[static_cast<std::size_t>(j)]) {
      ++inversions;
      continue;
    }
    const int index = p[row] + j - row;
    if (index < 0 || index > max_index) continue;
    used[static_cast<std::size_t>(j)] = true;
    if (index > 0) mono.push_back(index);
    expand_determinant(p, max_index, row + 1, used, mono, inversions % 2 ? -sign : sign, out);
    if (index > 0) mono.pop_back();
    used[static_cast<std::size_t>(j)] = false;
  }
}

SpecialPoly jacobi_trudi(const Partition& p, int max_index) {
  SpecialPoly out;
  std::vector<bool> used(static_cast<std::size_t>(p.length()), false);
  std::vector<int> mono;
  expand_determinant(p, max_index, 0, used, mono, 1, out);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

double expansion_cost(const Partition& p) {
  const int m = std::min(p.length(), p[0]);
  double f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f * (m + 1);
}

template <class Ring>
bool nonzero(typename Ring::T v) {
  return v != typename Ring::T{0};
}

}  // namespace

std::shared_ptr<const FrameIndex> FrameIndex::get(Frame f) {
  static std::mutex mutex;
  static std::map<Frame, std::shared_ptr<const FrameIndex>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(f);
  if (it != cache.end()) return it->second;
  auto idx = std::make_shared<const FrameIndex>(f);
  cache.emplace(f, idx);
  return idx;
}

FrameIndex::FrameIndex(Frame f) : frame_(f) {
  const int n = f.n();
  binom_.assign(static_cast<std::size_t>(n + 1), std::vector<std::size_t>(static_cast<std::size_t>(f.k + 1), 0));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= std::min(i, f.k); ++j) {
      binom_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<std::size_t>(binomial(i, j));
    }
  }
  std::vector<std::vector<int>> all;
  std::vector<int> current(static_cast<std::size_t>(f.k), 0);
  enumerate_rows(f.k, 0, f.w, current, all);
  partitions_.resize(all.size());
  rows_.assign(all.size() * static_cast<std::size_t>(f.k), 0);
  areas_.assign(all.size(), 0);
  for (const auto& rows : all) {
    std::size_t r = 0;
    int area = 0;
    for (int i = 0; i < f.k; ++i) {
      r += weight(i, rows[static_cast<std::size_t>(i)]);
      area += rows[static_cast<std::size_t>(i)];
    }
    partitions_[r] = Partition(rows);
    std::copy(rows.begin(), rows.end(), rows_.begin() + static_cast<std::ptrdiff_t>(r * static_cast<std::size_t>(f.k)));
    areas_[r] = area;
  }
}

std::size_t FrameIndex::rank(const Partition& p) const {
  if (!fits_in_frame(p, frame_)) throw FrameError("partition (" + p.to_string() + ") outside " + frame_.to_string());
  std::size_t r = 0;
  for (int i = 0; i < frame_.k; ++i) r += weight(i, p[i]);
  return r;
}

template <class Ring>
void pieri_row(const FrameIndex& idx, const Dense<Ring>& v, int b, Dense<Ring>& out) {
  if (b < 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!nonzero<Ring>(v[i])) continue;
    RowPieri<Ring>{idx, idx.rows(i), v[i], out}.go(0, b, 0);
  }
}

template <class Ring>
void pieri_col(const FrameIndex& idx, const Dense<Ring>& v, int b, Dense<Ring>& out) {
  if (b < 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!nonzero<Ring>(v[i])) continue;
    ColPieri<Ring>{idx, idx.rows(i), v[i], out}.go(0, b, idx.frame().w, 0);
  }
}

SpecialPoly row_expansion(const Partition& p, int max_index) { return jacobi_trudi(p, max_index); }

SpecialPoly col_expansion(const Partition& p, int max_index) { return jacobi_trudi(p.conjugate(), max_index); }

template <class Ring>
void apply_poly(const FrameIndex& idx, const Dense<Ring>& v, const SpecialPoly& poly, bool columns, Dense<Ring>& out) {
  // Monomials arrive in lexicographic order, so consecutive ones share
  // prefixes; stack[d] holds v times the first d factors of the current one.
  std::vector<Dense<Ring>> stack;
  stack.push_back(v);
  std::vector<int> prefix;
  for (const auto& [mono, coeff] : poly) {
    const auto c = Ring::from(coeff);
    if (!nonzero<Ring>(c)) continue;
    std::size_t common = 0;
    while (common < prefix.size() && common < mono.size() && prefix[common] == mono[common]) ++common;
    prefix.resize(common);
    stack.resize(common + 1);
    for (std::size_t d = common; d < mono.size(); ++d) {
      Dense<Ring> next(idx.size(), typename Ring::T{0});
      if (columns) {
        pieri_col<Ring>(idx, stack.back(), mono[d], next);
      } else {
        pieri_row<Ring>(idx, stack.back(), mono[d], next);
      }
      stack.push_back(std::move(next));
      prefix.push_back(mono[d]);
    }
    const Dense<Ring>& top = stack.back();
    for (std::size_t i = 0; i < top.size(); ++i) {
      if (nonzero<Ring>(top[i])) out[i] = Ring::add(out[i], Ring::mul(c, top[i]));
    }
  }
}

template <class Ring>
Dense<Ring> multiply(const FrameIndex& idx, const Dense<Ring>& x, const Dense<Ring>& y) {
  double cost_x = 0;
  double cost_y = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (nonzero<Ring>(x[i])) cost_x += expansion_cost(idx.partition(i));
    if (nonzero<Ring>(y[i])) cost_y += expansion_cost(idx.partition(i));
  }
  const Dense<Ring>& expanded = cost_x < cost_y ? x : y;
  const Dense<Ring>& other = cost_x < cost_y ? y : x;

  const Frame f = idx.frame();
  SpecialPoly rows;
  SpecialPoly cols;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (!nonzero<Ring>(expanded[i])) continue;
    const Partition& p = idx.partition(i);
    const Int c = static_cast<Int>(expanded[i]);
    const bool by_rows = p.length() <= p[0];
    SpecialPoly& target = by_rows ? rows : cols;
    for (const auto& [mono, m] : by_rows ? row_expansion(p, f.w) : col_expansion(p, f.k)) {
      Int& slot = target[mono];
      slot = checked_add(slot, checked_mul(c, m));
    }
  }
  Dense<Ring> out(idx.size(), typename Ring::T{0});
  apply_poly<Ring>(idx, other, rows, false, out);
  apply_poly<Ring>(idx, other, cols, true, out);
  return out;
}

template void pieri_row<IntRing>(const FrameIndex&, const Dense<IntRing>&, int, Dense<IntRing>&);
template void pieri_row<Mod2Ring>(const FrameIndex&, const Dense<Mod2Ring>&, int, Dense<Mod2Ring>&);
template void pieri_col<IntRing>(const FrameIndex&, const Dense<IntRing>&, int, Dense<IntRing>&);
template void pieri_col<Mod2Ring>(const FrameIndex&, const Dense<Mod2Ring>&, int, Dense<Mod2Ring>&);
template void apply_poly<IntRing>(const FrameIndex&, const Dense<IntRing>&, const SpecialPoly&, bool,
                                  Dense<IntRing>&);
template void apply_poly<Mod2Ring>(const FrameIndex&, const Dense<Mod2Ring>&, const SpecialPoly&, bool,
                                   Dense<Mod2Ring>&);
template Dense<IntRing> multiply<IntRing>(const FrameIndex&, const Dense<IntRing>&, const Dense<IntRing>&);
template Dense<Mod2Ring> multiply<Mod2Ring>(const FrameIndex&, const Dense<Mod2Ring>&, const Dense<Mod2Ring>&);

}  // namespace schubert::detail
