#include "schubert/chmod2.hpp"

#include <cstdint>
#include <map>

#include "engine.hpp"
#include "schubert/error.hpp"

namespace schubert {

namespace {

using detail::Dense;
using detail::FrameIndex;
using detail::Mod2Ring;
using detail::SpecialPoly;

Dense<Mod2Ring> to_dense(const FrameIndex& idx, const Ch2Class& x) {
  Dense<Mod2Ring> v(idx.size(), 0);
  for (const auto& p : x.terms()) v[idx.rank(p)] = 1;
  return v;
}

Ch2Class from_dense(const FrameIndex& idx, const Dense<Mod2Ring>& v) {
  Ch2Class out(idx.frame());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i]) out.toggle(idx.partition(i));
  }
  return out;
}

void require_same_frame(const Ch2Class& x, const Ch2Class& y) {
  if (x.frame() != y.frame()) {
    throw FrameMismatchError("classes live in " + x.frame().to_string() + " and " + y.frame().to_string());
  }
}

void add_mono(SpecialPoly& poly, std::vector<int> mono, Int c) {
  std::sort(mono.begin(), mono.end());
  Int& slot = poly[std::move(mono)];
  slot = (slot + c) & 1;
}

// Sq^2_O applied as a derivation to a monomial in the cbar_j, mod 2.
void wu_derivation(const std::vector<int>& mono, int k, SpecialPoly& out) {
  for (std::size_t t = 0; t < mono.size(); ++t) {
    const int j = mono[t];
    std::vector<int> with_c1(mono);
    with_c1.push_back(1);
    add_mono(out, with_c1, 1);
    if ((j - 1) % 2 != 0 && j + 1 <= k) {
      std::vector<int> raised(mono);
      raised[t] = j + 1;
      add_mono(out, raised, 1);
    }
  }
}

// Dense GF(2) system, one bit row per equation, last column the right-hand side.
class Gf2System {
 public:
  Gf2System(std::size_t rows, std::size_t cols)
      : cols_(cols), words_((cols + 1 + 63) / 64), bits_(rows * words_, 0) {}

  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
  bool get(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1; }

  std::optional<std::vector<bool>> solve() {
    const std::size_t rows = bits_.size() / (words_ ? words_ : 1);
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows; ++c) {
      std::size_t pr = r;
      while (pr < rows && !get(pr, c)) ++pr;
      if (pr == rows) continue;
      swap_rows(pr, r);
      for (std::size_t o = 0; o < rows; ++o) {
        if (o != r && get(o, c)) xor_rows(o, r);
      }
      pivot_cols.push_back(c);
      ++r;
    }
    for (std::size_t o = r; o < rows; ++o) {
      if (get(o, cols_)) return std::nullopt;
    }
    std::vector<bool> x(cols_, false);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = get(i, cols_);
    return x;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t w = 0; w < words_; ++w) std::swap(bits_[a * words_ + w], bits_[b * words_ + w]);
  }
  void xor_rows(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < words_; ++w) bits_[dst * words_ + w] ^= bits_[src * words_ + w];
  }

  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

Ch2Class::Ch2Class(Frame f, const std::vector<Partition>& parts) : frame_(f) {
  for (const auto& p : parts) toggle(p);
}

Ch2Class& Ch2Class::toggle(const Partition& p) {
  if (!fits_in_frame(p, frame_)) {
    throw FrameError("partition (" + p.to_string() + ") does not fit the " + frame_.to_string() + " frame");
  }
  if (!terms_.erase(p)) terms_.insert(p);
  return *this;
}

Ch2Class& Ch2Class::operator+=(const Ch2Class& other) {
  require_same_frame(*this, other);
  for (const auto& p : other.terms_) toggle(p);
  return *this;
}

std::string Ch2Class::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->to_string();
  }
  return out;
}

Ch2Class reduce(const ChowClass& x) {
  Ch2Class out(x.frame());
  for (const auto& [p, c] : x.terms()) {
    if (c % 2 != 0) out.toggle(p);
  }
  return out;
}

ChowClass lift_coefficients(const Ch2Class& x) {
  ChowClass out(x.frame());
  for (const auto& p : x.terms()) out.add(p, 1);
  return out;
}

Ch2Class cbar(Frame f, int i) {
  if (i < 0 || i > f.k) return Ch2Class(f);
  return Ch2Class::basis(f, Partition(std::vector<int>(static_cast<std::size_t>(i), 1)));
}

Ch2Class cbar_perp(Frame f, int j) {
  if (j < 0 || j > f.w) return Ch2Class(f);
  return Ch2Class::basis(f, j == 0 ? Partition() : Partition{j});
}

Ch2Class mult2(const Ch2Class& x, const Ch2Class& y) {
  require_same_frame(x, y);
  if (x.is_zero() || y.is_zero()) return Ch2Class(x.frame());
  auto idx = FrameIndex::get(x.frame());
  return from_dense(*idx, detail::multiply<Mod2Ring>(*idx, to_dense(*idx, x), to_dense(*idx, y)));
}

Ch2Class sq2(const Ch2Class& x, Twist tw) {
  const Frame f = x.frame();
  // Box (r, c), 1-based, is black iff r + c is even; we want white for O.
  const int wanted = tw == Twist::O ? 1 : 0;
  Ch2Class out(f);
  for (const auto& p : x.terms()) {
    for (int r = 0; r < f.k; ++r) {
      const int len = p[r];
      if (len >= f.w) continue;
      if (r > 0 && len >= p[r - 1]) continue;
      if ((r + len) % 2 != wanted) continue;
      std::vector<int> parts(p.parts().begin(), p.parts().end());
      if (r < static_cast<int>(parts.size())) {
        ++parts[static_cast<std::size_t>(r)];
      } else {
        parts.push_back(1);
      }
      out.toggle(Partition(std::move(parts)));
    }
  }
  return out;
}

Ch2Class sq2_wu(const Ch2Class& x, Twist tw) {
  const Frame f = x.frame();
  SpecialPoly poly;
  for (const auto& p : x.terms()) {
    for (const auto& [mono, c] : detail::col_expansion(p, f.k)) {
      if (c % 2 == 0) continue;
      wu_derivation(mono, f.k, poly);
      if (tw == Twist::Det) {
        std::vector<int> with_c1(mono);
        with_c1.push_back(1);
        add_mono(poly, with_c1, 1);
      }
    }
  }
  std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
  auto idx = FrameIndex::get(f);
  Dense<Mod2Ring> unit(idx->size(), 0);
  unit[0] = 1;
  Dense<Mod2Ring> out(idx->size(), 0);
  detail::apply_poly<Mod2Ring>(*idx, unit, poly, true, out);
  return from_dense(*idx, out);
}

bool liftable(const Ch2Class& x, Twist tw) { return sq2(x, tw).is_zero(); }

bool sq2_vanishes_by_parity(const Partition& p, Frame f, Twist tw) {
  const BoundaryProfile bp = boundary_profile(p, f);
  const int segs = bp.segments();
  // 1-based accessors matching the boundary notation; out-of-range indices
  // only occur in clauses that have no box to compare and are vacuous.
  auto d = [&](int i) { return bp.d[static_cast<std::size_t>(i - 1)]; };
  auto e = [&](int i) { return bp.e[static_cast<std::size_t>(i - 1)]; };
  auto even = [](int v) { return v % 2 == 0; };

  for (int i = 1; i + 2 <= segs; ++i) {
    if (!even(d(i + 1) - d(i) + e(i + 2) - e(i + 1))) return false;
  }
  const bool has_corner = segs >= 2;
  const bool x_even = !has_corner || even(d(1) + e(2) - e(1));
  const bool x_odd = !has_corner || !even(d(1) + e(2) - e(1));
  const int w = f.w;
  if (tw == Twist::O) {
    return (even(w - e(1)) && x_even) || (e(1) == 0 && !even(w) && x_odd);
  }
  return (!even(w - e(1)) && x_even) || (e(1) == 0 && even(w) && x_odd);
}

std::optional<Ch2Class> sq2_preimage(const Ch2Class& x, Twist tw) {
  const Frame f = x.frame();
  std::map<int, std::vector<Partition>> by_degree;
  for (const auto& p : x.terms()) by_degree[p.area()].push_back(p);

  Ch2Class witness(f);
  for (const auto& [deg, targets] : by_degree) {
    if (deg == 0) return std::nullopt;
    const std::vector<Partition> sources = frame_partitions(f, deg - 1);
    const std::vector<Partition> rows = frame_partitions(f, deg);
    std::map<Partition, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);

    Gf2System system(rows.size(), sources.size());
    for (std::size_t c = 0; c < sources.size(); ++c) {
      const Ch2Class image = sq2(Ch2Class::basis(f, sources[c]), tw);
      for (const auto& q : image.terms()) system.set(row_of.at(q), c);
    }
    for (const auto& t : targets) system.set(row_of.at(t), sources.size());
    auto solution = system.solve();
    if (!solution) return std::nullopt;
    for (std::size_t c = 0; c < sources.size(); ++c) {
      if ((*solution)[c]) witness.toggle(sources[c]);
    }
  }
  return witness;
}

}  // namespace schubert
