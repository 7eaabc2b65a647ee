#pragma once

// Dense Pieri engine shared by the integral and mod-2 Chow rings.
//
// Classes are held as coefficient vectors indexed by the rank of a partition
// among all partitions of the frame. A partition (a_0 >= ... >= a_{k-1}) maps
// to the strictly decreasing set s_i = a_i + k - 1 - i, ranked by the
// combinatorial number system sum_i C(s_i, k - i).

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "schubert/integer.hpp"
#include "schubert/young.hpp"

namespace schubert::detail {

class FrameIndex {
 public:
  /// Shared, immutable index for a frame; built once per frame.
  static std::shared_ptr<const FrameIndex> get(Frame f);

  explicit FrameIndex(Frame f);

  Frame frame() const { return frame_; }
  std::size_t size() const { return partitions_.size(); }
  const Partition& partition(std::size_t i) const { return partitions_[i]; }
  std::span<const int> rows(std::size_t i) const {
    return {rows_.data() + i * static_cast<std::size_t>(frame_.k), static_cast<std::size_t>(frame_.k)};
  }
  int area(std::size_t i) const { return areas_[i]; }
  /// Rank contribution of value v in row r (0-based).
  std::size_t weight(int row, int value) const {
    return binom_[static_cast<std::size_t>(value + frame_.k - 1 - row)][static_cast<std::size_t>(frame_.k - row)];
  }
  std::size_t rank(const Partition& p) const;
  std::size_t full_rectangle() const { return size() - 1; }

 private:
  Frame frame_;
  std::vector<std::vector<std::size_t>> binom_;
  std::vector<Partition> partitions_;
  std::vector<int> rows_;
  std::vector<int> areas_;
};

struct IntRing {
  using T = Int;
  static T add(T a, T b) { return checked_add(a, b); }
  static T mul(T a, T b) { return checked_mul(a, b); }
  static T from(Int c) { return c; }
};

struct Mod2Ring {
  using T = std::uint8_t;
  static T add(T a, T b) { return a ^ b; }
  static T mul(T a, T b) { return a & b; }
  static T from(Int c) { return static_cast<T>(c & 1); }
};

template <class Ring>
using Dense = std::vector<typename Ring::T>;

/// Out += v * sigma_b.
template <class Ring>
void pieri_row(const FrameIndex& idx, const Dense<Ring>& v, int b, Dense<Ring>& out);
/// Out += v * sigma_{1^b}.
template <class Ring>
void pieri_col(const FrameIndex& idx, const Dense<Ring>& v, int b, Dense<Ring>& out);

/// Polynomial in the special classes: a sorted multiset of indices maps to
/// its integer coefficient. Indices are row classes sigma_j or, for the dual
/// expansion, column classes sigma_{1^j}.
using SpecialPoly = std::map<std::vector<int>, Int>;

/// Jacobi-Trudi expansion of sigma_p in the row classes; indices above
/// max_index are dropped (those classes vanish in the frame).
SpecialPoly row_expansion(const Partition& p, int max_index);
/// Dual expansion of sigma_p in column classes, built from the conjugate.
SpecialPoly col_expansion(const Partition& p, int max_index);

/// Out += sum over monomials m of coeff(m) * v * prod(special classes in m).
template <class Ring>
void apply_poly(const FrameIndex& idx, const Dense<Ring>& v, const SpecialPoly& poly, bool columns, Dense<Ring>& out);

/// Product of two dense classes. Expands whichever factor has the cheaper
/// special-class expansion and applies it to the other one.
template <class Ring>
Dense<Ring> multiply(const FrameIndex& idx, const Dense<Ring>& x, const Dense<Ring>& y);

extern template void pieri_row<IntRing>(const FrameIndex&, const Dense<IntRing>&, int, Dense<IntRing>&);
extern template void pieri_row<Mod2Ring>(const FrameIndex&, const Dense<Mod2Ring>&, int, Dense<Mod2Ring>&);
extern template void pieri_col<IntRing>(const FrameIndex&, const Dense<IntRing>&, int, Dense<IntRing>&);
extern template void pieri_col<Mod2Ring>(const FrameIndex&, const Dense<Mod2Ring>&, int, Dense<Mod2Ring>&);
extern template void apply_poly<IntRing>(const FrameIndex&, const Dense<IntRing>&, const SpecialPoly&, bool,
                                         Dense<IntRing>&);
extern template void apply_poly<Mod2Ring>(const FrameIndex&, const Dense<Mod2Ring>&, const SpecialPoly&, bool,
                                          Dense<Mod2Ring>&);
extern template Dense<IntRing> multiply<IntRing>(const FrameIndex&, const Dense<IntRing>&, const Dense<IntRing>&);
extern template Dense<Mod2Ring> multiply<Mod2Ring>(const FrameIndex&, const Dense<Mod2Ring>&,
                                                   const Dense<Mod2Ring>&);

}  // namespace schubert::detail
