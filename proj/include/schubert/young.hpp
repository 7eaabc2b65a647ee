#pragma once

// Young diagram combinatorics: partitions, frames, boundary profiles,
// evenness, doubling, and the canonical decomposition of even diagrams.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// A weakly decreasing sequence of nonnegative integers with trailing zeros
/// removed. The empty sequence is the zero partition.
class Partition {
 public:
  Partition() = default;
  /// Throws ParseError if the sequence is not weakly decreasing or has a
  /// negative entry.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Comma-separated parts ("5,3,3,1,1"). "", "0" and "()" give the zero
  /// partition; surrounding parentheses are accepted.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); zero past the last nonzero part.
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  /// Number of boxes.
  int area() const;
  /// The conjugate (transposed) partition.
  Partition conjugate() const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A k x w rectangle; the cell frame of Gr(k, k + w). Halved frames may be
/// degenerate (k or w zero), in which case only the zero partition fits.
struct Frame {
  int k = 0;
  int w = 0;

  Frame() = default;
  /// Throws FrameError on negative dimensions.
  Frame(int rows, int cols);

  int n() const { return k + w; }
  int dimension() const { return k * w; }

  /// "KxW" or "Gr(k,n)". Both dimensions must be positive.
  static Frame parse(std::string_view text);
  std::string to_string() const;

  friend auto operator<=>(const Frame&, const Frame&) = default;
  friend bool operator==(const Frame&, const Frame&) = default;
};

/// Line bundle class in Pic/2: trivial or det of the tautological bundle.
enum class Twist : std::uint8_t { O = 0, Det = 1 };

inline Twist operator^(Twist a, Twist b) {
  return static_cast<Twist>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline int bit(Twist t) { return static_cast<int>(t); }
std::string to_string(Twist t);
/// Accepts "o", "0", "det", "1".
Twist parse_twist(std::string_view text);

/// The extra factor of a non completely even diagram.
enum class Extra : std::uint8_t { None, Ek, Eperp, R };
std::string to_string(Extra e);

/// Groups of equal rows of the k-row padded partition. d holds the
/// cumulative row counts (ending at k), e the gaps w - part for each group.
struct BoundaryProfile {
  std::vector<int> d;
  std::vector<int> e;
  int segments() const { return static_cast<int>(d.size()); }
  friend bool operator==(const BoundaryProfile&, const BoundaryProfile&) = default;
};

struct EvenDecomposition {
  Partition core;
  Extra extra = Extra::None;
  friend bool operator==(const EvenDecomposition&, const EvenDecomposition&) = default;
};

enum class Color : std::uint8_t { Black, White };

bool fits_in_frame(const Partition& p, Frame f);
BoundaryProfile boundary_profile(const Partition& p, Frame f);

bool is_even(const Partition& p, Frame f);
/// True iff p is the double of some partition: every nonzero part is even and
/// occurs an even number of times.
bool is_completely_even(const Partition& p, Frame f);

/// (a1,...,ar) -> (2a1,2a1,...,2ar,2ar).
Partition doubled(const Partition& p);
/// Inverse of doubled(); throws NotDoubledError.
Partition halve_completely_even(const Partition& p);

EvenDecomposition decompose_even(const Partition& p, Frame f);
Partition combine_even(const EvenDecomposition& d, Frame f);

/// Frame that the core of a decomposition with the given extra lives in.
Frame core_frame(Frame f, Extra extra);
/// Whether the extra factor exists at all in frame f.
bool extra_allowed(Frame f, Extra extra);

Twist twist_of(Extra extra);
/// Twist of an even diagram, read off its decomposition.
Twist twist(const Partition& p, Frame f);

/// The 180-degree rotated complement: part i is w - p[k-1-i].
Partition complement(const Partition& p, Frame f);

/// 1-based coordinates; (1,1) is black.
Color checkerboard_color(int row, int col);

/// All partitions fitting the frame, in increasing area and then reverse
/// lexicographic order. With area >= 0 only those of that area.
std::vector<Partition> frame_partitions(Frame f, int area = -1);
/// All even diagrams of the frame.
std::vector<Partition> even_diagrams(Frame f);

/// Multi-line ASCII rendering; '#' per box, or 'B'/'W' checkerboard fill.
std::string render_diagram(const Partition& p, bool checkerboard = false);

}  // namespace schubert

template <>
struct std::hash<schubert::Partition> {
  std::size_t operator()(const schubert::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};
