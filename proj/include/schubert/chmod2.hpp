#pragma once

// The mod-2 Chow ring Ch(Gr(k,n)) and the twisted Steenrod squares.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schubert/error.hpp"
#include "schubert/schur.hpp"
#include "schubert/young.hpp"

namespace schubert {

/// Sum of Schubert classes with coefficients in Z/2, stored as the set of
/// partitions with coefficient 1.
class Ch2Class {
 public:
  using Terms = std::set<Partition>;

  Ch2Class() = default;
  explicit Ch2Class(Frame f) : frame_(f) {}
  /// Sum of the listed classes; repeated entries cancel.
  Ch2Class(Frame f, const std::vector<Partition>& parts);

  static Ch2Class basis(Frame f, const Partition& p) { return Ch2Class(f, {p}); }
  static Ch2Class one(Frame f) { return basis(f, Partition()); }

  Frame frame() const { return frame_; }
  const Terms& terms() const { return terms_; }
  bool contains(const Partition& p) const { return terms_.count(p) != 0; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds sigma_p, i.e. toggles its coefficient.
  Ch2Class& toggle(const Partition& p);
  Ch2Class& operator+=(const Ch2Class& other);
  friend Ch2Class operator+(Ch2Class a, const Ch2Class& b) { return a += b; }
  friend bool operator==(const Ch2Class&, const Ch2Class&) = default;

  std::string to_string() const;

 private:
  Frame frame_;
  Terms terms_;
};

/// A class whose Sq^2 obstruction does not vanish; carries the obstruction.
class NotLiftableError : public Error {
 public:
  NotLiftableError(const std::string& what, Ch2Class obstruction)
      : Error(what), obstruction_(std::move(obstruction)) {}
  const Ch2Class& obstruction() const { return obstruction_; }

 private:
  Ch2Class obstruction_;
};

Ch2Class reduce(const ChowClass& x);
/// The integral class with coefficient 1 on every term of x.
ChowClass lift_coefficients(const Ch2Class& x);

/// cbar_i = sigma_{1^i} and its dual cbar_j^perp = sigma_j.
Ch2Class cbar(Frame f, int i);
Ch2Class cbar_perp(Frame f, int j);

Ch2Class mult2(const Ch2Class& x, const Ch2Class& y);

/// Checkerboard rule: sum over the addable boxes of each diagram whose color
/// is white (Twist::O) or black (Twist::Det).
Ch2Class sq2(const Ch2Class& x, Twist tw);
/// Same operation from the Wu formula on the dual Giambelli expansion in the
/// classes cbar_i. Independent of sq2; used to cross-check it.
Ch2Class sq2_wu(const Ch2Class& x, Twist tw);

/// True iff sq2(x, tw) = 0.
bool liftable(const Ch2Class& x, Twist tw);

/// The size criterion on the boundary profile deciding whether
/// Sq^2_tw(sigma_p) vanishes, evaluated literally.
bool sq2_vanishes_by_parity(const Partition& p, Frame f, Twist tw);

/// Some y with sq2(y, tw) = x, found degreewise by elimination over GF(2);
/// nullopt when x is not in the image.
std::optional<Ch2Class> sq2_preimage(const Ch2Class& x, Twist tw);
inline bool sq2_image_contains(const Ch2Class& x, Twist tw) { return sq2_preimage(x, tw).has_value(); }

}  // namespace schubert
