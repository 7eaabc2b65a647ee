#pragma once

// W-cohomology of Gr(k,n) on the even-diagram basis. A basis element is a
// core partition in a halved frame together with an extra factor
// (nothing, e_k, e_{n-k}^perp or R); coefficients m stand for m<1>.

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "schubert/integer.hpp"
#include "schubert/schur.hpp"
#include "schubert/young.hpp"

namespace schubert {

struct WKey {
  Partition core;
  Extra extra = Extra::None;
  friend auto operator<=>(const WKey&, const WKey&) = default;
  friend bool operator==(const WKey&, const WKey&) = default;
};

class WClass {
 public:
  using Terms = std::map<WKey, Int>;

  WClass() = default;
  explicit WClass(Frame f) : frame_(f) {}

  static WClass basis(Frame f, const WKey& key, Int coeff = 1);
  /// The class of an even diagram; throws NotEvenError otherwise.
  static WClass from_diagram(Frame f, const Partition& p, Int coeff = 1);
  static WClass one(Frame f) { return basis(f, WKey{}); }

  Frame frame() const { return frame_; }
  const Terms& terms() const { return terms_; }
  Int coeff(const WKey& key) const;
  bool is_zero() const { return terms_.empty(); }
  /// Common twist of all terms; nullopt for zero. TwistError if mixed.
  std::optional<Twist> twist() const;
  /// The even diagram of a key in this frame.
  Partition diagram(const WKey& key) const { return combine_even({key.core, key.extra}, frame_); }

  /// Throws FrameError if the key does not recombine inside the frame.
  WClass& add(const WKey& key, Int c);
  WClass& operator+=(const WClass& other);
  WClass& operator-=(const WClass& other);
  friend WClass operator+(WClass a, const WClass& b) { return a += b; }
  friend WClass operator-(WClass a, const WClass& b) { return a -= b; }
  friend WClass operator*(Int c, const WClass& x);
  friend bool operator==(const WClass&, const WClass&) = default;

  /// Terms rendered by their even diagrams, e.g. "2*(4,4,4,4)".
  std::string to_string() const;

 private:
  Frame frame_;
  Terms terms_;
};

/// Frame of the Chow ring that doubles into W-cohomology: floor(k/2) x floor(w/2).
Frame halved_frame(Frame f);

/// sigma_a -> class of the doubled diagram; x must live over halved_frame(f).
WClass omega(const ChowClass& x, Frame f);

/// Product on the four basis types; cores multiply in the halved Chow ring.
WClass wmult(const WClass& x, const WClass& y);
WClass wpower(const WClass& x, int exponent);

/// S_b * x for x supported on extra-free terms; TagError otherwise.
WClass oriented_pieri(const WClass& x, int b);
/// det(S_{a_i + j - i}) evaluated with wmult.
WClass oriented_giambelli(const Partition& core, Frame f);

/// Coefficient of the full rectangle. DegreeError if x has terms below the
/// top degree, TwistError if x's twist differs from the top cell's.
Int wdegree(const WClass& x);

/// Twist of the full rectangle: 0 when n is even, 1 when n is odd.
Twist top_twist(Frame f);

}  // namespace schubert
