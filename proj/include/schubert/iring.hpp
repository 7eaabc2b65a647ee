#pragma once

// I-cohomology classes as a free part (W-cohomology on the even-diagram
// basis) plus a torsion part, the latter stored as its mod-2 reduction.
//
// The splitting is the one given by canonical lifts: the reduction of the
// basis element of an even diagram is that diagram's Schubert class mod 2.

#include <string>

#include "schubert/chmod2.hpp"
#include "schubert/wring.hpp"

namespace schubert {

class IClass {
 public:
  IClass() = default;
  /// Zero class of the given twist.
  IClass(Frame f, Twist tw);
  /// Throws TwistError if free has the other twist, FrameMismatchError on
  /// frame disagreement.
  IClass(Frame f, Twist tw, WClass free, Ch2Class torsion);

  static IClass one(Frame f) { return IClass(f, Twist::O, WClass::one(f), Ch2Class(f)); }

  Frame frame() const { return frame_; }
  Twist twist() const { return twist_; }
  const WClass& free() const { return free_; }
  const Ch2Class& torsion() const { return torsion_; }

  friend bool operator==(const IClass&, const IClass&) = default;
  std::string to_string() const;

 private:
  Frame frame_;
  Twist twist_ = Twist::O;
  WClass free_;
  Ch2Class torsion_;
};

/// Torsion class with reduction Sq^2_tw(x).
IClass bockstein(const Ch2Class& x, Twist tw);

/// Reduction of a free class under the canonical splitting: each basis
/// element goes to its even diagram mod 2.
Ch2Class rho_free(const WClass& x);
/// Reduction via the Pontryagin and Euler class formulas: S_a goes to
/// det((cbar^perp_{2(a_i+j-i)})^2), times cbar_k, cbar^perp_{n-k} or
/// cbar_{k-1} cbar^perp_{n-k} for the three extra factors. Differs from
/// rho_free by elements of the Sq^2 image.
Ch2Class pontryagin_reduction(const WClass& x);

Ch2Class rho(const IClass& x);

/// Free parts multiply in W-cohomology; the torsion part is whatever makes
/// rho multiplicative.
IClass imult(const IClass& x, const IClass& y);

inline bool is_torsion(const IClass& x) { return x.free().is_zero(); }

}  // namespace schubert
