#pragma once

// Chow-Witt classes as compatible pairs of an I-cohomology class and a Chow
// class, and their quadratic-form valued degrees.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "schubert/iring.hpp"
#include "schubert/schur.hpp"

namespace schubert {

/// pos<1> + neg<-1>.
struct GWForm {
  Int pos = 0;
  Int neg = 0;

  Int rank() const { return checked_add(pos, neg); }
  Int signature() const { return checked_sub(pos, neg); }
  static GWForm hyperbolic(Int a = 1) { return {a, a}; }
  friend bool operator==(const GWForm&, const GWForm&) = default;
  /// "4<1> + 2<-1>".
  std::string to_string() const;
};

/// A GW form when the top cell is W-valued for the twist, else a plain count.
using Degree = std::variant<GWForm, Int>;
std::string to_string(const Degree& d);

class CWClass {
 public:
  CWClass() = default;
  /// Throws InternalError unless rho(ipart) = chow mod 2 and
  /// Sq^2_tw(chow mod 2) = 0.
  CWClass(IClass ipart, ChowClass chow);

  static CWClass one(Frame f) { return CWClass(IClass::one(f), ChowClass::one(f)); }

  Frame frame() const { return chow_.frame(); }
  Twist twist() const { return ipart_.twist(); }
  const IClass& ipart() const { return ipart_; }
  const ChowClass& chow() const { return chow_; }

  friend bool operator==(const CWClass&, const CWClass&) = default;

 private:
  IClass ipart_;
  ChowClass chow_;
};

/// Canonical lift of sigma_p with twist tw. Even diagrams of matching twist
/// lift to their basis element; every other liftable class lifts to the
/// unique torsion class reducing to it. NotLiftableError otherwise.
CWClass lift_schubert(const Partition& p, Frame f, Twist tw);

CWClass cwmult(const CWClass& x, const CWClass& y);
CWClass cwpower(const CWClass& x, int exponent);

/// DegreeError unless x is of top degree; ParityError if the rank and the
/// W-degree disagree mod 2.
Degree cwdegree(const CWClass& x);

/// Degree of the product of canonical lifts. AreaError unless the areas sum
/// to the dimension.
Degree schubert_problem(const std::vector<std::pair<Partition, Twist>>& factors, Frame f);

}  // namespace schubert
