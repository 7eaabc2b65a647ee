#pragma once

// Packaged enumerative problems.

#include <optional>
#include <string>

#include "schubert/cw.hpp"

namespace schubert {

struct ProblemReport {
  Frame frame;
  std::string description;
  Degree result;
  Int rank = 0;
  /// pos - neg when the result is a form.
  std::optional<Int> signature;
  /// Plucker only: the (n-1)-th Catalan number and whether cbar_1^{2n-2}
  /// is nonzero in the mod-2 Chow ring (the Catalan number is odd).
  std::optional<Int> catalan;
  std::optional<bool> mod2_top_nonzero;
};

/// C_n = (2n)! / (n! (n+1)!).
Int catalan(int n);

/// Four lifts of the (2i) x (2j-2i) rectangle in Gr(4i, 4j). Checks the
/// result against the closed form and throws InternalError on mismatch.
GWForm balanced(int i, int j);

/// The 2n-th power of the lift of sigma_{2,2} in Gr(4, 2n+4). The W-degree
/// is checked against C_n. ResourceError for n > max_n.
GWForm p1_power(int n, int max_n = 10);
/// D_n, the Chow degree of sigma_{2,2}^{2n} in Gr(4, 2n+4).
Int p1_chow_degree(int n, int max_n = 10);

/// Refined Plucker degree of Gr(2, n+1): the (2n-2)-th power of the det-twisted
/// lift of sigma_1.
ProblemReport plucker(int n);

}  // namespace schubert
