#pragma once

// The integral Chow ring CH(Gr(k,n)) in the Schubert basis.

#include <map>
#include <optional>
#include <string>

#include "schubert/integer.hpp"
#include "schubert/young.hpp"

namespace schubert {

/// Integer combination of Schubert classes sigma_p over one frame. Every key
/// fits the frame and no zero coefficient is stored.
class ChowClass {
 public:
  using Terms = std::map<Partition, Int>;

  ChowClass() = default;
  explicit ChowClass(Frame f) : frame_(f) {}
  ChowClass(Frame f, const Terms& terms);

  /// coeff * sigma_p; throws FrameError if p does not fit.
  static ChowClass basis(Frame f, const Partition& p, Int coeff = 1);
  static ChowClass one(Frame f) { return basis(f, Partition()); }

  Frame frame() const { return frame_; }
  const Terms& terms() const { return terms_; }
  Int coeff(const Partition& p) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Common area of all terms, if the class is homogeneous and nonzero.
  std::optional<int> homogeneous_degree() const;

  ChowClass& add(const Partition& p, Int c);
  ChowClass& operator+=(const ChowClass& other);
  ChowClass& operator-=(const ChowClass& other);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(Int c, const ChowClass& x);
  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  std::string to_string() const;

 private:
  Frame frame_;
  Terms terms_;
};

/// x * sigma_b (row Pieri rule), truncated to the frame.
ChowClass pieri_row(const ChowClass& x, int b);
/// x * sigma_{1^b} (column Pieri rule), truncated to the frame.
ChowClass pieri_col(const ChowClass& x, int b);

/// Evaluates the Jacobi-Trudi determinant det(sigma_{a_i + j - i}) by signed
/// permutation expansion and iterated row Pieri steps from the unit class.
ChowClass giambelli(const Partition& p, Frame f);

/// Ring product. Throws FrameMismatchError for different frames.
ChowClass mult(const ChowClass& x, const ChowClass& y);
ChowClass power(const ChowClass& x, int exponent);

/// Coefficient of the full rectangle. Throws DegreeError if x has terms
/// outside the top degree.
Int degree(const ChowClass& x);

/// Coefficient of sigma_c in sigma_a * sigma_b.
Int lr_coeff(const Partition& a, const Partition& b, const Partition& c, Frame f);

}  // namespace schubert
