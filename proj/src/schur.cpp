#include "schubert/schur.hpp"

#include "engine.hpp"
#include "schubert/error.hpp"

namespace schubert {

namespace {

using detail::Dense;
using detail::FrameIndex;
using detail::IntRing;

Dense<IntRing> to_dense(const FrameIndex& idx, const ChowClass& x) {
  Dense<IntRing> v(idx.size(), 0);
  for (const auto& [p, c] : x.terms()) v[idx.rank(p)] = c;
  return v;
}

ChowClass from_dense(const FrameIndex& idx, const Dense<IntRing>& v) {
  ChowClass out(idx.frame());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.add(idx.partition(i), v[i]);
  }
  return out;
}

void require_same_frame(const ChowClass& x, const ChowClass& y) {
  if (x.frame() != y.frame()) {
    throw FrameMismatchError("classes live in " + x.frame().to_string() + " and " + y.frame().to_string());
  }
}

}  // namespace

ChowClass::ChowClass(Frame f, const Terms& terms) : frame_(f) {
  for (const auto& [p, c] : terms) add(p, c);
}

ChowClass ChowClass::basis(Frame f, const Partition& p, Int coeff) {
  ChowClass out(f);
  out.add(p, coeff);
  return out;
}

Int ChowClass::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<int> ChowClass::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.area();
  for (const auto& [p, c] : terms_) {
    if (p.area() != d) return std::nullopt;
  }
  return d;
}

ChowClass& ChowClass::add(const Partition& p, Int c) {
  if (!fits_in_frame(p, frame_)) {
    throw FrameError("partition (" + p.to_string() + ") does not fit the " + frame_.to_string() + " frame");
  }
  if (c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(p, 0);
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
  return *this;
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  require_same_frame(*this, other);
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
  require_same_frame(*this, other);
  for (const auto& [p, c] : other.terms_) add(p, checked_sub(0, c));
  return *this;
}

ChowClass operator*(Int c, const ChowClass& x) {
  ChowClass out(x.frame());
  for (const auto& [p, v] : x.terms()) out.add(p, checked_mul(c, v));
  return out;
}

std::string ChowClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second == 1) {
      out += it->first.to_string();
    } else {
      out += std::to_string(it->second) + "*(" + it->first.to_string() + ")";
    }
  }
  return out;
}

ChowClass pieri_row(const ChowClass& x, int b) {
  auto idx = FrameIndex::get(x.frame());
  Dense<IntRing> out(idx->size(), 0);
  detail::pieri_row<IntRing>(*idx, to_dense(*idx, x), b, out);
  return from_dense(*idx, out);
}

ChowClass pieri_col(const ChowClass& x, int b) {
  auto idx = FrameIndex::get(x.frame());
  Dense<IntRing> out(idx->size(), 0);
  detail::pieri_col<IntRing>(*idx, to_dense(*idx, x), b, out);
  return from_dense(*idx, out);
}

ChowClass giambelli(const Partition& p, Frame f) {
  if (!fits_in_frame(p, f)) {
    throw FrameError("partition (" + p.to_string() + ") does not fit the " + f.to_string() + " frame");
  }
  auto idx = FrameIndex::get(f);
  Dense<IntRing> unit(idx->size(), 0);
  unit[0] = 1;
  Dense<IntRing> out(idx->size(), 0);
  detail::apply_poly<IntRing>(*idx, unit, detail::row_expansion(p, f.w), false, out);
  return from_dense(*idx, out);
}

ChowClass mult(const ChowClass& x, const ChowClass& y) {
  require_same_frame(x, y);
  if (x.is_zero() || y.is_zero()) return ChowClass(x.frame());
  auto idx = FrameIndex::get(x.frame());
  return from_dense(*idx, detail::multiply<IntRing>(*idx, to_dense(*idx, x), to_dense(*idx, y)));
}

ChowClass power(const ChowClass& x, int exponent) {
  if (exponent < 0) throw DegreeError("negative exponent");
  ChowClass out = ChowClass::one(x.frame());
  for (int i = 0; i < exponent; ++i) out = mult(out, x);
  return out;
}

Int degree(const ChowClass& x) {
  const Frame f = x.frame();
  for (const auto& [p, c] : x.terms()) {
    if (p.area() != f.dimension()) {
      throw DegreeError("term (" + p.to_string() + ") is not of top degree " + std::to_string(f.dimension()));
    }
  }
  return x.coeff(Partition(std::vector<int>(static_cast<std::size_t>(f.k), f.w)));
}

Int lr_coeff(const Partition& a, const Partition& b, const Partition& c, Frame f) {
  for (const Partition* p : {&a, &b, &c}) {
    if (!fits_in_frame(*p, f)) {
      throw FrameError("partition (" + p->to_string() + ") does not fit the " + f.to_string() + " frame");
    }
  }
  if (a.area() + b.area() != c.area()) return 0;
  return mult(ChowClass::basis(f, a), ChowClass::basis(f, b)).coeff(c);
}

}  // namespace schubert
