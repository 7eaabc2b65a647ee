#include "schubert/wring.hpp"

#include <array>

#include "engine.hpp"
#include "schubert/error.hpp"

namespace schubert {

namespace {

constexpr std::array<Extra, 4> kExtras = {Extra::None, Extra::Ek, Extra::Eperp, Extra::R};

void require_same_frame(const WClass& x, const WClass& y) {
  if (x.frame() != y.frame()) {
    throw FrameMismatchError("classes live in " + x.frame().to_string() + " and " + y.frame().to_string());
  }
}

// The cores of all terms carrying one extra factor, as a halved Chow class.
ChowClass cores_with(const WClass& x, Extra extra) {
  ChowClass out(halved_frame(x.frame()));
  for (const auto& [key, c] : x.terms()) {
    if (key.extra == extra) out.add(key.core, c);
  }
  return out;
}

struct TagProduct {
  bool zero = false;
  Extra extra = Extra::None;
  // Additional core factor: sigma_{1^rows} or sigma_{cols}; 0 for none.
  int column_factor = 0;
  int row_factor = 0;
};

TagProduct combine_tags(Extra a, Extra b, Frame f) {
  if (a == Extra::None) return {false, b, 0, 0};
  if (b == Extra::None) return {false, a, 0, 0};
  if (a == Extra::Ek && b == Extra::Ek) return {false, Extra::None, f.k / 2, 0};
  if (a == Extra::Eperp && b == Extra::Eperp) return {false, Extra::None, 0, f.w / 2};
  if ((a == Extra::Ek && b == Extra::Eperp) || (a == Extra::Eperp && b == Extra::Ek)) return {true};
  if (a == Extra::R && b == Extra::R) return {true};
  throw TagError("extra factors " + to_string(a) + " and " + to_string(b) + " cannot occur in one frame");
}

}  // namespace

WClass WClass::basis(Frame f, const WKey& key, Int coeff) {
  WClass out(f);
  out.add(key, coeff);
  return out;
}

WClass WClass::from_diagram(Frame f, const Partition& p, Int coeff) {
  const EvenDecomposition d = decompose_even(p, f);
  return basis(f, WKey{d.core, d.extra}, coeff);
}

Int WClass::coeff(const WKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<Twist> WClass::twist() const {
  std::optional<Twist> t;
  for (const auto& [key, c] : terms_) {
    const Twist kt = twist_of(key.extra);
    if (t && *t != kt) throw TwistError("class mixes twisted and untwisted terms");
    t = kt;
  }
  return t;
}

WClass& WClass::add(const WKey& key, Int c) {
  combine_even({key.core, key.extra}, frame_);  // validates the key
  if (c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(key, 0);
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
  return *this;
}

WClass& WClass::operator+=(const WClass& other) {
  require_same_frame(*this, other);
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

WClass& WClass::operator-=(const WClass& other) {
  require_same_frame(*this, other);
  for (const auto& [key, c] : other.terms_) add(key, checked_sub(0, c));
  return *this;
}

WClass operator*(Int c, const WClass& x) {
  WClass out(x.frame());
  for (const auto& [key, v] : x.terms()) out.add(key, checked_mul(c, v));
  return out;
}

std::string WClass::to_string() const {
  if (terms_.empty()) return "0";
  std::map<Partition, Int> by_diagram;
  for (const auto& [key, c] : terms_) by_diagram.emplace(diagram(key), c);
  std::string out;
  for (auto it = by_diagram.rbegin(); it != by_diagram.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second == 1) {
      out += it->first.to_string();
    } else {
      out += std::to_string(it->second) + "*(" + it->first.to_string() + ")";
    }
  }
  return out;
}

Frame halved_frame(Frame f) { return Frame(f.k / 2, f.w / 2); }

Twist top_twist(Frame f) {
  return twist(Partition(std::vector<int>(static_cast<std::size_t>(f.k), f.w)), f);
}

WClass omega(const ChowClass& x, Frame f) {
  if (x.frame() != halved_frame(f)) {
    throw FrameMismatchError("omega expects a class over " + halved_frame(f).to_string() + ", got " +
                             x.frame().to_string());
  }
  WClass out(f);
  for (const auto& [p, c] : x.terms()) out.add(WKey{p, Extra::None}, c);
  return out;
}

WClass wmult(const WClass& x, const WClass& y) {
  require_same_frame(x, y);
  const Frame f = x.frame();
  WClass out(f);
  for (Extra a : kExtras) {
    const ChowClass xa = cores_with(x, a);
    if (xa.is_zero()) continue;
    for (Extra b : kExtras) {
      const ChowClass yb = cores_with(y, b);
      if (yb.is_zero()) continue;
      const TagProduct tp = combine_tags(a, b, f);
      if (tp.zero) continue;
      ChowClass prod = mult(xa, yb);
      if (tp.column_factor > 0) prod = pieri_col(prod, tp.column_factor);
      if (tp.row_factor > 0) prod = pieri_row(prod, tp.row_factor);
      // Cores that do not fit the frame of the result type recombine to
      // diagrams outside the k x w frame; those classes vanish.
      const Frame cf = core_frame(f, tp.extra);
      for (const auto& [core, c] : prod.terms()) {
        if (fits_in_frame(core, cf)) out.add(WKey{core, tp.extra}, c);
      }
    }
  }
  return out;
}

WClass wpower(const WClass& x, int exponent) {
  if (exponent < 0) throw DegreeError("negative exponent");
  WClass out = WClass::one(x.frame());
  for (int i = 0; i < exponent; ++i) out = wmult(out, x);
  return out;
}

WClass oriented_pieri(const WClass& x, int b) {
  for (const auto& [key, c] : x.terms()) {
    if (key.extra != Extra::None) {
      throw TagError("oriented Pieri needs extra-free terms; use wmult for " + to_string(key.extra));
    }
  }
  return omega(pieri_row(cores_with(x, Extra::None), b), x.frame());
}

WClass oriented_giambelli(const Partition& core, Frame f) {
  const Frame hf = halved_frame(f);
  if (!fits_in_frame(core, hf)) {
    throw FrameError("core (" + core.to_string() + ") does not fit the halved frame " + hf.to_string());
  }
  WClass out(f);
  for (const auto& [mono, c] : detail::row_expansion(core, hf.w)) {
    WClass term = WClass::one(f);
    for (int j : mono) term = wmult(term, WClass::basis(f, WKey{Partition{j}, Extra::None}));
    out += c * term;
  }
  return out;
}

Int wdegree(const WClass& x) {
  const Frame f = x.frame();
  if (x.is_zero()) return 0;
  for (const auto& [key, c] : x.terms()) {
    const Partition d = x.diagram(key);
    if (d.area() != f.dimension()) {
      throw DegreeError("term (" + d.to_string() + ") is not of top degree " + std::to_string(f.dimension()));
    }
  }
  const Twist tt = top_twist(f);
  if (*x.twist() != tt) {
    throw TwistError("top cell of " + f.to_string() + " has twist " + to_string(tt) + ", class has " +
                     to_string(*x.twist()));
  }
  const EvenDecomposition top = decompose_even(Partition(std::vector<int>(static_cast<std::size_t>(f.k), f.w)), f);
  return x.coeff(WKey{top.core, top.extra});
}

}  // namespace schubert
