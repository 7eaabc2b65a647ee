#include "schubert/iring.hpp"

#include "engine.hpp"
#include "schubert/error.hpp"

namespace schubert {

IClass::IClass(Frame f, Twist tw) : frame_(f), twist_(tw), free_(f), torsion_(f) {}

IClass::IClass(Frame f, Twist tw, WClass free, Ch2Class torsion)
    : frame_(f), twist_(tw), free_(std::move(free)), torsion_(std::move(torsion)) {
  if (free_.frame() != f || torsion_.frame() != f) {
    throw FrameMismatchError("I-class parts do not live in " + f.to_string());
  }
  if (auto t = free_.twist(); t && *t != tw) {
    throw TwistError("free part has twist " + schubert::to_string(*t) + " but the class has " + schubert::to_string(tw));
  }
}

std::string IClass::to_string() const {
  return "free: " + free_.to_string() + "; torsion: " + torsion_.to_string() + "; twist: " + schubert::to_string(twist_);
}

IClass bockstein(const Ch2Class& x, Twist tw) { return IClass(x.frame(), tw, WClass(x.frame()), sq2(x, tw)); }

Ch2Class rho_free(const WClass& x) {
  Ch2Class out(x.frame());
  for (const auto& [key, c] : x.terms()) {
    if (c % 2 != 0) out.toggle(x.diagram(key));
  }
  return out;
}

Ch2Class pontryagin_reduction(const WClass& x) {
  const Frame f = x.frame();
  const Frame hf = halved_frame(f);
  Ch2Class out(f);
  for (const auto& [key, c] : x.terms()) {
    if (c % 2 == 0) continue;
    Ch2Class term(f);
    for (const auto& [mono, m] : detail::row_expansion(key.core, hf.w)) {
      if (m % 2 == 0) continue;
      Ch2Class prod = Ch2Class::one(f);
      for (int j : mono) {
        const Ch2Class s = cbar_perp(f, 2 * j);
        prod = mult2(prod, mult2(s, s));
      }
      term += prod;
    }
    switch (key.extra) {
      case Extra::None:
        break;
      case Extra::Ek:
        term = mult2(term, cbar(f, f.k));
        break;
      case Extra::Eperp:
        term = mult2(term, cbar_perp(f, f.w));
        break;
      case Extra::R:
        term = mult2(term, mult2(cbar(f, f.k - 1), cbar_perp(f, f.w)));
        break;
    }
    out += term;
  }
  return out;
}

Ch2Class rho(const IClass& x) { return rho_free(x.free()) + x.torsion(); }

IClass imult(const IClass& x, const IClass& y) {
  if (x.frame() != y.frame()) {
    throw FrameMismatchError("classes live in " + x.frame().to_string() + " and " + y.frame().to_string());
  }
  WClass free = wmult(x.free(), y.free());
  Ch2Class torsion = mult2(rho(x), rho(y)) + rho_free(free);
  return IClass(x.frame(), x.twist() ^ y.twist(), std::move(free), std::move(torsion));
}

}  // namespace schubert
