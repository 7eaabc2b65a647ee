#include "schubert/cw.hpp"

#include "schubert/error.hpp"

namespace schubert {

std::string GWForm::to_string() const {
  return std::to_string(pos) + "<1> + " + std::to_string(neg) + "<-1>";
}

std::string to_string(const Degree& d) {
  if (const auto* gw = std::get_if<GWForm>(&d)) return gw->to_string();
  return std::to_string(std::get<Int>(d));
}

CWClass::CWClass(IClass ipart, ChowClass chow) : ipart_(std::move(ipart)), chow_(std::move(chow)) {
  if (ipart_.frame() != chow_.frame()) throw InternalError("Chow-Witt parts live in different frames");
  const Ch2Class reduced = reduce(chow_);
  if (rho(ipart_) != reduced) {
    throw InternalError("incompatible pair: rho(I-part) = " + rho(ipart_).to_string() + " but Chow part reduces to " +
                        reduced.to_string());
  }
  if (!liftable(reduced, ipart_.twist())) {
    throw InternalError("Chow part " + chow_.to_string() + " is not in the kernel of Sq^2_" +
                        to_string(ipart_.twist()));
  }
}

CWClass lift_schubert(const Partition& p, Frame f, Twist tw) {
  const ChowClass chow = ChowClass::basis(f, p);
  const Ch2Class reduced = reduce(chow);
  Ch2Class obstruction = sq2(reduced, tw);
  if (!obstruction.is_zero()) {
    const std::string what = "sigma_(" + p.to_string() + ") does not lift with twist " + to_string(tw) +
                             ": Sq^2 = " + obstruction.to_string();
    throw NotLiftableError(what, std::move(obstruction));
  }
  if (is_even(p, f) && twist(p, f) == tw) {
    WClass free = WClass::from_diagram(f, p);
    Ch2Class torsion = reduced + rho_free(free);
    return CWClass(IClass(f, tw, std::move(free), std::move(torsion)), chow);
  }
  return CWClass(IClass(f, tw, WClass(f), reduced), chow);
}

CWClass cwmult(const CWClass& x, const CWClass& y) {
  if (x.frame() != y.frame()) {
    throw FrameMismatchError("classes live in " + x.frame().to_string() + " and " + y.frame().to_string());
  }
  return CWClass(imult(x.ipart(), y.ipart()), mult(x.chow(), y.chow()));
}

CWClass cwpower(const CWClass& x, int exponent) {
  if (exponent < 0) throw DegreeError("negative exponent");
  CWClass out = CWClass::one(x.frame());
  for (int i = 0; i < exponent; ++i) out = cwmult(out, x);
  return out;
}

Degree cwdegree(const CWClass& x) {
  const Frame f = x.frame();
  const Int r = degree(x.chow());
  if (top_twist(f) != x.twist()) return r;
  const Int m = wdegree(x.ipart().free());
  if ((r - m) % 2 != 0) {
    throw ParityError("rank " + std::to_string(r) + " and W-degree " + std::to_string(m) + " differ in parity");
  }
  return GWForm{(r + m) / 2, (r - m) / 2};
}

Degree schubert_problem(const std::vector<std::pair<Partition, Twist>>& factors, Frame f) {
  int area = 0;
  for (const auto& [p, tw] : factors) area += p.area();
  if (area != f.dimension()) {
    throw AreaError("total area " + std::to_string(area) + " differs from dim " + f.to_string() + " = " +
                    std::to_string(f.dimension()));
  }
  CWClass product = CWClass::one(f);
  for (const auto& [p, tw] : factors) product = cwmult(product, lift_schubert(p, f, tw));
  return cwdegree(product);
}

}  // namespace schubert
