#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "schubert/cw.hpp"
#include "schubert/error.hpp"

using namespace schubert;

namespace {

// All (partition, twist) pairs whose Schubert class lifts.
std::vector<std::pair<Partition, Twist>> liftable_pairs(Frame f) {
  std::vector<std::pair<Partition, Twist>> out;
  for (const Partition& p : frame_partitions(f)) {
    for (const Twist tw : {Twist::O, Twist::Det}) {
      if (liftable(Ch2Class::basis(f, p), tw)) out.emplace_back(p, tw);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("GW forms") {
  const GWForm g{4, 2};
  CHECK(g.rank() == 6);
  CHECK(g.signature() == 2);
  CHECK(g.to_string() == "4<1> + 2<-1>");
  CHECK(GWForm::hyperbolic(3) == GWForm{3, 3});
  CHECK(to_string(Degree{Int{5}}) == "5");
  CHECK(to_string(Degree{GWForm{1, 0}}) == "1<1> + 0<-1>");
}

TEST_CASE("I-classes") {
  const Frame f(2, 3);
  CHECK_THROWS_AS(IClass(f, Twist::O, WClass::from_diagram(f, Partition{1, 1}), Ch2Class(f)), TwistError);
  CHECK_THROWS_AS(IClass(f, Twist::O, WClass(Frame(2, 2)), Ch2Class(f)), FrameMismatchError);
  const IClass b = bockstein(Ch2Class::basis(f, Partition{1}), Twist::O);
  CHECK(is_torsion(b));
  CHECK(b.torsion() == Ch2Class(f, {Partition{2}, Partition{1, 1}}));
  CHECK(rho(b) == b.torsion());
}

TEST_CASE("canonical lifts") {
  const Frame f(2, 3);
  CHECK_THROWS_AS(lift_schubert(Partition{1}, f, Twist::O), NotLiftableError);
  try {
    lift_schubert(Partition{1}, f, Twist::O);
  } catch (const NotLiftableError& e) {
    CHECK(e.obstruction() == Ch2Class(f, {Partition{2}, Partition{1, 1}}));
  }
  const CWClass x = lift_schubert(Partition{1}, f, Twist::Det);
  CHECK(is_torsion(x.ipart()));
  CHECK(x.ipart().torsion() == Ch2Class::basis(f, Partition{1}));
  CHECK(x.chow() == ChowClass::basis(f, Partition{1}));

  const CWClass y = lift_schubert(Partition{1, 1}, f, Twist::Det);
  CHECK(y.ipart().free() == WClass::from_diagram(f, Partition{1, 1}));
  CHECK(y.ipart().torsion().is_zero());

  CHECK_THROWS_AS(CWClass(IClass(f, Twist::O), ChowClass::basis(f, Partition{1})), InternalError);
}

TEST_CASE("torsion worked example in Gr(4,8)") {
  const Frame f(4, 4);
  const CWClass x = lift_schubert(Partition{2, 2}, f, Twist::O);
  const CWClass sq = cwmult(x, x);
  CHECK(sq.ipart().free() == WClass::from_diagram(f, Partition{4, 4}) + WClass::from_diagram(f, Partition{2, 2, 2, 2}));
  const Ch2Class torsion(f, {Partition{4, 3, 1}, Partition{4, 2, 2}, Partition{3, 3, 1, 1}, Partition{3, 2, 2, 1}});
  CHECK(sq.ipart().torsion() == torsion);
  CHECK(sq2(Ch2Class(f, {Partition{4, 2, 1}, Partition{3, 2, 1, 1}}), Twist::O) == torsion);
  CHECK(sq.chow() == power(ChowClass::basis(f, Partition{2, 2}), 2));
}

TEST_CASE("imult is a commutative associative ring product with multiplicative rho") {
  for (const Frame f : {Frame(2, 4), Frame(3, 3), Frame(4, 4)}) {
    std::vector<IClass> lifts;
    for (const auto& [p, tw] : liftable_pairs(f)) lifts.push_back(lift_schubert(p, f, tw).ipart());
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, lifts.size() - 1);
    for (int trial = 0; trial < 150; ++trial) {
      const IClass& a = lifts[pick(rng)];
      const IClass& b = lifts[pick(rng)];
      const IClass& c = lifts[pick(rng)];
      const IClass ab = imult(a, b);
      CHECK(ab == imult(b, a));
      CHECK(imult(ab, c) == imult(a, imult(b, c)));
      CHECK(rho(ab) == mult2(rho(a), rho(b)));
      CHECK(ab.twist() == (a.twist() ^ b.twist()));
      CHECK(sq2_image_contains(ab.torsion(), ab.twist()));
    }
  }
}

TEST_CASE("torsion of products of lifts lies in the Sq^2 image up to 4x4") {
  for (const Frame f : testing::frames_up_to(4, 4)) {
    const auto pairs = liftable_pairs(f);
    for (const auto& [p, s] : pairs) {
      for (const auto& [q, t] : pairs) {
        if (q < p) continue;
        const CWClass x = cwmult(lift_schubert(p, f, s), lift_schubert(q, f, t));
        CHECK(sq2_image_contains(x.ipart().torsion(), x.twist()));
      }
    }
  }
}

TEST_CASE("Pontryagin reduction differs from the canonical one by Sq^2 images") {
  for (const Frame f : {Frame(2, 2), Frame(2, 4), Frame(4, 4), Frame(3, 5), Frame(5, 3), Frame(4, 5)}) {
    for (const Partition& p : even_diagrams(f)) {
      const WClass x = WClass::from_diagram(f, p);
      const Ch2Class diff = pontryagin_reduction(x) + rho_free(x);
      INFO(f.to_string(), " ", p.to_string());
      CHECK(sq2_image_contains(diff, *x.twist()));
    }
  }
}

TEST_CASE("cw degrees") {
  const Frame f(4, 4);
  const CWClass x = lift_schubert(Partition{2, 2}, f, Twist::O);
  CHECK(cwdegree(cwpower(x, 4)) == Degree{GWForm{4, 2}});
  CHECK_THROWS_AS(cwdegree(x), DegreeError);

  const Frame g(2, 3);
  const CWClass y = lift_schubert(Partition{1}, g, Twist::Det);
  CHECK(cwdegree(cwpower(y, 6)) == Degree{Int{5}});

  CHECK_THROWS_AS(schubert_problem({{Partition{2, 2}, Twist::O}}, f), AreaError);
  CHECK(schubert_problem({{Partition{2, 2}, Twist::O}, {Partition{2, 2}, Twist::O}, {Partition{2, 2}, Twist::O},
                          {Partition{2, 2}, Twist::O}},
                         f) == Degree{GWForm{4, 2}});
}

TEST_CASE("point classes and duality up to 4x4") {
  for (const Frame f : testing::frames_up_to(4, 4)) {
    for (const Partition& p : even_diagrams(f)) {
      const Partition c = complement(p, f);
      const Twist tp = twist(p, f);
      const Twist tc = twist(c, f);
      if ((tp ^ tc) != top_twist(f)) continue;
      INFO(f.to_string(), " ", p.to_string());
      CHECK(schubert_problem({{p, tp}, {c, tc}}, f) == Degree{GWForm{1, 0}});
    }
  }
}

TEST_CASE("products with a torsion lift are hyperbolic") {
  for (const Frame f : {Frame(2, 4), Frame(3, 3), Frame(2, 3), Frame(3, 4)}) {
    const auto pairs = liftable_pairs(f);
    for (const auto& [p, s] : pairs) {
      const bool torsion_lift = !is_even(p, f) || twist(p, f) != s;
      if (!torsion_lift) continue;
      for (const auto& [q, t] : pairs) {
        if (p.area() + q.area() != f.dimension() || (s ^ t) != top_twist(f)) continue;
        const Degree d = schubert_problem({{p, s}, {q, t}}, f);
        REQUIRE(std::holds_alternative<GWForm>(d));
        CHECK(std::get<GWForm>(d).signature() == 0);
      }
    }
  }
}
