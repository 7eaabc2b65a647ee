#include <doctest.h>

#include "schubert/error.hpp"
#include "schubert/problems.hpp"

using namespace schubert;

TEST_CASE("Catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(5) == 42);
  CHECK(catalan(10) == 16796);
}

TEST_CASE("balanced subspaces") {
  CHECK(balanced(1, 2) == GWForm{4, 2});
  CHECK(balanced(1, 3) == GWForm{9, 6});
  CHECK_THROWS_AS(balanced(2, 2), ParseError);
}

TEST_CASE("p1 power table") {
  CHECK(p1_power(2) == GWForm{4, 2});
  CHECK(p1_power(3) == GWForm{75, 70});
  CHECK(p1_power(4) == GWForm{4410, 4396});
  CHECK(p1_power(5) == GWForm{415332, 415290});
  CHECK(p1_chow_degree(5) == 830622);
  CHECK_THROWS_AS(p1_power(4, 3), ResourceError);
  CHECK_THROWS_AS(p1_power(1), ParseError);
}

TEST_CASE("refined Plucker degrees") {
  const std::vector<Degree> expected{Int{1},          GWForm{1, 1}, Int{5}, GWForm{7, 7},
                                     Int{42},         GWForm{66, 66}};
  for (int n = 2; n <= 7; ++n) {
    const ProblemReport r = plucker(n);
    INFO("n = ", n);
    CHECK(r.result == expected[static_cast<std::size_t>(n - 2)]);
    CHECK(*r.catalan == catalan(n - 1));
    CHECK(*r.mod2_top_nonzero == (catalan(n - 1) % 2 != 0));
  }
  CHECK(plucker(4).rank == 5);
  CHECK(plucker(5).rank == 14);
}
