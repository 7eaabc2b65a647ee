#include "schubert/problems.hpp"

#include "schubert/error.hpp"

namespace schubert {

namespace {

void check_n(int n, int max_n) {
  if (n < 2) throw ParseError("n must be at least 2");
  if (n > max_n) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds the configured limit " + std::to_string(max_n));
  }
}

}  // namespace

Int catalan(int n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

GWForm balanced(int i, int j) {
  if (i < 1 || j <= i) throw ParseError("balanced subspaces need 1 <= i < j");
  const Frame f(4 * i, 4 * j - 4 * i);
  const Partition rect(std::vector<int>(static_cast<std::size_t>(2 * i), 2 * j - 2 * i));
  const Degree d = schubert_problem(std::vector<std::pair<Partition, Twist>>(4, {rect, Twist::O}), f);
  const auto* gw = std::get_if<GWForm>(&d);
  if (gw == nullptr) throw InternalError("balanced problem in " + f.to_string() + " is not GW-valued");
  const Int total = binomial(2 * j, 2 * i);
  const Int signed_count = binomial(j, i);
  const GWForm expected{(total + signed_count) / 2, (total - signed_count) / 2};
  if (*gw != expected) {
    throw InternalError("balanced(" + std::to_string(i) + "," + std::to_string(j) + ") computed " + gw->to_string() +
                        ", closed form " + expected.to_string());
  }
  return *gw;
}

Int p1_chow_degree(int n, int max_n) {
  check_n(n, max_n);
  const Frame f(4, 2 * n);
  return degree(power(ChowClass::basis(f, Partition{2, 2}), 2 * n));
}

GWForm p1_power(int n, int max_n) {
  check_n(n, max_n);
  const Frame f(4, 2 * n);
  const CWClass x = cwpower(lift_schubert(Partition{2, 2}, f, Twist::O), 2 * n);
  const Degree d = cwdegree(x);
  const auto* gw = std::get_if<GWForm>(&d);
  if (gw == nullptr) throw InternalError("p1 power in " + f.to_string() + " is not GW-valued");
  if (gw->signature() != catalan(n)) {
    throw InternalError("W-degree " + std::to_string(gw->signature()) + " differs from C_" + std::to_string(n));
  }
  return *gw;
}

ProblemReport plucker(int n) {
  if (n < 2) throw ParseError("n must be at least 2");
  const Frame f(2, n - 1);
  const CWClass x = cwpower(lift_schubert(Partition{1}, f, Twist::Det), 2 * n - 2);
  ProblemReport report;
  report.frame = f;
  report.description = "Plucker degree of Gr(2," + std::to_string(n + 1) + ")";
  report.result = cwdegree(x);
  report.rank = degree(x.chow());
  if (const auto* gw = std::get_if<GWForm>(&report.result)) report.signature = gw->signature();
  report.catalan = catalan(n - 1);
  const Partition top(std::vector<int>(2, n - 1));
  report.mod2_top_nonzero = reduce(x.chow()).contains(top);
  return report;
}

}  // namespace schubert
