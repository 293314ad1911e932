#include "doctest.h"

#include <cmath>

#include "wrzeta/analysis.hpp"
#include "wrzeta/builtins.hpp"
#include "wrzeta/limit.hpp"

using namespace wrzeta;

namespace {

// one shared A5 limit at the fast truncation tier
const LimitZeta &a5_limit() {
  static LimitZeta lim = limit_zeta(alternating_group(5), parse_u128("1e8"));
  return lim;
}

const FunctionalEquation &a5_fe() {
  static FunctionalEquation fe = functional_equation(*a5_limit().context);
  return fe;
}

InstantiatedPoly from_coeffs(std::vector<std::complex<double>> c) {
  InstantiatedPoly p;
  p.coeffs = std::move(c);
  return p;
}

} // namespace

TEST_CASE("instantiation degree and leading coefficient") {
  auto p = instantiate(a5_fe(), a5_limit().coefficients, {2.0, 0.0});
  CHECK(p.degree() == 5);

  auto p0 = instantiate(a5_fe(), a5_limit().coefficients, {0.0, 0.0});
  CHECK(p0.coeffs.back().real() == doctest::Approx(1.0 / 60).epsilon(1e-12));

  auto fe7 = functional_equation(WreathContext::build(pgl3_f2_on7()));
  auto z7 = limit_zeta(pgl3_f2_on7(), 1000000).coefficients;
  CHECK(instantiate(fe7, z7, {2.0, 0.0}).degree() == 7);
}

TEST_CASE("the series value is a root of its own instantiation") {
  // needs the direct evaluation itself to be ~1e-8 accurate, which at this
  // truncation tier holds once the series tail at s is below that scale
  for (double s : {2.2, 2.5, 3.0}) {
    auto p = instantiate(a5_fe(), a5_limit().coefficients, {s, 0.0});
    double x = a5_limit().coefficients.evaluate(s);
    std::complex<double> phi = 0;
    double scale = 0;
    for (int i = p.degree(); i >= 0; --i) {
      phi = phi * x + p.coeffs[std::size_t(i)];
      scale = std::max(scale, std::abs(p.coeffs[std::size_t(i)]));
    }
    CHECK(std::abs(phi) <= 1e-8 * scale);
  }
}

TEST_CASE("real root counting on synthetic polynomials") {
  CHECK(count_real_roots(from_coeffs({-1.0, 0.0, 1.0})) == 2); // x^2 - 1
  CHECK(count_real_roots(from_coeffs({1.0, 0.0, 1.0})) == 0);  // x^2 + 1
  CHECK(count_real_roots(from_coeffs({0.0, -1.0, 0.0, 1.0})) == 3);
  CHECK(roots(from_coeffs({{6.0, 0}, {-5.0, 0}, {1.0, 0}})).size() == 2);
}

TEST_CASE("real-root counts differ across the singularity") {
  double s0 = 1.1783485957546400082;
  auto below = instantiate(a5_fe(), a5_limit().coefficients, {s0 - 0.05, 0.0});
  auto above = instantiate(a5_fe(), a5_limit().coefficients, {s0 + 0.05, 0.0});
  int cb = count_real_roots(below);
  int ca = count_real_roots(above);
  CHECK(ca - cb == 2); // a real pair leaves the axis below sigma0
}

TEST_CASE("bisection encloses the abscissa") {
  auto res = sigma0_detailed(a5_fe(), a5_limit().coefficients, 1.0, 2.0, 1e-9);
  CHECK(std::abs(res.sigma0 - 1.1783485957546400082) < 2e-9);
  CHECK(res.iterations >= 29);

  // starting bracket does not matter, to tolerance
  double alt = sigma0(a5_fe(), a5_limit().coefficients, 1.05, 1.62, 1e-9);
  CHECK(std::abs(alt - res.sigma0) < 2e-9);

  CHECK_THROWS_AS(
      sigma0(a5_fe(), a5_limit().coefficients, 1.3, 1.5, 1e-9),
      BadBracket);
}

TEST_CASE("puiseux expansion at the fast tier") {
  auto res = sigma0_detailed(a5_fe(), a5_limit().coefficients, 1.0, 2.0, 1e-8);
  auto pe = puiseux(a5_fe(), a5_limit().coefficients, res.sigma0, 3);
  CHECK(pe.ramification == 2);
  CHECK(std::abs(pe.sigma0 - 1.1783485957546400082) < 1e-10);
  CHECK(pe.coefficients[0] == doctest::Approx(4.186576086287).epsilon(1e-9));
  CHECK(pe.coefficients[1] == doctest::Approx(-6.740797357).epsilon(1e-5));
  CHECK(pe.coefficients[2] == doctest::Approx(5.6535295).epsilon(1e-3));
  CHECK(std::abs(pe.coefficients[3] - (-1.421)) < 5e-2);
  CHECK(pe.fit_residual < 1e-4);
}

TEST_CASE("puiseux needs a root cluster to work with") {
  // far from the branch point there is no multiple root to expand around
  CHECK_THROWS_AS(puiseux(a5_fe(), a5_limit().coefficients, 2.5, 1),
                  MultiplicityDetectionFailed);
}

TEST_CASE("trajectory matches the series in the direct regime") {
  auto tr = continuation(a5_fe(), a5_limit().coefficients, {0.01, 0.001}, 250);
  CHECK(tr.points.size() == 250);
  for (int n : {250, 240, 225}) {
    std::complex<double> s = std::complex<double>(0.01, 0.001) * double(n);
    CHECK(std::abs(tr.points[std::size_t(n - 1)].second -
                   a5_limit().coefficients.evaluate(s)) == 0.0);
  }
  CHECK_THROWS_AS(
      continuation(a5_fe(), a5_limit().coefficients, {0.001, 0.0}, 100),
      BadInput);
}

TEST_CASE("real-axis trajectory is real above the abscissa and matches "
          "the puiseux limit") {
  double s0 = 1.1783485957546400082;
  double eps = 0.011;
  auto run = [&]() -> std::vector<std::pair<int, std::complex<double>>> {
    try {
      return continuation(a5_fe(), a5_limit().coefficients, {eps, 0.0}, 200)
          .points;
    } catch (const RootTrackingAmbiguity &amb) {
      // crossing the branch point on the real axis is genuinely ambiguous:
      // keep the prefix above it
      return amb.partial();
    }
  };
  auto pts = run();
  CHECK(pts.size() > 10);
  double prev = 0;
  bool first = true;
  for (const auto &[n, zv] : pts) {
    double s = eps * n;
    if (s <= s0 + 1e-3)
      continue;
    CHECK(std::abs(zv.imag()) < 1e-9 * (1 + std::abs(zv)));
    if (!first)
      CHECK(zv.real() <= prev + 1e-9); // series decreasing along ascending s
    prev = zv.real();
    first = false;
  }
  // points just above sigma0 follow the puiseux expansion
  for (const auto &[n, zv] : pts) {
    double s = eps * n;
    if (s > s0 && s < s0 + 0.05) {
      double delta = s - s0;
      double predicted = 4.186576086287 - 6.740797357 * std::sqrt(delta) +
                         5.6535295 * delta;
      CHECK(std::abs(zv.real() - predicted) < 0.05);
    }
  }
}

TEST_CASE("complex-step trajectory stays bounded") {
  auto tr = continuation(a5_fe(), a5_limit().coefficients, {0.004, 0.004}, 600);
  double zmax = 0;
  for (const auto &[n, zv] : tr.points)
    zmax = std::max(zmax, std::abs(zv));
  CHECK(zmax < 50.0);
}

TEST_CASE("scan finds the real branch point and nothing far right") {
  auto near = scan_singularities(a5_fe(), a5_limit().coefficients,
                                 {1.1, 1.25, -0.02, 0.02}, 11, 1e-3, 2);
  REQUIRE(near.size() == 1);
  CHECK(std::abs(near[0].location -
                 std::complex<double>(1.1783485957546400082, 0.0)) < 1e-6);

  auto far = scan_singularities(a5_fe(), a5_limit().coefficients,
                                {3.0, 3.5, -0.2, 0.2}, 9, 1e-3, 2);
  CHECK(far.empty());
  // and the minimal root distance is genuinely large there
  auto p = instantiate(a5_fe(), a5_limit().coefficients, {3.2, 0.1});
  auto rts = roots(p);
  double dmin = 1e9;
  for (std::size_t i = 0; i < rts.size(); ++i)
    for (std::size_t j = i + 1; j < rts.size(); ++j)
      dmin = std::min(dmin, std::abs(rts[i] - rts[j]));
  CHECK(dmin > 0.05);
}

TEST_CASE("scan locates the complex discriminant zeros") {
  auto cands = scan_singularities(a5_fe(), a5_limit().coefficients,
                                  {0.85, 0.95, -0.05, 0.05}, 15, 1e-3, 2);
  REQUIRE(cands.size() == 2);
  std::complex<double> expect(0.8973038819, 0.0264098303);
  for (const auto &target : {expect, std::conj(expect)}) {
    double best = 1e9;
    for (const auto &c : cands)
      best = std::min(best, std::abs(c.location - target));
    CHECK(best < 1e-4);
  }
}
