#include "wrzeta/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <thread>

#include <Eigen/Dense>

namespace wrzeta {

InstantiatedPoly instantiate(const FunctionalEquation &fe,
                             const DirichletPoly &z, std::complex<double> s) {
  // Series values for the rescaled arguments; X_1 stays symbolic.
  std::vector<std::complex<double>> zval(std::size_t(fe.d) + 1, 0.0);
  for (int e = 2; e <= fe.d; ++e)
    zval[std::size_t(e)] = z.evaluate(double(e) * s);

  InstantiatedPoly out;
  out.s = s;
  out.coeffs.assign(std::size_t(fe.d) + 1, 0.0);
  for (const auto &[profile, coeff] : fe.monomials) {
    std::complex<double> c = coeff.evaluate(s);
    int x1 = FunctionalEquation::x1_exponent(profile);
    for (int e : profile)
      if (e >= 2)
        c *= zval[std::size_t(e)];
    out.coeffs[std::size_t(x1)] += c;
  }
  return out;
}

std::vector<std::complex<double>> roots(const InstantiatedPoly &p) {
  int d = p.degree();
  while (d > 0 && std::abs(p.coeffs[std::size_t(d)]) == 0.0)
    --d;
  if (d == 0)
    return {};
  std::complex<double> lead = p.coeffs[std::size_t(d)];
  if (!std::isfinite(std::abs(lead)) || std::abs(lead) < 1e-300)
    throw IllConditioned("degenerate leading coefficient");

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i)
    companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i)
    companion(i, d - 1) = -p.coeffs[std::size_t(i)] / lead;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw IllConditioned("companion eigensolver did not converge");
  std::vector<std::complex<double>> out;
  out.resize(std::size_t(d));
  for (int i = 0; i < d; ++i)
    out[std::size_t(i)] = solver.eigenvalues()(i);
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.real() != b.real())
      return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

int count_real_roots(const InstantiatedPoly &p, double tol_im) {
  int count = 0;
  for (const auto &r : roots(p))
    if (std::abs(r.imag()) < tol_im * (1.0 + std::abs(r)))
      ++count;
  return count;
}

Sigma0Result sigma0_detailed(const FunctionalEquation &fe,
                             const DirichletPoly &z, double bracket_lo,
                             double bracket_hi, double tol) {
  auto count_at = [&](double s) {
    return count_real_roots(instantiate(fe, z, {s, 0.0}));
  };
  double lo = bracket_lo, hi = bracket_hi;
  int clo = count_at(lo), chi = count_at(hi);
  if (clo == chi)
    throw BadBracket("real-root counts agree at both bracket ends (" +
                     std::to_string(clo) + ")");
  Sigma0Result res;
  res.real_roots_left = clo;
  res.real_roots_right = chi;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (count_at(mid) == chi)
      hi = mid;
    else
      lo = mid;
    ++res.iterations;
  }
  res.sigma0 = 0.5 * (lo + hi);
  return res;
}

double sigma0(const FunctionalEquation &fe, const DirichletPoly &z,
              double bracket_lo, double bracket_hi, double tol) {
  return sigma0_detailed(fe, z, bracket_lo, bracket_hi, tol).sigma0;
}

namespace {

// Squared distance of the closest root pair; vanishes linearly in s at a
// branch point of ramification two.
double pair_separation_sq(const FunctionalEquation &fe, const DirichletPoly &z,
                          double s) {
  auto rts = roots(instantiate(fe, z, {s, 0.0}));
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rts.size(); ++i)
    for (std::size_t j = i + 1; j < rts.size(); ++j)
      best = std::min(best, std::norm(rts[i] - rts[j]));
  return best;
}

double refine_sigma0(const FunctionalEquation &fe, const DirichletPoly &z,
                     double seed) {
  double s0 = seed;
  for (double delta : {1e-4, 1e-6, 1e-7}) {
    double g1 = pair_separation_sq(fe, z, s0 + delta);
    double g2 = pair_separation_sq(fe, z, s0 + 2 * delta);
    double slope = (g2 - g1) / delta;
    if (!(slope > 0))
      continue; // separation not yet in the linear regime at this scale
    s0 = (s0 + delta) - g1 / slope;
  }
  return s0;
}

// Root of Phi at s closest to the given value.
std::complex<double> nearest_root(const FunctionalEquation &fe,
                                  const DirichletPoly &z,
                                  std::complex<double> s,
                                  std::complex<double> target) {
  auto rts = roots(instantiate(fe, z, s));
  std::complex<double> best = rts.front();
  for (const auto &r : rts)
    if (std::abs(r - target) < std::abs(best - target))
      best = r;
  return best;
}

} // namespace

PuiseuxExpansion puiseux(const FunctionalEquation &fe, const DirichletPoly &z,
                         double sigma0_seed, int depth) {
  PuiseuxExpansion out;
  out.sigma0 = refine_sigma0(fe, z, sigma0_seed);

  // Ramification from the root cluster at the branch point.
  auto rts0 = roots(instantiate(fe, z, {out.sigma0, 0.0}));
  const double cluster_tol = 1e-4;
  int e = 0;
  std::complex<double> cluster_sum = 0.0;
  // the closest pair seeds the cluster; every root within tolerance joins
  double best = std::numeric_limits<double>::infinity();
  std::complex<double> ca = 0, cb = 0;
  for (std::size_t i = 0; i < rts0.size(); ++i)
    for (std::size_t j = i + 1; j < rts0.size(); ++j)
      if (std::norm(rts0[i] - rts0[j]) < best) {
        best = std::norm(rts0[i] - rts0[j]);
        ca = rts0[i];
        cb = rts0[j];
      }
  std::complex<double> center = 0.5 * (ca + cb);
  for (const auto &r : rts0)
    if (std::abs(r - center) < cluster_tol) {
      ++e;
      cluster_sum += r;
    }
  if (e < 2)
    throw MultiplicityDetectionFailed(
        "no multiple-root cluster at the singularity");
  out.ramification = e;
  double a0 = (cluster_sum / double(e)).real();
  out.coefficients.push_back(a0);

  // Track the zeta branch from the well-converged region down to the
  // sampling ladder: at each step take the root closest to the previous
  // value, starting from the direct series evaluation.
  std::complex<double> zprev = z.evaluate({out.sigma0 + 0.5, 0.0});
  double offset = 0.5;
  std::vector<double> ladder_offsets;
  for (int k = 6; k <= 16; ++k) // half-decade rungs, 10^-3 .. 10^-8
    ladder_offsets.push_back(std::pow(10.0, -0.5 * k));
  std::vector<std::complex<double>> ladder_values(ladder_offsets.size());
  std::size_t next_rung = 0;
  while (next_rung < ladder_offsets.size()) {
    double target = ladder_offsets[next_rung];
    offset *= 0.75;
    if (offset <= target)
      offset = target;
    zprev = nearest_root(fe, z, {out.sigma0 + offset, 0.0}, zprev);
    if (offset == target) {
      ladder_values[next_rung] = zprev;
      ++next_rung;
    }
  }

  // a_1..a_depth by least squares in the branch variable x = delta^{1/e}.
  // Renormalized per-rung averages bias a_i by a_{i+1} * mean(x), far above
  // the useful accuracy, so the rungs are fitted jointly instead, with one
  // guard coefficient beyond the requested depth to absorb the next order.
  {
    int nco = std::min(depth + 2, int(ladder_offsets.size()));
    Eigen::MatrixXd a(ladder_offsets.size(), nco);
    Eigen::VectorXd y(ladder_offsets.size());
    for (std::size_t k = 0; k < ladder_offsets.size(); ++k) {
      double x = std::pow(ladder_offsets[k], 1.0 / double(e));
      for (int j = 1; j <= nco; ++j)
        a(Eigen::Index(k), j - 1) = std::pow(x, double(j));
      y(Eigen::Index(k)) = ladder_values[k].real() - a0;
    }
    Eigen::VectorXd coef = a.colPivHouseholderQr().solve(y);
    for (int j = 1; j <= depth; ++j)
      out.coefficients.push_back(j <= nco ? coef(j - 1) : 0.0);
  }

  // Record how well the partial sums reproduce fresh samples between the
  // ladder rungs.
  out.validation_offsets = {3.16e-4, 3.16e-5, 3.16e-6};
  double misfit = 0;
  for (double d : out.validation_offsets) {
    std::complex<double> zv =
        nearest_root(fe, z, {out.sigma0 + d, 0.0}, ladder_values[0]);
    double sum = 0;
    for (std::size_t j = 0; j < out.coefficients.size(); ++j)
      sum += out.coefficients[j] * std::pow(d, double(j) / double(e));
    misfit = std::max(misfit, std::abs(zv.real() - sum));
  }
  out.fit_residual = misfit;
  return out;
}

Trajectory continuation(const FunctionalEquation &fe, const DirichletPoly &z,
                        std::complex<double> eps, int steps) {
  if (!(double(steps) * eps.real() > 2.0))
    throw BadInput("continuation needs Re(steps * eps) > 2");
  Trajectory tr;
  tr.step = eps;
  std::vector<std::complex<double>> zs(std::size_t(steps) + 1);
  std::vector<std::pair<int, std::complex<double>>> done;
  auto value_at = [&](int n) -> std::complex<double> {
    // beyond the table the direct regime always applies
    if (n <= steps)
      return zs[std::size_t(n)];
    return z.evaluate(double(n) * eps);
  };
  for (int n = steps; n >= 1; --n) {
    std::complex<double> s = double(n) * eps;
    if (s.real() > 2.0) {
      zs[std::size_t(n)] = z.evaluate(s);
    } else {
      // coefficients from the already-computed z_{2n}, ..., z_{dn}
      std::vector<std::complex<double>> zval(std::size_t(fe.d) + 1, 0.0);
      for (int e = 2; e <= fe.d; ++e)
        zval[std::size_t(e)] = value_at(e * n);
      InstantiatedPoly phi;
      phi.s = s;
      phi.coeffs.assign(std::size_t(fe.d) + 1, 0.0);
      for (const auto &[profile, coeff] : fe.monomials) {
        std::complex<double> c = coeff.evaluate(s);
        int x1 = FunctionalEquation::x1_exponent(profile);
        for (int e : profile)
          if (e >= 2)
            c *= zval[std::size_t(e)];
        phi.coeffs[std::size_t(x1)] += c;
      }
      auto rts = roots(phi);
      std::complex<double> prev = zs[std::size_t(n + 1)];
      std::sort(rts.begin(), rts.end(),
                [&](const auto &a, const auto &b) {
                  return std::abs(a - prev) < std::abs(b - prev);
                });
      if (rts.size() >= 2 &&
          std::abs(std::abs(rts[0] - prev) - std::abs(rts[1] - prev)) < 1e-10) {
        std::sort(done.begin(), done.end(),
                  [](const auto &a, const auto &b) { return a.first < b.first; });
        throw RootTrackingAmbiguity(
            "two roots are equidistant from the previous trajectory point at n=" +
                std::to_string(n),
            std::move(done));
      }
      zs[std::size_t(n)] = rts[0];
    }
    done.emplace_back(n, zs[std::size_t(n)]);
  }
  std::sort(done.begin(), done.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  tr.points = std::move(done);
  return tr;
}

std::vector<ScanCandidate>
scan_singularities(const FunctionalEquation &fe, const DirichletPoly &z,
                   const ScanRegion &region, int grid,
                   double accept_threshold, int threads) {
  if (grid < 2)
    throw BadInput("scan needs a grid of at least 2x2");
  auto min_distance = [&](std::complex<double> s) {
    auto rts = roots(instantiate(fe, z, s));
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rts.size(); ++i)
      for (std::size_t j = i + 1; j < rts.size(); ++j)
        best = std::min(best, std::abs(rts[i] - rts[j]));
    return best;
  };

  const int nr = grid, ni = grid;
  const double dre = (region.re_hi - region.re_lo) / (nr - 1);
  const double dim = (region.im_hi - region.im_lo) / (ni - 1);
  std::vector<double> field(std::size_t(nr) * std::size_t(ni));
  auto at = [&](int i, int j) -> double & {
    return field[std::size_t(i) * std::size_t(ni) + std::size_t(j)];
  };

  int nthreads = std::max(1, threads);
  std::vector<std::thread> pool;
  std::size_t total = field.size();
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t idx = std::size_t(t); idx < total;
           idx += std::size_t(nthreads)) {
        int i = int(idx / std::size_t(ni));
        int j = int(idx % std::size_t(ni));
        field[idx] = min_distance({region.re_lo + i * dre,
                                   region.im_lo + j * dim});
      }
    });
  for (auto &th : pool)
    th.join();

  // Local minima of the sampled field seed Nelder-Mead refinements.
  std::vector<std::complex<double>> seeds;
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < ni; ++j) {
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di)
        for (int dj = -1; dj <= 1 && is_min; ++dj) {
          int a = i + di, b = j + dj;
          if ((di || dj) && a >= 0 && a < nr && b >= 0 && b < ni)
            is_min = at(a, b) >= at(i, j);
        }
      if (is_min)
        seeds.emplace_back(region.re_lo + i * dre, region.im_lo + j * dim);
    }

  auto nelder_mead = [&](std::complex<double> start) {
    double h = std::max(dre, dim);
    std::array<std::complex<double>, 3> simplex{
        start, start + std::complex<double>(h, 0),
        start + std::complex<double>(0, h)};
    std::array<double, 3> val;
    for (int i = 0; i < 3; ++i)
      val[std::size_t(i)] = min_distance(simplex[std::size_t(i)]);
    for (int iter = 0; iter < 120; ++iter) {
      std::array<int, 3> ord{0, 1, 2};
      std::sort(ord.begin(), ord.end(), [&](int a, int b) {
        return val[std::size_t(a)] < val[std::size_t(b)];
      });
      auto &best = simplex[std::size_t(ord[0])];
      auto &mid = simplex[std::size_t(ord[1])];
      auto &worst = simplex[std::size_t(ord[2])];
      std::complex<double> centroid = 0.5 * (best + mid);
      std::complex<double> reflected = centroid + (centroid - worst);
      double fr = min_distance(reflected);
      if (fr < val[std::size_t(ord[0])]) {
        std::complex<double> expanded = centroid + 2.0 * (centroid - worst);
        double fe2 = min_distance(expanded);
        if (fe2 < fr) {
          worst = expanded;
          val[std::size_t(ord[2])] = fe2;
        } else {
          worst = reflected;
          val[std::size_t(ord[2])] = fr;
        }
      } else if (fr < val[std::size_t(ord[1])]) {
        worst = reflected;
        val[std::size_t(ord[2])] = fr;
      } else {
        std::complex<double> contracted = centroid + 0.5 * (worst - centroid);
        double fc = min_distance(contracted);
        if (fc < val[std::size_t(ord[2])]) {
          worst = contracted;
          val[std::size_t(ord[2])] = fc;
        } else {
          mid = best + 0.5 * (mid - best);
          worst = best + 0.5 * (worst - best);
          val[std::size_t(ord[1])] = min_distance(mid);
          val[std::size_t(ord[2])] = min_distance(worst);
        }
      }
      if (std::abs(simplex[0] - simplex[1]) + std::abs(simplex[1] - simplex[2]) <
          1e-12)
        break;
    }
    int bi = 0;
    for (int i = 1; i < 3; ++i)
      if (val[std::size_t(i)] < val[std::size_t(bi)])
        bi = i;
    return std::make_pair(simplex[std::size_t(bi)], val[std::size_t(bi)]);
  };

  // candidates must stay inside the scanned rectangle (the refinement is
  // free to wander, which would otherwise report zeros from elsewhere)
  const double margin_re = dre, margin_im = dim;
  std::vector<ScanCandidate> out;
  for (const auto &seed : seeds) {
    auto [loc, f] = nelder_mead(seed);
    if (f >= accept_threshold)
      continue;
    if (loc.real() < region.re_lo - margin_re ||
        loc.real() > region.re_hi + margin_re ||
        loc.imag() < region.im_lo - margin_im ||
        loc.imag() > region.im_hi + margin_im)
      continue;
    bool dup = false;
    for (const auto &c : out)
      if (std::abs(c.location - loc) < 1e-4)
        dup = true;
    if (!dup)
      out.push_back({loc, f});
  }
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.location.real() != b.location.real())
      return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  return out;
}

} // namespace wrzeta
