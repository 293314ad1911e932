#ifndef WRZETA_ANALYSIS_HPP
#define WRZETA_ANALYSIS_HPP

#include <complex>
#include <vector>

#include "wrzeta/wreath.hpp"

namespace wrzeta {

// The functional equation at a fixed s, as a univariate polynomial
// Phi(X) = sum c_i X^i obtained by substituting the truncated limit series
// for X_2..X_d and the numeric values p_j^{-s} for the prime variables.
struct InstantiatedPoly {
  std::vector<std::complex<double>> coeffs; // c_0 .. c_d
  std::complex<double> s{};
  int degree() const { return int(coeffs.size()) - 1; }
};

InstantiatedPoly instantiate(const FunctionalEquation &fe,
                             const DirichletPoly &z, std::complex<double> s);

// All roots of Phi via the companion matrix; throws IllConditioned when the
// eigensolver fails or the leading coefficient degenerates.
std::vector<std::complex<double>> roots(const InstantiatedPoly &p);

// Roots with |Im| < tol_im * (1 + |root|), counted with multiplicity.
int count_real_roots(const InstantiatedPoly &p, double tol_im = 1e-9);

struct Sigma0Result {
  double sigma0 = 0;
  int iterations = 0;
  int real_roots_left = 0;  // at the lower bracket end
  int real_roots_right = 0; // at the upper end
};

// Bisection on the real-root count of Phi; the enclosure width is halved
// until it drops below tol.  Throws BadBracket when the counts agree at
// both ends.
Sigma0Result sigma0_detailed(const FunctionalEquation &fe,
                             const DirichletPoly &z, double bracket_lo,
                             double bracket_hi, double tol);
double sigma0(const FunctionalEquation &fe, const DirichletPoly &z,
              double bracket_lo, double bracket_hi, double tol);

struct PuiseuxExpansion {
  double sigma0 = 0;              // refined location of the singularity
  int ramification = 2;           // e, from the root-cluster size
  std::vector<double> coefficients; // a_0 .. a_depth
  double fit_residual = 0;        // max misfit of the partial sums on the
                                  // validation offsets recorded below
  std::vector<double> validation_offsets;
};

// Puiseux data at the abscissa: sigma0_seed comes from the bisection and is
// refined internally by extrapolating the squared separation of the
// colliding root pair, which vanishes linearly at the branch point.
PuiseuxExpansion puiseux(const FunctionalEquation &fe, const DirichletPoly &z,
                         double sigma0_seed, int depth);

struct Trajectory {
  std::complex<double> step;
  std::vector<std::pair<int, std::complex<double>>> points; // ascending n
};

// Values z_n ~ zeta(n * eps) computed in descending n: directly from the
// series while Re(n eps) > 2, then by tracking the nearest root of the
// instantiated functional equation.
Trajectory continuation(const FunctionalEquation &fe, const DirichletPoly &z,
                        std::complex<double> eps, int steps);

struct ScanRegion {
  double re_lo, re_hi, im_lo, im_hi;
};

struct ScanCandidate {
  std::complex<double> location;
  double min_root_distance;
};

// Grid scan for discriminant zeros: local minima of the minimal pairwise
// root distance of Phi, refined by Nelder-Mead, kept when the refined
// minimum falls below accept_threshold.
std::vector<ScanCandidate>
scan_singularities(const FunctionalEquation &fe, const DirichletPoly &z,
                   const ScanRegion &region, int grid,
                   double accept_threshold = 1e-3, int threads = 1);

} // namespace wrzeta

#endif
