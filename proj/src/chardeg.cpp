#include "wrzeta/chardeg.hpp"

#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace wrzeta {

DegreePattern::SpecialValues DegreePattern::special_values() const {
  SpecialValues v{};
  v.class_count = std::int64_t(zeta.power_moment(0));
  v.order = std::int64_t(zeta.power_moment(2));
  v.abelianization = zeta.coefficient(1);
  return v;
}

namespace {

constexpr double kIntegralityTol = 1e-6;
constexpr double kEigenSeparationTol = 1e-8;
constexpr int kMaxAttempts = 20;

} // namespace

DegreePattern degree_pattern(const PermGroup &g, std::uint64_t seed) {
  const ConjugacyClasses cls = g.conjugacy_class_map();
  const int r = int(cls.representatives.size());
  const std::uint64_t order = g.order();

  int identity_class = -1;
  for (int t = 0; t < r; ++t)
    if (cls.representatives[t].is_identity())
      identity_class = t;

  // Inverses of all elements, for M_{jk} = sum_{y in C_j} c[class(z_k y^-1)].
  std::vector<int> inverse_index(g.order());
  for (std::size_t i = 0; i < g.elements().size(); ++i)
    inverse_index[i] = g.element_index(g.elements()[i].inverse());

  std::vector<std::vector<int>> class_members(r);
  for (std::size_t i = 0; i < g.elements().size(); ++i)
    class_members[cls.class_of[i]].push_back(int(i));
  std::vector<int> rep_index(r);
  for (int t = 0; t < r; ++t)
    rep_index[t] = g.element_index(cls.representatives[t]);

  std::mt19937_64 rng(seed);
  std::string failure;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // Random rational combination with platform-independent arithmetic.
    std::vector<double> coeff(r);
    for (int i = 0; i < r; ++i)
      coeff[i] = double(std::int64_t(rng() % 2001) - 1000) / 977.0;

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r, r);
    for (int k = 0; k < r; ++k) {
      const Permutation &zk = g.elements()[rep_index[k]];
      for (int j = 0; j < r; ++j) {
        double acc = 0;
        for (int yi : class_members[j]) {
          Permutation x = zk * g.elements()[inverse_index[yi]];
          acc += coeff[cls.class_of[g.element_index(x)]];
        }
        m(j, k) = acc;
      }
    }

    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, true);
    if (solver.info() != Eigen::Success) {
      failure = "eigensolver failed to converge";
      continue;
    }
    Eigen::VectorXcd vals = solver.eigenvalues();
    double scale = vals.cwiseAbs().maxCoeff();
    bool separated = true;
    for (int i = 0; i < r && separated; ++i)
      for (int j = i + 1; j < r && separated; ++j)
        separated = std::abs(vals(i) - vals(j)) >
                    kEigenSeparationTol * std::max(1.0, scale);
    if (!separated) {
      failure = "eigenvalues of the random class combination collide";
      continue;
    }

    // Each eigenvector, normalized at the identity class, is a vector of
    // central character values w(k) = |C_k| chi(g_k) / deg chi.
    Eigen::MatrixXcd vecs = solver.eigenvectors();
    std::vector<std::int64_t> degrees;
    bool ok = true;
    for (int t = 0; t < r && ok; ++t) {
      std::complex<double> base = vecs(identity_class, t);
      if (std::abs(base) < 1e-12) {
        ok = false;
        failure = "eigenvector vanishes at the identity class";
        break;
      }
      double denom = 0;
      for (int k = 0; k < r; ++k) {
        std::complex<double> w = vecs(k, t) / base;
        denom += std::norm(w) / double(cls.sizes[k]);
      }
      double dval = std::sqrt(double(order) / denom);
      double rounded = std::round(dval);
      if (std::abs(dval - rounded) > kIntegralityTol || rounded < 1) {
        ok = false;
        failure = "computed degree " + std::to_string(dval) +
                  " fails the integrality check";
        break;
      }
      degrees.push_back(std::int64_t(rounded));
    }
    if (!ok)
      continue;

    i128 sumsq = 0;
    for (std::int64_t d : degrees)
      sumsq += i128(d) * d;
    if (sumsq != i128(order)) {
      failure = "sum of squared degrees differs from the group order";
      continue;
    }

    std::vector<DirichletPoly::Term> terms;
    terms.reserve(degrees.size());
    for (std::int64_t d : degrees)
      terms.emplace_back(u128(d), 1);
    DegreePattern pat;
    pat.zeta = DirichletPoly::from_terms(std::move(terms));
    pat.group_order = order;
    pat.class_count = std::uint64_t(r);
    return pat;
  }
  throw NumericalDegreeExtraction("degree extraction failed after " +
                                  std::to_string(kMaxAttempts) +
                                  " attempts: " + failure);
}

bool involution_count_check(const PermGroup &g, const DegreePattern &d) {
  std::int64_t involutions = 0;
  for (const auto &x : g.elements())
    if ((x * x).is_identity())
      ++involutions;
  return d.zeta.power_moment(1) == i128(involutions);
}

} // namespace wrzeta
