#ifndef WRZETA_DIRICHLET_HPP
#define WRZETA_DIRICHLET_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wrzeta/rational.hpp"
#include "wrzeta/u128.hpp"

namespace wrzeta {

// Finite Dirichlet polynomial  sum_n r_n n^{-s}  with exact nonnegative
// integer multiplicities, kept sparse and sorted by degree.  Degrees are
// 128-bit so that convolution products can be compared against truncation
// bounds around 10^12..10^15 without wrapping.
class DirichletPoly {
public:
  using Term = std::pair<u128, std::int64_t>;

  DirichletPoly() = default;

  // Constant polynomial c * 1^{-s}.
  static DirichletPoly constant(std::int64_t c);
  static DirichletPoly one() { return constant(1); }

  // terms need not be sorted or deduplicated; zeros are dropped and
  // degrees above the truncation (if any) are cut.
  static DirichletPoly from_terms(std::vector<Term> terms,
                                  std::optional<u128> truncation = {});

  const std::vector<Term> &terms() const { return terms_; }
  std::optional<u128> truncation() const { return truncation_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::int64_t coefficient(u128 degree) const;
  u128 max_degree() const { return terms_.empty() ? 0 : terms_.back().first; }

  DirichletPoly truncate(u128 bound) const;

  bool operator==(const DirichletPoly &o) const { return terms_ == o.terms_; }
  bool operator!=(const DirichletPoly &o) const { return !(*this == o); }

  // Numerical evaluation, summed in ascending degree order.
  std::complex<double> evaluate(std::complex<double> s) const;
  double evaluate(double s) const;

  // Exact sum r_n * n^k for small k >= 0 (the special values at s = -k).
  i128 power_moment(unsigned k) const;

private:
  std::vector<Term> terms_;
  std::optional<u128> truncation_;
};

DirichletPoly add(const DirichletPoly &a, const DirichletPoly &b);

// Convolution truncated at bound: degrees multiply, multiplicities sum over
// pairs with product <= bound.
DirichletPoly mul(const DirichletPoly &a, const DirichletPoly &b, u128 bound);

// Substitution s -> e*s, i.e. degree n -> n^e; terms with n^e > bound drop.
DirichletPoly rescale(const DirichletPoly &a, unsigned e, u128 bound);

DirichletPoly pow(const DirichletPoly &a, unsigned k, u128 bound);

// Rational-coefficient variant: the value type of functional-equation
// coefficients  sum_f q_f f^{-s}.
class RationalDirichletPoly {
public:
  using Term = std::pair<u128, Rational>;

  RationalDirichletPoly() = default;
  static RationalDirichletPoly from_terms(std::vector<Term> terms);

  const std::vector<Term> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(u128 degree) const;

  void add_term(u128 degree, const Rational &q);
  RationalDirichletPoly &operator+=(const RationalDirichletPoly &o);
  friend RationalDirichletPoly operator+(RationalDirichletPoly a,
                                         const RationalDirichletPoly &b) {
    a += b;
    return a;
  }
  bool operator==(const RationalDirichletPoly &o) const {
    return terms_ == o.terms_;
  }

  std::complex<double> evaluate(std::complex<double> s) const;

  // Exact integer conversion; throws NonIntegralCoefficient if any
  // coefficient is not an integer, MultiplicityOverflow if negative terms
  // remain (a genuine zeta vector cannot produce them).
  DirichletPoly to_integer_poly(std::optional<u128> truncation = {}) const;

private:
  std::vector<Term> terms_;
};

RationalDirichletPoly scale(const DirichletPoly &a, const Rational &c);
RationalDirichletPoly scale(const RationalDirichletPoly &a, const Rational &c);

// c (x) a truncated at bound: degree products f*n, coefficients q_f * r_n.
RationalDirichletPoly mul(const RationalDirichletPoly &c,
                          const DirichletPoly &a, u128 bound);

enum class WeylType { SU3, Spin5, G2 };

// Truncated Weyl dimension series for the three rank-2 cases.
DirichletPoly weyl_zeta(WeylType type, u128 bound);

} // namespace wrzeta

#endif
