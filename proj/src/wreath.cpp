#include "wrzeta/wreath.hpp"

#include <algorithm>
#include <sstream>

namespace wrzeta {

namespace {

std::vector<std::int64_t> prime_factors(std::uint64_t n) {
  std::vector<std::int64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(std::int64_t(p));
      while (n % p == 0)
        n /= p;
    }
  if (n > 1)
    out.push_back(std::int64_t(n));
  return out;
}

bool factors_over(u128 n, const std::vector<std::int64_t> &primes) {
  for (std::int64_t p : primes)
    while (n % u128(p) == 0)
      n /= u128(p);
  return n == 1;
}

} // namespace

WreathContext WreathContext::build(const PermGroup &q, std::uint64_t seed) {
  if (!q.is_faithful())
    throw NotFaithful("the acting group must act faithfully");
  if (q.degree() < 2 || !q.is_transitive())
    throw NotTransitive("the acting group must be transitive on >= 2 points");

  WreathContext ctx;
  ctx.lattice_ = PartitionLattice::enumerate(q);
  ctx.primes_ = prime_factors(q.order());

  const std::size_t m = ctx.lattice_.size();
  ctx.stabilizer_patterns_.reserve(m);
  ctx.indices_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const PermGroup &stab = ctx.lattice_.stabilizer(i);
    ctx.stabilizer_patterns_.push_back(degree_pattern(stab, seed));
    ctx.indices_.push_back(q.order() / stab.order());
  }

  // Inner sums per coarse partition P' (the grouping that keeps the
  // expensive zeta_H factors out of the double sum).
  ctx.inner_.assign(m, {});
  for (std::size_t coarse = 0; coarse < m; ++coarse) {
    RationalDirichletPoly acc;
    for (std::size_t fine = 0; fine <= coarse; ++fine) {
      if (!ctx.lattice_.leq(fine, coarse))
        continue;
      std::int64_t mu = ctx.lattice_.mobius(fine, coarse);
      if (mu == 0)
        continue;
      std::int64_t idx = std::int64_t(ctx.indices_[fine]);
      // mu * [Q:Q_P]^{-1-s} * zeta_{Q_P}(s): degrees idx*n, weights mu*r/idx
      for (const auto &[n, r] : ctx.stabilizer_patterns_[fine].zeta.terms())
        acc.add_term(u128(idx) * n, Rational(mu * r, idx));
    }
    ctx.inner_[coarse] = std::move(acc);
  }

  for (std::size_t i = 0; i < m; ++i) {
    BlockProfile profile = ctx.lattice_.partition(i).block_profile();
    ctx.monomials_[profile] += ctx.inner_[i];
  }
  for (auto &[profile, coeff] : ctx.monomials_)
    for (const auto &[f, qf] : coeff.terms())
      if (!factors_over(f, ctx.primes_))
        throw Error("InternalError",
                    "functional-equation degree " + u128_to_string(f) +
                        " does not factor over the primes of |Q|");
  return ctx;
}

DirichletPoly wreath_zeta(const DirichletPoly &zetaH, const WreathContext &ctx,
                          u128 bound) {
  // sum over block profiles of  coeff_profile(s) * prod_e zetaH(e s)^{m_e},
  // with rescales and powers shared across profiles.
  std::map<int, DirichletPoly> rescaled;
  for (const auto &[profile, coeff] : ctx.monomials())
    for (int e : profile)
      if (!rescaled.count(e))
        rescaled[e] = rescale(zetaH, unsigned(e), bound);

  RationalDirichletPoly total;
  for (const auto &[profile, coeff] : ctx.monomials()) {
    DirichletPoly prod = DirichletPoly::one();
    for (int e : profile) {
      prod = mul(prod, rescaled[e], bound);
      if (prod.empty())
        break;
    }
    total += mul(coeff, prod, bound);
  }
  // The wreath zeta of a genuine degree pattern is itself a degree pattern,
  // so the exact rational bookkeeping must collapse to nonnegative integers.
  return total.to_integer_poly(bound);
}

int FunctionalEquation::x1_exponent(const BlockProfile &profile) {
  return int(std::count(profile.begin(), profile.end(), 1));
}

FunctionalEquation functional_equation(const WreathContext &ctx) {
  FunctionalEquation fe;
  fe.d = ctx.block_bound();
  fe.primes = ctx.primes();
  fe.monomials = ctx.monomials();
  // Psi = expansion - X_1; the bare monomial X_1 cannot arise from a
  // partition profile (those sum to d >= 2), so the key is free.
  fe.monomials[BlockProfile{1}].add_term(1, Rational(-1));
  return fe;
}

RationalDirichletPoly specialize(const FunctionalEquation &fe,
                                 const std::vector<DirichletPoly> &assignments,
                                 u128 bound) {
  if (int(assignments.size()) != fe.d)
    throw BadInput("specialize needs one assignment per block size 1..d");
  RationalDirichletPoly total;
  for (const auto &[profile, coeff] : fe.monomials) {
    DirichletPoly prod = DirichletPoly::one();
    for (int e : profile) {
      prod = mul(prod, assignments[std::size_t(e - 1)], bound);
      if (prod.empty())
        break;
    }
    total += mul(coeff, prod, bound);
  }
  return total;
}

DirichletPoly specialize_integral(const FunctionalEquation &fe,
                                  const std::vector<DirichletPoly> &assignments,
                                  u128 bound) {
  return specialize(fe, assignments, bound).to_integer_poly(bound);
}

std::string FunctionalEquation::render(const std::string &symbol) const {
  // Human-readable rendering, one line per monomial, e.g.
  //   + (1/60 * 60^-s) Z(s)^5
  std::ostringstream os;
  bool first = true;
  for (const auto &[profile, coeff] : monomials) {
    if (coeff.is_zero())
      continue;
    os << (first ? "  " : "\n  ");
    first = false;
    os << "+ (";
    bool ft = true;
    for (const auto &[f, q] : coeff.terms()) {
      std::string qs = q.str();
      if (!ft)
        os << (qs[0] == '-' ? " - " : " + ");
      else if (qs[0] == '-')
        os << "-";
      if (qs[0] == '-')
        qs = qs.substr(1);
      ft = false;
      if (f == 1)
        os << qs;
      else if (qs == "1")
        os << u128_to_string(f) << "^-s";
      else
        os << qs << " * " << u128_to_string(f) << "^-s";
    }
    os << ")";
    // collect equal block sizes into powers
    std::map<int, int, std::greater<int>> bysize;
    for (int e : profile)
      bysize[e]++;
    for (const auto &[e, mult] : bysize) {
      os << " " << symbol << "(" << (e == 1 ? "s" : std::to_string(e) + "s")
         << ")";
      if (mult > 1)
        os << "^" << mult;
    }
  }
  return os.str();
}

} // namespace wrzeta
