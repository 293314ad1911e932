#ifndef WRZETA_LIMIT_HPP
#define WRZETA_LIMIT_HPP

#include <cstdint>
#include <map>
#include <memory>

#include "wrzeta/wreath.hpp"

namespace wrzeta {

// Truncated coefficients of the self-similar limit zeta function, with the
// iteration bookkeeping the stabilization bound predicts.
struct LimitZeta {
  DirichletPoly coefficients;
  int iterations_used = 0;
  std::shared_ptr<const WreathContext> context;
  // first iteration index from which each degree's coefficient is final
  std::map<u128, int> stabilized_at;
};

// zeta of the k-fold iterated wreath power, starting from the trivial
// group at level 0.  Exact if bound is omitted and degrees stay in range.
DirichletPoly finite_level_zeta(const WreathContext &ctx, int k,
                                u128 bound = U128_MAX);

// Fixed-point iteration of the wreath formula truncated at bound; requires
// the acting group to be perfect (otherwise the limit is not rigid).
LimitZeta limit_zeta(const PermGroup &q, u128 bound,
                     std::uint64_t seed = 12345);
LimitZeta limit_zeta(std::shared_ptr<const WreathContext> ctx, u128 bound);

// Coefficientwise r_{n,k+1} >= r_{n,k} for all degrees <= bound.
bool monotonicity_check(const WreathContext &ctx, int k, u128 bound);

} // namespace wrzeta

#endif
