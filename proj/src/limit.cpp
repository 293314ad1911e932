#include "wrzeta/limit.hpp"

#include <cmath>

namespace wrzeta {

DirichletPoly finite_level_zeta(const WreathContext &ctx, int k, u128 bound) {
  DirichletPoly z = DirichletPoly::one();
  for (int level = 0; level < k; ++level)
    z = wreath_zeta(z, ctx, bound);
  return z;
}

LimitZeta limit_zeta(const PermGroup &q, u128 bound, std::uint64_t seed) {
  if (!q.is_faithful())
    throw NotFaithful("the acting group must act faithfully");
  if (q.degree() < 2 || !q.is_transitive())
    throw NotTransitive("the acting group must be transitive on >= 2 points");
  return limit_zeta(std::make_shared<WreathContext>(WreathContext::build(q, seed)),
                    bound);
}

LimitZeta limit_zeta(std::shared_ptr<const WreathContext> ctx, u128 bound) {
  if (!ctx->group().is_perfect())
    throw NotPerfect("the acting group is not perfect, so the limit has "
                     "infinitely many one-dimensional representations");
  // Every degree <= bound is stable once the level exceeds log2(degree),
  // so consecutive equal iterates certify the fixed point well within the
  // cap below; running past it means a bug, not slow convergence.
  int cap = 4;
  for (u128 n = bound; n > 1; n >>= 1)
    ++cap;

  LimitZeta out;
  out.context = ctx;
  DirichletPoly z = DirichletPoly::one();
  out.stabilized_at[1] = 0;
  for (int k = 0; k < cap; ++k) {
    DirichletPoly next = wreath_zeta(z, *ctx, bound);
    for (const auto &[n, r] : next.terms())
      if (z.coefficient(n) != r)
        out.stabilized_at[n] = k + 1;
    if (next == z) {
      out.coefficients = std::move(next);
      out.iterations_used = k + 1;
      if (out.coefficients.coefficient(1) != 1)
        throw Error("InternalError", "limit zeta must start with 1*1^{-s}");
      return out;
    }
    z = std::move(next);
  }
  throw InternalStabilizationFailure(
      "iteration did not stabilize within the log2 cap of " +
      std::to_string(cap));
}

bool monotonicity_check(const WreathContext &ctx, int k, u128 bound) {
  DirichletPoly zk = finite_level_zeta(ctx, k, bound);
  DirichletPoly zk1 = wreath_zeta(zk, ctx, bound);
  for (const auto &[n, r] : zk.terms())
    if (zk1.coefficient(n) < r)
      return false;
  return true;
}

} // namespace wrzeta
