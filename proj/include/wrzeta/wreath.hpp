#ifndef WRZETA_WREATH_HPP
#define WRZETA_WREATH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wrzeta/chardeg.hpp"
#include "wrzeta/dirichlet.hpp"
#include "wrzeta/partition.hpp"

namespace wrzeta {

// Multiset of block sizes of a partition, descending; the monomial key
// {e1,e2,...} stands for X_{e1} X_{e2} ...
using BlockProfile = std::vector<int>;

// Everything about (Q, X) that the wreath formula needs, cached once: the
// partition lattice, the per-partition stabilizer degree patterns and
// indices, and the inner Mobius-weighted sums grouped per coarse partition.
class WreathContext {
public:
  static WreathContext build(const PermGroup &q, std::uint64_t seed = 12345);

  const PermGroup &group() const { return lattice_.group(); }
  const PartitionLattice &lattice() const { return lattice_; }
  int block_bound() const { return lattice_.group().degree(); } // d = |X|
  const std::vector<std::int64_t> &primes() const { return primes_; }

  const DegreePattern &stabilizer_pattern(std::size_t i) const {
    return stabilizer_patterns_[i];
  }
  std::uint64_t index_of_stabilizer(std::size_t i) const { return indices_[i]; }

  // Inner sum  sum_{P <= P'} mu(P,P') [Q:Q_P]^{-1-s} zeta_{Q_P}(s)
  // for the coarse partition P' at lattice position i.
  const RationalDirichletPoly &inner_coefficient(std::size_t i) const {
    return inner_[i];
  }

  // Same sums folded by block profile: the coefficient of each monomial
  // prod_e X_e in the wreath expansion.
  const std::map<BlockProfile, RationalDirichletPoly> &monomials() const {
    return monomials_;
  }

private:
  PartitionLattice lattice_;
  std::vector<DegreePattern> stabilizer_patterns_;
  std::vector<std::uint64_t> indices_;
  std::vector<RationalDirichletPoly> inner_;
  std::map<BlockProfile, RationalDirichletPoly> monomials_;
  std::vector<std::int64_t> primes_;
};

// zeta(H wr_X Q, s) truncated at bound, from the degree pattern (or a
// truncated series) of H.  Exact when zetaH is complete and the bound
// admits every attainable degree.
DirichletPoly wreath_zeta(const DirichletPoly &zetaH, const WreathContext &ctx,
                          u128 bound);

// The polynomial Psi with  Psi(zeta(s), zeta(2s), ..., zeta(ds), p_j^{-s}) = 0
// for the self-similar limit: wreath expansion in X_1..X_d minus X_1.
// Coefficients are exact rational Dirichlet sums whose degrees factor over
// the primes of |Q|.
struct FunctionalEquation {
  int d = 0;
  std::vector<std::int64_t> primes;
  std::map<BlockProfile, RationalDirichletPoly> monomials;

  // exponent of X_1 in a profile
  static int x1_exponent(const BlockProfile &profile);

  std::string render(const std::string &symbol = "Z") const;
};

FunctionalEquation functional_equation(const WreathContext &ctx);

// Value of Psi with X_e <- assignments[e-1]; exact rational coefficients.
RationalDirichletPoly specialize(const FunctionalEquation &fe,
                                 const std::vector<DirichletPoly> &assignments,
                                 u128 bound);

// Same, then asserted to be an integer polynomial (genuine zeta vectors).
DirichletPoly specialize_integral(const FunctionalEquation &fe,
                                  const std::vector<DirichletPoly> &assignments,
                                  u128 bound);

} // namespace wrzeta

#endif
