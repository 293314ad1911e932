#ifndef WRZETA_CHARDEG_HPP
#define WRZETA_CHARDEG_HPP

#include <cstdint>

#include "wrzeta/dirichlet.hpp"
#include "wrzeta/permgroup.hpp"

namespace wrzeta {

// Multiset of irreducible character degrees of a finite group, packaged as
// its representation zeta function.
struct DegreePattern {
  DirichletPoly zeta;        // degree n -> multiplicity r_n
  std::uint64_t group_order = 1;
  std::uint64_t class_count = 1;

  // (number of irreducibles, group order, abelianisation order), i.e. the
  // values of the zeta function at 0, -2 and s -> +infinity.
  struct SpecialValues {
    std::int64_t class_count;
    std::int64_t order;
    std::int64_t abelianization;
  };
  SpecialValues special_values() const;
};

// Exact degree multiset via class-sum matrices: a random combination of the
// class matrices has the central characters as common eigenvectors, and the
// degrees follow from the second orthogonality relation.  Deterministic for
// a fixed seed.
DegreePattern degree_pattern(const PermGroup &g, std::uint64_t seed = 12345);

// True iff zeta(G,-1) equals the number of solutions of g^2 = 1.  Holds
// exactly for groups whose irreducibles are all realisable over R.
bool involution_count_check(const PermGroup &g, const DegreePattern &d);

} // namespace wrzeta

#endif
