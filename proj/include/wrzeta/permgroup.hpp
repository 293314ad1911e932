#ifndef WRZETA_PERMGROUP_HPP
#define WRZETA_PERMGROUP_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wrzeta/errors.hpp"

namespace wrzeta {

// Permutation of {0..degree-1}, stored as the image array.  The public
// file format is 1-based; the conversion happens at the IO boundary.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const { return int(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int> &images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  // (a*b)(x) = a(b(x))
  friend Permutation operator*(const Permutation &a, const Permutation &b);

  friend bool operator==(const Permutation &a, const Permutation &b) {
    return a.images_ == b.images_;
  }
  friend bool operator<(const Permutation &a, const Permutation &b) {
    return a.images_ < b.images_;
  }

  std::string cycle_string() const; // 1-based, for diagnostics

private:
  std::vector<int> images_;
};

struct ConjugacyClasses {
  std::vector<Permutation> representatives;
  std::vector<std::uint64_t> sizes;
  std::vector<int> class_of; // indexed like PermGroup::elements()
};

// Finite permutation group with an explicit sorted element list.  All
// algorithms here are brute force on purpose: every group in scope stays
// far below the enumeration cap.
class PermGroup {
public:
  static constexpr std::uint64_t kDefaultBound = 1'000'000;

  PermGroup() = default;

  // Closure of the generating set; throws OrderExceedsBound or
  // DegreeMismatch.  An empty generator list needs an explicit degree.
  static PermGroup close_generators(std::vector<Permutation> generators,
                                    std::uint64_t bound = kDefaultBound,
                                    int degree_if_empty = 1);

  // Wraps a set already known to be closed (e.g. a filtered subgroup).
  static PermGroup from_elements(std::vector<Permutation> elements);

  int degree() const { return degree_; }
  std::uint64_t order() const { return std::uint64_t(elements_.size()); }
  const std::vector<Permutation> &elements() const { return elements_; }
  const std::vector<Permutation> &generators() const { return generators_; }

  bool contains(const Permutation &p) const;
  int element_index(const Permutation &p) const; // -1 if absent

  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;
  bool is_faithful() const; // no nonidentity element fixes every point
  bool is_perfect() const;
  std::uint64_t abelianization_order() const;

  PermGroup derived_subgroup() const;

  std::vector<std::pair<Permutation, std::uint64_t>> conjugacy_classes() const;
  ConjugacyClasses conjugacy_class_map() const;

private:
  int degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_; // sorted
};

// Imprimitive wreath action of H wr_X Q on |Y| * |X| points, for use as a
// small-instance oracle; order is |H|^{|X|} * |Q|.
PermGroup wreath_product_group(const PermGroup &h, const PermGroup &q,
                               std::uint64_t bound = PermGroup::kDefaultBound);

// H x K acting on the disjoint union of their point sets.
PermGroup direct_product_group(const PermGroup &h, const PermGroup &k,
                               std::uint64_t bound = PermGroup::kDefaultBound);

} // namespace wrzeta

#endif
