#ifndef WRZETA_PARTITION_HPP
#define WRZETA_PARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wrzeta/permgroup.hpp"

namespace wrzeta {

// Set partition of {0..degree-1} in canonical form: each block sorted
// ascending, blocks ordered by their minimum.
class OrbitPartition {
public:
  OrbitPartition() = default;
  explicit OrbitPartition(std::vector<std::vector<int>> blocks);

  static OrbitPartition singletons(int degree);
  static OrbitPartition of_group(const PermGroup &g);

  const std::vector<std::vector<int>> &blocks() const { return blocks_; }
  int degree() const { return degree_; }
  std::size_t block_count() const { return blocks_.size(); }

  // Multiset of block sizes, descending.
  std::vector<int> block_profile() const;

  // id of the block containing each point
  const std::vector<int> &block_of() const { return block_of_; }

  bool refines(const OrbitPartition &coarser) const;

  bool operator==(const OrbitPartition &o) const { return blocks_ == o.blocks_; }
  bool operator<(const OrbitPartition &o) const { return blocks_ < o.blocks_; }

  std::string str() const; // 1-based rendering like {1 2}{3}

private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
  int degree_ = 0;
};

// Subgroup of elements of g fixing every block of p setwise.
PermGroup partition_stabilizer(const PermGroup &g, const OrbitPartition &p);

// The lattice of partitions of the point set arising as orbit partitions
// of subgroups, realized by the filter "orbit partition of the stabilizer
// equals the partition itself", with refinement order and exact Mobius
// matrix from the standard recursion.
class PartitionLattice {
public:
  static PartitionLattice enumerate(const PermGroup &q);

  const PermGroup &group() const { return group_; }
  std::size_t size() const { return partitions_.size(); }
  const std::vector<OrbitPartition> &partitions() const { return partitions_; }
  const OrbitPartition &partition(std::size_t i) const { return partitions_[i]; }
  const PermGroup &stabilizer(std::size_t i) const { return stabilizers_[i]; }

  int index_of(const OrbitPartition &p) const; // -1 if absent
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }

  std::int64_t mobius(std::size_t i, std::size_t j) const {
    return mobius_[i][j];
  }
  std::int64_t mobius(const OrbitPartition &p, const OrbitPartition &q) const;

  std::size_t bottom() const { return bottom_; } // all singletons
  std::size_t top() const { return top_; }       // orbit partition of Q

private:
  PermGroup group_;
  std::vector<OrbitPartition> partitions_; // sorted: block count desc, canon
  std::vector<PermGroup> stabilizers_;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<std::int64_t>> mobius_;
  std::size_t bottom_ = 0, top_ = 0;
};

// All set partitions of an n-set via restricted growth strings.
std::vector<OrbitPartition> all_set_partitions(int n);

} // namespace wrzeta

#endif
