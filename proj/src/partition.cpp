#include "wrzeta/partition.hpp"

#include <algorithm>
#include <map>

namespace wrzeta {

OrbitPartition::OrbitPartition(std::vector<std::vector<int>> blocks) {
  for (auto &b : blocks)
    std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto &a, const auto &b) { return a.front() < b.front(); });
  int n = 0;
  for (const auto &b : blocks)
    n += int(b.size());
  block_of_.assign(n, -1);
  for (int id = 0; id < int(blocks.size()); ++id)
    for (int pt : blocks[id]) {
      if (pt < 0 || pt >= n || block_of_[pt] != -1)
        throw BadInput("blocks do not partition the point set");
      block_of_[pt] = id;
    }
  blocks_ = std::move(blocks);
  degree_ = n;
}

OrbitPartition OrbitPartition::singletons(int degree) {
  std::vector<std::vector<int>> blocks(degree);
  for (int i = 0; i < degree; ++i)
    blocks[i] = {i};
  return OrbitPartition(std::move(blocks));
}

OrbitPartition OrbitPartition::of_group(const PermGroup &g) {
  return OrbitPartition(g.orbits());
}

std::vector<int> OrbitPartition::block_profile() const {
  std::vector<int> sizes;
  sizes.reserve(blocks_.size());
  for (const auto &b : blocks_)
    sizes.push_back(int(b.size()));
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

bool OrbitPartition::refines(const OrbitPartition &coarser) const {
  if (degree_ != coarser.degree_)
    return false;
  for (const auto &b : blocks_) {
    int target = coarser.block_of_[b.front()];
    for (int pt : b)
      if (coarser.block_of_[pt] != target)
        return false;
  }
  return true;
}

std::string OrbitPartition::str() const {
  std::string out;
  for (const auto &b : blocks_) {
    out += "{";
    for (std::size_t i = 0; i < b.size(); ++i)
      out += (i ? " " : "") + std::to_string(b[i] + 1);
    out += "}";
  }
  return out;
}

PermGroup partition_stabilizer(const PermGroup &g, const OrbitPartition &p) {
  if (p.degree() != g.degree())
    throw DegreeMismatch("partition does not cover the group's point set");
  std::vector<Permutation> kept;
  const auto &block_of = p.block_of();
  for (const auto &x : g.elements()) {
    bool fixes_all = true;
    for (int pt = 0; pt < g.degree() && fixes_all; ++pt)
      fixes_all = block_of[x(pt)] == block_of[pt];
    if (fixes_all)
      kept.push_back(x);
  }
  return PermGroup::from_elements(std::move(kept));
}

std::vector<OrbitPartition> all_set_partitions(int n) {
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<OrbitPartition> out;
  std::vector<int> a(n, 0);
  while (true) {
    int nblocks = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<std::vector<int>> blocks(nblocks);
    for (int i = 0; i < n; ++i)
      blocks[a[i]].push_back(i);
    out.emplace_back(std::move(blocks));

    int i = n - 1;
    while (i > 0) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j)
        prefix_max = std::max(prefix_max, a[j]);
      if (a[i] <= prefix_max) {
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
        break;
      }
      --i;
    }
    if (i == 0)
      break;
  }
  return out;
}

PartitionLattice PartitionLattice::enumerate(const PermGroup &q) {
  if (!q.is_faithful())
    throw NotFaithful("a nonidentity element fixes every point");

  PartitionLattice lat;
  lat.group_ = q;
  for (auto &p : all_set_partitions(q.degree())) {
    PermGroup stab = partition_stabilizer(q, p);
    if (OrbitPartition::of_group(stab) == p) {
      lat.partitions_.push_back(std::move(p));
      lat.stabilizers_.push_back(std::move(stab));
    }
  }

  // Linear extension of refinement: block count descending, then canonical.
  std::vector<std::size_t> perm(lat.partitions_.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    auto ca = lat.partitions_[a].block_count();
    auto cb = lat.partitions_[b].block_count();
    if (ca != cb)
      return ca > cb;
    return lat.partitions_[a] < lat.partitions_[b];
  });
  std::vector<OrbitPartition> parts;
  std::vector<PermGroup> stabs;
  for (std::size_t i : perm) {
    parts.push_back(std::move(lat.partitions_[i]));
    stabs.push_back(std::move(lat.stabilizers_[i]));
  }
  lat.partitions_ = std::move(parts);
  lat.stabilizers_ = std::move(stabs);

  std::size_t m = lat.partitions_.size();
  lat.leq_.assign(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      lat.leq_[i][j] = lat.partitions_[i].refines(lat.partitions_[j]);

  // mu(P,P) = 1, and for P < P'': mu(P,P'') = -sum_{P <= P' < P''} mu(P,P').
  lat.mobius_.assign(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    lat.mobius_[i][i] = 1;
    for (std::size_t j = i + 1; j < m; ++j) { // indices extend refinement
      if (!lat.leq_[i][j])
        continue;
      std::int64_t acc = 0;
      for (std::size_t k = i; k < j; ++k)
        if (lat.leq_[i][k] && lat.leq_[k][j])
          acc += lat.mobius_[i][k];
      lat.mobius_[i][j] = -acc;
    }
  }

  lat.bottom_ = std::size_t(lat.index_of(OrbitPartition::singletons(q.degree())));
  lat.top_ = std::size_t(lat.index_of(OrbitPartition::of_group(q)));
  return lat;
}

int PartitionLattice::index_of(const OrbitPartition &p) const {
  for (std::size_t i = 0; i < partitions_.size(); ++i)
    if (partitions_[i] == p)
      return int(i);
  return -1;
}

std::int64_t PartitionLattice::mobius(const OrbitPartition &p,
                                      const OrbitPartition &q) const {
  int i = index_of(p), j = index_of(q);
  if (i < 0 || j < 0)
    throw UnknownPartition("partition is not a member of the lattice");
  return mobius_[std::size_t(i)][std::size_t(j)];
}

} // namespace wrzeta
