#include "doctest.h"

#include <map>
#include <set>

#include "wrzeta/builtins.hpp"
#include "wrzeta/partition.hpp"
#include "wrzeta/permgroup.hpp"

using namespace wrzeta;

namespace {

Permutation perm1(std::vector<int> one_based) {
  for (int &v : one_based)
    --v;
  return Permutation(one_based);
}

OrbitPartition part1(std::vector<std::vector<int>> blocks) {
  for (auto &b : blocks)
    for (int &v : b)
      --v;
  return OrbitPartition(std::move(blocks));
}

} // namespace

TEST_CASE("closure of textbook A5 generators") {
  auto g = PermGroup::close_generators(
      {perm1({2, 3, 4, 5, 1}), perm1({2, 3, 1, 4, 5})});
  CHECK(g.order() == 60);
  CHECK(g.is_transitive());
  CHECK(g.is_perfect());
}

TEST_CASE("closure edge cases") {
  auto trivial = PermGroup::close_generators({}, PermGroup::kDefaultBound, 3);
  CHECK(trivial.order() == 1);
  CHECK(trivial.degree() == 3);

  auto c2 = PermGroup::close_generators({perm1({2, 1})});
  CHECK(c2.order() == 2);

  CHECK_THROWS_AS(PermGroup::close_generators(
                      {perm1({2, 3, 4, 5, 1}), perm1({2, 3, 1, 4, 5})}, 30),
                  OrderExceedsBound);
  CHECK_THROWS_AS(
      PermGroup::close_generators({perm1({2, 1}), perm1({2, 3, 1})}),
      DegreeMismatch);
}

TEST_CASE("orbit partitions") {
  auto trivial = PermGroup::close_generators({}, PermGroup::kDefaultBound, 3);
  CHECK(OrbitPartition::of_group(trivial) ==
        part1({{1}, {2}, {3}}));

  auto swap12 = PermGroup::close_generators({perm1({2, 1, 3})});
  CHECK(OrbitPartition::of_group(swap12) == part1({{1, 2}, {3}}));

  CHECK(OrbitPartition::of_group(alternating_group(5)) ==
        part1({{1, 2, 3, 4, 5}}));
}

TEST_CASE("partition stabilizers") {
  auto s3 = symmetric_group(3);
  auto stab = partition_stabilizer(s3, part1({{1, 2}, {3}}));
  CHECK(stab.order() == 2);
  CHECK(stab.contains(perm1({2, 1, 3})));

  auto a5 = alternating_group(5);
  CHECK(partition_stabilizer(a5, OrbitPartition::singletons(5)).order() == 1);
  // the index-20 family carries the order-3 stabilizers; adding the block
  // {4,5} enlarges the stabilizer to the order-6 one of the index-10 family
  CHECK(partition_stabilizer(a5, part1({{1, 2, 3}, {4}, {5}})).order() == 3);
  CHECK(partition_stabilizer(a5, part1({{1, 2, 3}, {4, 5}})).order() == 6);

  CHECK(partition_stabilizer(s3, OrbitPartition::of_group(s3)).order() ==
        s3.order());
}

TEST_CASE("restricted growth enumeration counts Bell numbers") {
  CHECK(all_set_partitions(3).size() == 5);
  CHECK(all_set_partitions(4).size() == 15);
  CHECK(all_set_partitions(5).size() == 52);
  CHECK(all_set_partitions(6).size() == 203);
}

TEST_CASE("lattice of S3 has five partitions and the known Mobius table") {
  auto lat = PartitionLattice::enumerate(symmetric_group(3));
  CHECK(lat.size() == 5);
  auto bot = lat.partition(lat.bottom());
  auto top = lat.partition(lat.top());
  CHECK(bot == OrbitPartition::singletons(3));
  CHECK(top == part1({{1, 2, 3}}));
  CHECK(lat.mobius(bot, top) == 2);
  CHECK(lat.mobius(bot, bot) == 1);
  for (auto &mid : {part1({{1, 2}, {3}}), part1({{1, 3}, {2}}),
                    part1({{2, 3}, {1}})}) {
    CHECK(lat.mobius(bot, mid) == -1);
    CHECK(lat.mobius(mid, top) == -1);
  }
  // a set partition outside the lattice is rejected
  auto c4lat = PartitionLattice::enumerate(cyclic_group(4));
  CHECK_THROWS_AS(c4lat.mobius(part1({{1, 2}, {3}, {4}}),
                               part1({{1, 2, 3, 4}})),
                  UnknownPartition);
  // incomparable members give zero, checked through indices
  int i = lat.index_of(part1({{1, 2}, {3}}));
  int j = lat.index_of(part1({{1, 3}, {2}}));
  CHECK(lat.mobius(std::size_t(i), std::size_t(j)) == 0);
}

TEST_CASE("lattice sizes for S4 and A5") {
  CHECK(PartitionLattice::enumerate(symmetric_group(4)).size() == 15);

  auto lat = PartitionLattice::enumerate(alternating_group(5));
  CHECK(lat.size() == 42);
  // family sizes by block profile, matching the index families
  std::map<std::vector<int>, int> families;
  for (const auto &p : lat.partitions())
    families[p.block_profile()]++;
  CHECK(families[{1, 1, 1, 1, 1}] == 1);
  CHECK(families[{2, 2, 1}] == 15);
  CHECK(families[{3, 1, 1}] == 10);
  CHECK(families[{3, 2}] == 10);
  CHECK(families[{4, 1}] == 5);
  CHECK(families[{5}] == 1);
}

TEST_CASE("cyclic lattices biject with divisors") {
  for (int d : {2, 3, 4, 6, 9}) {
    auto lat = PartitionLattice::enumerate(cyclic_group(d));
    int divisors = 0;
    for (int e = 1; e <= d; ++e)
      if (d % e == 0)
        ++divisors;
    CHECK(int(lat.size()) == divisors);
  }
}

TEST_CASE("lattice filter is idempotent and Mobius identities hold") {
  for (const char *name : {"S3", "S4", "C4", "C6", "A4", "A5"}) {
    auto q = builtin_group(name);
    auto lat = PartitionLattice::enumerate(q);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      CHECK(OrbitPartition::of_group(lat.stabilizer(i)) == lat.partition(i));
    }
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = 0; j < lat.size(); ++j) {
        if (!lat.leq(i, j))
          continue;
        std::int64_t row = 0, col = 0;
        for (std::size_t k = 0; k < lat.size(); ++k) {
          if (lat.leq(i, k) && lat.leq(k, j)) {
            row += lat.mobius(i, k);
            col += lat.mobius(k, j);
          }
        }
        std::int64_t expect = (i == j) ? 1 : 0;
        CHECK(row == expect);
        CHECK(col == expect);
      }
  }
}

TEST_CASE("conjugacy classes by brute force") {
  auto s3 = symmetric_group(3);
  auto classes = s3.conjugacy_classes();
  std::multiset<std::uint64_t> sizes;
  for (auto &[rep, sz] : classes)
    sizes.insert(sz);
  CHECK(sizes == std::multiset<std::uint64_t>{1, 2, 3});

  auto a5 = alternating_group(5);
  auto c5 = a5.conjugacy_classes();
  std::multiset<std::uint64_t> sizes5;
  for (auto &[rep, sz] : c5)
    sizes5.insert(sz);
  CHECK(sizes5 == std::multiset<std::uint64_t>{1, 12, 12, 15, 20});

  auto trivial = PermGroup::close_generators({}, PermGroup::kDefaultBound, 2);
  CHECK(trivial.conjugacy_classes().size() == 1);
}

TEST_CASE("perfectness and transitivity") {
  CHECK(alternating_group(5).is_perfect());
  CHECK(alternating_group(5).is_transitive());
  CHECK_FALSE(cyclic_group(2).is_perfect());
  CHECK_FALSE(symmetric_group(3).is_perfect());
  CHECK(symmetric_group(3).abelianization_order() == 2);
  CHECK(psl2_f5_on6().is_perfect());
  CHECK(pgl3_f2_on7().is_perfect());
}

TEST_CASE("builtin orders") {
  CHECK(cyclic_group(6).order() == 6);
  CHECK(symmetric_group(5).order() == 120);
  CHECK(alternating_group(4).order() == 12);
  CHECK(alternating_group(6).order() == 360);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(psl2_f5_on6().order() == 60);
  CHECK(psl2_f5_on6().is_transitive());
  CHECK(pgl3_f2_on7().order() == 168);
  CHECK(pgl3_f2_on7().is_transitive());
}

TEST_CASE("wreath product oracle") {
  auto c2 = cyclic_group(2);
  auto d4 = wreath_product_group(c2, c2);
  CHECK(d4.order() == 8);
  CHECK(d4.degree() == 4);

  auto b3 = wreath_product_group(c2, symmetric_group(3));
  CHECK(b3.order() == 48);

  auto trivial = PermGroup::close_generators({}, PermGroup::kDefaultBound, 1);
  auto q = symmetric_group(3);
  auto wq = wreath_product_group(trivial, q);
  CHECK(wq.order() == q.order());

  CHECK_THROWS_AS(wreath_product_group(symmetric_group(4), symmetric_group(4)),
                  OrderExceedsBound);
}

TEST_CASE("wreath order transports"){
  for (auto [hname, qname] : std::vector<std::pair<const char *, const char *>>{
           {"C2", "S3"}, {"C3", "C2"}, {"S3", "C2"}}) {
    auto h = builtin_group(hname);
    auto q = builtin_group(qname);
    auto w = wreath_product_group(h, q);
    std::uint64_t expect = 1;
    for (int i = 0; i < q.degree(); ++i)
      expect *= h.order();
    expect *= q.order();
    CHECK(w.order() == expect);
  }
}
