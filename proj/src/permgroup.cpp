#include "wrzeta/permgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "wrzeta/u128.hpp"

namespace wrzeta {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= int(images_.size()) || seen[v])
      throw BadInput("image array is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < int(images_.size()); ++i)
    img[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < int(images_.size()); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("composing permutations of different degrees");
  std::vector<int> img(a.images_.size());
  for (int i = 0; i < int(img.size()); ++i)
    img[i] = a.images_[b.images_[i]];
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < int(images_.size()); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      out += (first ? "" : " ") + std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

PermGroup PermGroup::close_generators(std::vector<Permutation> generators,
                                      std::uint64_t bound,
                                      int degree_if_empty) {
  int degree = generators.empty() ? degree_if_empty : generators[0].degree();
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw DegreeMismatch("generators act on different point counts");

  std::set<Permutation> elements;
  std::vector<Permutation> frontier;
  elements.insert(Permutation::identity(degree));
  frontier.push_back(Permutation::identity(degree));
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto &x : frontier) {
      for (const auto &g : generators) {
        Permutation y = g * x;
        if (elements.insert(y).second) {
          if (elements.size() > bound)
            throw OrderExceedsBound("group closure passed the bound of " +
                                    std::to_string(bound) + " elements");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }

  PermGroup grp;
  grp.degree_ = degree;
  grp.generators_ = std::move(generators);
  grp.elements_.assign(elements.begin(), elements.end());
  return grp;
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements) {
  if (elements.empty())
    throw BadInput("a group needs at least the identity");
  PermGroup grp;
  grp.degree_ = elements[0].degree();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  grp.elements_ = std::move(elements);
  grp.generators_ = grp.elements_;
  return grp;
}

bool PermGroup::contains(const Permutation &p) const {
  return element_index(p) >= 0;
}

int PermGroup::element_index(const Permutation &p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it != elements_.end() && *it == p)
    return int(it - elements_.begin());
  return -1;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  // Union-find over points driven by the generators; for a subgroup given
  // by its element list, generators_ == elements_ and this still works.
  std::vector<int> parent(degree_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto &g : generators_)
    for (int i = 0; i < degree_; ++i) {
      int a = find(i), b = find(g(i));
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> buckets;
  for (int i = 0; i < degree_; ++i)
    buckets[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto &[root, pts] : buckets)
    out.push_back(std::move(pts));
  return out;
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

bool PermGroup::is_faithful() const {
  // With explicit image arrays the action kernel is structurally trivial;
  // kept as a guard on the input format.
  std::size_t acting_trivially = 0;
  for (const auto &g : elements_)
    if (g.is_identity())
      ++acting_trivially;
  return acting_trivially == 1;
}

PermGroup PermGroup::derived_subgroup() const {
  // Commutators of all element pairs form a conjugation-closed set, so
  // their closure is the derived subgroup.  Quadratic, but only ever used
  // on the acting groups Q, never on wreath oracles.
  std::set<Permutation> comms;
  for (const auto &a : elements_)
    for (const auto &b : elements_) {
      Permutation c = a.inverse() * (b.inverse() * (a * b));
      comms.insert(std::move(c));
    }
  return close_generators(std::vector<Permutation>(comms.begin(), comms.end()),
                          order(), degree_);
}

bool PermGroup::is_perfect() const {
  return derived_subgroup().order() == order();
}

std::uint64_t PermGroup::abelianization_order() const {
  return order() / derived_subgroup().order();
}

ConjugacyClasses PermGroup::conjugacy_class_map() const {
  // Each class is the orbit of a representative under conjugation by the
  // generators, found by breadth-first search.
  ConjugacyClasses cls;
  cls.class_of.assign(elements_.size(), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (cls.class_of[i] >= 0)
      continue;
    int id = int(cls.representatives.size());
    cls.representatives.push_back(elements_[i]);
    std::vector<int> frontier{int(i)};
    cls.class_of[i] = id;
    std::uint64_t count = 1;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int idx : frontier) {
        for (const auto &g : generators_) {
          Permutation conj = g * (elements_[idx] * g.inverse());
          int j = element_index(conj);
          if (cls.class_of[j] < 0) {
            cls.class_of[j] = id;
            ++count;
            next.push_back(j);
          }
        }
      }
      frontier = std::move(next);
    }
    cls.sizes.push_back(count);
  }
  return cls;
}

std::vector<std::pair<Permutation, std::uint64_t>>
PermGroup::conjugacy_classes() const {
  ConjugacyClasses cls = conjugacy_class_map();
  std::vector<std::pair<Permutation, std::uint64_t>> out;
  for (std::size_t t = 0; t < cls.representatives.size(); ++t)
    out.emplace_back(cls.representatives[t], cls.sizes[t]);
  return out;
}

PermGroup wreath_product_group(const PermGroup &h, const PermGroup &q,
                               std::uint64_t bound) {
  int ny = h.degree(), nx = q.degree();
  u128 predicted = checked_pow(u128(h.order()), unsigned(nx));
  if (!checked_mul(predicted, u128(q.order()), predicted) ||
      predicted > u128(bound))
    throw OrderExceedsBound("wreath product order |H|^|X| * |Q| exceeds " +
                            std::to_string(bound));

  // Point (y, x) lives at index x*ny + y: one block of size ny per x.
  std::vector<Permutation> gens;
  for (const auto &hg : h.generators()) {
    for (int x = 0; x < nx; ++x) {
      std::vector<int> img(ny * nx);
      std::iota(img.begin(), img.end(), 0);
      for (int y = 0; y < ny; ++y)
        img[x * ny + y] = x * ny + hg(y);
      gens.emplace_back(std::move(img));
    }
  }
  for (const auto &qg : q.generators()) {
    std::vector<int> img(ny * nx);
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y)
        img[x * ny + y] = qg(x) * ny + y;
    gens.emplace_back(std::move(img));
  }
  PermGroup grp = PermGroup::close_generators(std::move(gens), bound, ny * nx);
  if (u128(grp.order()) != predicted)
    throw Error("InternalError", "wreath closure disagrees with |H|^|X|*|Q|");
  return grp;
}

PermGroup direct_product_group(const PermGroup &h, const PermGroup &k,
                               std::uint64_t bound) {
  int nh = h.degree(), nk = k.degree();
  std::vector<Permutation> gens;
  for (const auto &g : h.generators()) {
    std::vector<int> img(nh + nk);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < nh; ++i)
      img[i] = g(i);
    gens.emplace_back(std::move(img));
  }
  for (const auto &g : k.generators()) {
    std::vector<int> img(nh + nk);
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < nk; ++i)
      img[nh + i] = nh + g(i);
    gens.emplace_back(std::move(img));
  }
  return PermGroup::close_generators(std::move(gens), bound, nh + nk);
}

} // namespace wrzeta
