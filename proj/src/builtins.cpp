#include "wrzeta/builtins.hpp"

#include <array>
#include <numeric>

namespace wrzeta {

namespace {

Permutation cycle(int degree, const std::vector<int> &pts) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    img[pts[i]] = pts[(i + 1) % pts.size()];
  return Permutation(img);
}

} // namespace

PermGroup cyclic_group(int n) {
  if (n < 1)
    throw BadInput("cyclic group needs n >= 1");
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  return PermGroup::close_generators({cycle(n, pts)}, PermGroup::kDefaultBound,
                                     n);
}

PermGroup symmetric_group(int n) {
  if (n < 2)
    return cyclic_group(1);
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  return PermGroup::close_generators({cycle(n, {0, 1}), cycle(n, pts)});
}

PermGroup alternating_group(int n) {
  if (n < 3)
    return cyclic_group(1);
  std::vector<Permutation> gens{cycle(n, {0, 1, 2})};
  if (n > 3) {
    std::vector<int> pts;
    if (n % 2 == 1) {
      pts.resize(n);
      std::iota(pts.begin(), pts.end(), 0);
    } else {
      pts.resize(n - 1);
      std::iota(pts.begin(), pts.end(), 1);
    }
    gens.push_back(cycle(n, pts));
  }
  return PermGroup::close_generators(std::move(gens));
}

PermGroup dihedral_group(int n) {
  if (n < 3)
    throw BadInput("dihedral group needs n >= 3");
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i)
    img[i] = (n - i) % n; // reflection
  return PermGroup::close_generators({cycle(n, pts), Permutation(img)});
}

PermGroup psl2_f5_on6() {
  // Points 0..4 are the field values, point 5 is infinity.
  std::vector<int> shift(6), inv(6);
  for (int v = 0; v < 5; ++v)
    shift[v] = (v + 1) % 5;
  shift[5] = 5;
  // z -> -1/z: 0 <-> inf, v -> -(v^{-1}) mod 5
  inv[5] = 0;
  inv[0] = 5;
  for (int v = 1; v < 5; ++v) {
    int vinv = 1;
    for (int w = 1; w < 5; ++w)
      if (v * w % 5 == 1)
        vinv = w;
    inv[v] = (5 - vinv) % 5;
  }
  return PermGroup::close_generators({Permutation(shift), Permutation(inv)});
}

PermGroup pgl3_f2_on7() {
  // Projective points are the nonzero vectors of F_2^3, indexed 1..7 by
  // their binary value; the action is v -> M v.
  using Mat = std::array<std::array<int, 3>, 3>;
  auto act = [](const Mat &m) {
    std::vector<int> img(7);
    for (int v = 1; v < 8; ++v) {
      std::array<int, 3> x{v & 1, (v >> 1) & 1, (v >> 2) & 1};
      int w = 0;
      for (int r = 0; r < 3; ++r) {
        int bit = 0;
        for (int c = 0; c < 3; ++c)
          bit ^= m[r][c] & x[c];
        w |= bit << r;
      }
      img[v - 1] = w - 1;
    }
    return Permutation(img);
  };
  Mat transvection{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}};
  Mat rotation{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
  return PermGroup::close_generators({act(transvection), act(rotation)});
}

PermGroup builtin_group(const std::string &name) {
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'S' || name[0] == 'A' ||
                           name[0] == 'D')) {
    bool numeric = true;
    for (std::size_t i = 1; i < name.size(); ++i)
      numeric = numeric && name[i] >= '0' && name[i] <= '9';
    if (numeric) {
      int n = std::stoi(name.substr(1));
      switch (name[0]) {
      case 'C':
        return cyclic_group(n);
      case 'S':
        return symmetric_group(n);
      case 'A':
        return alternating_group(n);
      case 'D':
        return dihedral_group(n);
      }
    }
  }
  if (name == "PSL2_F5_on6")
    return psl2_f5_on6();
  if (name == "PGL3_F2_on7")
    return pgl3_f2_on7();
  throw BadInput("unknown builtin group: " + name);
}

std::vector<std::string> builtin_names() {
  return {"C2", "C3", "C4", "C5", "C6", "S3", "S4",          "S5",
          "A4", "A5", "A6", "D4", "D5", "D6", "PSL2_F5_on6", "PGL3_F2_on7"};
}

} // namespace wrzeta
