#include "osborn/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace osborn::catalog {

LoopTable cyclic(std::size_t n) {
  std::vector<Elem> cells(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) cells[x * n + y] = static_cast<Elem>((x + y) % n);
  return validate_loop_cells(n, std::move(cells));
}

LoopTable klein_four() {
  std::vector<Elem> cells(16);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) cells[x * 4 + y] = x ^ y;
  return validate_loop_cells(4, std::move(cells));
}

LoopTable from_permutation_group(std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  const std::size_t n = elements.size();
  std::vector<Elem> cells(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Perm p = elements[a] * elements[b];
      auto it = std::lower_bound(elements.begin(), elements.end(), p);
      if (it == elements.end() || *it != p)
        throw std::invalid_argument("permutation set is not closed");
      cells[a * n + b] = static_cast<Elem>(it - elements.begin());
    }
  return validate_loop_cells(n, std::move(cells));
}

LoopTable symmetric3() {
  std::vector<Perm> all;
  std::vector<Elem> image{0, 1, 2};
  do {
    all.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return from_permutation_group(std::move(all));
}

LoopTable dihedral4() {
  // Square vertices 0..3 in cyclic order.
  const Perm r({1, 2, 3, 0});
  const Perm s({0, 3, 2, 1});
  std::vector<Perm> all;
  Perm p = Perm::identity(4);
  for (int i = 0; i < 4; ++i) {
    all.push_back(p);
    all.push_back(p * s);
    p = p * r;
  }
  return from_permutation_group(std::move(all));
}

LoopTable quaternion() {
  // Index = 2 * unit + sign, unit in {1, i, j, k}, sign 1 means negated.
  static const int unit_product[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Elem> cells(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int sign = (a % 2) ^ (b % 2) ^ unit_sign[ua][ub];
      cells[a * 8 + b] = static_cast<Elem>(2 * unit_product[ua][ub] + sign);
    }
  return validate_loop_cells(8, std::move(cells));
}

std::vector<NamedLoop> group_suite() {
  std::vector<NamedLoop> out;
  for (std::size_t n = 2; n <= 8; ++n)
    out.push_back({"Z" + std::to_string(n), cyclic(n)});
  out.push_back({"Klein4", klein_four()});
  out.push_back({"S3", symmetric3()});
  out.push_back({"D4", dihedral4()});
  out.push_back({"Q8", quaternion()});
  return out;
}

}  // namespace osborn::catalog
