// Independent reference computations for the test suite.  Everything here
// works on raw 0-based row vectors and std::next_permutation, sharing no
// code with the library beyond the LoopTable accessors.
#ifndef OSBORN_TESTS_ORACLES_HPP
#define OSBORN_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "osborn/loop_table.hpp"

namespace oracle {

using Rows = std::vector<std::vector<int>>;
using Map = std::vector<int>;

inline Rows rows_of(const osborn::LoopTable& L) {
  const int n = static_cast<int>(L.order());
  Rows r(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r[x][y] = static_cast<int>(L.multiply(x, y));
  return r;
}

inline Map identity_map(int n) {
  Map m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

inline void for_each_map(int n, const std::function<void(const Map&)>& f) {
  Map m = identity_map(n);
  do f(m);
  while (std::next_permutation(m.begin(), m.end()));
}

// Counts reduced Latin squares with identity 0 by filling one whole row at
// a time from permutations, rather than cell by cell.
inline std::size_t count_normalized(int n) {
  if (n <= 2) return 1;
  std::vector<Map> candidates;
  for_each_map(n, [&](const Map& m) { candidates.push_back(m); });
  std::vector<Map> rows(n);
  rows[0] = identity_map(n);
  std::size_t count = 0;
  std::function<void(int)> fill = [&](int r) {
    if (r == n) {
      ++count;
      return;
    }
    for (const auto& c : candidates) {
      if (c[0] != r) continue;
      bool ok = true;
      for (int q = 0; q < r && ok; ++q)
        for (int j = 0; j < n && ok; ++j) ok = rows[q][j] != c[j];
      if (!ok) continue;
      rows[r] = c;
      fill(r + 1);
    }
  };
  fill(1);
  return count;
}

// All triples (A, B, C) with xA * yB = (xy)C, by trying every (A, B).
inline std::set<std::vector<Map>> autotopisms(const Rows& t) {
  const int n = static_cast<int>(t.size());
  std::set<std::vector<Map>> out;
  for_each_map(n, [&](const Map& a) {
    for_each_map(n, [&](const Map& b) {
      Map c(n, -1);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const int v = t[a[x]][b[y]];
          int& slot = c[t[x][y]];
          if (slot == -1) slot = v;
          else if (slot != v) return;
        }
      out.insert({a, b, c});
    });
  });
  return out;
}

inline bool is_autotopism(const Rows& t, const Map& a, const Map& b, const Map& c) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t[a[x]][b[y]] != c[t[x][y]]) return false;
  return true;
}

inline Map inverse(const Map& m) {
  Map r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[m[i]] = static_cast<int>(i);
  return r;
}

struct Regular {
  std::set<Map> p, lambda, phi, psi;
};

// P, Lambda, Phi, Psi straight from their definitions over Sym(n) x Sym(n).
inline Regular regular(const Rows& t) {
  const int n = static_cast<int>(t.size());
  const Map id = identity_map(n);
  Regular r;
  for_each_map(n, [&](const Map& u) {
    if (is_autotopism(t, id, u, u)) r.p.insert(u);
    if (is_autotopism(t, u, id, u)) r.lambda.insert(u);
    for_each_map(n, [&](const Map& v) {
      if (is_autotopism(t, u, v, id)) {
        r.phi.insert(u);
        r.psi.insert(inverse(v));
      }
    });
  });
  return r;
}

inline bool osborn(const Rows& t) {
  const int n = static_cast<int>(t.size());
  auto ldiv = [&](int a, int b) {
    for (int z = 0; z < n; ++z)
      if (t[a][z] == b) return z;
    return -1;
  };
  for (int x = 0; x < n; ++x) {
    int xl = 0;
    while (t[xl][x] != 0) ++xl;
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[x][t[t[y][z]][x]] != t[ldiv(xl, y)][t[z][x]]) return false;
  }
  return true;
}

inline std::vector<int> nucleus(const Rows& t) {
  const int n = static_cast<int>(t.size());
  std::vector<int> out;
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y)
      for (int z = 0; z < n && ok; ++z)
        ok = t[s][t[y][z]] == t[t[s][y]][z] && t[t[z][y]][s] == t[z][t[y][s]] &&
             t[t[z][s]][y] == t[z][t[s][y]];
    if (ok) out.push_back(s);
  }
  return out;
}

// Holomorph table of (alpha, x) pairs; `group` holds images alpha[x].
inline Rows holomorph(const Rows& t, const std::vector<Map>& group) {
  const int n = static_cast<int>(t.size());
  const int g = static_cast<int>(group.size());
  auto index = [&](const Map& m) {
    return static_cast<int>(std::find(group.begin(), group.end(), m) - group.begin());
  };
  Rows h(g * n, std::vector<int>(g * n));
  for (int a = 0; a < g; ++a)
    for (int x = 0; x < n; ++x)
      for (int b = 0; b < g; ++b)
        for (int y = 0; y < n; ++y) {
          Map ab(n);
          for (int i = 0; i < n; ++i) ab[i] = group[b][group[a][i]];
          h[a * n + x][b * n + y] = index(ab) * n + t[group[b][x]][y];
        }
  return h;
}

}  // namespace oracle

#endif  // OSBORN_TESTS_ORACLES_HPP
