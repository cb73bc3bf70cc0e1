// Finite groups as validated multiplication tables.

#ifndef REFHOM_FINITE_GROUP_HPP
#define REFHOM_FINITE_GROUP_HPP

#include <string>
#include <vector>

#include "refhom/errors.hpp"

namespace refhom {

struct FiniteGroup {
  int order = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;  // table[i][j] = index of g_i * g_j
  int identity = -1;
  std::vector<int> inverse;

  int mul(int a, int b) const { return table[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int inv(int a) const { return inverse[static_cast<size_t>(a)]; }

  /// Builds and fully checks a group from its Cayley table: closure,
  /// associativity, two-sided identity, two-sided inverses.
  static FiniteGroup from_table(std::vector<std::string> labels,
                                std::vector<std::vector<int>> table) {
    FiniteGroup g;
    g.order = static_cast<int>(table.size());
    if (g.order == 0) throw NotAGroup("empty table");
    if (labels.empty())
      for (int i = 0; i < g.order; ++i) labels.push_back("g" + std::to_string(i));
    if (static_cast<int>(labels.size()) != g.order) throw NotAGroup("label count mismatch");
    for (auto& row : table) {
      if (static_cast<int>(row.size()) != g.order) throw NotAGroup("table is not square");
      for (int v : row)
        if (v < 0 || v >= g.order) throw NotAGroup("table entry out of range (not closed)");
    }
    g.labels = std::move(labels);
    g.table = std::move(table);

    for (int a = 0; a < g.order; ++a)
      for (int b = 0; b < g.order; ++b)
        for (int c = 0; c < g.order; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw NotAGroup("associativity fails at (" + g.labels[a] + "," + g.labels[b] + "," +
                            g.labels[c] + ")");

    for (int e = 0; e < g.order; ++e) {
      bool ok = true;
      for (int a = 0; a < g.order && ok; ++a) ok = (g.mul(e, a) == a && g.mul(a, e) == a);
      if (ok) {
        g.identity = e;
        break;
      }
    }
    if (g.identity < 0) throw NotAGroup("no identity element");

    g.inverse.assign(static_cast<size_t>(g.order), -1);
    for (int a = 0; a < g.order; ++a) {
      for (int b = 0; b < g.order; ++b)
        if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
          g.inverse[static_cast<size_t>(a)] = b;
          break;
        }
      if (g.inverse[static_cast<size_t>(a)] < 0)
        throw NotAGroup("element " + g.labels[static_cast<size_t>(a)] + " has no inverse");
    }
    return g;
  }

  bool is_abelian() const {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }
};

inline FiniteGroup cyclic_group(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "e" : "z" + std::string(i == 1 ? "" : std::to_string(i)));
    for (int j = 0; j < n; ++j) table[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
  }
  return FiniteGroup::from_table(std::move(labels), std::move(table));
}

inline FiniteGroup klein_four_group() {
  std::vector<std::vector<int>> t = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return FiniteGroup::from_table({"e", "a", "b", "ab"}, std::move(t));
}

/// S3 as permutations of {0,1,2}; elements listed e, (01), (02), (12),
/// (012), (021) with composition "first then second" acting on the right.
inline FiniteGroup symmetric_group_3() {
  const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto compose = [&](int a, int b) {  // (a*b)(x) = b(a(x))
    int c[3];
    for (int x = 0; x < 3; ++x) c[x] = perms[b][perms[a][x]];
    for (int k = 0; k < 6; ++k)
      if (perms[k][0] == c[0] && perms[k][1] == c[1] && perms[k][2] == c[2]) return k;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = compose(a, b);
  return FiniteGroup::from_table({"e", "s01", "s02", "s12", "r", "r2"}, std::move(t));
}

}  // namespace refhom

#endif  // REFHOM_FINITE_GROUP_HPP
