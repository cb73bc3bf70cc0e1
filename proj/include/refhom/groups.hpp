// Reflexive sets attached to finite groups (cyclic-bar and bar models),
// linearization, conjugacy decompositions, signed Eilenberg-Mac Lane modules
// and the conjugacy-class decomposition check for group algebras.

#ifndef REFHOM_GROUPS_HPP
#define REFHOM_GROUPS_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "refhom/delta_r.hpp"

namespace refhom {

// ---------------------------------------------------------------------------
// finite reflexive sets
// ---------------------------------------------------------------------------

/// Levelwise finite simplicial set with involutions, all maps as index
/// functions.
struct FiniteReflexiveSet {
  Index max_level = 0;
  std::vector<Index> sizes;
  std::vector<std::vector<std::vector<int>>> face;   // face[n][i][x], n >= 1
  std::vector<std::vector<std::vector<int>>> degen;  // degen[n][j][x], n < max_level
  std::vector<std::vector<int>> invo;                // invo[n][x]
};

/// Index-level check of the simplicial and crossed-simplicial identities.
inline std::vector<std::string> validate_reflexive_set(const FiniteReflexiveSet& x) {
  std::vector<std::string> bad;
  auto note = [&](const std::string& s) {
    if (bad.size() < 32) bad.push_back(s);
  };
  const Index Q = x.max_level;
  auto D = [&](Index n, Index i, int v) { return x.face[static_cast<size_t>(n)][static_cast<size_t>(i)][static_cast<size_t>(v)]; };
  auto Sg = [&](Index n, Index j, int v) { return x.degen[static_cast<size_t>(n)][static_cast<size_t>(j)][static_cast<size_t>(v)]; };
  auto R = [&](Index n, int v) { return x.invo[static_cast<size_t>(n)][static_cast<size_t>(v)]; };

  for (Index n = 2; n <= Q; ++n)
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j <= n; ++j)
        for (int v = 0; v < x.sizes[static_cast<size_t>(n)]; ++v)
          if (D(n - 1, i, D(n, j, v)) != D(n - 1, j - 1, D(n, i, v)))
            note("face identity fails at level " + std::to_string(n));
  for (Index n = 0; n + 1 < Q; ++n)
    for (Index i = 0; i <= n; ++i)
      for (Index j = i; j <= n; ++j)
        for (int v = 0; v < x.sizes[static_cast<size_t>(n)]; ++v)
          if (Sg(n + 1, i, Sg(n, j, v)) != Sg(n + 1, j + 1, Sg(n, i, v)))
            note("degeneracy identity fails at level " + std::to_string(n));
  for (Index n = 0; n < Q; ++n)
    for (Index i = 0; i <= n + 1; ++i)
      for (Index j = 0; j <= n; ++j)
        for (int v = 0; v < x.sizes[static_cast<size_t>(n)]; ++v) {
          int got = D(n + 1, i, Sg(n, j, v));
          int want;
          if (i < j)
            want = Sg(n - 1, j - 1, D(n, i, v));
          else if (i == j || i == j + 1)
            want = v;
          else
            want = Sg(n - 1, j, D(n, i - 1, v));
          if (got != want) note("mixed identity fails at level " + std::to_string(n));
        }
  for (Index n = 0; n <= Q; ++n)
    for (int v = 0; v < x.sizes[static_cast<size_t>(n)]; ++v)
      if (R(n, R(n, v)) != v) note("r_n^2 != id at level " + std::to_string(n));
  for (Index n = 1; n <= Q; ++n)
    for (Index i = 0; i <= n; ++i)
      for (int v = 0; v < x.sizes[static_cast<size_t>(n)]; ++v)
        if (D(n, i, R(n, v)) != R(n - 1, D(n, n - i, v)))
          note("crossed face relation fails at level " + std::to_string(n));
  for (Index n = 0; n < Q; ++n)
    for (Index j = 0; j <= n; ++j)
      for (int v = 0; v < x.sizes[static_cast<size_t>(n)]; ++v)
        if (Sg(n, j, R(n, v)) != R(n + 1, Sg(n, n - j, v)))
          note("crossed degeneracy relation fails at level " + std::to_string(n));
  return bad;
}

namespace detail {

inline std::vector<int> decode_tuple(Index value, int order, Index len) {
  std::vector<int> t(static_cast<size_t>(len));
  for (Index k = len - 1; k >= 0; --k) {
    t[static_cast<size_t>(k)] = static_cast<int>(value % order);
    value /= order;
  }
  return t;
}

inline Index encode_tuple(const std::vector<int>& t, int order) {
  Index v = 0;
  for (int g : t) v = v * order + g;
  return v;
}

}  // namespace detail

/// The cyclic-bar reflexive set: level n is G^{n+1}, the last face wraps
/// (g_n g_0), degeneracies insert the identity, and
/// r_n(g_0,...,g_n) = (g_0^{-1}, g_n^{-1}, ..., g_1^{-1}).
inline FiniteReflexiveSet gamma_reflexive_set(const FiniteGroup& g, Index max_level) {
  FiniteReflexiveSet x;
  x.max_level = max_level;
  const int o = g.order;
  for (Index n = 0; n <= max_level; ++n) {
    Index size = 1;
    for (Index t = 0; t <= n; ++t) size *= o;
    x.sizes.push_back(size);
  }
  x.face.resize(static_cast<size_t>(max_level) + 1);
  x.degen.resize(static_cast<size_t>(max_level));
  x.invo.resize(static_cast<size_t>(max_level) + 1);
  for (Index n = 0; n <= max_level; ++n) {
    const Index size = x.sizes[static_cast<size_t>(n)];
    if (n >= 1) {
      x.face[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1,
                                            std::vector<int>(static_cast<size_t>(size)));
      for (Index v = 0; v < size; ++v) {
        std::vector<int> t = detail::decode_tuple(v, o, n + 1);
        for (Index i = 0; i <= n; ++i) {
          std::vector<int> u;
          if (i < n) {
            u = t;
            u[static_cast<size_t>(i)] = g.mul(t[static_cast<size_t>(i)], t[static_cast<size_t>(i + 1)]);
            u.erase(u.begin() + i + 1);
          } else {
            u.push_back(g.mul(t[static_cast<size_t>(n)], t[0]));
            for (Index k = 1; k < n; ++k) u.push_back(t[static_cast<size_t>(k)]);
          }
          x.face[static_cast<size_t>(n)][static_cast<size_t>(i)][static_cast<size_t>(v)] =
              static_cast<int>(detail::encode_tuple(u, o));
        }
      }
    }
    if (n < max_level) {
      x.degen[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1,
                                             std::vector<int>(static_cast<size_t>(size)));
      for (Index v = 0; v < size; ++v) {
        std::vector<int> t = detail::decode_tuple(v, o, n + 1);
        for (Index j = 0; j <= n; ++j) {
          std::vector<int> u = t;
          u.insert(u.begin() + j + 1, g.identity);
          x.degen[static_cast<size_t>(n)][static_cast<size_t>(j)][static_cast<size_t>(v)] =
              static_cast<int>(detail::encode_tuple(u, o));
        }
      }
    }
    x.invo[static_cast<size_t>(n)].resize(static_cast<size_t>(size));
    for (Index v = 0; v < size; ++v) {
      std::vector<int> t = detail::decode_tuple(v, o, n + 1);
      std::vector<int> u;
      u.push_back(g.inv(t[0]));
      for (Index k = n; k >= 1; --k) u.push_back(g.inv(t[static_cast<size_t>(k)]));
      x.invo[static_cast<size_t>(n)][static_cast<size_t>(v)] =
          static_cast<int>(detail::encode_tuple(u, o));
    }
  }
  return x;
}

/// The bar reflexive set: level n is G^n with the standard bar faces and
/// r_n(g_1,...,g_n) = (g_n^{-1},...,g_1^{-1}).
inline FiniteReflexiveSet bar_reflexive_set(const FiniteGroup& g, Index max_level) {
  FiniteReflexiveSet x;
  x.max_level = max_level;
  const int o = g.order;
  for (Index n = 0; n <= max_level; ++n) {
    Index size = 1;
    for (Index t = 0; t < n; ++t) size *= o;
    x.sizes.push_back(size);
  }
  x.face.resize(static_cast<size_t>(max_level) + 1);
  x.degen.resize(static_cast<size_t>(max_level));
  x.invo.resize(static_cast<size_t>(max_level) + 1);
  for (Index n = 0; n <= max_level; ++n) {
    const Index size = x.sizes[static_cast<size_t>(n)];
    if (n >= 1) {
      x.face[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1,
                                            std::vector<int>(static_cast<size_t>(size)));
      for (Index v = 0; v < size; ++v) {
        std::vector<int> t = detail::decode_tuple(v, o, n);
        for (Index i = 0; i <= n; ++i) {
          std::vector<int> u;
          if (i == 0) {
            u.assign(t.begin() + 1, t.end());
          } else if (i == n) {
            u.assign(t.begin(), t.end() - 1);
          } else {
            u = t;
            u[static_cast<size_t>(i - 1)] =
                g.mul(t[static_cast<size_t>(i - 1)], t[static_cast<size_t>(i)]);
            u.erase(u.begin() + i);
          }
          x.face[static_cast<size_t>(n)][static_cast<size_t>(i)][static_cast<size_t>(v)] =
              static_cast<int>(detail::encode_tuple(u, o));
        }
      }
    }
    if (n < max_level) {
      x.degen[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1,
                                             std::vector<int>(static_cast<size_t>(size)));
      for (Index v = 0; v < size; ++v) {
        std::vector<int> t = detail::decode_tuple(v, o, n);
        for (Index j = 0; j <= n; ++j) {
          std::vector<int> u = t;
          u.insert(u.begin() + j, g.identity);
          x.degen[static_cast<size_t>(n)][static_cast<size_t>(j)][static_cast<size_t>(v)] =
              static_cast<int>(detail::encode_tuple(u, o));
        }
      }
    }
    x.invo[static_cast<size_t>(n)].resize(static_cast<size_t>(size));
    for (Index v = 0; v < size; ++v) {
      std::vector<int> t = detail::decode_tuple(v, o, n);
      std::vector<int> u;
      for (Index k = n - 1; k >= 0; --k) u.push_back(g.inv(t[static_cast<size_t>(k)]));
      x.invo[static_cast<size_t>(n)][static_cast<size_t>(v)] =
          static_cast<int>(detail::encode_tuple(u, o));
    }
  }
  return x;
}

/// Free module on each level with the index maps as 0/1 matrices.
template <class S>
DeltaRModule<S> linearize(const FiniteReflexiveSet& x, const Ring& ring) {
  DeltaRModule<S> f;
  f.ring = ring;
  f.max_level = x.max_level;
  f.ranks = x.sizes;
  f.face.resize(static_cast<size_t>(x.max_level) + 1);
  f.degen.resize(static_cast<size_t>(x.max_level));
  f.invo.resize(static_cast<size_t>(x.max_level) + 1);
  S one = scalar_of<S>(ring, 1);
  auto perm = [&](const std::vector<int>& map, Index rows) {
    std::vector<Triplet<S>> trip;
    for (size_t v = 0; v < map.size(); ++v)
      trip.emplace_back(map[v], static_cast<Index>(v), one);
    SpMat<S> m(rows, static_cast<Index>(map.size()));
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
  };
  for (Index n = 0; n <= x.max_level; ++n) {
    if (n >= 1) {
      for (Index i = 0; i <= n; ++i)
        f.face[static_cast<size_t>(n)].push_back(
            perm(x.face[static_cast<size_t>(n)][static_cast<size_t>(i)], x.sizes[static_cast<size_t>(n - 1)]));
    }
    if (n < x.max_level) {
      for (Index j = 0; j <= n; ++j)
        f.degen[static_cast<size_t>(n)].push_back(
            perm(x.degen[static_cast<size_t>(n)][static_cast<size_t>(j)], x.sizes[static_cast<size_t>(n + 1)]));
    }
    f.invo[static_cast<size_t>(n)] = perm(x.invo[static_cast<size_t>(n)], x.sizes[static_cast<size_t>(n)]);
  }
  return f;
}

/// HR+ of the group: reflexive homology of the linearized bar construction.
template <class S>
std::vector<HomologyGroup> hr_group(const FiniteGroup& g, const Ring& ring, Index n_max) {
  return hr<S>(linearize<S>(bar_reflexive_set(g, n_max + 1), ring), n_max);
}

// ---------------------------------------------------------------------------
// conjugacy data
// ---------------------------------------------------------------------------

struct ConjugacyClass {
  int representative = 0;
  std::vector<int> members;
  std::vector<int> centralizer;
};

struct ConjugacyDecomposition {
  std::vector<ConjugacyClass> classes;
  std::vector<int> class_of;                     // element -> class index
  std::vector<std::vector<int>> inversion_orbits;  // groups of class indices
};

inline ConjugacyDecomposition conjugacy_data(const FiniteGroup& g) {
  ConjugacyDecomposition cd;
  cd.class_of.assign(static_cast<size_t>(g.order), -1);
  for (int z = 0; z < g.order; ++z) {
    if (cd.class_of[static_cast<size_t>(z)] >= 0) continue;
    ConjugacyClass c;
    c.representative = z;
    std::set<int> members;
    for (int h = 0; h < g.order; ++h) members.insert(g.mul(g.mul(g.inv(h), z), h));
    c.members.assign(members.begin(), members.end());
    for (int m : c.members) cd.class_of[static_cast<size_t>(m)] = static_cast<int>(cd.classes.size());
    for (int h = 0; h < g.order; ++h)
      if (g.mul(h, z) == g.mul(z, h)) c.centralizer.push_back(h);
    cd.classes.push_back(std::move(c));
  }
  std::vector<char> seen(cd.classes.size(), 0);
  for (size_t c = 0; c < cd.classes.size(); ++c) {
    if (seen[c]) continue;
    int inv_class = cd.class_of[static_cast<size_t>(g.inv(cd.classes[c].representative))];
    std::vector<int> orbit = {static_cast<int>(c)};
    seen[c] = 1;
    if (inv_class != static_cast<int>(c)) {
      orbit.push_back(inv_class);
      seen[static_cast<size_t>(inv_class)] = 1;
    }
    cd.inversion_orbits.push_back(std::move(orbit));
  }
  return cd;
}

// ---------------------------------------------------------------------------
// signed Eilenberg-Mac Lane reflexive modules
// ---------------------------------------------------------------------------

enum class EmCoefficients { Conjugation, Orbit, Trivial };

/// Bar-type module with twisted coefficients: level n = M (x) k[G^n] where M
/// is k[G] under conjugation (Conjugation), the span of an inversion-closed
/// union of conjugacy classes (Orbit), or k (Trivial).
///
/// The stored involution is the structure operator
///   h (x) [g_1..g_n]  ->  g^{-1} h^{-1} g (x) [g_n^{-1}..g_1^{-1}],
/// g = g_1...g_n, with NO sign: this is the strict crossed-simplicial
/// operator, and the (-1)^{n(n+1)/2} chain-level twist of the signed action
/// is reinstated by the bicomplex sign table inside hr (the signed operator
/// itself satisfies the crossed relations only up to (-1)^n and so cannot be
/// a structure map).
template <class S>
DeltaRModule<S> em_reflexive_module(const FiniteGroup& g, EmCoefficients kind,
                                    const std::vector<int>& orbit_elements, const Ring& ring,
                                    Index max_level) {
  // coefficient basis
  std::vector<int> coeff;  // group element per coefficient basis vector; {-1} = trivial
  if (kind == EmCoefficients::Conjugation) {
    for (int h = 0; h < g.order; ++h) coeff.push_back(h);
  } else if (kind == EmCoefficients::Trivial) {
    coeff = {-1};
  } else {
    coeff = orbit_elements;
    std::sort(coeff.begin(), coeff.end());
    std::set<int> in(coeff.begin(), coeff.end());
    for (int h : coeff) {
      if (!in.count(g.inv(h)))
        throw OrbitNotInversionClosed("class of " + g.labels[static_cast<size_t>(h)] +
                                      " requested without the class of its inverse");
      for (int x = 0; x < g.order; ++x)
        if (!in.count(g.mul(g.mul(g.inv(x), h), x)))
          throw std::invalid_argument("orbit coefficients not closed under conjugation");
    }
  }
  const int nc = static_cast<int>(coeff.size());
  std::vector<int> coeff_index(static_cast<size_t>(g.order), -1);
  if (kind != EmCoefficients::Trivial)
    for (int i = 0; i < nc; ++i) coeff_index[static_cast<size_t>(coeff[static_cast<size_t>(i)])] = i;

  auto act = [&](int ci, int by) {  // right conjugation action on the coefficient
    if (kind == EmCoefficients::Trivial) return 0;
    int h = coeff[static_cast<size_t>(ci)];
    return coeff_index[static_cast<size_t>(g.mul(g.mul(g.inv(by), h), by))];
  };
  auto invo_coeff = [&](int ci) {
    if (kind == EmCoefficients::Trivial) return 0;
    return coeff_index[static_cast<size_t>(g.inv(coeff[static_cast<size_t>(ci)]))];
  };

  const int o = g.order;
  DeltaRModule<S> f;
  f.ring = ring;
  f.max_level = max_level;
  for (Index n = 0; n <= max_level; ++n) {
    Index size = nc;
    for (Index t = 0; t < n; ++t) size *= o;
    f.ranks.push_back(size);
  }
  f.face.resize(static_cast<size_t>(max_level) + 1);
  f.degen.resize(static_cast<size_t>(max_level));
  f.invo.resize(static_cast<size_t>(max_level) + 1);
  S one = scalar_of<S>(ring, 1);

  auto decode = [&](Index v, Index n, int& ci, std::vector<int>& t) {
    Index w = 1;
    for (Index k = 0; k < n; ++k) w *= o;
    ci = static_cast<int>(v / w);
    t = detail::decode_tuple(v % w, o, n);
  };
  auto encode = [&](int ci, const std::vector<int>& t) {
    Index v = ci;
    for (int x : t) v = v * o + x;
    return v;
  };

  for (Index n = 0; n <= max_level; ++n) {
    const Index size = f.rank_at(n);
    int ci;
    std::vector<int> t;
    if (n >= 1) {
      f.face[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
      for (Index i = 0; i <= n; ++i) {
        std::vector<Triplet<S>> trip;
        for (Index v = 0; v < size; ++v) {
          decode(v, n, ci, t);
          int nci = ci;
          std::vector<int> u;
          if (i == 0) {
            nci = act(ci, t[0]);
            u.assign(t.begin() + 1, t.end());
          } else if (i == n) {
            u.assign(t.begin(), t.end() - 1);
          } else {
            u = t;
            u[static_cast<size_t>(i - 1)] = g.mul(t[static_cast<size_t>(i - 1)], t[static_cast<size_t>(i)]);
            u.erase(u.begin() + i);
          }
          trip.emplace_back(encode(nci, u), v, one);
        }
        SpMat<S> d(f.rank_at(n - 1), size);
        d.setFromTriplets(trip.begin(), trip.end());
        f.face[static_cast<size_t>(n)][static_cast<size_t>(i)] = std::move(d);
      }
    }
    if (n < max_level) {
      f.degen[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
      for (Index j = 0; j <= n; ++j) {
        std::vector<Triplet<S>> trip;
        for (Index v = 0; v < size; ++v) {
          decode(v, n, ci, t);
          std::vector<int> u = t;
          u.insert(u.begin() + j, g.identity);
          trip.emplace_back(encode(ci, u), v, one);
        }
        SpMat<S> s(f.rank_at(n + 1), size);
        s.setFromTriplets(trip.begin(), trip.end());
        f.degen[static_cast<size_t>(n)][static_cast<size_t>(j)] = std::move(s);
      }
    }
    {
      std::vector<Triplet<S>> trip;
      for (Index v = 0; v < size; ++v) {
        decode(v, n, ci, t);
        int prod = g.identity;
        for (int x : t) prod = g.mul(prod, x);
        int nci = act(invo_coeff(ci), prod);
        std::vector<int> u;
        for (Index k = n - 1; k >= 0; --k) u.push_back(g.inv(t[static_cast<size_t>(k)]));
        trip.emplace_back(encode(nci, u), v, one);
      }
      SpMat<S> r(size, size);
      r.setFromTriplets(trip.begin(), trip.end());
      f.invo[static_cast<size_t>(n)] = std::move(r);
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// decomposition check
// ---------------------------------------------------------------------------

struct DecompositionReport {
  bool full_conjugation_matches = false;  // hr(Loday k[G]) == hr(EM conjugation module)
  bool orbit_sum_matches = false;         // hr(Loday k[G]) == (+)_orbits hr(EM orbit module)
  bool rank_identity = false;             // EM conjugation level ranks are |G|^{n+1}
  bool identity_component_matches = false;         // <1>-component == HR+(G,k)
  bool abelian_shortcut_matches = false;           // |G| copies of HR+(G,k); abelian only
  bool abelian = false;
  std::vector<std::pair<int, bool>> central_order_two;  // (element, component == HR+(G,k))
  std::vector<HomologyGroup> lhs;                  // hr of the Loday module of k[G]
  std::vector<HomologyGroup> orbit_sum;
  std::vector<HomologyGroup> group_hr;             // hr_group(G)
  bool all_pass() const {
    bool ok = full_conjugation_matches && orbit_sum_matches && rank_identity &&
              identity_component_matches && (!abelian || abelian_shortcut_matches);
    for (auto& [z, m] : central_order_two) ok = ok && m;
    return ok;
  }
};

template <class S>
std::vector<HomologyGroup> direct_sum_lists(const std::vector<std::vector<HomologyGroup>>& parts) {
  std::vector<HomologyGroup> out = parts.at(0);
  for (size_t p = 1; p < parts.size(); ++p)
    for (size_t n = 0; n < out.size(); ++n) out[n] = direct_sum(out[n], parts[p][n]);
  return out;
}

/// Runs the conjugacy-class decomposition battery for k[G] up to degree n_max.
template <class S>
DecompositionReport decomposition_check(const FiniteGroup& g, const Ring& ring, Index n_max) {
  DecompositionReport rep;
  rep.abelian = g.is_abelian();
  InvolutiveAlgebra<S> kg = group_algebra<S>(g, ring);
  DeltaRModule<S> loday = loday_module<S>(kg, regular_bimodule<S>(kg), +1, n_max + 1);
  rep.lhs = hr<S>(loday, n_max);

  DeltaRModule<S> conj = em_reflexive_module<S>(g, EmCoefficients::Conjugation, {}, ring, n_max + 1);
  rep.rank_identity = true;
  for (Index n = 0; n <= n_max + 1; ++n) {
    Index want = 1;
    for (Index t = 0; t <= n; ++t) want *= g.order;
    if (conj.rank_at(n) != want) rep.rank_identity = false;
  }
  rep.full_conjugation_matches = (hr<S>(conj, n_max) == rep.lhs);

  ConjugacyDecomposition cd = conjugacy_data(g);
  std::vector<std::vector<HomologyGroup>> parts;
  for (const auto& orbit : cd.inversion_orbits) {
    std::vector<int> elements;
    for (int c : orbit)
      for (int m : cd.classes[static_cast<size_t>(c)].members) elements.push_back(m);
    DeltaRModule<S> em = em_reflexive_module<S>(g, EmCoefficients::Orbit, elements, ring, n_max + 1);
    parts.push_back(hr<S>(em, n_max));
  }
  rep.orbit_sum = direct_sum_lists<S>(parts);
  rep.orbit_sum_matches = (rep.orbit_sum == rep.lhs);

  rep.group_hr = hr_group<S>(g, ring, n_max);
  {
    std::vector<int> one = {g.identity};
    DeltaRModule<S> em1 = em_reflexive_module<S>(g, EmCoefficients::Orbit, one, ring, n_max + 1);
    rep.identity_component_matches = (hr<S>(em1, n_max) == rep.group_hr);
  }
  if (rep.abelian) {
    std::vector<std::vector<HomologyGroup>> copies(static_cast<size_t>(g.order), rep.group_hr);
    rep.abelian_shortcut_matches = (direct_sum_lists<S>(copies) == rep.lhs);
  }
  for (int z = 0; z < g.order; ++z) {
    if (z == g.identity || g.mul(z, z) != g.identity) continue;
    bool central = true;
    for (int h = 0; h < g.order && central; ++h) central = (g.mul(z, h) == g.mul(h, z));
    if (!central) continue;
    std::vector<int> orbit = {z};
    DeltaRModule<S> em = em_reflexive_module<S>(g, EmCoefficients::Orbit, orbit, ring, n_max + 1);
    rep.central_order_two.emplace_back(z, hr<S>(em, n_max) == rep.group_hr);
  }
  return rep;
}

}  // namespace refhom

#endif  // REFHOM_GROUPS_HPP
