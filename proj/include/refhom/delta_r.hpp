// The reflexive engine: modules over the reflexive-simplicial index category
// (simplicial modules with compatible level involutions), the Loday and
// weight-graded tensor constructions, the periodic-row bicomplex, and the
// homology computations HR+/-, Hochschild and C2 (hyper)homology.

#ifndef REFHOM_DELTA_R_HPP
#define REFHOM_DELTA_R_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "refhom/complexes.hpp"
#include "refhom/involutive.hpp"

namespace refhom {

// ---------------------------------------------------------------------------
// reflexive modules
// ---------------------------------------------------------------------------

/// Levelwise free simplicial module with involutions R_n satisfying
///   R_n^2 = id,  d_i R_n = R_{n-1} d_{n-i},  s_j R_n = R_{n+1} s_{n-j}.
/// The structure operators are the plain (unsigned) ones; the alternating
/// chain-level signs live in the bicomplex sign table, not in the module.
template <class S>
struct DeltaRModule {
  Ring ring;
  Index max_level = 0;
  std::vector<Index> ranks;                  // level 0..max_level
  std::vector<std::vector<SpMat<S>>> face;   // face[n][i]: level n -> n-1, n >= 1
  std::vector<std::vector<SpMat<S>>> degen;  // degen[n][j]: level n -> n+1, n < max_level
  std::vector<SpMat<S>> invo;                // invo[n]: level n -> level n

  Index rank_at(Index n) const { return ranks[static_cast<size_t>(n)]; }

  /// Hochschild boundary b = sum_i (-1)^i d_i at level n (n >= 1).
  SpMat<S> boundary(Index n) const {
    SpMat<S> b = face[static_cast<size_t>(n)][0];
    for (Index i = 1; i <= n; ++i) {
      if (i % 2 == 1)
        b = b - face[static_cast<size_t>(n)][static_cast<size_t>(i)];
      else
        b = b + face[static_cast<size_t>(n)][static_cast<size_t>(i)];
    }
    return b.pruned(S(1), S(0));
  }
};

/// (-1)^{q(q+1)/2}: +1 for q = 0,3 mod 4, -1 for q = 1,2 mod 4.
inline int eta_sign(Index q) {
  Index m = q % 4;
  return (m == 0 || m == 3) ? +1 : -1;
}

/// Horizontal sign of the periodic-row bicomplex: -1 exactly when
/// (q = 0,3 mod 4 and p odd) or (q = 1,2 mod 4 and p even).
inline int epsilon_sign(Index p, Index q) {
  bool low = eta_sign(q) == +1;
  bool p_odd = (p % 2 == 1);
  return ((low && p_odd) || (!low && !p_odd)) ? -1 : +1;
}

/// Chain-level involution family T_n = (-1)^{n(n+1)/2} R_n; this is the
/// operator that commutes with the boundary and appears in the rows.
template <class S>
std::vector<SpMat<S>> chain_level_involutions(const DeltaRModule<S>& f) {
  std::vector<SpMat<S>> t;
  for (Index n = 0; n <= f.max_level; ++n) {
    SpMat<S> r = f.invo[static_cast<size_t>(n)];
    t.push_back(eta_sign(n) > 0 ? r : SpMat<S>(-r));
  }
  return t;
}

/// Checks every simplicial and crossed-simplicial identity on all stored
/// levels; report-valued.
template <class S>
std::vector<std::string> validate_delta_r_module(const DeltaRModule<S>& f) {
  std::vector<std::string> bad;
  const Index Q = f.max_level;
  auto note = [&](const std::string& s) {
    if (bad.size() < 64) bad.push_back(s);
  };

  if (static_cast<Index>(f.ranks.size()) != Q + 1 ||
      static_cast<Index>(f.face.size()) != Q + 1 ||
      static_cast<Index>(f.degen.size()) < Q ||
      static_cast<Index>(f.invo.size()) != Q + 1) {
    bad.push_back("shape: level data does not match max_level");
    return bad;
  }
  for (Index n = 1; n <= Q; ++n) {
    if (static_cast<Index>(f.face[static_cast<size_t>(n)].size()) != n + 1) {
      note("shape: face count at level " + std::to_string(n));
      return bad;
    }
    for (Index i = 0; i <= n; ++i) {
      const SpMat<S>& d = f.face[static_cast<size_t>(n)][static_cast<size_t>(i)];
      if (d.rows() != f.rank_at(n - 1) || d.cols() != f.rank_at(n)) {
        note("shape: face matrix at level " + std::to_string(n));
        return bad;
      }
    }
  }
  for (Index n = 0; n < Q; ++n) {
    if (static_cast<Index>(f.degen[static_cast<size_t>(n)].size()) != n + 1) {
      note("shape: degeneracy count at level " + std::to_string(n));
      return bad;
    }
    for (Index j = 0; j <= n; ++j) {
      const SpMat<S>& s = f.degen[static_cast<size_t>(n)][static_cast<size_t>(j)];
      if (s.rows() != f.rank_at(n + 1) || s.cols() != f.rank_at(n)) {
        note("shape: degeneracy matrix at level " + std::to_string(n));
        return bad;
      }
    }
  }
  for (Index n = 0; n <= Q; ++n) {
    const SpMat<S>& r = f.invo[static_cast<size_t>(n)];
    if (r.rows() != f.rank_at(n) || r.cols() != f.rank_at(n)) {
      note("shape: involution matrix at level " + std::to_string(n));
      return bad;
    }
  }

  auto D = [&](Index n, Index i) -> const SpMat<S>& {
    return f.face[static_cast<size_t>(n)][static_cast<size_t>(i)];
  };
  auto Sg = [&](Index n, Index j) -> const SpMat<S>& {
    return f.degen[static_cast<size_t>(n)][static_cast<size_t>(j)];
  };
  auto R = [&](Index n) -> const SpMat<S>& { return f.invo[static_cast<size_t>(n)]; };

  for (Index n = 2; n <= Q; ++n)
    for (Index i = 0; i <= n - 1; ++i)
      for (Index j = i + 1; j <= n; ++j)
        if (!matrices_equal<S>(SpMat<S>(D(n - 1, i) * D(n, j)), SpMat<S>(D(n - 1, j - 1) * D(n, i))))
          note("d_" + std::to_string(i) + " d_" + std::to_string(j) +
               " != d_" + std::to_string(j - 1) + " d_" + std::to_string(i) + " at level " +
               std::to_string(n));

  for (Index n = 0; n + 1 < Q; ++n)
    for (Index i = 0; i <= n; ++i)
      for (Index j = i; j <= n; ++j)
        if (!matrices_equal<S>(SpMat<S>(Sg(n + 1, i) * Sg(n, j)),
                               SpMat<S>(Sg(n + 1, j + 1) * Sg(n, i))))
          note("s_" + std::to_string(i) + " s_" + std::to_string(j) + " identity fails at level " +
               std::to_string(n));

  for (Index n = 0; n < Q; ++n)
    for (Index i = 0; i <= n + 1; ++i)
      for (Index j = 0; j <= n; ++j) {
        SpMat<S> lhs = D(n + 1, i) * Sg(n, j);
        SpMat<S> want;
        if (i < j)
          want = Sg(n - 1, j - 1) * D(n, i);
        else if (i == j || i == j + 1)
          want = sp_identity<S>(f.rank_at(n));
        else
          want = Sg(n - 1, j) * D(n, i - 1);
        if (!matrices_equal<S>(lhs, want))
          note("d_" + std::to_string(i) + " s_" + std::to_string(j) + " identity fails at level " +
               std::to_string(n));
      }

  for (Index n = 0; n <= Q; ++n)
    if (!matrices_equal<S>(SpMat<S>(R(n) * R(n)), sp_identity<S>(f.rank_at(n))))
      note("R_" + std::to_string(n) + "^2 != id");

  for (Index n = 1; n <= Q; ++n)
    for (Index i = 0; i <= n; ++i)
      if (!matrices_equal<S>(SpMat<S>(D(n, i) * R(n)), SpMat<S>(R(n - 1) * D(n, n - i))))
        note("d_" + std::to_string(i) + " R_" + std::to_string(n) + " != R d_" +
             std::to_string(n - i));

  for (Index n = 0; n < Q; ++n)
    for (Index j = 0; j <= n; ++j)
      if (!matrices_equal<S>(SpMat<S>(Sg(n, j) * R(n)), SpMat<S>(R(n + 1) * Sg(n, n - j))))
        note("s_" + std::to_string(j) + " R_" + std::to_string(n) + " != R s_" +
             std::to_string(n - j));

  return bad;
}

// ---------------------------------------------------------------------------
// Loday construction
// ---------------------------------------------------------------------------

namespace detail {

// expands a tensor product of coefficient vectors into (index, coeff) pairs
template <class S>
void tensor_support(const std::vector<const Vec<S>*>& vecs, size_t pos, Index index, S coeff,
                    std::vector<std::pair<Index, S>>& out) {
  if (pos == vecs.size()) {
    out.emplace_back(index, coeff);
    return;
  }
  const Vec<S>& v = *vecs[pos];
  for (Index k = 0; k < v.size(); ++k) {
    if (scalar_is_zero(v(k))) continue;
    tensor_support(vecs, pos + 1, index * v.size() + k, S(coeff * v(k)), out);
  }
}

}  // namespace detail

/// Loday module of an involutive algebra with involutive bimodule
/// coefficients: level n = M (x) A^{(x)n}, Hochschild faces, degeneracies
/// inserting the unit, and the order-reversing involution
///   m (x) a_1 (x) ... (x) a_n -> sign * ( mbar (x) abar_n (x) ... (x) abar_1 ).
template <class S>
DeltaRModule<S> loday_module(const InvolutiveAlgebra<S>& alg, const InvolutiveBimodule<S>& bim,
                             int sign, Index max_level) {
  const Index ra = alg.rank, rm = bim.rank;
  DeltaRModule<S> f;
  f.ring = alg.ring;
  f.max_level = max_level;
  for (Index n = 0; n <= max_level; ++n) {
    Index r = rm;
    for (Index t = 0; t < n; ++t) r *= ra;
    f.ranks.push_back(r);
  }
  f.face.resize(static_cast<size_t>(max_level) + 1);
  f.degen.resize(static_cast<size_t>(max_level));
  f.invo.resize(static_cast<size_t>(max_level) + 1);

  // decode column index into (m, a_1..a_n); m is the most significant digit
  auto decode = [&](Index col, Index n, Index& mi, std::vector<Index>& as) {
    as.resize(static_cast<size_t>(n));
    for (Index t = n - 1; t >= 0; --t) {
      as[static_cast<size_t>(t)] = col % ra;
      col /= ra;
    }
    mi = col;
  };
  auto encode_tail = [&](const std::vector<Index>& as, Index from, Index to) {
    Index v = 0;
    for (Index t = from; t < to; ++t) v = v * ra + as[static_cast<size_t>(t)];
    return v;
  };

  for (Index n = 0; n <= max_level; ++n) {
    const Index cols = f.rank_at(n);
    std::vector<Index> as;
    Index mi;

    if (n >= 1) {
      f.face[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
      for (Index i = 0; i <= n; ++i) {
        std::vector<Triplet<S>> trip;
        for (Index col = 0; col < cols; ++col) {
          decode(col, n, mi, as);
          if (i == 0) {
            const Vec<S>& ma = bim.right[static_cast<size_t>(mi)][static_cast<size_t>(as[0])];
            Index tail = encode_tail(as, 1, n);
            Index scale = 1;
            for (Index t = 1; t < n; ++t) scale *= ra;
            for (Index k = 0; k < rm; ++k)
              if (!scalar_is_zero(ma(k))) trip.emplace_back(k * scale + tail, col, ma(k));
          } else if (i == n) {
            const Vec<S>& am = bim.left[static_cast<size_t>(as[static_cast<size_t>(n - 1)])]
                                       [static_cast<size_t>(mi)];
            Index tail = encode_tail(as, 0, n - 1);
            Index scale = 1;
            for (Index t = 0; t < n - 1; ++t) scale *= ra;
            for (Index k = 0; k < rm; ++k)
              if (!scalar_is_zero(am(k))) trip.emplace_back(k * scale + tail, col, am(k));
          } else {
            const Vec<S>& prod = alg.mul[static_cast<size_t>(as[static_cast<size_t>(i - 1)])]
                                        [static_cast<size_t>(as[static_cast<size_t>(i)])];
            for (Index k = 0; k < ra; ++k) {
              if (scalar_is_zero(prod(k))) continue;
              Index row = mi;
              for (Index t = 0; t < n - 1; ++t) {
                Index digit;
                if (t < i - 1)
                  digit = as[static_cast<size_t>(t)];
                else if (t == i - 1)
                  digit = k;
                else
                  digit = as[static_cast<size_t>(t + 1)];
                row = row * ra + digit;
              }
              trip.emplace_back(row, col, prod(k));
            }
          }
        }
        SpMat<S> d(f.rank_at(n - 1), cols);
        d.setFromTriplets(trip.begin(), trip.end());
        f.face[static_cast<size_t>(n)][static_cast<size_t>(i)] = std::move(d);
      }
    }

    if (n < max_level) {
      f.degen[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
      for (Index j = 0; j <= n; ++j) {
        std::vector<Triplet<S>> trip;
        for (Index col = 0; col < cols; ++col) {
          decode(col, n, mi, as);
          for (Index k = 0; k < ra; ++k) {
            if (scalar_is_zero(alg.unit(k))) continue;
            Index row = mi;
            for (Index t = 0; t < n + 1; ++t) {
              Index digit;
              if (t < j)
                digit = as[static_cast<size_t>(t)];
              else if (t == j)
                digit = k;
              else
                digit = as[static_cast<size_t>(t - 1)];
              row = row * ra + digit;
            }
            trip.emplace_back(row, col, alg.unit(k));
          }
        }
        SpMat<S> s(f.rank_at(n + 1), cols);
        s.setFromTriplets(trip.begin(), trip.end());
        f.degen[static_cast<size_t>(n)][static_cast<size_t>(j)] = std::move(s);
      }
    }

    {
      std::vector<Triplet<S>> trip;
      Mat<S> tau = Mat<S>(bim.tau), sg = Mat<S>(alg.sigma);
      for (Index col = 0; col < cols; ++col) {
        decode(col, n, mi, as);
        std::vector<Vec<S>> factors;
        factors.reserve(static_cast<size_t>(n) + 1);
        factors.push_back(tau.col(mi));
        for (Index t = n - 1; t >= 0; --t) factors.push_back(sg.col(as[static_cast<size_t>(t)]));
        std::vector<const Vec<S>*> ptrs;
        for (auto& v : factors) ptrs.push_back(&v);
        std::vector<std::pair<Index, S>> support;
        detail::tensor_support<S>(ptrs, 0, 0, scalar_of<S>(alg.ring, sign), support);
        for (auto& [row, coeff] : support) trip.emplace_back(row, col, coeff);
      }
      SpMat<S> r(cols, cols);
      r.setFromTriplets(trip.begin(), trip.end());
      f.invo[static_cast<size_t>(n)] = std::move(r);
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// weight-graded tensor algebra levels
// ---------------------------------------------------------------------------

namespace detail {

inline void compositions_rec(int total, int parts, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    cur.push_back(first);
    compositions_rec(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

/// weak compositions of `total` into `parts` ordered parts, lexicographic
inline std::vector<std::vector<int>> weak_compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions_rec(total, parts, cur, out);
  return out;
}

}  // namespace detail

/// Weight-w graded piece of the Loday module of the tensor algebra TV:
/// level n is spanned by (composition of w into n+1 blocks, word of w
/// letters); faces concatenate blocks, degeneracies insert empty blocks and
/// the involution reverses block order and letters through the involution
/// of V.  Always the "plus" extension.
template <class S>
DeltaRModule<S> tensor_weight_module(Index v_rank, const Mat<S>& inv_v, int weight,
                                     Index max_level, const Ring& ring) {
  DeltaRModule<S> f;
  f.ring = ring;
  f.max_level = max_level;
  const int w = weight;
  Index words = 1;
  for (int t = 0; t < w; ++t) words *= v_rank;

  std::vector<std::vector<std::vector<int>>> comps(static_cast<size_t>(max_level) + 1);
  std::vector<std::map<std::vector<int>, Index>> comp_index(static_cast<size_t>(max_level) + 1);
  for (Index n = 0; n <= max_level; ++n) {
    comps[static_cast<size_t>(n)] = detail::weak_compositions(w, static_cast<int>(n) + 1);
    for (size_t c = 0; c < comps[static_cast<size_t>(n)].size(); ++c)
      comp_index[static_cast<size_t>(n)][comps[static_cast<size_t>(n)][c]] =
          static_cast<Index>(c);
    f.ranks.push_back(static_cast<Index>(comps[static_cast<size_t>(n)].size()) * words);
  }
  f.face.resize(static_cast<size_t>(max_level) + 1);
  f.degen.resize(static_cast<size_t>(max_level));
  f.invo.resize(static_cast<size_t>(max_level) + 1);

  auto decode_word = [&](Index wi, std::vector<Index>& letters) {
    letters.resize(static_cast<size_t>(w));
    for (int t = w - 1; t >= 0; --t) {
      letters[static_cast<size_t>(t)] = wi % v_rank;
      wi /= v_rank;
    }
  };
  auto encode_word = [&](const std::vector<Index>& letters) {
    Index v = 0;
    for (int t = 0; t < w; ++t) v = v * v_rank + letters[static_cast<size_t>(t)];
    return v;
  };

  for (Index n = 0; n <= max_level; ++n) {
    const auto& cs = comps[static_cast<size_t>(n)];
    const Index cols = f.rank_at(n);

    if (n >= 1) {
      f.face[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
      for (Index i = 0; i <= n; ++i) {
        std::vector<Triplet<S>> trip;
        for (Index col = 0; col < cols; ++col) {
          Index ci = col / words, wi = col % words;
          const std::vector<int>& c = cs[static_cast<size_t>(ci)];
          std::vector<int> nc;
          Index new_wi = wi;
          if (i < n) {
            // merge blocks i and i+1; letters in place
            nc.assign(c.begin(), c.end());
            nc[static_cast<size_t>(i)] += nc[static_cast<size_t>(i + 1)];
            nc.erase(nc.begin() + i + 1);
          } else {
            // last face: block n concatenates in front of block 0
            nc.clear();
            nc.push_back(c[static_cast<size_t>(n)] + c[0]);
            for (Index t = 1; t < n; ++t) nc.push_back(c[static_cast<size_t>(t)]);
            std::vector<Index> letters, nl;
            decode_word(wi, letters);
            int start_n = 0;
            for (Index t = 0; t < n; ++t) start_n += c[static_cast<size_t>(t)];
            for (int t = 0; t < c[static_cast<size_t>(n)]; ++t)
              nl.push_back(letters[static_cast<size_t>(start_n + t)]);
            for (int t = 0; t < start_n; ++t) nl.push_back(letters[static_cast<size_t>(t)]);
            new_wi = encode_word(nl);
          }
          Index row = comp_index[static_cast<size_t>(n - 1)].at(nc) * words + new_wi;
          trip.emplace_back(row, col, scalar_of<S>(ring, 1));
        }
        SpMat<S> d(f.rank_at(n - 1), cols);
        d.setFromTriplets(trip.begin(), trip.end());
        f.face[static_cast<size_t>(n)][static_cast<size_t>(i)] = std::move(d);
      }
    }

    if (n < max_level) {
      f.degen[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
      for (Index j = 0; j <= n; ++j) {
        std::vector<Triplet<S>> trip;
        for (Index col = 0; col < cols; ++col) {
          Index ci = col / words, wi = col % words;
          std::vector<int> nc = cs[static_cast<size_t>(ci)];
          nc.insert(nc.begin() + j + 1, 0);
          Index row = comp_index[static_cast<size_t>(n + 1)].at(nc) * words + wi;
          trip.emplace_back(row, col, scalar_of<S>(ring, 1));
        }
        SpMat<S> s(f.rank_at(n + 1), cols);
        s.setFromTriplets(trip.begin(), trip.end());
        f.degen[static_cast<size_t>(n)][static_cast<size_t>(j)] = std::move(s);
      }
    }

    {
      std::vector<Triplet<S>> trip;
      for (Index col = 0; col < cols; ++col) {
        Index ci = col / words, wi = col % words;
        const std::vector<int>& c = cs[static_cast<size_t>(ci)];
        // block order becomes (0, n, n-1, ..., 1); letters of each block are
        // reversed and sent through the involution of V
        std::vector<int> nc;
        nc.push_back(c[0]);
        for (Index t = n; t >= 1; --t) nc.push_back(c[static_cast<size_t>(t)]);
        std::vector<Index> letters;
        decode_word(wi, letters);
        std::vector<int> starts(static_cast<size_t>(n) + 1, 0);
        for (Index t = 1; t <= n; ++t)
          starts[static_cast<size_t>(t)] =
              starts[static_cast<size_t>(t - 1)] + c[static_cast<size_t>(t - 1)];
        std::vector<Index> order;  // source letter positions in target order
        auto push_block_reversed = [&](Index t) {
          for (int x = c[static_cast<size_t>(t)] - 1; x >= 0; --x)
            order.push_back(starts[static_cast<size_t>(t)] + x);
        };
        push_block_reversed(0);
        for (Index t = n; t >= 1; --t) push_block_reversed(t);
        // expand through the involution matrix letter by letter
        std::vector<std::pair<Index, S>> acc = {{Index(0), scalar_of<S>(ring, 1)}};
        for (int t = 0; t < w; ++t) {
          Index src = letters[static_cast<size_t>(order[static_cast<size_t>(t)])];
          std::vector<std::pair<Index, S>> next;
          for (auto& [pref, coeff] : acc)
            for (Index k = 0; k < v_rank; ++k)
              if (!scalar_is_zero(inv_v(k, src)))
                next.emplace_back(pref * v_rank + k, S(coeff * inv_v(k, src)));
          acc = std::move(next);
        }
        Index crow = comp_index[static_cast<size_t>(n)].at(nc) * words;
        for (auto& [word_row, coeff] : acc) trip.emplace_back(crow + word_row, col, coeff);
      }
      SpMat<S> r(cols, cols);
      r.setFromTriplets(trip.begin(), trip.end());
      f.invo[static_cast<size_t>(n)] = std::move(r);
    }
  }
  return f;
}

/// Reinterprets an integral reflexive module over another coefficient ring.
template <class S>
DeltaRModule<S> change_ring(const DeltaRModule<Int>& f, const Ring& ring) {
  DeltaRModule<S> out;
  out.ring = ring;
  out.max_level = f.max_level;
  out.ranks = f.ranks;
  auto conv = [&](const SpMat<Int>& m) {
    std::vector<Triplet<S>> trip;
    for (Index k = 0; k < m.outerSize(); ++k)
      for (typename SpMat<Int>::InnerIterator it(m, k); it; ++it) {
        S v = ScalarTraits<S>::from_fraction(ring, it.value(), Int(1));
        if (!scalar_is_zero(v)) trip.emplace_back(it.row(), it.col(), v);
      }
    SpMat<S> r(m.rows(), m.cols());
    r.setFromTriplets(trip.begin(), trip.end());
    return r;
  };
  out.face.resize(f.face.size());
  for (size_t n = 1; n < f.face.size(); ++n)
    for (auto& d : f.face[n]) out.face[n].push_back(conv(d));
  out.degen.resize(f.degen.size());
  for (size_t n = 0; n < f.degen.size(); ++n)
    for (auto& s : f.degen[n]) out.degen[n].push_back(conv(s));
  for (auto& r : f.invo) out.invo.push_back(conv(r));
  return out;
}

// ---------------------------------------------------------------------------
// the periodic-row bicomplex and HR
// ---------------------------------------------------------------------------

/// The computing bicomplex after evaluating the representable biresolution on
/// the module: cell (p, q) is level q, the horizontal differential is
/// 1 + epsilon(p, q) R_q straight from the sign table, the vertical one is
/// the Hochschild boundary.  Squares commute; verified at construction.
template <class S>
Bicomplex<S> reflexive_bicomplex(const DeltaRModule<S>& f, Index P, Index Q) {
  if (Q > f.max_level)
    throw std::invalid_argument("reflexive_bicomplex: module stores too few levels");
  std::vector<Index> ranks(static_cast<size_t>((P + 1) * (Q + 1)));
  std::vector<SpMat<S>> dh(ranks.size()), dv(ranks.size());
  // per-row data shared across p: boundary and the two horizontal variants
  std::vector<SpMat<S>> b(static_cast<size_t>(Q) + 1), h_plus(static_cast<size_t>(Q) + 1),
      h_minus(static_cast<size_t>(Q) + 1);
  for (Index q = 0; q <= Q; ++q) {
    SpMat<S> id = sp_identity_of<S>(f.rank_at(q), f.ring);
    h_plus[static_cast<size_t>(q)] = SpMat<S>(id + f.invo[static_cast<size_t>(q)]).pruned(S(1), S(0));
    h_minus[static_cast<size_t>(q)] =
        SpMat<S>(id - f.invo[static_cast<size_t>(q)]).pruned(S(1), S(0));
    if (q >= 1) b[static_cast<size_t>(q)] = f.boundary(q);
  }
  for (Index p = 0; p <= P; ++p)
    for (Index q = 0; q <= Q; ++q) {
      size_t i = static_cast<size_t>(p * (Q + 1) + q);
      ranks[i] = f.rank_at(q);
      if (p >= 1)
        dh[i] = (epsilon_sign(p, q) > 0) ? h_plus[static_cast<size_t>(q)]
                                         : h_minus[static_cast<size_t>(q)];
      if (q >= 1) dv[i] = b[static_cast<size_t>(q)];
    }
  return Bicomplex<S>(f.ring, P, Q, std::move(ranks), std::move(dh), std::move(dv));
}

/// Reflexive homology HR_n for n = 0..n_max via the truncated bicomplex;
/// truncation at P = Q = n_max+1 is exact in this range because both
/// differentials lower total degree by one.
template <class S>
std::vector<HomologyGroup> hr(const DeltaRModule<S>& f, Index n_max) {
  if (f.max_level < n_max + 1)
    throw std::invalid_argument("hr: module must store levels up to n_max+1");
  Bicomplex<S> b = reflexive_bicomplex<S>(f, n_max + 1, n_max + 1);
  ChainComplex<S> tot = total_complex<S>(b);
  return homology_range<S>(tot, 0, n_max);
}

/// Homology of the underlying Hochschild complex (involutions ignored).
template <class S>
std::vector<HomologyGroup> hochschild_homology(const DeltaRModule<S>& f, Index n_max) {
  if (f.max_level < n_max + 1)
    throw std::invalid_argument("hochschild_homology: module must store levels up to n_max+1");
  std::vector<Index> ranks;
  std::vector<SpMat<S>> diffs;
  for (Index n = 0; n <= n_max + 1; ++n) {
    ranks.push_back(f.rank_at(n));
    diffs.push_back(n == 0 ? SpMat<S>(0, f.rank_at(0)) : f.boundary(n));
  }
  ChainComplex<S> c(f.ring, std::move(ranks), std::move(diffs));
  return homology_range<S>(c, 0, n_max);
}

/// Group homology of C2 with coefficients in a module with involution T:
/// homology of ... -> N -(1+T)-> N -(1-T)-> N, so H_0 = coker(1 - T).
template <class S>
std::vector<HomologyGroup> c2_homology(Index n_rank, const SpMat<S>& t_op, Index n_max,
                                       const Ring& ring) {
  if (t_op.rows() != n_rank || t_op.cols() != n_rank)
    throw std::invalid_argument("c2_homology: operator shape mismatch");
  if (!matrices_equal<S>(SpMat<S>(t_op * t_op), sp_identity<S>(n_rank)))
    throw NotInvolution("T^2 != identity");
  SpMat<S> id = sp_identity_of<S>(n_rank, ring);
  SpMat<S> d_odd = SpMat<S>(id - t_op).pruned(S(1), S(0));
  SpMat<S> d_even = SpMat<S>(id + t_op).pruned(S(1), S(0));
  std::vector<Index> ranks(static_cast<size_t>(n_max) + 2, n_rank);
  std::vector<SpMat<S>> diffs;
  diffs.push_back(SpMat<S>(0, n_rank));
  for (Index k = 1; k <= n_max + 1; ++k) diffs.push_back(k % 2 == 1 ? d_odd : d_even);
  ChainComplex<S> c(ring, std::move(ranks), std::move(diffs));
  return homology_range<S>(c, 0, n_max);
}

template <class S>
std::vector<HomologyGroup> c2_homology(Index n_rank, const Mat<S>& t_op, Index n_max,
                                       const Ring& ring) {
  return c2_homology<S>(n_rank, to_sparse<S>(t_op), n_max, ring);
}

/// HR via the characteristic-zero quotient C/(1 - sign*T) of Prop.-2.4 type;
/// requires a field with 2 invertible.  Cross-checked against hr by the test
/// batteries.
template <class S>
std::vector<HomologyGroup> hr_quotient_method(const InvolutiveAlgebra<S>& alg,
                                              const InvolutiveBimodule<S>& bim, int sign,
                                              Index n_max) {
  if (!alg.ring.two_invertible())
    throw TwoNotInvertible("quotient method needs a field with 2 invertible");
  DeltaRModule<S> f = loday_module<S>(alg, bim, +1, n_max + 1);
  std::vector<Index> ranks;
  std::vector<SpMat<S>> diffs;
  for (Index n = 0; n <= n_max + 1; ++n) {
    ranks.push_back(f.rank_at(n));
    diffs.push_back(n == 0 ? SpMat<S>(0, f.rank_at(0)) : f.boundary(n));
  }
  ChainComplex<S> c(alg.ring, std::move(ranks), std::move(diffs));
  ChainComplex<S> q = quotient_by_involution<S>(c, chain_level_involutions<S>(f), sign);
  return homology_range<S>(q, 0, n_max);
}

/// Compares the homology of bicomplex row q against the C2 homology of level
/// q with the chain-level involution T_q = (-1)^{q(q+1)/2} R_q.
template <class S>
struct RowHomologyReport {
  Index q = 0;
  bool match = true;
  std::vector<HomologyGroup> row, c2;
};

template <class S>
RowHomologyReport<S> row_homology_check(const DeltaRModule<S>& f, Index q, Index p_max) {
  RowHomologyReport<S> rep;
  rep.q = q;
  const Index r = f.rank_at(q);
  SpMat<S> id = sp_identity_of<S>(r, f.ring);
  std::vector<Index> ranks(static_cast<size_t>(p_max) + 2, r);
  std::vector<SpMat<S>> diffs;
  diffs.push_back(SpMat<S>(0, r));
  for (Index p = 1; p <= p_max + 1; ++p) {
    S eps = S(epsilon_sign(p, q));
    diffs.push_back(SpMat<S>(id + eps * f.invo[static_cast<size_t>(q)]).pruned(S(1), S(0)));
  }
  ChainComplex<S> row(f.ring, std::move(ranks), std::move(diffs));
  rep.row = homology_range<S>(row, 0, p_max);
  SpMat<S> t = f.invo[static_cast<size_t>(q)];
  if (eta_sign(q) < 0) t = SpMat<S>(-t);
  rep.c2 = c2_homology<S>(r, t, p_max, f.ring);
  rep.match = (rep.row == rep.c2);
  return rep;
}

// ---------------------------------------------------------------------------
// reflexive chain complexes and hyperhomology
// ---------------------------------------------------------------------------

/// Chain complex of reflexive modules: one module per internal degree and
/// levelwise chain maps commuting with every structure operator.
template <class S>
struct ReflexiveChainComplex {
  std::vector<DeltaRModule<S>> modules;     // internal degree s = 0..S
  std::vector<std::vector<SpMat<S>>> maps;  // maps[s][q]: level q of degree s -> degree s-1 (s>=1)

  Index internal_degrees() const { return static_cast<Index>(modules.size()) - 1; }
};

template <class S>
std::vector<std::string> validate_reflexive_complex(const ReflexiveChainComplex<S>& fc) {
  std::vector<std::string> bad;
  const Index S_top = fc.internal_degrees();
  if (static_cast<Index>(fc.maps.size()) != S_top + 1)
    return {"shape: one map family per internal degree"};
  for (Index s = 0; s <= S_top; ++s) {
    auto v = validate_delta_r_module<S>(fc.modules[static_cast<size_t>(s)]);
    for (auto& m : v) bad.push_back("degree " + std::to_string(s) + ": " + m);
  }
  for (Index s = 1; s <= S_top && bad.empty(); ++s) {
    const auto& cur = fc.modules[static_cast<size_t>(s)];
    const auto& prev = fc.modules[static_cast<size_t>(s - 1)];
    const auto& u = fc.maps[static_cast<size_t>(s)];
    if (static_cast<Index>(u.size()) != cur.max_level + 1) {
      bad.push_back("shape: map family length at internal degree " + std::to_string(s));
      break;
    }
    for (Index q = 0; q <= cur.max_level; ++q) {
      if (u[static_cast<size_t>(q)].rows() != prev.rank_at(q) ||
          u[static_cast<size_t>(q)].cols() != cur.rank_at(q)) {
        bad.push_back("shape: chain map at (s=" + std::to_string(s) + ", q=" + std::to_string(q) +
                      ")");
        continue;
      }
      if (!matrices_equal<S>(SpMat<S>(u[static_cast<size_t>(q)] * cur.invo[static_cast<size_t>(q)]),
                             SpMat<S>(prev.invo[static_cast<size_t>(q)] * u[static_cast<size_t>(q)])))
        bad.push_back("chain map does not commute with R at (s=" + std::to_string(s) +
                      ", q=" + std::to_string(q) + ")");
      if (q >= 1)
        for (Index i = 0; i <= q; ++i)
          if (!matrices_equal<S>(
                  SpMat<S>(u[static_cast<size_t>(q - 1)] *
                           cur.face[static_cast<size_t>(q)][static_cast<size_t>(i)]),
                  SpMat<S>(prev.face[static_cast<size_t>(q)][static_cast<size_t>(i)] *
                           u[static_cast<size_t>(q)])))
            bad.push_back("chain map does not commute with d_" + std::to_string(i) + " at (s=" +
                          std::to_string(s) + ", q=" + std::to_string(q) + ")");
      if (q < cur.max_level)
        for (Index j = 0; j <= q; ++j)
          if (!matrices_equal<S>(
                  SpMat<S>(u[static_cast<size_t>(q + 1)] *
                           cur.degen[static_cast<size_t>(q)][static_cast<size_t>(j)]),
                  SpMat<S>(prev.degen[static_cast<size_t>(q)][static_cast<size_t>(j)] *
                           u[static_cast<size_t>(q)])))
            bad.push_back("chain map does not commute with s_" + std::to_string(j) + " at (s=" +
                          std::to_string(s) + ", q=" + std::to_string(q) + ")");
    }
  }
  for (Index s = 2; s <= S_top && bad.empty(); ++s)
    for (Index q = 0; q <= fc.modules[static_cast<size_t>(s)].max_level; ++q)
      if (!is_zero_matrix<S>(SpMat<S>(fc.maps[static_cast<size_t>(s - 1)][static_cast<size_t>(q)] *
                                      fc.maps[static_cast<size_t>(s)][static_cast<size_t>(q)])))
        bad.push_back("internal differential fails d*d = 0 at (s=" + std::to_string(s) +
                      ", q=" + std::to_string(q) + ")");
  return bad;
}

/// Reflexive hyperhomology of a chain complex of reflexive modules via the
/// tricomplex (resolution direction, simplicial level, internal degree).
template <class S>
std::vector<HomologyGroup> hyper_hr(const ReflexiveChainComplex<S>& fc, Index n_max) {
  if (fc.modules.empty()) throw std::invalid_argument("hyper_hr: empty complex");
  const Ring ring = fc.modules[0].ring;
  const Index P = n_max + 1, Q = n_max + 1;
  const Index S_top = std::min<Index>(fc.internal_degrees(), n_max + 1);
  for (Index s = 0; s <= S_top; ++s)
    if (fc.modules[static_cast<size_t>(s)].max_level < Q)
      throw std::invalid_argument("hyper_hr: modules must store levels up to n_max+1");

  const size_t cells = static_cast<size_t>((P + 1) * (Q + 1) * (S_top + 1));
  std::vector<Index> ranks(cells, 0);
  std::vector<SpMat<S>> d1(cells), d2(cells), d3(cells);
  auto idx = [&](Index p, Index q, Index s) {
    return static_cast<size_t>((p * (Q + 1) + q) * (S_top + 1) + s);
  };
  for (Index s = 0; s <= S_top; ++s) {
    const DeltaRModule<S>& f = fc.modules[static_cast<size_t>(s)];
    std::vector<SpMat<S>> b(static_cast<size_t>(Q) + 1), hp(static_cast<size_t>(Q) + 1),
        hm(static_cast<size_t>(Q) + 1);
    for (Index q = 0; q <= Q; ++q) {
      SpMat<S> id = sp_identity_of<S>(f.rank_at(q), f.ring);
      hp[static_cast<size_t>(q)] = SpMat<S>(id + f.invo[static_cast<size_t>(q)]).pruned(S(1), S(0));
      hm[static_cast<size_t>(q)] = SpMat<S>(id - f.invo[static_cast<size_t>(q)]).pruned(S(1), S(0));
      if (q >= 1) b[static_cast<size_t>(q)] = f.boundary(q);
    }
    for (Index p = 0; p <= P; ++p)
      for (Index q = 0; q <= Q; ++q) {
        ranks[idx(p, q, s)] = f.rank_at(q);
        if (p >= 1)
          d1[idx(p, q, s)] = (epsilon_sign(p, q) > 0) ? hp[static_cast<size_t>(q)]
                                                      : hm[static_cast<size_t>(q)];
        if (q >= 1) d2[idx(p, q, s)] = b[static_cast<size_t>(q)];
        if (s >= 1) d3[idx(p, q, s)] = fc.maps[static_cast<size_t>(s)][static_cast<size_t>(q)];
      }
  }
  Tricomplex<S> t(ring, P, Q, S_top, std::move(ranks), std::move(d1), std::move(d2), std::move(d3));
  ChainComplex<S> tot = total_complex_3<S>(t);
  return homology_range<S>(tot, 0, n_max);
}

}  // namespace refhom

#endif  // REFHOM_DELTA_R_HPP
