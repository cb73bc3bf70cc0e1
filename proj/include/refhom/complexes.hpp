// Chain complexes, bicomplexes and tricomplexes of free modules over a finite
// degree window, with totalization, homology ranges and involution quotients.
//
// Every constructor verifies its square-zero / commutation conditions; invalid
// differential data is rejected at construction, never silently accepted.

#ifndef REFHOM_COMPLEXES_HPP
#define REFHOM_COMPLEXES_HPP

#include <optional>
#include <string>
#include <vector>

#include "refhom/exact_linalg.hpp"

namespace refhom {

// ---------------------------------------------------------------------------
// chain complexes
// ---------------------------------------------------------------------------

/// Non-negatively graded chain complex on degrees [0, N].
/// diff(n) maps degree n to degree n-1; diff(0) is the empty map out of
/// degree 0, kept so that degree-0 homology needs no special case.
template <class S>
struct ChainComplex {
  Ring ring;
  std::vector<Index> ranks;
  std::vector<SpMat<S>> diffs;

  ChainComplex(Ring r, std::vector<Index> rk, std::vector<SpMat<S>> d)
      : ring(r), ranks(std::move(rk)), diffs(std::move(d)) {
    const size_t n = ranks.size();
    if (diffs.size() != n) throw std::invalid_argument("ChainComplex: one differential per degree");
    if (diffs[0].size() == 0) diffs[0] = SpMat<S>(0, ranks[0]);
    for (size_t k = 0; k < n; ++k) {
      Index want_rows = (k == 0) ? 0 : ranks[k - 1];
      if (diffs[k].rows() != want_rows || diffs[k].cols() != ranks[k])
        throw std::invalid_argument("ChainComplex: differential shape mismatch at degree " +
                                    std::to_string(k));
    }
    for (size_t k = 0; k + 1 < n; ++k)
      if (!is_zero_matrix<S>(SpMat<S>(diffs[k] * diffs[k + 1])))
        throw SquareZeroViolation("chain differential fails d*d = 0 at degree " +
                                  std::to_string(k + 1));
  }

  Index top_degree() const { return static_cast<Index>(ranks.size()) - 1; }
  Index rank_at(Index n) const {
    return (n >= 0 && n <= top_degree()) ? ranks[static_cast<size_t>(n)] : 0;
  }
  const SpMat<S>& diff(Index n) const { return diffs[static_cast<size_t>(n)]; }
};

/// H_n for n in [n_min, n_max]; the complex must store degrees to n_max+1.
template <class S>
std::vector<HomologyGroup> homology_range(const ChainComplex<S>& c, Index n_min, Index n_max) {
  if (n_max + 1 > c.top_degree())
    throw std::invalid_argument("homology_range: complex too short for requested range");
  std::vector<HomologyGroup> out;
  if constexpr (ScalarTraits<S>::is_field) {
    // only ranks of the differentials enter; compute each once
    std::vector<Index> r(static_cast<size_t>(n_max) + 2, 0);
    for (Index n = n_min; n <= n_max + 1; ++n)
      r[static_cast<size_t>(n)] = rank_field<S>(to_dense(c.diff(n)));
    for (Index n = n_min; n <= n_max; ++n)
      out.push_back(HomologyGroup{
          c.ring, c.rank_at(n) - r[static_cast<size_t>(n)] - r[static_cast<size_t>(n + 1)], {}});
  } else {
    for (Index n = n_min; n <= n_max; ++n)
      out.push_back(homology_of_pair<S>(c.diff(n), c.diff(n + 1), c.ring));
  }
  return out;
}

// ---------------------------------------------------------------------------
// bicomplexes
// ---------------------------------------------------------------------------

/// Bicomplex on [0,P] x [0,Q].  d_h lowers p, d_v lowers q; rows and columns
/// are complexes and all squares commute or anticommute uniformly (stored in
/// squares_commute, determined and verified at construction).
template <class S>
struct Bicomplex {
  Ring ring;
  Index P, Q;
  std::vector<Index> ranks;     // indexed by idx(p, q)
  std::vector<SpMat<S>> d_h;    // (p,q) -> (p-1,q), p >= 1
  std::vector<SpMat<S>> d_v;    // (p,q) -> (p,q-1), q >= 1
  bool squares_commute = true;

  size_t idx(Index p, Index q) const { return static_cast<size_t>(p * (Q + 1) + q); }
  Index rank_at(Index p, Index q) const {
    return (p >= 0 && p <= P && q >= 0 && q <= Q) ? ranks[idx(p, q)] : 0;
  }
  const SpMat<S>& dh(Index p, Index q) const { return d_h[idx(p, q)]; }
  const SpMat<S>& dv(Index p, Index q) const { return d_v[idx(p, q)]; }

  Bicomplex(Ring r, Index p_max, Index q_max, std::vector<Index> rk, std::vector<SpMat<S>> dh_,
            std::vector<SpMat<S>> dv_)
      : ring(r), P(p_max), Q(q_max), ranks(std::move(rk)), d_h(std::move(dh_)), d_v(std::move(dv_)) {
    const size_t cells = static_cast<size_t>((P + 1) * (Q + 1));
    if (ranks.size() != cells || d_h.size() != cells || d_v.size() != cells)
      throw std::invalid_argument("Bicomplex: cell count mismatch");
    for (Index p = 0; p <= P; ++p)
      for (Index q = 0; q <= Q; ++q) {
        if (p >= 1 && (dh(p, q).rows() != rank_at(p - 1, q) || dh(p, q).cols() != rank_at(p, q)))
          throw std::invalid_argument("Bicomplex: d_h shape mismatch");
        if (q >= 1 && (dv(p, q).rows() != rank_at(p, q - 1) || dv(p, q).cols() != rank_at(p, q)))
          throw std::invalid_argument("Bicomplex: d_v shape mismatch");
      }
    // rows and columns square to zero
    for (Index q = 0; q <= Q; ++q)
      for (Index p = 2; p <= P; ++p)
        if (!is_zero_matrix<S>(SpMat<S>(dh(p - 1, q) * dh(p, q))))
          throw SquareZeroViolation("bicomplex row fails d_h*d_h = 0");
    for (Index p = 0; p <= P; ++p)
      for (Index q = 2; q <= Q; ++q)
        if (!is_zero_matrix<S>(SpMat<S>(dv(p, q - 1) * dv(p, q))))
          throw SquareZeroViolation("bicomplex column fails d_v*d_v = 0");
    // uniform commutation: d_v d_h = s * d_h d_v with one global s
    std::optional<int> sign;
    for (Index p = 1; p <= P; ++p)
      for (Index q = 1; q <= Q; ++q) {
        SpMat<S> a = dv(p - 1, q) * dh(p, q);
        SpMat<S> b = dh(p, q - 1) * dv(p, q);
        bool comm = matrices_equal<S>(a, b);
        bool anti = matrices_equal<S>(a, SpMat<S>(-b));
        if (comm && anti) continue;  // both sides zero, no constraint
        if (comm) {
          if (sign && *sign != +1) throw SquareZeroViolation("bicomplex squares not uniform");
          sign = +1;
        } else if (anti) {
          if (sign && *sign != -1) throw SquareZeroViolation("bicomplex squares not uniform");
          sign = -1;
        } else {
          throw SquareZeroViolation("bicomplex square neither commutes nor anticommutes");
        }
      }
    squares_commute = !sign || *sign == +1;
  }
};

/// Totalization Tot_n = (+)_{p+q=n} B_{p,q}, summands ordered by increasing p.
/// When squares commute the vertical differential on the (p,q) summand is
/// twisted by (-1)^p; when they anticommute no twist is applied.
template <class S>
ChainComplex<S> total_complex(const Bicomplex<S>& b) {
  const Index N = b.P + b.Q;
  std::vector<Index> tot_ranks(static_cast<size_t>(N) + 1, 0);
  // offsets[n][p - p_min(n)] = column offset of block (p, n-p)
  std::vector<std::vector<Index>> offsets(static_cast<size_t>(N) + 1);
  for (Index n = 0; n <= N; ++n) {
    Index off = 0;
    for (Index p = std::max<Index>(0, n - b.Q); p <= std::min(n, b.P); ++p) {
      offsets[static_cast<size_t>(n)].push_back(off);
      off += b.rank_at(p, n - p);
    }
    tot_ranks[static_cast<size_t>(n)] = off;
  }
  auto block_offset = [&](Index n, Index p) {
    Index p_min = std::max<Index>(0, n - b.Q);
    return offsets[static_cast<size_t>(n)][static_cast<size_t>(p - p_min)];
  };

  std::vector<SpMat<S>> diffs(static_cast<size_t>(N) + 1);
  diffs[0] = SpMat<S>(0, tot_ranks[0]);
  for (Index n = 1; n <= N; ++n) {
    BlockBuilder<S> bb(tot_ranks[static_cast<size_t>(n - 1)], tot_ranks[static_cast<size_t>(n)]);
    for (Index p = std::max<Index>(0, n - b.Q); p <= std::min(n, b.P); ++p) {
      Index q = n - p;
      Index col = block_offset(n, p);
      if (p >= 1) bb.add(block_offset(n - 1, p - 1), col, b.dh(p, q));
      if (q >= 1) {
        S scale = (b.squares_commute && (p % 2 == 1)) ? S(-1) : S(1);
        bb.add(block_offset(n - 1, p), col, b.dv(p, q), scale);
      }
    }
    diffs[static_cast<size_t>(n)] = bb.build();
  }
  try {
    return ChainComplex<S>(b.ring, std::move(tot_ranks), std::move(diffs));
  } catch (const SquareZeroViolation&) {
    throw SquareZeroViolation("total complex differential fails d*d = 0");
  }
}

// ---------------------------------------------------------------------------
// tricomplexes
// ---------------------------------------------------------------------------

/// Three commuting (or uniformly anticommuting, per pair) square-zero
/// differential families on [0,P] x [0,Q] x [0,R3].
template <class S>
struct Tricomplex {
  Ring ring;
  Index P, Q, R3;
  std::vector<Index> ranks;
  std::vector<SpMat<S>> d1, d2, d3;  // lower p, q, s respectively
  bool commute12 = true, commute13 = true, commute23 = true;

  size_t idx(Index p, Index q, Index s) const {
    return static_cast<size_t>((p * (Q + 1) + q) * (R3 + 1) + s);
  }
  Index rank_at(Index p, Index q, Index s) const {
    return (p >= 0 && p <= P && q >= 0 && q <= Q && s >= 0 && s <= R3) ? ranks[idx(p, q, s)] : 0;
  }

  Tricomplex(Ring r, Index pm, Index qm, Index sm, std::vector<Index> rk,
             std::vector<SpMat<S>> f1, std::vector<SpMat<S>> f2, std::vector<SpMat<S>> f3)
      : ring(r), P(pm), Q(qm), R3(sm), ranks(std::move(rk)), d1(std::move(f1)), d2(std::move(f2)),
        d3(std::move(f3)) {
    const size_t cells = static_cast<size_t>((P + 1) * (Q + 1) * (R3 + 1));
    if (ranks.size() != cells || d1.size() != cells || d2.size() != cells || d3.size() != cells)
      throw std::invalid_argument("Tricomplex: cell count mismatch");

    auto check_family = [&](const std::vector<SpMat<S>>& d, int axis) {
      for (Index p = 0; p <= P; ++p)
        for (Index q = 0; q <= Q; ++q)
          for (Index s = 0; s <= R3; ++s) {
            Index tp = p - (axis == 1), tq = q - (axis == 2), ts = s - (axis == 3);
            if (tp < 0 || tq < 0 || ts < 0) continue;
            const SpMat<S>& m = d[idx(p, q, s)];
            if (m.rows() != rank_at(tp, tq, ts) || m.cols() != rank_at(p, q, s))
              throw std::invalid_argument("Tricomplex: differential shape mismatch");
            Index up = tp - (axis == 1), uq = tq - (axis == 2), us = ts - (axis == 3);
            if (up >= 0 && uq >= 0 && us >= 0)
              if (!is_zero_matrix<S>(SpMat<S>(d[idx(tp, tq, ts)] * m)))
                throw SquareZeroViolation("tricomplex family fails d*d = 0");
          }
    };
    check_family(d1, 1);
    check_family(d2, 2);
    check_family(d3, 3);

    auto pair_flag = [&](const std::vector<SpMat<S>>& da, int axa, const std::vector<SpMat<S>>& db,
                         int axb) {
      std::optional<int> sign;
      for (Index p = (axa == 1 || axb == 1) ? 1 : 0; p <= P; ++p)
        for (Index q = (axa == 2 || axb == 2) ? 1 : 0; q <= Q; ++q)
          for (Index s = (axa == 3 || axb == 3) ? 1 : 0; s <= R3; ++s) {
            Index ap = p - (axa == 1), aq = q - (axa == 2), as = s - (axa == 3);
            Index bp = p - (axb == 1), bq = q - (axb == 2), bs = s - (axb == 3);
            SpMat<S> ab = db[idx(ap, aq, as)] * da[idx(p, q, s)];
            SpMat<S> ba = da[idx(bp, bq, bs)] * db[idx(p, q, s)];
            bool comm = matrices_equal<S>(ab, ba);
            bool anti = matrices_equal<S>(ab, SpMat<S>(-ba));
            if (comm && anti) continue;
            if (comm) {
              if (sign && *sign != +1) throw SquareZeroViolation("tricomplex pair not uniform");
              sign = +1;
            } else if (anti) {
              if (sign && *sign != -1) throw SquareZeroViolation("tricomplex pair not uniform");
              sign = -1;
            } else {
              throw SquareZeroViolation("tricomplex pair neither commutes nor anticommutes");
            }
          }
      return !sign || *sign == +1;
    };
    commute12 = pair_flag(d1, 1, d2, 2);
    commute13 = pair_flag(d1, 1, d3, 3);
    commute23 = pair_flag(d2, 2, d3, 3);
  }
};

/// Three-way totalization.  With all pairs commuting the twists are (-1)^p on
/// the second family and (-1)^{p+q} on the third; a pair that already
/// anticommutes drops its part of the twist.
template <class S>
ChainComplex<S> total_complex_3(const Tricomplex<S>& t) {
  const Index N = t.P + t.Q + t.R3;
  std::vector<Index> tot_ranks(static_cast<size_t>(N) + 1, 0);
  // cell offset of (p,q,s) inside Tot_{p+q+s}: lexicographic by (p, q)
  std::vector<std::vector<Index>> offsets(static_cast<size_t>(N) + 1);
  auto cell_pos = [&](Index n, Index p, Index q) {
    // linear position of (p, q) among cells with p+q+s = n (s determined)
    Index pos = 0;
    for (Index pp = 0; pp <= t.P; ++pp)
      for (Index qq = 0; qq <= t.Q; ++qq) {
        Index ss = n - pp - qq;
        if (ss < 0 || ss > t.R3) continue;
        if (pp == p && qq == q) return pos;
        ++pos;
      }
    return Index(-1);
  };
  for (Index n = 0; n <= N; ++n) {
    Index off = 0;
    for (Index p = 0; p <= t.P; ++p)
      for (Index q = 0; q <= t.Q; ++q) {
        Index s = n - p - q;
        if (s < 0 || s > t.R3) continue;
        offsets[static_cast<size_t>(n)].push_back(off);
        off += t.rank_at(p, q, s);
      }
    tot_ranks[static_cast<size_t>(n)] = off;
  }
  auto block_offset = [&](Index n, Index p, Index q) {
    return offsets[static_cast<size_t>(n)][static_cast<size_t>(cell_pos(n, p, q))];
  };

  std::vector<SpMat<S>> diffs(static_cast<size_t>(N) + 1);
  diffs[0] = SpMat<S>(0, tot_ranks[0]);
  for (Index n = 1; n <= N; ++n) {
    BlockBuilder<S> bb(tot_ranks[static_cast<size_t>(n - 1)], tot_ranks[static_cast<size_t>(n)]);
    for (Index p = 0; p <= t.P; ++p)
      for (Index q = 0; q <= t.Q; ++q) {
        Index s = n - p - q;
        if (s < 0 || s > t.R3) continue;
        Index col = block_offset(n, p, q);
        if (p >= 1) bb.add(block_offset(n - 1, p - 1, q), col, t.d1[t.idx(p, q, s)]);
        if (q >= 1) {
          S scale = (t.commute12 && (p % 2 == 1)) ? S(-1) : S(1);
          bb.add(block_offset(n - 1, p, q - 1), col, t.d2[t.idx(p, q, s)], scale);
        }
        if (s >= 1) {
          int parity = (t.commute13 ? p : 0) + (t.commute23 ? q : 0);
          S scale = (parity % 2 == 1) ? S(-1) : S(1);
          bb.add(block_offset(n - 1, p, q), col, t.d3[t.idx(p, q, s)], scale);
        }
      }
    diffs[static_cast<size_t>(n)] = bb.build();
  }
  try {
    return ChainComplex<S>(t.ring, std::move(tot_ranks), std::move(diffs));
  } catch (const SquareZeroViolation&) {
    throw SquareZeroViolation("tricomplex totalization fails d*d = 0");
  }
}

// ---------------------------------------------------------------------------
// involution quotients (Prop.-2.4 style, fields with 2 invertible only)
// ---------------------------------------------------------------------------

/// Degreewise quotient C_n / im(1 - sign*R_n) with the induced differential.
/// R is the chain-level involution family (one operator per stored degree,
/// commuting with the differential); sign +1 realizes the "plus" quotient.
template <class S>
ChainComplex<S> quotient_by_involution(const ChainComplex<S>& c, const std::vector<SpMat<S>>& inv,
                                       int sign) {
  if (!c.ring.two_invertible())
    throw TwoNotInvertible("involution quotient needs 2 invertible in the coefficient ring");
  if constexpr (!ScalarTraits<S>::is_field) {
    throw TwoNotInvertible("involution quotient implemented over fields only");
  } else {
    const Index N = c.top_degree();
    if (static_cast<Index>(inv.size()) != N + 1)
      throw std::invalid_argument("quotient_by_involution: one involution per degree");
    std::vector<QuotientPresentation<S>> pres;
    std::vector<Mat<S>> rels;
    for (Index n = 0; n <= N; ++n) {
      Mat<S> r = to_dense(inv[static_cast<size_t>(n)]);
      if (r.rows() != c.rank_at(n) || r.cols() != c.rank_at(n))
        throw std::invalid_argument("quotient_by_involution: involution shape mismatch");
      if (!matrices_equal<S>(Mat<S>(r * r), Mat<S>(Mat<S>::Identity(r.rows(), r.cols()))))
        throw NotInvolution("R_n^2 != identity");
      Mat<S> rel = to_dense(sp_identity_of<S>(r.rows(), c.ring));
      rel -= S(sign) * r;
      pres.push_back(quotient_presentation<S>(rel));
      rels.push_back(std::move(rel));
    }
    std::vector<Index> q_ranks;
    std::vector<SpMat<S>> q_diffs;
    for (Index n = 0; n <= N; ++n) q_ranks.push_back(pres[static_cast<size_t>(n)].proj.rows());
    q_diffs.push_back(SpMat<S>(0, q_ranks[0]));
    for (Index n = 1; n <= N; ++n) {
      Mat<S> d = to_dense(c.diff(n));
      Mat<S> down = pres[static_cast<size_t>(n - 1)].proj * d;
      if (!is_zero_matrix<S>(Mat<S>(down * rels[static_cast<size_t>(n)])))
        throw IllDefinedDifferential("differential does not descend to the quotient");
      q_diffs.push_back(to_sparse<S>(Mat<S>(down * pres[static_cast<size_t>(n)].sect)));
    }
    return ChainComplex<S>(c.ring, std::move(q_ranks), std::move(q_diffs));
  }
}

}  // namespace refhom

#endif  // REFHOM_COMPLEXES_HPP
