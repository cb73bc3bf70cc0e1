// Exact dense/sparse linear algebra over Z, Q and F_p: Smith normal form,
// kernels, exact solving and homology of a composable pair of matrices.
//
// Everything here is deterministic and exact; there is no floating point and
// no probabilistic shortcut.  Operator matrices flow through the engine as
// Eigen sparse matrices; elimination happens on dense copies (the matrices
// are small, the scalars are the expensive part).

#ifndef REFHOM_EXACT_LINALG_HPP
#define REFHOM_EXACT_LINALG_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "refhom/errors.hpp"
#include "refhom/numeric.hpp"

namespace refhom {

using Eigen::Index;

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using SpMat = Eigen::SparseMatrix<S>;
template <class S>
using Triplet = Eigen::Triplet<S>;

using IntMat = Mat<Int>;
using IntSp = SpMat<Int>;

// ---------------------------------------------------------------------------
// small matrix helpers
// ---------------------------------------------------------------------------

template <class S>
bool is_zero_matrix(const Mat<S>& a) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!scalar_is_zero(a(i, j))) return false;
  return true;
}

template <class S>
bool is_zero_matrix(const SpMat<S>& a) {
  for (Index k = 0; k < a.outerSize(); ++k)
    for (typename SpMat<S>::InnerIterator it(a, k); it; ++it)
      if (!scalar_is_zero(it.value())) return false;
  return true;
}

template <class S>
bool matrices_equal(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero_matrix<S>(Mat<S>(a - b));
}

template <class S>
bool matrices_equal(const SpMat<S>& a, const SpMat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero_matrix<S>(SpMat<S>(a - b));
}

template <class S>
Mat<S> to_dense(const SpMat<S>& a) {
  Mat<S> d = Mat<S>::Constant(a.rows(), a.cols(), S(0));
  for (Index k = 0; k < a.outerSize(); ++k)
    for (typename SpMat<S>::InnerIterator it(a, k); it; ++it) d(it.row(), it.col()) = it.value();
  return d;
}

template <class S>
SpMat<S> to_sparse(const Mat<S>& a) {
  std::vector<Triplet<S>> t;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!scalar_is_zero(a(i, j))) t.emplace_back(i, j, a(i, j));
  SpMat<S> m(a.rows(), a.cols());
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

template <class S>
SpMat<S> sp_identity(Index n) {
  SpMat<S> m(n, n);
  m.setIdentity();
  return m;
}

/// Identity with a ring-bound unit entry (keeps prime-field moduli attached).
template <class S>
SpMat<S> sp_identity_of(Index n, const Ring& ring) {
  S one = scalar_of<S>(ring, 1);
  std::vector<Triplet<S>> t;
  for (Index i = 0; i < n; ++i) t.emplace_back(i, i, one);
  SpMat<S> m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

/// Kronecker product of sparse matrices, row-major index convention
/// (i_a * rows_b + i_b).
template <class S>
SpMat<S> sp_kron(const SpMat<S>& a, const SpMat<S>& b) {
  std::vector<Triplet<S>> t;
  t.reserve(static_cast<size_t>(a.nonZeros()) * static_cast<size_t>(b.nonZeros()));
  for (Index ka = 0; ka < a.outerSize(); ++ka)
    for (typename SpMat<S>::InnerIterator ia(a, ka); ia; ++ia)
      for (Index kb = 0; kb < b.outerSize(); ++kb)
        for (typename SpMat<S>::InnerIterator ib(b, kb); ib; ++ib)
          t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                         ia.value() * ib.value());
  SpMat<S> m(a.rows() * b.rows(), a.cols() * b.cols());
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

/// Accumulates scaled sparse blocks into one sparse matrix.
template <class S>
struct BlockBuilder {
  Index rows, cols;
  std::vector<Triplet<S>> t;

  BlockBuilder(Index r, Index c) : rows(r), cols(c) {}

  void add(Index row_offset, Index col_offset, const SpMat<S>& m, const S& scale = S(1)) {
    for (Index k = 0; k < m.outerSize(); ++k)
      for (typename SpMat<S>::InnerIterator it(m, k); it; ++it)
        t.emplace_back(row_offset + it.row(), col_offset + it.col(), scale * it.value());
  }

  SpMat<S> build() const {
    SpMat<S> m(rows, cols);
    m.setFromTriplets(t.begin(), t.end());
    SpMat<S> pruned = m.pruned(S(1), S(0));
    return pruned;
  }
};

// ---------------------------------------------------------------------------
// Smith normal form over Z
// ---------------------------------------------------------------------------

enum class SnfMode { DiagOnly, WithV, Full };

struct SmithResult {
  IntMat U;  // rows x rows unimodular (Full only)
  IntMat D;  // rows x cols diagonal, d_1 | d_2 | ..., zeros last
  IntMat V;  // cols x cols unimodular (WithV / Full)
  Index rank = 0;
};

// q, r with a = q*b + r and |r| minimal (|r| <= |b|/2).
inline void balanced_divmod(const Int& a, const Int& b, Int& q, Int& r) {
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int ab = abs(b);
  if (2 * abs(r) > ab) {
    if (sgn(r) == sgn(b)) {
      q += 1;
      r -= b;
    } else {
      q -= 1;
      r += b;
    }
  }
}

/// Smith normal form: U * input * V = D with U, V unimodular and the diagonal
/// a divisibility chain.  The pivot is always a nonzero entry of minimal
/// absolute value, which keeps coefficient growth down on the sparse
/// small-entry matrices this engine produces.
inline SmithResult snf(const IntMat& input, SnfMode mode = SnfMode::Full) {
  const Index m = input.rows(), n = input.cols();
  SmithResult res;
  IntMat a = input;
  const bool want_u = (mode == SnfMode::Full);
  const bool want_v = (mode != SnfMode::DiagOnly);
  if (want_u) res.U = IntMat::Identity(m, m);
  if (want_v) res.V = IntMat::Identity(n, n);

  auto swap_rows = [&](Index r1, Index r2) {
    if (r1 == r2) return;
    a.row(r1).swap(a.row(r2));
    if (want_u) res.U.row(r1).swap(res.U.row(r2));
  };
  auto swap_cols = [&](Index c1, Index c2) {
    if (c1 == c2) return;
    a.col(c1).swap(a.col(c2));
    if (want_v) res.V.col(c1).swap(res.V.col(c2));
  };
  auto row_axpy = [&](Index dst, Index src, const Int& q) {
    // row_dst -= q * row_src
    a.row(dst) -= (q * a.row(src).array()).matrix();
    if (want_u) res.U.row(dst) -= (q * res.U.row(src).array()).matrix();
  };
  auto col_axpy = [&](Index dst, Index src, const Int& q) {
    a.col(dst) -= (q * a.col(src).array()).matrix();
    if (want_v) res.V.col(dst) -= (q * res.V.col(src).array()).matrix();
  };

  const Index steps = std::min(m, n);
  Index s = 0;
  for (; s < steps; ++s) {
    // minimal-|.| nonzero pivot in the trailing block
    Index pi = -1, pj = -1;
    Int best;
    for (Index j = s; j < n; ++j)
      for (Index i = s; i < m; ++i)
        if (sgn(a(i, j)) != 0) {
          Int v = abs(a(i, j));
          if (pi < 0 || v < best) {
            best = v;
            pi = i;
            pj = j;
          }
        }
    if (pi < 0) break;  // trailing block is zero
    swap_rows(s, pi);
    swap_cols(s, pj);

    bool settled = false;
    while (!settled) {
      // Alternate row and column clearing until the cross through (s, s) is
      // clean.  A swap inside one phase can re-dirty the other (the swapped-in
      // row/column carries entries in the trailing block), so a single pass of
      // each is not enough; each re-entry strictly shrinks |a(s,s)|.
      while (true) {
        while (true) {
          Index imin = -1;
          Int vmin;
          for (Index i = s + 1; i < m; ++i)
            if (sgn(a(i, s)) != 0) {
              Int v = abs(a(i, s));
              if (imin < 0 || v < vmin) {
                vmin = v;
                imin = i;
              }
            }
          if (imin < 0) break;
          if (vmin < abs(a(s, s))) swap_rows(s, imin);
          for (Index i = s + 1; i < m; ++i)
            if (sgn(a(i, s)) != 0) {
              Int q, r;
              balanced_divmod(a(i, s), a(s, s), q, r);
              if (sgn(q) != 0) row_axpy(i, s, q);
            }
        }
        while (true) {
          Index jmin = -1;
          Int vmin;
          for (Index j = s + 1; j < n; ++j)
            if (sgn(a(s, j)) != 0) {
              Int v = abs(a(s, j));
              if (jmin < 0 || v < vmin) {
                vmin = v;
                jmin = j;
              }
            }
          if (jmin < 0) break;
          if (vmin < abs(a(s, s))) swap_cols(s, jmin);
          for (Index j = s + 1; j < n; ++j)
            if (sgn(a(s, j)) != 0) {
              Int q, r;
              balanced_divmod(a(s, j), a(s, s), q, r);
              if (sgn(q) != 0) col_axpy(j, s, q);
            }
        }
        bool col_clean = true;
        for (Index i = s + 1; i < m && col_clean; ++i)
          if (sgn(a(i, s)) != 0) col_clean = false;
        if (col_clean) break;
      }

      // divisibility: the pivot must divide every entry of the trailing block
      settled = true;
      for (Index i = s + 1; i < m && settled; ++i)
        for (Index j = s + 1; j < n && settled; ++j)
          if (sgn(a(i, j) % a(s, s)) != 0) {
            a.row(s) += a.row(i);
            if (want_u) res.U.row(s) += res.U.row(i);
            settled = false;
          }
    }
    if (sgn(a(s, s)) < 0) {
      a.row(s) = -a.row(s);
      if (want_u) res.U.row(s) = -res.U.row(s);
    }
  }

  res.rank = s;
  res.D = IntMat::Constant(m, n, Int(0));
  for (Index i = 0; i < s; ++i) res.D(i, i) = a(i, i);
  return res;
}

/// Determinant over Z by fraction-free (Bareiss) elimination.
inline Int det_int(const IntMat& input) {
  const Index n = input.rows();
  if (input.cols() != n) throw std::invalid_argument("det_int: matrix not square");
  if (n == 0) return Int(1);
  IntMat a = input;
  Int denom(1);
  int sign = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (sgn(a(k, k)) == 0) {
      Index piv = -1;
      for (Index i = k + 1; i < n; ++i)
        if (sgn(a(i, k)) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Int(0);
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), denom.get_mpz_t());
      }
      a(i, k) = 0;
    }
    denom = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

// ---------------------------------------------------------------------------
// elimination over a field
// ---------------------------------------------------------------------------

// Pivot preference, lower is better.  Over Q unit integers are chosen first so
// that elimination on the {-1,0,1,2}-valued matrices of this engine usually
// never leaves the integers.
template <class S>
long pivot_score(const S&);

template <>
inline long pivot_score<Rat>(const Rat& x) {
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  size_t nb = mpz_sizeinbase(num.get_mpz_t(), 2);
  if (den == 1) return (nb == 1) ? 0 : static_cast<long>(nb);
  return 1000 + static_cast<long>(nb + mpz_sizeinbase(den.get_mpz_t(), 2));
}

template <>
inline long pivot_score<Fp>(const Fp&) {
  return 0;
}

/// Rank over a field; unordered greedy elimination with score-based pivoting.
template <class S>
Index rank_field(Mat<S> a) {
  static_assert(ScalarTraits<S>::is_field);
  const Index m = a.rows(), n = a.cols();
  std::vector<char> row_active(m, 1), col_active(n, 1);
  Index rank = 0;
  while (true) {
    Index pr = -1, pc = -1;
    long best = 0;
    for (Index j = 0; j < n; ++j) {
      if (!col_active[j]) continue;
      for (Index i = 0; i < m; ++i) {
        if (!row_active[i] || scalar_is_zero(a(i, j))) continue;
        long sc = pivot_score<S>(a(i, j));
        if (pr < 0 || sc < best) {
          best = sc;
          pr = i;
          pc = j;
        }
        if (best == 0) break;
      }
      if (pr >= 0 && best == 0) break;
    }
    if (pr < 0) break;
    ++rank;
    row_active[pr] = 0;
    col_active[pc] = 0;
    const S pivot = a(pr, pc);
    for (Index i = 0; i < m; ++i) {
      if (!row_active[i] || scalar_is_zero(a(i, pc))) continue;
      S f = a(i, pc) / pivot;
      for (Index j = 0; j < n; ++j) {
        if (!col_active[j] || scalar_is_zero(a(pr, j))) continue;
        a(i, j) -= f * a(pr, j);
      }
      a(i, pc) = S(0);
    }
  }
  return rank;
}

template <class S>
Index rank_field(const SpMat<S>& a) {
  return rank_field<S>(to_dense(a));
}

/// Reduced row echelon form (columns scanned left to right).
template <class S>
struct Rref {
  Mat<S> r;
  std::vector<Index> pivot_cols;  // pivot column of row k
};

template <class S>
Rref<S> rref(Mat<S> a) {
  static_assert(ScalarTraits<S>::is_field);
  const Index m = a.rows(), n = a.cols();
  Rref<S> out;
  Index row = 0;
  for (Index col = 0; col < n && row < m; ++col) {
    Index piv = -1;
    long best = 0;
    for (Index i = row; i < m; ++i) {
      if (scalar_is_zero(a(i, col))) continue;
      long sc = pivot_score<S>(a(i, col));
      if (piv < 0 || sc < best) {
        best = sc;
        piv = i;
      }
    }
    if (piv < 0) continue;
    a.row(row).swap(a.row(piv));
    S inv = S(1) / a(row, col);
    for (Index j = col; j < n; ++j) a(row, j) *= inv;
    for (Index i = 0; i < m; ++i) {
      if (i == row || scalar_is_zero(a(i, col))) continue;
      S f = a(i, col);
      for (Index j = col; j < n; ++j) a(i, j) -= f * a(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.r = std::move(a);
  return out;
}

// ---------------------------------------------------------------------------
// kernels and exact solves
// ---------------------------------------------------------------------------

/// Basis of ker(m) as matrix columns.  Over Z the result is a basis of the
/// full kernel lattice (extracted from the SNF transform, hence saturated).
template <class S>
Mat<S> kernel_basis(const Mat<S>& m) {
  if constexpr (ScalarTraits<S>::is_field) {
    Rref<S> e = rref<S>(m);
    const Index n = m.cols();
    const Index r = static_cast<Index>(e.pivot_cols.size());
    std::vector<char> is_pivot(n, 0);
    for (Index c : e.pivot_cols) is_pivot[c] = 1;
    Mat<S> k = Mat<S>::Constant(n, n - r, S(0));
    Index out = 0;
    for (Index f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      k(f, out) = S(1);
      for (Index j = 0; j < r; ++j) k(e.pivot_cols[j], out) = -e.r(j, f);
      ++out;
    }
    return k;
  } else {
    SmithResult s = snf(m, SnfMode::WithV);
    return s.V.rightCols(m.cols() - s.rank);
  }
}

/// Solve basis * X = vectors exactly; throws NotInSpan when some column of
/// `vectors` is not in the (integer, resp. linear) span of the basis columns.
template <class S>
Mat<S> express_in_basis(const Mat<S>& vectors, const Mat<S>& basis) {
  if (vectors.rows() != basis.rows())
    throw std::invalid_argument("express_in_basis: ambient dimension mismatch");
  const Index b = basis.cols(), k = vectors.cols();
  if constexpr (ScalarTraits<S>::is_field) {
    Mat<S> aug(basis.rows(), b + k);
    aug.leftCols(b) = basis;
    aug.rightCols(k) = vectors;
    // pivots restricted to basis columns: run rref and check no pivot falls
    // in the augmented part
    Rref<S> e = rref<S>(aug);
    Mat<S> x = Mat<S>::Constant(b, k, S(0));
    for (size_t row = 0; row < e.pivot_cols.size(); ++row) {
      if (e.pivot_cols[row] >= b)
        throw NotInSpan("column not in linear span of basis");
      x.row(e.pivot_cols[row]) = e.r.block(static_cast<Index>(row), b, 1, k);
    }
    return x;
  } else {
    SmithResult s = snf(basis, SnfMode::Full);
    Mat<S> y1 = s.U * vectors;  // rows(basis) x k
    Mat<S> y = Mat<S>::Constant(b, k, S(0));
    for (Index i = 0; i < s.rank; ++i)
      for (Index c = 0; c < k; ++c) {
        Int q, r;
        if (sgn(y1(i, c)) == 0) continue;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), y1(i, c).get_mpz_t(), s.D(i, i).get_mpz_t());
        if (sgn(r) != 0) throw NotInSpan("column not in integer span of basis");
        y(i, c) = q;
      }
    for (Index i = s.rank; i < y1.rows(); ++i)
      for (Index c = 0; c < k; ++c)
        if (sgn(y1(i, c)) != 0) throw NotInSpan("column leaves the basis span");
    return s.V * y;
  }
}

/// Exact rank over the given ring.
template <class S>
Index rank(const Mat<S>& m, const Ring&) {
  if constexpr (ScalarTraits<S>::is_field) {
    return rank_field<S>(Mat<S>(m));
  } else {
    // rank over Z = rank over Q; eliminate fraction-free instead of running a
    // full SNF
    Mat<Rat> q(m.rows(), m.cols());
    for (Index j = 0; j < m.cols(); ++j)
      for (Index i = 0; i < m.rows(); ++i) q(i, j) = Rat(m(i, j));
    return rank_field<Rat>(std::move(q));
  }
}

template <class S>
Index rank(const SpMat<S>& m, const Ring& ring) {
  return rank<S>(to_dense(m), ring);
}

// ---------------------------------------------------------------------------
// quotient presentations
// ---------------------------------------------------------------------------

/// Presentation of ambient / span(columns of rel) when the quotient is free:
/// proj maps the ambient module onto quotient coordinates, sect is a section
/// (proj * sect = identity, proj * rel = 0).
template <class S>
struct QuotientPresentation {
  Mat<S> proj;
  Mat<S> sect;
};

template <class S>
Mat<S> inverse_field(const Mat<S>& a) {
  const Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse_field: not square");
  Mat<S> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat<S>::Identity(n, n);
  Rref<S> e = rref<S>(std::move(aug));
  if (static_cast<Index>(e.pivot_cols.size()) != n || (n > 0 && e.pivot_cols.back() >= n))
    throw std::invalid_argument("inverse_field: singular matrix");
  return e.r.rightCols(n);
}

/// Inverse of a unimodular integer matrix.
inline IntMat inverse_unimodular(const IntMat& a) {
  return express_in_basis<Int>(IntMat(IntMat::Identity(a.rows(), a.rows())), a);
}

/// Free presentation of ambient / span(rel columns).  Over a field this always
/// exists; over Z it exists iff the quotient is torsion-free, otherwise a
/// domain_error reports the obstructing invariant factor.
template <class S>
QuotientPresentation<S> quotient_presentation(const Mat<S>& rel) {
  const Index n = rel.rows();
  if constexpr (ScalarTraits<S>::is_field) {
    // pivot columns of rel give a basis of the relation subspace; augmenting
    // with the identity picks the complementary standard vectors
    Mat<S> aug(n, rel.cols() + n);
    aug.leftCols(rel.cols()) = rel;
    aug.rightCols(n) = Mat<S>::Identity(n, n);
    Rref<S> e = rref<S>(std::move(aug));
    std::vector<Index> rel_cols, std_cols;
    for (Index c : e.pivot_cols) (c < rel.cols() ? rel_cols : std_cols).push_back(c);
    const Index r = static_cast<Index>(rel_cols.size());
    const Index k = n - r;
    Mat<S> basis(n, n);
    for (Index j = 0; j < r; ++j) basis.col(j) = rel.col(rel_cols[static_cast<size_t>(j)]);
    Mat<S> sect = Mat<S>::Constant(n, k, S(0));
    for (Index j = 0; j < k; ++j) {
      basis.col(r + j) = Mat<S>::Identity(n, n).col(std_cols[static_cast<size_t>(j)] - rel.cols());
      sect(std_cols[static_cast<size_t>(j)] - rel.cols(), j) = S(1);
    }
    Mat<S> inv = inverse_field<S>(basis);
    return QuotientPresentation<S>{inv.bottomRows(k), std::move(sect)};
  } else {
    SmithResult s = snf(rel, SnfMode::Full);
    for (Index i = 0; i < s.rank; ++i)
      if (s.D(i, i) > 1)
        throw std::domain_error("quotient has torsion Z/" + s.D(i, i).get_str() +
                                "; no free presentation");
    IntMat u_inv = inverse_unimodular(s.U);
    return QuotientPresentation<S>{s.U.bottomRows(n - s.rank), u_inv.rightCols(n - s.rank)};
  }
}

// ---------------------------------------------------------------------------
// homology groups
// ---------------------------------------------------------------------------

/// Finitely generated module invariant: free rank plus invariant-factor
/// torsion list (ascending divisibility chain, factors > 1 only).
struct HomologyGroup {
  Ring ring;
  Index free_rank = 0;
  std::vector<Int> torsion;

  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
    return a.ring == b.ring && a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
  friend bool operator!=(const HomologyGroup& a, const HomologyGroup& b) { return !(a == b); }

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string base = ring.name();
    std::string out;
    if (free_rank > 0) {
      out = base;
      if (free_rank > 1) out += "^" + std::to_string(free_rank);
    }
    for (const Int& t : torsion) {
      if (!out.empty()) out += " + ";
      out += "Z/" + t.get_str();
    }
    return out;
  }
};

inline std::vector<std::pair<Int, int>> factorize(Int n) {
  std::vector<std::pair<Int, int>> out;
  n = abs(n);
  for (Int d = 2; d * d <= n; d += 1) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Renormalizes a multiset of torsion factors into an invariant-factor chain.
inline std::vector<Int> normalize_invariant_factors(const std::vector<Int>& factors) {
  std::map<Int, std::vector<int>> exps;
  size_t width = 0;
  for (const Int& f : factors)
    for (auto& [p, e] : factorize(f)) exps[p].push_back(e);
  for (auto& [p, es] : exps) {
    std::sort(es.begin(), es.end(), std::greater<int>());
    width = std::max(width, es.size());
  }
  std::vector<Int> chain;
  for (size_t j = 0; j < width; ++j) {
    Int f(1);
    for (auto& [p, es] : exps)
      if (j < es.size()) {
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(es[j]));
        f *= pw;
      }
    if (f > 1) chain.push_back(f);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

inline HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b) {
  if (a.ring != b.ring) throw std::invalid_argument("direct_sum: mixed rings");
  std::vector<Int> all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  return HomologyGroup{a.ring, a.free_rank + b.free_rank, normalize_invariant_factors(all)};
}

/// Homology ker(d_out) / im(d_in) of a composable pair
///     . <-- d_out -- ambient -- <-- d_in -- .
/// Over a field only ranks enter; over Z the image is rewritten in a kernel
/// lattice basis and its SNF gives free rank and invariant factors.
template <class S>
HomologyGroup homology_of_pair(const Mat<S>& d_out, const Mat<S>& d_in, const Ring& ring) {
  if (d_out.cols() != d_in.rows())
    throw std::invalid_argument("homology_of_pair: ambient dimension mismatch");
  if (d_out.rows() > 0 && d_in.cols() > 0 && !is_zero_matrix<S>(Mat<S>(d_out * d_in)))
    throw CompositionNonzero("d_out * d_in != 0");

  if constexpr (ScalarTraits<S>::is_field) {
    Index free = d_out.cols() - rank_field<S>(Mat<S>(d_out)) - rank_field<S>(Mat<S>(d_in));
    return HomologyGroup{ring, free, {}};
  } else {
    Mat<S> k = kernel_basis<S>(d_out);
    Mat<S> x = express_in_basis<S>(d_in, k);
    SmithResult s = snf(x, SnfMode::DiagOnly);
    HomologyGroup h{ring, k.cols() - s.rank, {}};
    for (Index i = 0; i < s.rank; ++i)
      if (s.D(i, i) > 1) h.torsion.push_back(s.D(i, i));
    return h;
  }
}

template <class S>
HomologyGroup homology_of_pair(const SpMat<S>& d_out, const SpMat<S>& d_in, const Ring& ring) {
  return homology_of_pair<S>(to_dense(d_out), to_dense(d_in), ring);
}

}  // namespace refhom

#endif  // REFHOM_EXACT_LINALG_HPP
