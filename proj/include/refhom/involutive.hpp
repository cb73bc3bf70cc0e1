// Finite-rank involutive algebras and bimodules over an exact coefficient
// ring: structure-constant models, exhaustive basis-level validators, the
// group/matrix-algebra constructors, the levelwise trace map, balanced tensor
// products and Hermitian Morita data.

#ifndef REFHOM_INVOLUTIVE_HPP
#define REFHOM_INVOLUTIVE_HPP

#include <string>
#include <vector>

#include "refhom/exact_linalg.hpp"
#include "refhom/finite_group.hpp"

namespace refhom {

// ---------------------------------------------------------------------------
// involutive algebras
// ---------------------------------------------------------------------------

/// Associative unital algebra of finite rank with an order-two
/// anti-automorphism sigma (a -> abar), all data in structure constants.
template <class S>
struct InvolutiveAlgebra {
  Ring ring;
  Index rank = 0;
  std::vector<std::string> basis_labels;
  Vec<S> unit;                         // coefficient vector of 1
  std::vector<std::vector<Vec<S>>> mul;  // mul[i][j] = e_i * e_j
  Mat<S> sigma;

  Vec<S> multiply(const Vec<S>& x, const Vec<S>& y) const {
    Vec<S> out = Vec<S>::Constant(rank, S(0));
    for (Index i = 0; i < rank; ++i) {
      if (scalar_is_zero(x(i))) continue;
      for (Index j = 0; j < rank; ++j) {
        if (scalar_is_zero(y(j))) continue;
        out += S(x(i) * y(j)) * mul[static_cast<size_t>(i)][static_cast<size_t>(j)];
      }
    }
    return out;
  }
  Vec<S> conj(const Vec<S>& x) const { return sigma * x; }
  Vec<S> basis_vec(Index i) const {
    Vec<S> e = Vec<S>::Constant(rank, S(0));
    e(i) = S(1);
    return e;
  }
};

template <class S>
bool vec_equal(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (!scalar_is_zero(S(a(i) - b(i)))) return false;
  return true;
}

/// Checks every algebra axiom exhaustively on basis tuples; returns the list
/// of violated axioms (empty = valid).
template <class S>
std::vector<std::string> validate_algebra(const InvolutiveAlgebra<S>& a) {
  std::vector<std::string> bad;
  const Index r = a.rank;
  if (a.unit.size() != r || a.sigma.rows() != r || a.sigma.cols() != r ||
      static_cast<Index>(a.mul.size()) != r) {
    bad.push_back("shape: structure data does not match rank");
    return bad;
  }
  for (auto& row : a.mul) {
    if (static_cast<Index>(row.size()) != r) {
      bad.push_back("shape: multiplication tensor ragged");
      return bad;
    }
    for (auto& v : row)
      if (v.size() != r) {
        bad.push_back("shape: product vector has wrong length");
        return bad;
      }
  }

  for (Index i = 0; i < r && bad.size() < 32; ++i)
    for (Index j = 0; j < r; ++j)
      for (Index k = 0; k < r; ++k) {
        Vec<S> lhs = a.multiply(a.multiply(a.basis_vec(i), a.basis_vec(j)), a.basis_vec(k));
        Vec<S> rhs = a.multiply(a.basis_vec(i), a.multiply(a.basis_vec(j), a.basis_vec(k)));
        if (!vec_equal<S>(lhs, rhs))
          bad.push_back("associativity fails at basis triple (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
      }
  for (Index i = 0; i < r; ++i) {
    if (!vec_equal<S>(a.multiply(a.unit, a.basis_vec(i)), a.basis_vec(i)))
      bad.push_back("left unit law fails at basis " + std::to_string(i));
    if (!vec_equal<S>(a.multiply(a.basis_vec(i), a.unit), a.basis_vec(i)))
      bad.push_back("right unit law fails at basis " + std::to_string(i));
  }
  if (!matrices_equal<S>(Mat<S>(a.sigma * a.sigma), Mat<S>(Mat<S>::Identity(r, r))))
    bad.push_back("involution is not of order two (sigma^2 != id)");
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j) {
      Vec<S> lhs = a.conj(a.multiply(a.basis_vec(i), a.basis_vec(j)));
      Vec<S> rhs = a.multiply(a.conj(a.basis_vec(j)), a.conj(a.basis_vec(i)));
      if (!vec_equal<S>(lhs, rhs))
        bad.push_back("anti-homomorphism fails at basis pair (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
    }
  return bad;
}

// ---------------------------------------------------------------------------
// involutive bimodules
// ---------------------------------------------------------------------------

/// Involutive A-bimodule of finite rank: action tensors over the algebra
/// basis plus the compatible order-two map tau.
template <class S>
struct InvolutiveBimodule {
  Ring ring;
  Index rank = 0;
  std::vector<std::vector<Vec<S>>> left;   // left[a][m] = e_a . f_m
  std::vector<std::vector<Vec<S>>> right;  // right[m][a] = f_m . e_a
  Mat<S> tau;

  Vec<S> act_left(const Vec<S>& a, const Vec<S>& m) const {
    Vec<S> out = Vec<S>::Constant(rank, S(0));
    for (Index i = 0; i < a.size(); ++i) {
      if (scalar_is_zero(a(i))) continue;
      for (Index j = 0; j < rank; ++j) {
        if (scalar_is_zero(m(j))) continue;
        out += S(a(i) * m(j)) * left[static_cast<size_t>(i)][static_cast<size_t>(j)];
      }
    }
    return out;
  }
  Vec<S> act_right(const Vec<S>& m, const Vec<S>& a) const {
    Vec<S> out = Vec<S>::Constant(rank, S(0));
    for (Index j = 0; j < rank; ++j) {
      if (scalar_is_zero(m(j))) continue;
      for (Index i = 0; i < a.size(); ++i) {
        if (scalar_is_zero(a(i))) continue;
        out += S(m(j) * a(i)) * right[static_cast<size_t>(j)][static_cast<size_t>(i)];
      }
    }
    return out;
  }
  Vec<S> basis_vec(Index i) const {
    Vec<S> e = Vec<S>::Constant(rank, S(0));
    e(i) = S(1);
    return e;
  }
};

template <class S>
std::vector<std::string> validate_bimodule(const InvolutiveAlgebra<S>& a,
                                           const InvolutiveBimodule<S>& m) {
  std::vector<std::string> bad;
  const Index r = a.rank, n = m.rank;
  if (static_cast<Index>(m.left.size()) != r || static_cast<Index>(m.right.size()) != n ||
      m.tau.rows() != n || m.tau.cols() != n) {
    bad.push_back("shape: bimodule data does not match ranks");
    return bad;
  }
  for (Index i = 0; i < n; ++i) {
    if (!vec_equal<S>(m.act_left(a.unit, m.basis_vec(i)), m.basis_vec(i)))
      bad.push_back("unit acts nontrivially on the left at " + std::to_string(i));
    if (!vec_equal<S>(m.act_right(m.basis_vec(i), a.unit), m.basis_vec(i)))
      bad.push_back("unit acts nontrivially on the right at " + std::to_string(i));
  }
  for (Index x = 0; x < r && bad.size() < 32; ++x)
    for (Index y = 0; y < r; ++y)
      for (Index i = 0; i < n; ++i) {
        Vec<S> xy = a.multiply(a.basis_vec(x), a.basis_vec(y));
        if (!vec_equal<S>(m.act_left(xy, m.basis_vec(i)),
                          m.act_left(a.basis_vec(x), m.act_left(a.basis_vec(y), m.basis_vec(i)))))
          bad.push_back("left action not associative at (" + std::to_string(x) + "," +
                        std::to_string(y) + "," + std::to_string(i) + ")");
        if (!vec_equal<S>(m.act_right(m.basis_vec(i), xy),
                          m.act_right(m.act_right(m.basis_vec(i), a.basis_vec(x)),
                                      a.basis_vec(y))))
          bad.push_back("right action not associative at (" + std::to_string(i) + "," +
                        std::to_string(x) + "," + std::to_string(y) + ")");
        if (!vec_equal<S>(
                m.act_right(m.act_left(a.basis_vec(x), m.basis_vec(i)), a.basis_vec(y)),
                m.act_left(a.basis_vec(x), m.act_right(m.basis_vec(i), a.basis_vec(y)))))
          bad.push_back("left and right actions do not commute at (" + std::to_string(x) + "," +
                        std::to_string(i) + "," + std::to_string(y) + ")");
      }
  if (!matrices_equal<S>(Mat<S>(m.tau * m.tau), Mat<S>(Mat<S>::Identity(n, n))))
    bad.push_back("tau^2 != id");
  for (Index x = 0; x < r; ++x)
    for (Index i = 0; i < n; ++i)
      for (Index y = 0; y < r; ++y) {
        Vec<S> amb = m.act_right(m.act_left(a.basis_vec(x), m.basis_vec(i)), a.basis_vec(y));
        Vec<S> lhs = m.tau * amb;
        Vec<S> rhs = m.act_right(
            m.act_left(a.conj(a.basis_vec(y)), Vec<S>(m.tau * m.basis_vec(i))),
            a.conj(a.basis_vec(x)));
        if (!vec_equal<S>(lhs, rhs))
          bad.push_back("tau(a m b) != conj(b) tau(m) conj(a) at (" + std::to_string(x) + "," +
                        std::to_string(i) + "," + std::to_string(y) + ")");
      }
  return bad;
}

/// A as a bimodule over itself, tau = sigma.
template <class S>
InvolutiveBimodule<S> regular_bimodule(const InvolutiveAlgebra<S>& a) {
  InvolutiveBimodule<S> m;
  m.ring = a.ring;
  m.rank = a.rank;
  m.left = a.mul;
  m.right = a.mul;
  m.tau = a.sigma;
  return m;
}

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

/// Group algebra k[G] with involution g -> g^{-1}.
template <class S>
InvolutiveAlgebra<S> group_algebra(const FiniteGroup& g, const Ring& ring) {
  InvolutiveAlgebra<S> a;
  a.ring = ring;
  a.rank = g.order;
  a.basis_labels = g.labels;
  a.unit = Vec<S>::Constant(g.order, S(0));
  a.unit(g.identity) = scalar_of<S>(ring, 1);
  a.mul.assign(static_cast<size_t>(g.order), std::vector<Vec<S>>(static_cast<size_t>(g.order)));
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j) {
      Vec<S> v = Vec<S>::Constant(g.order, S(0));
      v(g.mul(i, j)) = scalar_of<S>(ring, 1);
      a.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    }
  a.sigma = Mat<S>::Constant(g.order, g.order, S(0));
  for (int i = 0; i < g.order; ++i) a.sigma(g.inv(i), i) = scalar_of<S>(ring, 1);
  return a;
}

/// M_m(A) with the conjugate-transpose style involution (X)bar = (xbar_ji).
/// Basis e_{ij} (x) a_k ordered lexicographically by (i, j, k).
template <class S>
InvolutiveAlgebra<S> matrix_algebra(const InvolutiveAlgebra<S>& a, Index m) {
  InvolutiveAlgebra<S> b;
  b.ring = a.ring;
  b.rank = m * m * a.rank;
  auto idx = [&](Index i, Index j, Index k) { return (i * m + j) * a.rank + k; };
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < a.rank; ++k)
        b.basis_labels.push_back("e" + std::to_string(i) + std::to_string(j) + "*" +
                                 (a.basis_labels.empty() ? std::to_string(k)
                                                         : a.basis_labels[static_cast<size_t>(k)]));
  b.unit = Vec<S>::Constant(b.rank, S(0));
  for (Index i = 0; i < m; ++i)
    for (Index k = 0; k < a.rank; ++k) b.unit(idx(i, i, k)) += a.unit(k);
  b.mul.assign(static_cast<size_t>(b.rank), std::vector<Vec<S>>(static_cast<size_t>(b.rank),
                                                                Vec<S>::Constant(b.rank, S(0))));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < a.rank; ++k)
        for (Index i2 = 0; i2 < m; ++i2)
          for (Index j2 = 0; j2 < m; ++j2)
            for (Index k2 = 0; k2 < a.rank; ++k2) {
              if (j != i2) continue;
              Vec<S>& out = b.mul[static_cast<size_t>(idx(i, j, k))]
                                 [static_cast<size_t>(idx(i2, j2, k2))];
              const Vec<S>& prod = a.mul[static_cast<size_t>(k)][static_cast<size_t>(k2)];
              for (Index k3 = 0; k3 < a.rank; ++k3) out(idx(i, j2, k3)) += prod(k3);
            }
  b.sigma = Mat<S>::Constant(b.rank, b.rank, S(0));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < a.rank; ++k)
        for (Index k2 = 0; k2 < a.rank; ++k2)
          if (!scalar_is_zero(a.sigma(k2, k))) b.sigma(idx(j, i, k2), idx(i, j, k)) = a.sigma(k2, k);
  return b;
}

// small stock algebras used by the test batteries and the CLI presets

/// The ground ring as a rank-one algebra with trivial involution.
template <class S>
InvolutiveAlgebra<S> ground_algebra(const Ring& ring) {
  InvolutiveAlgebra<S> a;
  a.ring = ring;
  a.rank = 1;
  a.basis_labels = {"1"};
  S one = scalar_of<S>(ring, 1);
  a.unit = Vec<S>::Constant(1, one);
  a.mul = {{Vec<S>::Constant(1, one)}};
  a.sigma = Mat<S>::Constant(1, 1, one);
  return a;
}

/// k[x]/(x^2), involution fixing x.
template <class S>
InvolutiveAlgebra<S> dual_numbers(const Ring& ring) {
  InvolutiveAlgebra<S> a;
  a.ring = ring;
  a.rank = 2;
  a.basis_labels = {"1", "x"};
  a.unit = Vec<S>::Constant(2, S(0));
  a.unit(0) = scalar_of<S>(ring, 1);
  auto vec = [&](long c0, long c1) {
    Vec<S> v(2);
    v << scalar_of<S>(ring, c0), scalar_of<S>(ring, c1);
    return v;
  };
  a.mul = {{vec(1, 0), vec(0, 1)}, {vec(0, 1), vec(0, 0)}};
  a.sigma = Mat<S>::Constant(2, 2, S(0));
  a.sigma(0, 0) = scalar_of<S>(ring, 1);
  a.sigma(1, 1) = scalar_of<S>(ring, 1);
  return a;
}

/// k[i] with i^2 = -1 and complex conjugation.
template <class S>
InvolutiveAlgebra<S> gaussian_algebra(const Ring& ring) {
  InvolutiveAlgebra<S> a;
  a.ring = ring;
  a.rank = 2;
  a.basis_labels = {"1", "i"};
  a.unit = Vec<S>::Constant(2, S(0));
  a.unit(0) = scalar_of<S>(ring, 1);
  auto vec = [&](long c0, long c1) {
    Vec<S> v(2);
    v << scalar_of<S>(ring, c0), scalar_of<S>(ring, c1);
    return v;
  };
  a.mul = {{vec(1, 0), vec(0, 1)}, {vec(0, 1), vec(-1, 0)}};
  a.sigma = Mat<S>::Constant(2, 2, S(0));
  a.sigma(0, 0) = scalar_of<S>(ring, 1);
  a.sigma(1, 1) = scalar_of<S>(ring, -1);
  return a;
}

// ---------------------------------------------------------------------------
// trace map
// ---------------------------------------------------------------------------

/// Levelwise trace Tr_n from level n of the Loday module of M_m(A) to level n
/// of the Loday module of A: the sum over cyclic index tuples i_0,...,i_n of
/// x^(0)_{i0 i1} (x) x^(1)_{i1 i2} (x) ... (x) x^(n)_{in i0}.
/// On the matrix-unit basis this keeps exactly the tuples whose column index
/// chains match cyclically, with coefficient one.
template <class S>
std::vector<SpMat<S>> trace_map(const InvolutiveAlgebra<S>& a, Index m, Index max_level) {
  const Index ra = a.rank, rb = m * m * ra;
  std::vector<SpMat<S>> out;
  for (Index n = 0; n <= max_level; ++n) {
    Index dom = 1, cod = 1;
    for (Index t = 0; t <= n; ++t) {
      dom *= rb;
      cod *= ra;
    }
    std::vector<Triplet<S>> trip;
    // iterate over all basis tuples of M_m(A)^{(x)(n+1)}
    std::vector<Index> tuple(static_cast<size_t>(n) + 1, 0);
    for (Index col = 0; col < dom; ++col) {
      Index rest = col;
      for (Index t = n; t >= 0; --t) {
        tuple[static_cast<size_t>(t)] = rest % rb;
        rest /= rb;
      }
      bool chained = true;
      Index target = 0;
      for (Index t = 0; t <= n && chained; ++t) {
        Index bi = tuple[static_cast<size_t>(t)];
        Index i = bi / (m * ra), j = (bi / ra) % m, k = bi % ra;
        Index next = tuple[static_cast<size_t>((t + 1) % (n + 1))];
        Index i_next = next / (m * ra);
        if (j != i_next) chained = false;
        target = target * ra + k;
      }
      if (chained) trip.emplace_back(target, col, scalar_of<S>(a.ring, 1));
    }
    SpMat<S> tr(cod, dom);
    tr.setFromTriplets(trip.begin(), trip.end());
    out.push_back(std::move(tr));
  }
  return out;
}

// ---------------------------------------------------------------------------
// balanced tensor products and Hermitian Morita data
// ---------------------------------------------------------------------------

/// Free bimodule with a left action of one algebra and a right action of
/// another, given by action tensors (no involution of its own).
template <class S>
struct MoritaBimodule {
  Index rank = 0;
  std::vector<std::vector<Vec<S>>> left;   // left[l][x]
  std::vector<std::vector<Vec<S>>> right;  // right[x][r]
};

/// Presentation of X (x)_A Y as a free quotient of the plain tensor product
/// by the balancing relations (x.a)(x)y - x(x)(a.y).
template <class S>
struct BalancedTensor {
  Index rank = 0;
  Mat<S> proj;  // rank x (rx*ry)
  Mat<S> sect;  // (rx*ry) x rank
};

template <class S>
BalancedTensor<S> tensor_over_algebra(Index rx, const std::vector<std::vector<Vec<S>>>& x_right,
                                      Index ry, const std::vector<std::vector<Vec<S>>>& y_left,
                                      const InvolutiveAlgebra<S>& over) {
  const Index full = rx * ry;
  const Index ra = over.rank;
  Mat<S> rel = Mat<S>::Constant(full, ra * full, S(0));
  Index c = 0;
  for (Index av = 0; av < ra; ++av)
    for (Index x = 0; x < rx; ++x)
      for (Index y = 0; y < ry; ++y, ++c) {
        const Vec<S>& xa = x_right[static_cast<size_t>(x)][static_cast<size_t>(av)];
        for (Index x2 = 0; x2 < rx; ++x2) rel(x2 * ry + y, c) += xa(x2);
        const Vec<S>& ay = y_left[static_cast<size_t>(av)][static_cast<size_t>(y)];
        for (Index y2 = 0; y2 < ry; ++y2) rel(x * ry + y2, c) -= ay(y2);
      }
  QuotientPresentation<S> qp = quotient_presentation<S>(rel);
  return BalancedTensor<S>{qp.proj.rows(), std::move(qp.proj), std::move(qp.sect)};
}

template <class S>
struct HermitianMoritaData {
  InvolutiveAlgebra<S> A, B;
  MoritaBimodule<S> P;  // A-B
  MoritaBimodule<S> Q;  // B-A
  Mat<S> u;             // rank(A) x (rank(P)*rank(Q)), u(e_p (x) e_q) at column p*rQ + q
  Mat<S> v;             // rank(B) x (rank(Q)*rank(P)), column q*rP + p
  Mat<S> theta;         // rank(Q) x rank(P)
  std::vector<Vec<S>> dual_p, dual_q;    // u(sum p_j (x) q_j) = 1_A
  std::vector<Vec<S>> dual_p2, dual_q2;  // v(sum q'_k (x) p'_k) = 1_B

  Vec<S> apply_u(const Vec<S>& p, const Vec<S>& q) const {
    Vec<S> t = Vec<S>::Constant(P.rank * Q.rank, S(0));
    for (Index i = 0; i < P.rank; ++i)
      for (Index j = 0; j < Q.rank; ++j) t(i * Q.rank + j) = p(i) * q(j);
    return u * t;
  }
  Vec<S> apply_v(const Vec<S>& q, const Vec<S>& p) const {
    Vec<S> t = Vec<S>::Constant(Q.rank * P.rank, S(0));
    for (Index j = 0; j < Q.rank; ++j)
      for (Index i = 0; i < P.rank; ++i) t(j * P.rank + i) = q(j) * p(i);
    return v * t;
  }
};

namespace detail {

template <class S>
bool invertible_over_ring(const Mat<S>& m) {
  if (m.rows() != m.cols()) return false;
  if constexpr (ScalarTraits<S>::is_field) {
    return rank_field<S>(Mat<S>(m)) == m.rows();
  } else {
    return abs(det_int(m)) == 1;
  }
}

template <class S>
bool vec_in_list(const Vec<S>& v, std::vector<Vec<S>> list) {
  for (auto it = list.begin(); it != list.end(); ++it)
    if (vec_equal<S>(*it, v)) return true;
  return false;
}

}  // namespace detail

/// Checks every Hermitian Morita axiom on basis tuples, including that u and v
/// descend to isomorphisms on the balanced tensor products and the dual-set
/// compatibility of theta.
template <class S>
std::vector<std::string> validate_morita_data(const HermitianMoritaData<S>& d) {
  std::vector<std::string> bad;
  const Index rA = d.A.rank, rB = d.B.rank, rP = d.P.rank, rQ = d.Q.rank;
  auto basis = [](Index r, Index i) {
    Vec<S> e = Vec<S>::Constant(r, S(0));
    e(i) = S(1);
    return e;
  };

  for (auto& v : validate_algebra(d.A)) bad.push_back("A: " + v);
  for (auto& v : validate_algebra(d.B)) bad.push_back("B: " + v);

  // u is an A-bimodule map and is balanced over B
  for (Index p = 0; p < rP && bad.size() < 48; ++p)
    for (Index q = 0; q < rQ; ++q) {
      for (Index a = 0; a < rA; ++a) {
        Vec<S> ap = d.P.left[static_cast<size_t>(a)][static_cast<size_t>(p)];
        if (!vec_equal<S>(d.apply_u(ap, basis(rQ, q)),
                          d.A.multiply(d.A.basis_vec(a), d.apply_u(basis(rP, p), basis(rQ, q)))))
          bad.push_back("u not left A-linear");
        Vec<S> qa = d.Q.right[static_cast<size_t>(q)][static_cast<size_t>(a)];
        if (!vec_equal<S>(d.apply_u(basis(rP, p), qa),
                          d.A.multiply(d.apply_u(basis(rP, p), basis(rQ, q)), d.A.basis_vec(a))))
          bad.push_back("u not right A-linear");
      }
      for (Index b = 0; b < rB; ++b) {
        Vec<S> pb = d.P.right[static_cast<size_t>(p)][static_cast<size_t>(b)];
        Vec<S> bq = d.Q.left[static_cast<size_t>(b)][static_cast<size_t>(q)];
        if (!vec_equal<S>(d.apply_u(pb, basis(rQ, q)), d.apply_u(basis(rP, p), bq)))
          bad.push_back("u not balanced over B");
      }
    }
  // v is a B-bimodule map and is balanced over A
  for (Index q = 0; q < rQ && bad.size() < 48; ++q)
    for (Index p = 0; p < rP; ++p) {
      for (Index b = 0; b < rB; ++b) {
        Vec<S> bq = d.Q.left[static_cast<size_t>(b)][static_cast<size_t>(q)];
        if (!vec_equal<S>(d.apply_v(bq, basis(rP, p)),
                          d.B.multiply(d.B.basis_vec(b), d.apply_v(basis(rQ, q), basis(rP, p)))))
          bad.push_back("v not left B-linear");
        Vec<S> pb = d.P.right[static_cast<size_t>(p)][static_cast<size_t>(b)];
        if (!vec_equal<S>(d.apply_v(basis(rQ, q), pb),
                          d.B.multiply(d.apply_v(basis(rQ, q), basis(rP, p)), d.B.basis_vec(b))))
          bad.push_back("v not right B-linear");
      }
      for (Index a = 0; a < rA; ++a) {
        Vec<S> qa = d.Q.right[static_cast<size_t>(q)][static_cast<size_t>(a)];
        Vec<S> ap = d.P.left[static_cast<size_t>(a)][static_cast<size_t>(p)];
        if (!vec_equal<S>(d.apply_v(qa, basis(rP, p)), d.apply_v(basis(rQ, q), ap)))
          bad.push_back("v not balanced over A");
      }
    }

  // u and v are isomorphisms P (x)_B Q -> A and Q (x)_A P -> B
  try {
    BalancedTensor<S> pq = tensor_over_algebra<S>(rP, d.P.right, rQ, d.Q.left, d.B);
    if (!is_zero_matrix<S>(Mat<S>(d.u * (Mat<S>::Identity(rP * rQ, rP * rQ) - pq.sect * pq.proj))))
      bad.push_back("u does not descend to P (x)_B Q");
    else if (pq.rank != rA || !detail::invertible_over_ring<S>(Mat<S>(d.u * pq.sect)))
      bad.push_back("u is not an isomorphism onto A");
  } catch (const std::domain_error&) {
    bad.push_back("P (x)_B Q is not free");
  }
  try {
    BalancedTensor<S> qp = tensor_over_algebra<S>(rQ, d.Q.right, rP, d.P.left, d.A);
    if (!is_zero_matrix<S>(Mat<S>(d.v * (Mat<S>::Identity(rQ * rP, rQ * rP) - qp.sect * qp.proj))))
      bad.push_back("v does not descend to Q (x)_A P");
    else if (qp.rank != rB || !detail::invertible_over_ring<S>(Mat<S>(d.v * qp.sect)))
      bad.push_back("v is not an isomorphism onto B");
  } catch (const std::domain_error&) {
    bad.push_back("Q (x)_A P is not free");
  }

  // dual elements witness the units
  Vec<S> one_a = Vec<S>::Constant(rA, S(0));
  for (size_t j = 0; j < d.dual_p.size(); ++j) one_a += d.apply_u(d.dual_p[j], d.dual_q[j]);
  if (!vec_equal<S>(one_a, d.A.unit)) bad.push_back("u(sum p_j (x) q_j) != 1_A");
  Vec<S> one_b = Vec<S>::Constant(rB, S(0));
  for (size_t k = 0; k < d.dual_q2.size(); ++k) one_b += d.apply_v(d.dual_q2[k], d.dual_p2[k]);
  if (!vec_equal<S>(one_b, d.B.unit)) bad.push_back("v(sum q'_k (x) p'_k) != 1_B");

  // associativity: u(p (x) q) p' = p v(q (x) p') and v(q (x) p) q' = q u(p (x) q')
  for (Index p = 0; p < rP && bad.size() < 48; ++p)
    for (Index q = 0; q < rQ; ++q)
      for (Index p2 = 0; p2 < rP; ++p2) {
        Vec<S> lhs = Vec<S>::Constant(rP, S(0));
        Vec<S> ua = d.apply_u(basis(rP, p), basis(rQ, q));
        for (Index a = 0; a < rA; ++a)
          if (!scalar_is_zero(ua(a)))
            lhs += ua(a) * d.P.left[static_cast<size_t>(a)][static_cast<size_t>(p2)];
        Vec<S> vb = d.apply_v(basis(rQ, q), basis(rP, p2));
        Vec<S> rhs = Vec<S>::Constant(rP, S(0));
        for (Index b = 0; b < rB; ++b)
          if (!scalar_is_zero(vb(b)))
            rhs += vb(b) * d.P.right[static_cast<size_t>(p)][static_cast<size_t>(b)];
        if (!vec_equal<S>(lhs, rhs)) bad.push_back("u(p(x)q)p' != p v(q(x)p')");
      }
  for (Index q = 0; q < rQ && bad.size() < 48; ++q)
    for (Index p = 0; p < rP; ++p)
      for (Index q2 = 0; q2 < rQ; ++q2) {
        Vec<S> vb = d.apply_v(basis(rQ, q), basis(rP, p));
        Vec<S> lhs = Vec<S>::Constant(rQ, S(0));
        for (Index b = 0; b < rB; ++b)
          if (!scalar_is_zero(vb(b)))
            lhs += vb(b) * d.Q.left[static_cast<size_t>(b)][static_cast<size_t>(q2)];
        Vec<S> ua = d.apply_u(basis(rP, p), basis(rQ, q2));
        Vec<S> rhs = Vec<S>::Constant(rQ, S(0));
        for (Index a = 0; a < rA; ++a)
          if (!scalar_is_zero(ua(a)))
            rhs += ua(a) * d.Q.right[static_cast<size_t>(q)][static_cast<size_t>(a)];
        if (!vec_equal<S>(lhs, rhs)) bad.push_back("v(q(x)p)q' != q u(p(x)q')");
      }

  // theta: additive bijection with the twisted equivariance
  if (!detail::invertible_over_ring<S>(d.theta)) bad.push_back("theta is not bijective");
  for (Index a = 0; a < rA && bad.size() < 48; ++a)
    for (Index p = 0; p < rP; ++p)
      for (Index b = 0; b < rB; ++b) {
        Vec<S> apb = Vec<S>::Constant(rP, S(0));
        const Vec<S>& ap = d.P.left[static_cast<size_t>(a)][static_cast<size_t>(p)];
        for (Index x = 0; x < rP; ++x)
          if (!scalar_is_zero(ap(x)))
            apb += ap(x) * d.P.right[static_cast<size_t>(x)][static_cast<size_t>(b)];
        Vec<S> lhs = d.theta * apb;
        Vec<S> tp = d.theta * basis(rP, p);
        Vec<S> sb = d.B.conj(d.B.basis_vec(b));
        Vec<S> mid = Vec<S>::Constant(rQ, S(0));
        for (Index y = 0; y < rB; ++y)
          if (!scalar_is_zero(sb(y)))
            for (Index x = 0; x < rQ; ++x)
              if (!scalar_is_zero(tp(x)))
                mid += S(sb(y) * tp(x)) * d.Q.left[static_cast<size_t>(y)][static_cast<size_t>(x)];
        Vec<S> sa = d.A.conj(d.A.basis_vec(a));
        Vec<S> rhs = Vec<S>::Constant(rQ, S(0));
        for (Index x = 0; x < rQ; ++x)
          if (!scalar_is_zero(mid(x)))
            for (Index y = 0; y < rA; ++y)
              if (!scalar_is_zero(sa(y)))
                rhs += S(mid(x) * sa(y)) * d.Q.right[static_cast<size_t>(x)][static_cast<size_t>(y)];
        if (!vec_equal<S>(lhs, rhs)) bad.push_back("theta(a p b) != conj(b) theta(p) conj(a)");
      }

  // the two u/v symmetry conditions
  for (Index p = 0; p < rP && bad.size() < 48; ++p)
    for (Index p2 = 0; p2 < rP; ++p2) {
      Vec<S> tp2 = d.theta * basis(rP, p2);
      Vec<S> tp = d.theta * basis(rP, p);
      if (!vec_equal<S>(d.apply_u(basis(rP, p), tp2),
                        Vec<S>(d.A.sigma * d.apply_u(basis(rP, p2), tp))))
        bad.push_back("u(p (x) theta(p')) != conj(u(p' (x) theta(p)))");
      if (!vec_equal<S>(d.apply_v(tp, basis(rP, p2)),
                        Vec<S>(d.B.sigma * d.apply_v(tp2, basis(rP, p)))))
        bad.push_back("v(theta(p) (x) p') != conj(v(theta(p') (x) p))");
    }

  // compatibility: theta maps {p_j} onto {q_j} as sets
  if (d.dual_p.size() != d.dual_q.size()) {
    bad.push_back("dual element lists have different lengths");
  } else {
    std::vector<Vec<S>> qs(d.dual_q);
    for (auto& p : d.dual_p) {
      Vec<S> tp = d.theta * p;
      bool found = false;
      for (auto it = qs.begin(); it != qs.end(); ++it)
        if (vec_equal<S>(*it, tp)) {
          qs.erase(it);
          found = true;
          break;
        }
      if (!found) {
        bad.push_back("theta does not map {p_j} onto {q_j}");
        break;
      }
    }
  }
  return bad;
}

/// Identity Morita data: A = B, P = Q = A, theta = sigma.
template <class S>
HermitianMoritaData<S> identity_morita_data(const InvolutiveAlgebra<S>& a) {
  HermitianMoritaData<S> d;
  d.A = a;
  d.B = a;
  d.P = MoritaBimodule<S>{a.rank, a.mul, a.mul};
  d.Q = d.P;
  d.u = Mat<S>::Constant(a.rank, a.rank * a.rank, S(0));
  for (Index i = 0; i < a.rank; ++i)
    for (Index j = 0; j < a.rank; ++j)
      d.u.col(i * a.rank + j) = a.mul[static_cast<size_t>(i)][static_cast<size_t>(j)];
  d.v = d.u;
  d.theta = a.sigma;
  d.dual_p = {a.unit};
  d.dual_q = {a.unit};
  d.dual_p2 = {a.unit};
  d.dual_q2 = {a.unit};
  return d;
}

/// Row/column Morita data between A and M_m(A): P = row vectors, Q = column
/// vectors, u = row.col, v = col.row, theta = entrywise conjugation composed
/// with transposition.
template <class S>
HermitianMoritaData<S> matrix_morita_data(const InvolutiveAlgebra<S>& a, Index m) {
  HermitianMoritaData<S> d;
  d.A = a;
  d.B = matrix_algebra<S>(a, m);
  const Index ra = a.rank, rP = m * ra;
  auto pidx = [&](Index slot, Index k) { return slot * ra + k; };
  auto bidx = [&](Index i, Index j, Index k) { return (i * m + j) * ra + k; };

  d.P.rank = rP;
  d.Q.rank = rP;
  d.P.left.assign(static_cast<size_t>(ra), std::vector<Vec<S>>(static_cast<size_t>(rP),
                                                               Vec<S>::Constant(rP, S(0))));
  d.P.right.assign(static_cast<size_t>(rP), std::vector<Vec<S>>(static_cast<size_t>(d.B.rank),
                                                                Vec<S>::Constant(rP, S(0))));
  d.Q.left.assign(static_cast<size_t>(d.B.rank), std::vector<Vec<S>>(static_cast<size_t>(rP),
                                                                     Vec<S>::Constant(rP, S(0))));
  d.Q.right.assign(static_cast<size_t>(rP), std::vector<Vec<S>>(static_cast<size_t>(ra),
                                                                Vec<S>::Constant(rP, S(0))));
  for (Index av = 0; av < ra; ++av)
    for (Index s = 0; s < m; ++s)
      for (Index k = 0; k < ra; ++k) {
        const Vec<S>& prod = a.mul[static_cast<size_t>(av)][static_cast<size_t>(k)];
        for (Index k2 = 0; k2 < ra; ++k2)
          d.P.left[static_cast<size_t>(av)][static_cast<size_t>(pidx(s, k))](pidx(s, k2)) +=
              prod(k2);
      }
  for (Index s = 0; s < m; ++s)
    for (Index k = 0; k < ra; ++k)
      for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j)
          for (Index l = 0; l < ra; ++l) {
            if (s != i) continue;
            const Vec<S>& prod = a.mul[static_cast<size_t>(k)][static_cast<size_t>(l)];
            for (Index k2 = 0; k2 < ra; ++k2)
              d.P.right[static_cast<size_t>(pidx(s, k))][static_cast<size_t>(bidx(i, j, l))](
                  pidx(j, k2)) += prod(k2);
          }
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index l = 0; l < ra; ++l)
        for (Index s = 0; s < m; ++s)
          for (Index k = 0; k < ra; ++k) {
            if (j != s) continue;
            const Vec<S>& prod = a.mul[static_cast<size_t>(l)][static_cast<size_t>(k)];
            for (Index k2 = 0; k2 < ra; ++k2)
              d.Q.left[static_cast<size_t>(bidx(i, j, l))][static_cast<size_t>(pidx(s, k))](
                  pidx(i, k2)) += prod(k2);
          }
  for (Index s = 0; s < m; ++s)
    for (Index k = 0; k < ra; ++k)
      for (Index av = 0; av < ra; ++av) {
        const Vec<S>& prod = a.mul[static_cast<size_t>(k)][static_cast<size_t>(av)];
        for (Index k2 = 0; k2 < ra; ++k2)
          d.Q.right[static_cast<size_t>(pidx(s, k))][static_cast<size_t>(av)](pidx(s, k2)) +=
              prod(k2);
      }

  d.u = Mat<S>::Constant(ra, rP * rP, S(0));
  d.v = Mat<S>::Constant(d.B.rank, rP * rP, S(0));
  for (Index s = 0; s < m; ++s)
    for (Index k = 0; k < ra; ++k)
      for (Index s2 = 0; s2 < m; ++s2)
        for (Index k2 = 0; k2 < ra; ++k2) {
          const Vec<S>& prod = a.mul[static_cast<size_t>(k)][static_cast<size_t>(k2)];
          if (s == s2) d.u.col(pidx(s, k) * rP + pidx(s2, k2)) += prod;
          for (Index k3 = 0; k3 < ra; ++k3)
            d.v(bidx(s, s2, k3), pidx(s, k) * rP + pidx(s2, k2)) += prod(k3);
        }

  d.theta = Mat<S>::Constant(rP, rP, S(0));
  for (Index s = 0; s < m; ++s) d.theta.block(s * ra, s * ra, ra, ra) = a.sigma;

  Vec<S> p1 = Vec<S>::Constant(rP, S(0));
  p1.segment(0, ra) = a.unit;
  d.dual_p = {p1};
  d.dual_q = {p1};
  for (Index s = 0; s < m; ++s) {
    Vec<S> e = Vec<S>::Constant(rP, S(0));
    e.segment(s * ra, ra) = a.unit;
    d.dual_q2.push_back(e);
    d.dual_p2.push_back(e);
  }
  return d;
}

/// Q (x)_A M (x)_A P with the swapped involution q(x)m(x)p ->
/// theta(p) (x) mbar (x) theta^{-1}(q), presented on the free quotient of the
/// plain triple tensor product by the balancing relations.
template <class S>
InvolutiveBimodule<S> induced_involutive_bimodule(const HermitianMoritaData<S>& d,
                                                  const InvolutiveBimodule<S>& m) {
  const Index rQ = d.Q.rank, rM = m.rank, rP = d.P.rank, rA = d.A.rank, rB = d.B.rank;
  const Index full = rQ * rM * rP;
  auto idx = [&](Index q, Index x, Index p) { return (q * rM + x) * rP + p; };

  Mat<S> rel = Mat<S>::Constant(full, 2 * rA * full, S(0));
  Index c = 0;
  for (Index a = 0; a < rA; ++a)
    for (Index q = 0; q < rQ; ++q)
      for (Index x = 0; x < rM; ++x)
        for (Index p = 0; p < rP; ++p) {
          const Vec<S>& qa = d.Q.right[static_cast<size_t>(q)][static_cast<size_t>(a)];
          for (Index q2 = 0; q2 < rQ; ++q2) rel(idx(q2, x, p), c) += qa(q2);
          const Vec<S>& ax = m.left[static_cast<size_t>(a)][static_cast<size_t>(x)];
          for (Index x2 = 0; x2 < rM; ++x2) rel(idx(q, x2, p), c) -= ax(x2);
          ++c;
          const Vec<S>& xa = m.right[static_cast<size_t>(x)][static_cast<size_t>(a)];
          for (Index x2 = 0; x2 < rM; ++x2) rel(idx(q, x2, p), c) += xa(x2);
          const Vec<S>& ap = d.P.left[static_cast<size_t>(a)][static_cast<size_t>(p)];
          for (Index p2 = 0; p2 < rP; ++p2) rel(idx(q, x, p2), c) -= ap(p2);
          ++c;
        }
  QuotientPresentation<S> qp = quotient_presentation<S>(rel);
  const Index rank = qp.proj.rows();

  auto lift_and_project = [&](const Mat<S>& lift, const char* what) {
    if (!is_zero_matrix<S>(Mat<S>(qp.proj * lift * rel)))
      throw IllDefinedInvolution(std::string(what) + " does not descend to the balanced tensor");
    return Mat<S>(qp.proj * lift * qp.sect);
  };

  InvolutiveBimodule<S> out;
  out.ring = m.ring;
  out.rank = rank;
  out.left.assign(static_cast<size_t>(rB), std::vector<Vec<S>>(static_cast<size_t>(rank)));
  out.right.assign(static_cast<size_t>(rank), std::vector<Vec<S>>(static_cast<size_t>(rB)));
  for (Index b = 0; b < rB; ++b) {
    Mat<S> lift = Mat<S>::Constant(full, full, S(0));
    for (Index q = 0; q < rQ; ++q) {
      const Vec<S>& bq = d.Q.left[static_cast<size_t>(b)][static_cast<size_t>(q)];
      for (Index x = 0; x < rM; ++x)
        for (Index p = 0; p < rP; ++p)
          for (Index q2 = 0; q2 < rQ; ++q2) lift(idx(q2, x, p), idx(q, x, p)) = bq(q2);
    }
    Mat<S> act = lift_and_project(lift, "left B-action");
    for (Index n = 0; n < rank; ++n) out.left[static_cast<size_t>(b)][static_cast<size_t>(n)] =
        act.col(n);
  }
  for (Index b = 0; b < rB; ++b) {
    Mat<S> lift = Mat<S>::Constant(full, full, S(0));
    for (Index p = 0; p < rP; ++p) {
      const Vec<S>& pb = d.P.right[static_cast<size_t>(p)][static_cast<size_t>(b)];
      for (Index q = 0; q < rQ; ++q)
        for (Index x = 0; x < rM; ++x)
          for (Index p2 = 0; p2 < rP; ++p2) lift(idx(q, x, p2), idx(q, x, p)) = pb(p2);
    }
    Mat<S> act = lift_and_project(lift, "right B-action");
    for (Index n = 0; n < rank; ++n) out.right[static_cast<size_t>(n)][static_cast<size_t>(b)] =
        act.col(n);
  }

  Mat<S> theta_inv;
  if constexpr (ScalarTraits<S>::is_field) {
    theta_inv = inverse_field<S>(d.theta);
  } else {
    theta_inv = inverse_unimodular(d.theta);
  }
  Mat<S> lift = Mat<S>::Constant(full, full, S(0));
  for (Index q = 0; q < rQ; ++q)
    for (Index x = 0; x < rM; ++x)
      for (Index p = 0; p < rP; ++p) {
        Vec<S> tq = theta_inv.col(q);            // theta^{-1}(e_q) in P
        Vec<S> tp = d.theta.col(p);              // theta(e_p) in Q
        Vec<S> mx = m.tau.col(x);
        for (Index q2 = 0; q2 < rQ; ++q2) {
          if (scalar_is_zero(tp(q2))) continue;
          for (Index x2 = 0; x2 < rM; ++x2) {
            if (scalar_is_zero(mx(x2))) continue;
            for (Index p2 = 0; p2 < rP; ++p2) {
              if (scalar_is_zero(tq(p2))) continue;
              lift(idx(q2, x2, p2), idx(q, x, p)) += tp(q2) * mx(x2) * tq(p2);
            }
          }
        }
      }
  out.tau = lift_and_project(lift, "induced involution");
  return out;
}

}  // namespace refhom

#endif  // REFHOM_INVOLUTIVE_HPP
