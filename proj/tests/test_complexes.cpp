#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "refhom/complexes.hpp"

using namespace refhom;

namespace {

template <class S>
SpMat<S> sp1x1(const S& v) {
  SpMat<S> m(1, 1);
  if (!scalar_is_zero(v)) m.insert(0, 0) = v;
  m.makeCompressed();
  return m;
}

template <class S>
SpMat<S> sp_scalar_id(Index n, const S& v) {
  SpMat<S> m(n, n);
  for (Index i = 0; i < n; ++i) m.insert(i, i) = v;
  m.makeCompressed();
  return m;
}

// Def.-2.1 sign: -1 exactly when (q = 0,3 mod 4 and p odd) or (q = 1,2 mod 4
// and p even).
int epsilon_sign(Index p, Index q) {
  int qm = static_cast<int>(q % 4);
  bool low = (qm == 0 || qm == 3);
  bool p_odd = (p % 2 == 1);
  return ((low && p_odd) || (!low && !p_odd)) ? -1 : +1;
}

// Rank-one reflexive bicomplex of the trivial module over Z, built by hand
// straight from the sign table; independent cross-check for the engine.
Bicomplex<Int> trivial_module_bicomplex(Index P, Index Q) {
  std::vector<Index> ranks(static_cast<size_t>((P + 1) * (Q + 1)), 1);
  std::vector<SpMat<Int>> dh(ranks.size()), dv(ranks.size());
  for (Index p = 0; p <= P; ++p)
    for (Index q = 0; q <= Q; ++q) {
      size_t i = static_cast<size_t>(p * (Q + 1) + q);
      if (p >= 1) dh[i] = sp1x1<Int>(Int(1 + epsilon_sign(p, q)));
      if (q >= 1) dv[i] = sp1x1<Int>(Int(q % 2 == 0 ? 1 : 0));  // sum of (q+1) alternating faces
    }
  return Bicomplex<Int>(Ring::integers(), P, Q, std::move(ranks), std::move(dh), std::move(dv));
}

}  // namespace

TEST_CASE("homology_range on classical small complexes") {
  Ring z = Ring::integers();

  // circle: Z <-0- Z, padded with a zero degree on top
  ChainComplex<Int> circle(z, {1, 1, 0},
                           {SpMat<Int>(), sp1x1<Int>(Int(0)), SpMat<Int>(1, 0)});
  auto h = homology_range<Int>(circle, 0, 1);
  CHECK(h[0].free_rank == 1);
  CHECK(h[1].free_rank == 1);
  CHECK(h[1].torsion.empty());

  // cellular RP^2
  ChainComplex<Int> rp2(z, {1, 1, 1, 0},
                        {SpMat<Int>(), sp1x1<Int>(Int(0)), sp1x1<Int>(Int(2)), SpMat<Int>(1, 0)});
  auto hr = homology_range<Int>(rp2, 0, 2);
  CHECK(hr[0].to_string() == "Z");
  CHECK(hr[1].to_string() == "Z/2");
  CHECK(hr[2].to_string() == "0");

  // exact complex: identity differential
  ChainComplex<Int> exact(z, {1, 1}, {SpMat<Int>(), sp1x1<Int>(Int(1))});
  CHECK(homology_range<Int>(exact, 0, 0)[0].is_zero());

  // invalid data is rejected
  CHECK_THROWS_AS(ChainComplex<Int>(z, {1, 1, 1},
                                    {SpMat<Int>(), sp1x1<Int>(Int(1)), sp1x1<Int>(Int(1))}),
                  SquareZeroViolation);
}

TEST_CASE("total_complex: concentrated and zero-differential bicomplexes") {
  Ring z = Ring::integers();

  Bicomplex<Int> pt(z, 0, 0, {1}, {SpMat<Int>()}, {SpMat<Int>()});
  ChainComplex<Int> tot = total_complex(pt);
  CHECK(tot.ranks == std::vector<Index>{1});

  // 2x2 grid of rank-1 cells, all differentials zero -> Tot ranks (1,2,1)
  std::vector<SpMat<Int>> zh(4), zv(4);
  for (auto* v : {&zh, &zv})
    for (auto& m : *v) m = sp1x1<Int>(Int(0));
  Bicomplex<Int> grid(z, 1, 1, {1, 1, 1, 1}, std::move(zh), std::move(zv));
  ChainComplex<Int> tg = total_complex(grid);
  CHECK(tg.ranks == std::vector<Index>({1, 2, 1}));
}

TEST_CASE("total_complex of a one-row bicomplex is that row") {
  Ring z = Ring::integers();
  // row: Z <-0- Z <-2- Z along the p direction
  std::vector<Index> ranks = {1, 1, 1};
  std::vector<SpMat<Int>> dh(3), dv(3);
  dh[1] = sp1x1<Int>(Int(0));
  dh[2] = sp1x1<Int>(Int(2));
  Bicomplex<Int> row(z, 2, 0, std::move(ranks), std::move(dh), std::move(dv));
  ChainComplex<Int> tot = total_complex(row);
  CHECK(tot.ranks == std::vector<Index>({1, 1, 1}));
  CHECK(to_dense(tot.diff(1))(0, 0) == 0);
  CHECK(to_dense(tot.diff(2))(0, 0) == 2);
}

TEST_CASE("hand-built Def-2.1 bicomplex of the trivial module over Z") {
  Bicomplex<Int> b = trivial_module_bicomplex(3, 3);
  CHECK(b.squares_commute);
  ChainComplex<Int> tot = total_complex(b);
  auto h = homology_range<Int>(tot, 0, 2);
  CHECK(h[0].to_string() == "Z");
  CHECK(h[1].to_string() == "Z/2");
  CHECK(h[2].to_string() == "0");
}

TEST_CASE("tricomplex: concentrated, degenerate third direction, random tensor cubes") {
  Ring z = Ring::integers();

  Tricomplex<Int> pt(z, 0, 0, 0, {1}, {SpMat<Int>()}, {SpMat<Int>()}, {SpMat<Int>()});
  CHECK(total_complex_3(pt).ranks == std::vector<Index>{1});

  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(1, 2), val(-2, 2);
  auto random_two_term = [&](Index& r0, Index& r1, Mat<Int>& d) {
    r0 = dim(rng);
    r1 = dim(rng);
    d = Mat<Int>(r0, r1);
    for (Index j = 0; j < r1; ++j)
      for (Index i = 0; i < r0; ++i) d(i, j) = val(rng);
  };

  for (int trial = 0; trial < 10; ++trial) {
    // triple tensor product of three 2-term complexes: the three raw
    // differential families commute pairwise, squares are vacuous
    Index a0, a1, b0, b1, c0, c1;
    Mat<Int> dA, dB, dC;
    random_two_term(a0, a1, dA);
    random_two_term(b0, b1, dB);
    random_two_term(c0, c1, dC);
    auto dimof = [&](Index p, Index q, Index s) {
      return (p ? a1 : a0) * (q ? b1 : b0) * (s ? c1 : c0);
    };
    std::vector<Index> ranks(8);
    std::vector<SpMat<Int>> d1(8), d2(8), d3(8);
    for (Index p = 0; p <= 1; ++p)
      for (Index q = 0; q <= 1; ++q)
        for (Index s = 0; s <= 1; ++s) {
          size_t i = static_cast<size_t>((p * 2 + q) * 2 + s);
          ranks[i] = dimof(p, q, s);
          SpMat<Int> ia = sp_identity<Int>(p ? a1 : a0);
          SpMat<Int> ib = sp_identity<Int>(q ? b1 : b0);
          SpMat<Int> ic = sp_identity<Int>(s ? c1 : c0);
          if (p) d1[i] = sp_kron<Int>(sp_kron<Int>(to_sparse<Int>(dA), ib), ic);
          if (q) d2[i] = sp_kron<Int>(sp_kron<Int>(ia, to_sparse<Int>(dB)), ic);
          if (s) d3[i] = sp_kron<Int>(sp_kron<Int>(ia, ib), to_sparse<Int>(dC));
        }
    Tricomplex<Int> t(z, 1, 1, 1, ranks, d1, d2, d3);
    CHECK_NOTHROW(total_complex_3(t));  // ctor of the result asserts d*d = 0

    // third direction trivial: totalization agrees with the bicomplex one
    std::vector<Index> branks(4);
    std::vector<SpMat<Int>> bh(4), bv(4), e3(4);
    for (Index p = 0; p <= 1; ++p)
      for (Index q = 0; q <= 1; ++q) {
        size_t bi = static_cast<size_t>(p * 2 + q);
        size_t ti = static_cast<size_t>((p * 2 + q) * 2);
        branks[bi] = ranks[ti];
        bh[bi] = d1[ti];
        bv[bi] = d2[ti];
      }
    Tricomplex<Int> flat(z, 1, 1, 0, branks, bh, bv, e3);
    Bicomplex<Int> bc(z, 1, 1, branks, bh, bv);
    ChainComplex<Int> t3 = total_complex_3(flat);
    ChainComplex<Int> t2 = total_complex(bc);
    REQUIRE(t3.ranks == t2.ranks);
    for (Index n = 1; n <= t2.top_degree(); ++n)
      CHECK(matrices_equal<Int>(t3.diff(n), t2.diff(n)));
  }
}

TEST_CASE("quotient_by_involution base cases") {
  Ring q = Ring::rationals();

  // Hochschild complex of Q: rank one everywhere, boundary alternates 0, 1;
  // chain-level involution is the (-1)^{n(n+1)/2} twist of the identity
  const Index N = 5;
  std::vector<Index> ranks(N + 1, 1);
  std::vector<SpMat<Rat>> diffs(N + 1);
  std::vector<SpMat<Rat>> inv(N + 1);
  for (Index n = 0; n <= N; ++n) {
    if (n >= 1) diffs[n] = sp1x1<Rat>(Rat(n % 2 == 0 ? 1 : 0));
    int eta = (n % 4 == 0 || n % 4 == 3) ? 1 : -1;
    inv[n] = sp1x1<Rat>(Rat(eta));
  }
  ChainComplex<Rat> c(q, ranks, diffs);

  // R = identity, sign +1: quotient by zero, complex unchanged
  std::vector<SpMat<Rat>> ident(N + 1);
  for (Index n = 0; n <= N; ++n) ident[n] = sp_identity<Rat>(1);
  ChainComplex<Rat> same = quotient_by_involution<Rat>(c, ident, +1);
  CHECK(same.ranks == c.ranks);
  for (Index n = 1; n <= N; ++n) CHECK(matrices_equal<Rat>(same.diff(n), c.diff(n)));

  // R = identity, sign -1: quotient by everything, zero complex
  ChainComplex<Rat> zeroed = quotient_by_involution<Rat>(c, ident, -1);
  for (Index n = 0; n <= N; ++n) CHECK(zeroed.rank_at(n) == 0);

  // plus-quotient of the Hochschild complex of Q: homology Q in degree 0
  ChainComplex<Rat> plus = quotient_by_involution<Rat>(c, inv, +1);
  auto hp = homology_range<Rat>(plus, 0, N - 1);
  CHECK(hp[0].free_rank == 1);
  for (Index n = 1; n < N; ++n) CHECK(hp[n].is_zero());

  // minus-quotient: zero in all degrees
  ChainComplex<Rat> minus = quotient_by_involution<Rat>(c, inv, -1);
  auto hm = homology_range<Rat>(minus, 0, N - 1);
  for (Index n = 0; n < N; ++n) CHECK(hm[n].is_zero());
}

TEST_CASE("quotient_by_involution error paths") {
  Ring z = Ring::integers();
  ChainComplex<Int> c(z, {1}, {SpMat<Int>()});
  std::vector<SpMat<Int>> ident = {sp_identity<Int>(1)};
  CHECK_THROWS_AS(quotient_by_involution<Int>(c, ident, +1), TwoNotInvertible);

  Ring f2 = Ring::prime_field(2);
  ChainComplex<Fp> c2(f2, {1}, {SpMat<Fp>()});
  std::vector<SpMat<Fp>> id2 = {sp_scalar_id<Fp>(1, Fp(1, 2))};
  CHECK_THROWS_AS(quotient_by_involution<Fp>(c2, id2, +1), TwoNotInvertible);

  // a differential that does not descend: d(e2) = e1 but e2 is killed while
  // e1 survives
  Ring q = Ring::rationals();
  Mat<Rat> d1(2, 2);
  d1 << Rat(0), Rat(1), Rat(0), Rat(0);
  ChainComplex<Rat> bad(q, {2, 2}, {SpMat<Rat>(), to_sparse<Rat>(d1)});
  Mat<Rat> r1(2, 2);
  r1 << Rat(1), Rat(0), Rat(0), Rat(-1);
  std::vector<SpMat<Rat>> invs = {sp_identity<Rat>(2), to_sparse<Rat>(r1)};
  CHECK_THROWS_AS(quotient_by_involution<Rat>(bad, invs, +1), IllDefinedDifferential);
}
