#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "refhom/involutive.hpp"

using namespace refhom;

TEST_CASE("validate_algebra accepts the stock algebras and catches perturbations") {
  Ring z = Ring::integers();
  CHECK(validate_algebra<Int>(ground_algebra<Int>(z)).empty());
  CHECK(validate_algebra<Int>(dual_numbers<Int>(z)).empty());
  CHECK(validate_algebra<Int>(gaussian_algebra<Int>(z)).empty());

  // perturb one structure constant of k[x]/(x^2): x*1 = 1 + x breaks
  // associativity (and the unit law)
  InvolutiveAlgebra<Int> broken = dual_numbers<Int>(z);
  broken.mul[1][0](0) = 1;
  auto bad = validate_algebra<Int>(broken);
  bool found = false;
  for (auto& b : bad)
    if (b.find("associativity") != std::string::npos) found = true;
  CHECK(found);

  // break the anti-homomorphism on the gaussian integers: sigma(i) = 1 - i
  // still squares to the identity but fails multiplicativity
  InvolutiveAlgebra<Int> gi = gaussian_algebra<Int>(z);
  gi.sigma(0, 1) = 1;
  auto bad2 = validate_algebra<Int>(gi);
  bool anti = false;
  for (auto& b : bad2)
    if (b.find("anti-homomorphism") != std::string::npos) anti = true;
  CHECK(bad2.empty() == false);
  CHECK(anti);
}

TEST_CASE("group_algebra: C2, C3, S3") {
  Ring z = Ring::integers();

  InvolutiveAlgebra<Int> c2 = group_algebra<Int>(cyclic_group(2), z);
  CHECK(c2.rank == 2);
  CHECK(validate_algebra<Int>(c2).empty());
  // every element self-inverse: sigma is the identity
  CHECK(matrices_equal<Int>(c2.sigma, Mat<Int>(Mat<Int>::Identity(2, 2))));

  InvolutiveAlgebra<Int> c3 = group_algebra<Int>(cyclic_group(3), z);
  CHECK(validate_algebra<Int>(c3).empty());
  // inversion swaps the two non-identity basis elements
  CHECK(c3.sigma(0, 0) == 1);
  CHECK(c3.sigma(2, 1) == 1);
  CHECK(c3.sigma(1, 2) == 1);
  CHECK(c3.sigma(1, 1) == 0);

  InvolutiveAlgebra<Int> s3 = group_algebra<Int>(symmetric_group_3(), z);
  CHECK(s3.rank == 6);
  CHECK(validate_algebra<Int>(s3).empty());
  // sigma is the inversion permutation matrix
  FiniteGroup g = symmetric_group_3();
  for (int i = 0; i < 6; ++i) CHECK(s3.sigma(g.inv(i), i) == 1);

  // a non-group table is rejected with the failing axiom
  std::vector<std::vector<int>> not_assoc = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(FiniteGroup::from_table({"e", "a"}, not_assoc), NotAGroup);
}

TEST_CASE("matrix_algebra") {
  Ring z = Ring::integers();
  InvolutiveAlgebra<Int> base = ground_algebra<Int>(z);

  // m = 1 is an isomorphic copy
  InvolutiveAlgebra<Int> m1 = matrix_algebra<Int>(base, 1);
  CHECK(m1.rank == 1);
  CHECK(validate_algebra<Int>(m1).empty());

  // M_2(Z): rank 4, sigma swaps e01 and e10
  InvolutiveAlgebra<Int> m2 = matrix_algebra<Int>(base, 2);
  CHECK(m2.rank == 4);
  CHECK(validate_algebra<Int>(m2).empty());
  CHECK(m2.sigma(0, 0) == 1);  // e00 fixed
  CHECK(m2.sigma(2, 1) == 1);  // e01 -> e10
  CHECK(m2.sigma(1, 2) == 1);
  CHECK(m2.sigma(3, 3) == 1);

  // M_2(Z[i]) with conjugation: conjugate-transpose, all axioms pass
  InvolutiveAlgebra<Int> m2i = matrix_algebra<Int>(gaussian_algebra<Int>(z), 2);
  CHECK(m2i.rank == 8);
  CHECK(validate_algebra<Int>(m2i).empty());
}

TEST_CASE("bimodule validation") {
  Ring z = Ring::integers();
  InvolutiveAlgebra<Int> a = dual_numbers<Int>(z);
  InvolutiveBimodule<Int> m = regular_bimodule<Int>(a);
  CHECK(validate_bimodule<Int>(a, m).empty());

  InvolutiveBimodule<Int> wrong = m;
  wrong.tau(0, 0) = 2;
  CHECK(!validate_bimodule<Int>(a, wrong).empty());
}

TEST_CASE("trace map on matrix algebras") {
  Ring z = Ring::integers();
  InvolutiveAlgebra<Int> base = ground_algebra<Int>(z);

  // m = 1: identity maps
  auto tr1 = trace_map<Int>(base, 1, 2);
  for (auto& t : tr1) CHECK(matrices_equal<Int>(t, sp_identity<Int>(t.rows())));

  // n = 0, m = 2, A = Z: X -> x11 + x22
  auto tr2 = trace_map<Int>(base, 2, 1);
  Mat<Int> t0 = to_dense(tr2[0]);
  REQUIRE(t0.rows() == 1);
  REQUIRE(t0.cols() == 4);
  CHECK(t0(0, 0) == 1);  // e00
  CHECK(t0(0, 1) == 0);  // e01
  CHECK(t0(0, 2) == 0);  // e10
  CHECK(t0(0, 3) == 1);  // e11

  // n = 1, m = 2, A = Z: sum over x^(0)_{i0 i1} x^(1)_{i1 i0}; oracle by
  // direct expansion over the 16 matrix-unit pairs
  Mat<Int> t1 = to_dense(tr2[1]);
  REQUIRE(t1.rows() == 1);
  REQUIRE(t1.cols() == 16);
  Index ones = 0;
  for (Index c = 0; c < 16; ++c) {
    Index b0 = c / 4, b1 = c % 4;
    Index i0 = b0 / 2, j0 = b0 % 2, i1 = b1 / 2, j1 = b1 % 2;
    Int expect = (j0 == i1 && j1 == i0) ? 1 : 0;  // cyclic chain condition
    CHECK(t1(0, c) == expect);
    if (expect == 1) ++ones;
  }
  CHECK(ones == 4);
}

TEST_CASE("tensor_over_algebra base cases") {
  Ring z = Ring::integers();
  InvolutiveAlgebra<Int> a = group_algebra<Int>(cyclic_group(2), z);

  // A (x)_A A = A
  BalancedTensor<Int> aa = tensor_over_algebra<Int>(a.rank, a.mul, a.rank, a.mul, a);
  CHECK(aa.rank == a.rank);

  // k (x)_k V = V
  InvolutiveAlgebra<Int> k = ground_algebra<Int>(z);
  std::vector<std::vector<Vec<Int>>> v_left(1);
  for (Index i = 0; i < 3; ++i) v_left[0].push_back(Vec<Int>::Unit(3, i).cast<Int>());
  std::vector<std::vector<Vec<Int>>> k_right(1, {Vec<Int>::Constant(1, Int(1))});
  BalancedTensor<Int> kv = tensor_over_algebra<Int>(1, k_right, 3, v_left, k);
  CHECK(kv.rank == 3);

  // Z[C2] (x)_{Z[C2]} Z(trivial) = Z
  std::vector<std::vector<Vec<Int>>> triv_left(2);
  triv_left[0] = {Vec<Int>::Constant(1, Int(1))};
  triv_left[1] = {Vec<Int>::Constant(1, Int(1))};
  BalancedTensor<Int> ct = tensor_over_algebra<Int>(a.rank, a.mul, 1, triv_left, a);
  CHECK(ct.rank == 1);
}

TEST_CASE("Hermitian Morita data: identity and row/column data validate") {
  Ring z = Ring::integers();

  for (auto make : {+[](const Ring& r) { return ground_algebra<Int>(r); },
                    +[](const Ring& r) { return gaussian_algebra<Int>(r); }}) {
    InvolutiveAlgebra<Int> a = make(z);
    HermitianMoritaData<Int> idd = identity_morita_data<Int>(a);
    auto bad = validate_morita_data<Int>(idd);
    for (auto& b : bad) MESSAGE(b);
    CHECK(bad.empty());
  }

  HermitianMoritaData<Int> rc = matrix_morita_data<Int>(ground_algebra<Int>(z), 2);
  auto bad = validate_morita_data<Int>(rc);
  for (auto& b : bad) MESSAGE(b);
  CHECK(bad.empty());

  // perturbation: theta doubled violates the dual-set compatibility
  HermitianMoritaData<Int> warped = rc;
  warped.theta *= Int(2);
  auto viol = validate_morita_data<Int>(warped);
  CHECK(!viol.empty());
}

TEST_CASE("induced involutive bimodule") {
  Ring z = Ring::integers();

  // identity data on A with M = A recovers A as its own bimodule
  for (auto make : {+[](const Ring& r) { return group_algebra<Int>(cyclic_group(2), r); },
                    +[](const Ring& r) { return gaussian_algebra<Int>(r); }}) {
    InvolutiveAlgebra<Int> a = make(z);
    HermitianMoritaData<Int> idd = identity_morita_data<Int>(a);
    InvolutiveBimodule<Int> m = regular_bimodule<Int>(a);
    InvolutiveBimodule<Int> n = induced_involutive_bimodule<Int>(idd, m);
    CHECK(n.rank == a.rank);
    CHECK(validate_bimodule<Int>(a, n).empty());
  }

  // row/column data: Z induces M_2(Z) over M_2(Z), axioms validated
  HermitianMoritaData<Int> rc = matrix_morita_data<Int>(ground_algebra<Int>(z), 2);
  InvolutiveBimodule<Int> m = regular_bimodule<Int>(rc.A);
  InvolutiveBimodule<Int> n = induced_involutive_bimodule<Int>(rc, m);
  CHECK(n.rank == rc.B.rank);
  auto bad = validate_bimodule<Int>(rc.B, n);
  for (auto& b : bad) MESSAGE(b);
  CHECK(bad.empty());
}
