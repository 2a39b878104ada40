#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liedec/closure.hpp"
#include "liedec/repr.hpp"
#include "support.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

using namespace liedec;
using namespace liedec::test;

namespace {

// ad matrices of i x(x)1 and i 1(x)x in the ordered two-spin basis (reference values)
RMatrix reference_ad_x1() {
  RMatrix m = RMatrix::Zero(6, 6);
  m(2, 5) = 1;
  m(3, 4) = -1;
  m(4, 3) = 1;
  m(5, 2) = -1;
  return m;
}

RMatrix reference_ad_1x() {
  RMatrix m = RMatrix::Zero(6, 6);
  m(2, 4) = 1;
  m(3, 5) = -1;
  m(4, 2) = -1;
  m(5, 3) = 1;
  return m;
}

// su(2) in the basis (i x, i y, i z) with [e1,e2]=e3 and cyclic
std::array<RMatrix, 3> su2_ad_oracle() {
  RMatrix ax = RMatrix::Zero(3, 3), ay = RMatrix::Zero(3, 3), az = RMatrix::Zero(3, 3);
  ax(2, 1) = 1;   // [x, y] = z
  ax(1, 2) = -1;  // [x, z] = -y
  ay(0, 2) = 1;   // [y, z] = x
  ay(2, 0) = -1;  // [y, x] = -z
  az(1, 0) = 1;   // [z, x] = y
  az(0, 1) = -1;  // [z, y] = -x
  return {ax, ay, az};
}

std::vector<SkewHermitian> random_in(const LieBasis& b, std::mt19937_64& rng, int count) {
  std::normal_distribution<double> g;
  std::vector<SkewHermitian> out;
  for (int k = 0; k < count; ++k) {
    RVector c(b.size());
    for (Index i = 0; i < c.size(); ++i) c[i] = g(rng);
    out.push_back(b.combine(c));
  }
  return out;
}

}  // namespace

TEST_CASE("adjoint_matrix_reproduces_reference_matrices") {
  const LieBasis b = two_spin_basis();
  const auto raw = two_spin_elements();
  CHECK((adjoint_matrix(b, raw[0]) - reference_ad_x1()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((adjoint_matrix(b, raw[1]) - reference_ad_1x()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(adjoint_matrix(b, SkewHermitian::zero(4)).norm() == 0.0);
}

TEST_CASE("adjoint_matrix_su2_eigenvalues") {
  const LieBasis b = su2_basis();
  const RMatrix ad = adjoint_matrix(b, ih(sx()));
  CHECK((ad - su2_ad_oracle()[0]).norm() <= 1e-12);
  Eigen::EigenSolver<RMatrix> es(ad);
  std::vector<double> im;
  for (Index k = 0; k < 3; ++k) {
    CHECK(std::abs(es.eigenvalues()[k].real()) <= 1e-12);
    im.push_back(es.eigenvalues()[k].imag());
  }
  std::sort(im.begin(), im.end());
  CHECK(im[0] == doctest::Approx(-1.0));
  CHECK(im[1] == doctest::Approx(0.0));
  CHECK(im[2] == doctest::Approx(1.0));
}

TEST_CASE("adjoint_matrix_not_invariant") {
  const LieBasis bx = orthonormal_span({ih(sx())}, 2);
  CHECK_THROWS_AS(adjoint_matrix(bx, ih(sy())), LieError);
  try {
    adjoint_matrix(bx, ih(sy()));
  } catch (const LieError& e) {
    CHECK(e.kind() == ErrorKind::not_a_member);
  }
}

TEST_CASE("killing_gram_examples") {
  const auto oracle = su2_ad_oracle();
  RMatrix expected(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) expected(i, j) = (oracle[i] * oracle[j]).trace();
  }
  CHECK((expected - RMatrix(RVector::Constant(3, -2.0).asDiagonal())).norm() == 0.0);
  const std::vector<SkewHermitian> pauli_basis{ih(sx()), ih(sy()), ih(sz())};
  const RMatrix k = killing_gram(su2_basis(), pauli_basis);
  CHECK((k - expected).norm() <= 1e-12);

  const RMatrix kz = killing_gram(orthonormal_span({ih(sz())}, 2));
  CHECK(kz.rows() == 1);
  CHECK(kz(0, 0) == 0.0);

  const RMatrix k6 = killing_gram(two_spin_basis());
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(k6);
  CHECK(eig.eigenvalues().cwiseAbs().minCoeff() > 1e-6);
  CHECK((k6 - k6.transpose()).norm() <= 1e-12);
}

TEST_CASE("killing_gram_closure_failure") {
  const LieBasis xy = orthonormal_span({ih(sx()), ih(sy())}, 2);
  CHECK_THROWS_AS(killing_gram(xy), LieError);
}

TEST_CASE("is_semisimple_examples") {
  CHECK(is_semisimple(two_spin_basis()));
  CHECK_FALSE(is_semisimple(orthonormal_span({ih(sz())}, 2)));
  CHECK_FALSE(is_semisimple(u2_basis()));
  CHECK(is_semisimple(su2_basis()));
  // the center element i 1 has a zero row in the u(2) Gram matrix
  const RMatrix k = killing_gram(u2_basis());
  CHECK(k.row(0).norm() <= 1e-12);
}

TEST_CASE("killing_orthonormalize_su2") {
  const KillingFrame f = killing_orthonormalize(su2_basis());
  CHECK((f.gram() + RMatrix::Identity(3, 3)).norm() <= 1e-12);
  const std::array<SkewHermitian, 3> expected{ih(sx()), ih(sy()), ih(sz())};
  for (int k = 0; k < 3; ++k) {
    const auto& e = f.elements()[static_cast<std::size_t>(k)];
    // proportional to i sigma / sqrt(2): same direction and norm as that element
    CHECK(e.norm() == doctest::Approx(expected[k].norm() / std::sqrt(2.0)));
    CHECK(std::abs(hs_inner(e, expected[k])) == doctest::Approx(e.norm() * expected[k].norm()));
  }
  // idempotence: a basis with Gram proportional to -1 is only rescaled
  std::vector<SkewHermitian> normalized;
  for (const auto& e : f.elements()) normalized.push_back((1.0 / e.norm()) * e);
  const KillingFrame g = killing_orthonormalize(LieBasis::from_orthonormal(normalized, 2));
  for (int k = 0; k < 3; ++k) CHECK(dist(g.elements()[k], f.elements()[k]) <= 1e-12);
}

TEST_CASE("killing_orthonormalize_ideal_a_antisymmetric") {
  const auto a = ideal_a();
  const LieBasis sa = orthonormal_span({a[0], a[1], a[2]}, 4);
  const KillingFrame f = killing_orthonormalize(sa);
  CHECK(f.size() == 3);
  const RMatrix ad = f.adjoint(a[0]);
  CHECK((ad + ad.transpose()).norm() <= 1e-8);
  CHECK_THROWS_AS(killing_orthonormalize(u2_basis()), LieError);
}

TEST_CASE("representation_killing_invariance_and_spectrum") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    const Index n = 2 + trial % 3;
    const auto l = generate_closure({random_skew(rng, n), random_skew(rng, n, trial % 2 == 0)}).basis;
    const auto xs = random_in(l, rng, 3);
    const auto& x = xs[0];
    const auto& y = xs[1];
    const auto& z = xs[2];
    const RMatrix adx = adjoint_matrix(l, x);
    const RMatrix ady = adjoint_matrix(l, y);
    CHECK((adjoint_matrix(l, commutator(x, y)) - (adx * ady - ady * adx)).norm() <= 1e-8);
    const double inv = killing_form(l, commutator(z, x), y) + killing_form(l, x, commutator(z, y));
    CHECK(std::abs(inv) <= 1e-8);
    Eigen::EigenSolver<RMatrix> es(adx);
    CHECK(es.eigenvalues().real().cwiseAbs().maxCoeff() <= 1e-8);
  }
}
