#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scer/spectral.hpp"
#include "test_support.hpp"

TEST_CASE("pseudoinverse of the single-edge Laplacian") {
  Eigen::MatrixXd L(2, 2);
  L << 1, -1, -1, 1;
  Eigen::MatrixXd P = scer::pinv(L);
  Eigen::MatrixXd expect = 0.25 * L;
  CHECK((P - expect).norm() < 1e-12);
}

TEST_CASE("pinv of invertible matrix is the inverse") {
  std::mt19937 rng(3);
  Eigen::MatrixXd A = Eigen::MatrixXd::Random(5, 5);
  A += 6.0 * Eigen::MatrixXd::Identity(5, 5);  // keep it far from singular
  CHECK((scer::pinv(A) - A.inverse()).norm() < 1e-10);
}

TEST_CASE("pinv of zero and empty matrices") {
  Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(3, 2);
  CHECK(scer::pinv(Z).isZero());
  CHECK(scer::pinv(Z).rows() == 2);
  CHECK(scer::pinv(Z).cols() == 3);
  Eigen::MatrixXd E(0, 4);
  CHECK(scer::pinv(E).rows() == 4);
  CHECK(scer::pinv(E).cols() == 0);
}

TEST_CASE("penrose identities hold for rectangular input") {
  std::mt19937 rng(5);
  Eigen::MatrixXd A = Eigen::MatrixXd::Random(6, 4);
  A.col(3) = A.col(0) + A.col(1);  // force a rank drop
  Eigen::MatrixXd P = scer::pinv(A);
  auto rep = scer::verify_moore_penrose(A, P, 1e-9);
  CHECK(rep.all_pass());
  for (double r : rep.residual) CHECK(r < 1e-9);
}

TEST_CASE("penrose identities fail for a wrong candidate") {
  Eigen::MatrixXd A = Eigen::MatrixXd::Identity(3, 3) * 2.0;
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(3, 3);  // not 0.5 I
  auto rep = scer::verify_moore_penrose(A, bad, 1e-9);
  CHECK(!rep.all_pass());
}

TEST_CASE("rank-aware truncation near the tolerance") {
  // singular values 1 and eps: eps below the cutoff must be dropped
  Eigen::MatrixXd A = Eigen::Vector2d(1.0, 1e-14).asDiagonal();
  Eigen::MatrixXd P = scer::pinv(A);
  CHECK(P(0, 0) == doctest::Approx(1.0));
  CHECK(P(1, 1) == doctest::Approx(0.0));
  // explicit loose tolerance keeps only the big one as well
  scer::PinvConfig loose{1e-6};
  Eigen::MatrixXd A2 = Eigen::Vector2d(1.0, 1e-8).asDiagonal();
  CHECK(scer::pinv(A2, loose)(1, 1) == doctest::Approx(0.0));
  // default keeps it
  CHECK(scer::pinv(A2)(1, 1) == doctest::Approx(1e8));
}

TEST_CASE("non-finite input rejected") {
  Eigen::MatrixXd A(2, 2);
  A << 1, 0, 0, std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(scer::pinv(A), scer::NonFinite);
}

TEST_CASE("pinv_in_bases matches conjugated pinv and satisfies weighted penrose") {
  std::mt19937 rng(9);
  auto K = testsup::random_complex(rng);
  int p = 1;
  auto B = scer::boundary_matrix(K, p, scer::MatrixBasis::Standard).entries;
  Eigen::VectorXd gdom = K.weights(p).cwiseInverse();      // chain gram, deg p
  Eigen::VectorXd gcod = K.weights(p - 1).cwiseInverse();  // deg p-1
  Eigen::MatrixXd P = scer::pinv_in_bases(B, gdom, gcod);
  auto rep = scer::verify_moore_penrose(B, P, 1e-8, &gdom, &gcod);
  CHECK(rep.all_pass());

  // plain transpose-symmetry check fails for the weighted pinv in general
  auto plain = scer::verify_moore_penrose(B, scer::pinv(B), 1e-8);
  CHECK(plain.all_pass());
}

TEST_CASE("pinv_in_bases validates gram shapes") {
  Eigen::MatrixXd A = Eigen::MatrixXd::Identity(2, 3);
  Eigen::VectorXd good3 = Eigen::VectorXd::Ones(3);
  Eigen::VectorXd good2 = Eigen::VectorXd::Ones(2);
  Eigen::VectorXd bad = Eigen::VectorXd::Zero(3);
  CHECK_THROWS_AS(scer::pinv_in_bases(A, good2, good3), scer::ShapeMismatch);
  CHECK_THROWS_AS(scer::pinv_in_bases(A, bad, good2), scer::NonDiagonalGram);
}
