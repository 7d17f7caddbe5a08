#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scer/complex.hpp"
#include "test_support.hpp"

using scer::BasisKind;
using scer::MatrixBasis;
using scer::Side;
using scer::Simplex;
using scer::WeightedComplex;

TEST_CASE("downward closure and lexicographic order") {
  auto K = testsup::filled_triangle();
  CHECK(K.dim() == 2);
  CHECK(K.size(0) == 3);
  CHECK(K.size(1) == 3);
  CHECK(K.size(2) == 1);
  CHECK(K.simplices(1)[0] == Simplex{{0, 1}});
  CHECK(K.simplices(1)[1] == Simplex{{0, 2}});
  CHECK(K.simplices(1)[2] == Simplex{{1, 2}});
  CHECK(K.index_of(Simplex{{0, 2}}) == 1);
  CHECK(!K.index_of(Simplex{{0, 3}}));
}

TEST_CASE("weights default to one, explicit face weights stick") {
  auto K = WeightedComplex::from_facets({{0, 1, 2}}, {{{0, 1}, 0.5}});
  CHECK(K.weight(1, 0) == 0.5);
  CHECK(K.weight(1, 1) == 1.0);
  CHECK(K.weight(2, 0) == 1.0);
}

TEST_CASE("invalid construction rejected") {
  CHECK_THROWS_AS(WeightedComplex::from_facets({{0, 0, 1}}),
                  scer::MalformedFacet);
  CHECK_THROWS_AS(WeightedComplex::from_facets({{0, 1}}, {{{0, 1}, 0.0}}),
                  scer::NonPositiveWeight);
  CHECK_THROWS_AS(WeightedComplex::from_facets({{0, 1}}, {{{0, 1}, -2.0}}),
                  scer::NonPositiveWeight);
}

TEST_CASE("boundary matrix of the filled triangle") {
  auto K = testsup::filled_triangle();
  auto B1 = scer::boundary_matrix(K, 1, MatrixBasis::Standard);
  Eigen::MatrixXd expect1(3, 3);
  // columns: 01, 02, 12; rows: 0, 1, 2
  expect1 << -1, -1, 0, 1, 0, -1, 0, 1, 1;
  CHECK((B1.entries - expect1).norm() == doctest::Approx(0.0));

  auto B2 = scer::boundary_matrix(K, 2, MatrixBasis::Standard);
  Eigen::MatrixXd expect2(3, 1);
  expect2 << 1, -1, 1;  // d[012] = [12] - [02] + [01]
  CHECK((B2.entries - expect2).norm() == doctest::Approx(0.0));

  // boundary of a boundary is zero
  CHECK((B1.entries * B2.entries).norm() == doctest::Approx(0.0));
}

TEST_CASE("orthonormal boundary is the weighted conjugation") {
  std::mt19937 rng(7);
  auto K = testsup::random_complex(rng);
  for (int p = 1; p <= K.dim(); ++p) {
    auto Bs = scer::boundary_matrix(K, p, MatrixBasis::Standard).entries;
    auto Bo = scer::boundary_matrix(K, p, MatrixBasis::Orthonormal).entries;
    Eigen::MatrixXd direct =
        K.weights(p - 1).cwiseSqrt().cwiseInverse().asDiagonal() * Bs *
        K.weights(p).cwiseSqrt().asDiagonal();
    CHECK((Bo - direct).norm() < 1e-12);
  }
}

TEST_CASE("adjoints match the Gram-transpose identity") {
  std::mt19937 rng(11);
  auto K = testsup::random_complex(rng);
  for (int p = 1; p <= K.dim(); ++p) {
    // <d a, b>_{p-1} = <a, d* b>_p for random chains a, b
    Eigen::VectorXd a = Eigen::VectorXd::Random(K.size(p));
    Eigen::VectorXd b = Eigen::VectorXd::Random(K.size(p - 1));
    auto B = scer::boundary_matrix(K, p, MatrixBasis::Standard).entries;
    auto Bstar = scer::adjoint_boundary_matrix(K, p, MatrixBasis::Standard)
                     .entries;
    double lhs = (B * a).dot(K.weights(p - 1).cwiseInverse().asDiagonal() *
                             b.eval());
    double rhs = a.dot(K.weights(p).cwiseInverse().asDiagonal() *
                       (Bstar * b).eval());
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("coboundary adjoint pairs with the cochain inner product") {
  std::mt19937 rng(13);
  auto K = testsup::random_complex(rng);
  for (int p = 0; p < K.dim(); ++p) {
    Eigen::VectorXd f = Eigen::VectorXd::Random(K.size(p));
    Eigen::VectorXd g = Eigen::VectorXd::Random(K.size(p + 1));
    auto D = scer::coboundary_matrix(K, p, MatrixBasis::Standard).entries;
    auto Dstar =
        scer::adjoint_coboundary_matrix(K, p, MatrixBasis::Standard).entries;
    double lhs = (D * f).dot(K.weights(p + 1).asDiagonal() * g.eval());
    double rhs = f.dot(K.weights(p).asDiagonal() * (Dstar * g).eval());
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("change of basis round-trips and preserves inner products") {
  std::mt19937 rng(17);
  auto K = testsup::random_complex(rng);
  int p = 1;
  Eigen::VectorXd a = Eigen::VectorXd::Random(K.size(p));
  Eigen::VectorXd b = Eigen::VectorXd::Random(K.size(p));
  scer::Vec va = testsup::std_chain(p, a), vb = testsup::std_chain(p, b);

  scer::BasisTag ortho{p, BasisKind::OrthoChain};
  auto oa = scer::change_of_basis(K, va, ortho);
  auto ob = scer::change_of_basis(K, vb, ortho);
  CHECK(scer::inner_product(K, va, vb) ==
        doctest::Approx(scer::inner_product(K, oa, ob)).epsilon(1e-10));

  auto back = scer::change_of_basis(K, oa, va.basis);
  CHECK((back.coeffs - a).norm() < 1e-12);
}

TEST_CASE("flat and sharp invert each other") {
  std::mt19937 rng(19);
  auto K = testsup::random_complex(rng);
  int p = K.dim();
  Eigen::VectorXd a = Eigen::VectorXd::Random(K.size(p));
  auto f = scer::flat(K, testsup::std_chain(p, a));
  CHECK(f.basis.kind == BasisKind::StandardCochain);
  auto back = scer::sharp(K, f);
  CHECK((back.coeffs - a).norm() < 1e-12);
  // flat matrix on standard bases is W^{-1}
  auto F = scer::flat_matrix(K, p).entries;
  Eigen::MatrixXd Winv = K.weights(p).cwiseInverse().asDiagonal();
  CHECK((F - Winv).norm() < 1e-14);
}

TEST_CASE("gram diagonals per basis") {
  auto K = testsup::filled_triangle(4.0);
  auto gc = scer::gram_diagonal(K, {2, BasisKind::StandardChain});
  auto gf = scer::gram_diagonal(K, {2, BasisKind::StandardCochain});
  auto go = scer::gram_diagonal(K, {2, BasisKind::OrthoChain});
  CHECK(gc[0] == doctest::Approx(0.25));
  CHECK(gf[0] == doctest::Approx(4.0));
  CHECK(go[0] == doctest::Approx(1.0));
}

TEST_CASE("mixed-basis inner product rejected") {
  auto K = testsup::triangle_graph();
  auto a = testsup::std_chain(1, Eigen::VectorXd::Ones(3));
  auto f = testsup::std_cochain(1, Eigen::VectorXd::Ones(3));
  CHECK_THROWS_AS(scer::inner_product(K, a, f), scer::BasisMismatch);
}
