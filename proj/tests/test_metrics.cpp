#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scer/metrics.hpp"
#include "test_support.hpp"

using scer::Simplex;

TEST_CASE("chain pseudometric: symmetry, identity, triangle inequality") {
  std::mt19937 rng(73);
  auto K = testsup::random_complex(rng);
  int p = 1;
  Eigen::VectorXd av = Eigen::VectorXd::Random(K.size(p));
  Eigen::VectorXd bv = Eigen::VectorXd::Random(K.size(p));
  Eigen::VectorXd cv = Eigen::VectorXd::Random(K.size(p));
  auto a = testsup::std_chain(p, av);
  auto b = testsup::std_chain(p, bv);
  auto c = testsup::std_chain(p, cv);
  double dab = scer::chain_pseudometric(K, a, b);
  double dba = scer::chain_pseudometric(K, b, a);
  double dbc = scer::chain_pseudometric(K, b, c);
  double dac = scer::chain_pseudometric(K, a, c);
  CHECK(dab == doctest::Approx(dba));
  CHECK(scer::chain_pseudometric(K, a, a) == doctest::Approx(0.0));
  CHECK(dac <= dab + dbc + 1e-9);
  CHECK(dab >= 0.0);
}

TEST_CASE("pseudometric vanishes exactly on cycle differences") {
  auto T = testsup::triangle_graph();
  // the triangle cycle [01] - [02] + [12] is in ker d
  Eigen::VectorXd cyc(3);
  cyc << 1, -1, 1;
  Eigen::VectorXd base = Eigen::VectorXd::Random(3);
  auto a = testsup::std_chain(1, base);
  auto b = testsup::std_chain(1, (base + cyc).eval());
  CHECK(scer::chain_pseudometric(T, a, b) == doctest::Approx(0.0));
  // but not on non-cycle differences
  Eigen::VectorXd edge = testsup::unit(3, 0);
  auto c = testsup::std_chain(1, (base + edge).eval());
  CHECK(scer::chain_pseudometric(T, a, c) > 0.5);
}

TEST_CASE("vertex cycle metric reproduces sqrt of vertex resistance") {
  std::mt19937 rng(79);
  auto G = testsup::random_connected_graph(rng, 8);
  auto unit0 = [&](int w) {
    return testsup::std_chain(0, testsup::unit(G.size(0),
                                               *G.index_of(Simplex{{w}})));
  };
  for (int v = 1; v < 5; ++v) {
    double d = scer::cycle_metric(G, unit0(0), unit0(v));
    double r = testsup::grounded_graph_er(G, 0, v);
    CHECK(d == doctest::Approx(std::sqrt(r)).epsilon(1e-7));
  }
}

TEST_CASE("cycle metric rejects non-cycles and non-boundaries") {
  auto S = testsup::hollow_tetrahedron();
  Eigen::VectorXd nc = testsup::unit(S.size(1), 0);
  auto edge = testsup::std_chain(1, nc);
  auto zero = testsup::std_chain(1, Eigen::VectorXd::Zero(S.size(1)));
  CHECK_THROWS_AS(scer::cycle_metric(S, edge, zero), scer::NotACycle);

  // two components: vertex difference across them is not a boundary
  auto two = scer::WeightedComplex::from_facets({{0, 1}, {2, 3}});
  auto u0 = testsup::std_chain(0, testsup::unit(4, 0));
  auto u2 = testsup::std_chain(0, testsup::unit(4, 2));
  CHECK_THROWS_AS(scer::cycle_metric(two, u0, u2), scer::NotABoundary);
}

TEST_CASE("cycle metric on 1-cycles of the sphere") {
  auto S = testsup::hollow_tetrahedron();
  // boundary of face 012 against the zero cycle: filled by that face alone
  auto B2 = scer::boundary_matrix(S, 2, scer::MatrixBasis::Standard).entries;
  auto zero = testsup::std_chain(1, Eigen::VectorXd::Zero(S.size(1)));
  auto cyc = testsup::std_chain(1, B2.col(0));
  double d = scer::cycle_metric(S, cyc, zero);
  // minimal filling evaluates to the face resistance 3/4
  CHECK(d == doctest::Approx(std::sqrt(0.75)));
}

TEST_CASE("foster identity on the fixtures") {
  auto rep = scer::foster_check(testsup::triangle_graph(), 1);
  CHECK(rep.pass);
  CHECK(rep.lhs_sum == doctest::Approx(2.0));
  CHECK(rep.rhs == 2);  // n_0 - 1 connected component

  auto rep2 = scer::foster_check(testsup::hollow_tetrahedron(), 2);
  CHECK(rep2.pass);
  CHECK(rep2.lhs_sum == doctest::Approx(3.0));
  CHECK(rep2.rhs == 3);  // 6 edges minus a 3-dim cycle space

  auto edge = scer::WeightedComplex::from_facets({{0, 1}}, {{{0, 1}, 7.0}});
  auto rep3 = scer::foster_check(edge, 1);
  CHECK(rep3.pass);
  CHECK(rep3.lhs_sum == doctest::Approx(1.0));
}

TEST_CASE("foster identity on random weighted complexes") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    auto K = testsup::random_complex(rng);
    for (int p = 1; p <= K.dim(); ++p) {
      auto rep = scer::foster_check(K, p);
      CHECK(rep.pass);
      CHECK(rep.lhs_sum == doctest::Approx(rep.trace_T).epsilon(1e-7));
      CHECK(rep.trace_T == doctest::Approx(double(rep.rhs)).epsilon(1e-7));
    }
  }
}

TEST_CASE("er operator spectrum is zeros and ones") {
  auto T = testsup::triangle_graph();
  auto vals = scer::er_operator_spectrum(T, 1);
  REQUIRE(vals.size() == 3);
  CHECK(vals[0] == doctest::Approx(1.0));
  CHECK(vals[1] == doctest::Approx(1.0));
  CHECK(vals[2] == doctest::Approx(0.0));

  std::mt19937 rng(89);
  auto K = testsup::random_complex(rng);
  for (int p = 1; p <= K.dim(); ++p)
    for (double v : scer::er_operator_spectrum(K, p))
      CHECK(std::min(std::abs(v), std::abs(v - 1.0)) < 1e-8);
}
