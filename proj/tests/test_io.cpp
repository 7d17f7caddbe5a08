#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "scer/io.hpp"
#include "test_support.hpp"

TEST_CASE("parse facets with and without weights") {
  std::istringstream in(
      "# a filled triangle with one weighted edge\n"
      "simplex 0 1 2\n"
      "simplex 0 1 0.5\n"
      "\n"
      "simplex 3 4\n");
  auto K = scer::parse_complex(in);
  CHECK(K.dim() == 2);
  CHECK(K.size(0) == 5);
  CHECK(K.weight(1, *K.index_of(scer::Simplex{{0, 1}})) == 0.5);
  CHECK(K.weight(1, *K.index_of(scer::Simplex{{3, 4}})) == 1.0);
}

TEST_CASE("trailing integer token is a vertex, not a weight") {
  std::istringstream in("simplex 1 2 3\n");
  auto K = scer::parse_complex(in);
  CHECK(K.dim() == 2);
  CHECK(K.index_of(scer::Simplex{{1, 2, 3}}).has_value());
}

TEST_CASE("scientific and dotted weights are recognized") {
  std::istringstream in("simplex 0 1 2e-1\nsimplex 1 2 3.\n");
  auto K = scer::parse_complex(in);
  CHECK(K.dim() == 1);
  CHECK(K.weight(1, *K.index_of(scer::Simplex{{0, 1}})) == 0.2);
  CHECK(K.weight(1, *K.index_of(scer::Simplex{{1, 2}})) == 3.0);
}

TEST_CASE("parse errors carry line numbers") {
  auto expect_throw = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(scer::parse_complex(in), scer::ParseError);
  };
  expect_throw("vertex 0 1\n");          // unknown record
  expect_throw("simplex\n");             // empty simplex
  expect_throw("simplex 0 0 1\n");       // repeated vertex
  expect_throw("simplex 0 1 -3.0\n");    // non-positive weight
  expect_throw("simplex 0 x\n");         // junk token

  std::istringstream in("simplex 0 1\nsimplex 2 2\n");
  try {
    scer::parse_complex(in);
    FAIL("expected ParseError");
  } catch (const scer::ParseError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("missing file raises an io error") {
  CHECK_THROWS_AS(scer::parse_complex_file("/nonexistent/path.cplx"),
                  scer::IOErr);
}

TEST_CASE("dump then parse round-trips complex and weights") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 5; ++trial) {
    auto K = testsup::random_complex(rng);
    std::ostringstream out;
    scer::dump_complex(out, K);
    std::istringstream in(out.str());
    auto K2 = scer::parse_complex(in);
    REQUIRE(K2.dim() == K.dim());
    for (int p = 0; p <= K.dim(); ++p) {
      REQUIRE(K2.size(p) == K.size(p));
      for (int i = 0; i < K.size(p); ++i) {
        CHECK(K2.simplices(p)[i] == K.simplices(p)[i]);
        CHECK(K2.weight(p, i) ==
              doctest::Approx(K.weight(p, i)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("dump emits unit weights that survive the vertex/weight rule") {
  auto K = scer::WeightedComplex::from_facets({{0, 1, 2}});
  std::ostringstream out;
  scer::dump_complex(out, K);
  std::istringstream in(out.str());
  auto K2 = scer::parse_complex(in);
  CHECK(K2.dim() == 2);
  CHECK(K2.size(2) == 1);
}
