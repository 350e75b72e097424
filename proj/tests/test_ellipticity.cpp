#include "doctest.h"
#include "sullivan/cohomology.hpp"
#include "sullivan/ellipticity.hpp"
#include "support.hpp"

using namespace sullivan;
using namespace testing_support;

TEST_SUITE("ellipticity") {

TEST_CASE("formal dimension bound") {
  CHECK(formal_dimension_bound(corpus_model("S2")) == 2);
  CHECK(formal_dimension_bound(corpus_model("CP2")) == 4);
  CHECK(formal_dimension_bound(corpus_model("X2U4Y5V7")) == 8);
  CHECK(formal_dimension_bound(corpus_model("XYZ")) == 11);
}

TEST_CASE("verdicts match the corpus") {
  for (const auto& f : corpus()) {
    CAPTURE(f.name);
    const auto v = is_elliptic(f.model());
    CHECK(v.elliptic == (f.expected.at("elliptic") == "true"));
    CHECK_FALSE(v.witness.empty());
    if (v.elliptic) CHECK(std::to_string(*v.formal_dimension) == f.expected.at("formal_dimension"));
  }
}

TEST_CASE("non-elliptic quadratic part") {
  const Model m = corpus_model("X2U4Y5V7");
  const auto v = is_elliptic(m.with_differential(part(m, 2)));
  CHECK_FALSE(v.elliptic);
  CHECK_FALSE(v.formal_dimension.has_value());
  // u^2 = 0 and x u = 0 leave every x^n alive.
  const auto q = pure_quotient_dims(m.with_differential(part(m, 2)), 24);
  for (int n = 0; n <= 24; n += 2) CHECK(q[n] >= 1);
}

TEST_CASE("is_elliptic_pure rejects non-pure input") {
  CHECK_THROWS_AS(is_elliptic_pure(corpus_model("XYZ")), std::invalid_argument);
}

TEST_CASE("vanishing window is sound up to three times the bound") {
  for (const auto& m : corpus_models()) {
    const Model p = pure(m);
    const auto v = is_elliptic_pure(p);
    if (!v.elliptic) continue;
    int max_even = 0;
    for (const auto& g : p.space->generators())
      if (!g.odd()) max_even = std::max(max_even, g.degree);
    const int bound = formal_dimension_bound(p);
    const int far = 3 * std::max(bound + max_even, 1);
    const auto q = pure_quotient_dims(p, far);
    CAPTURE(m.name);
    for (int n = bound + 1; n <= far; ++n) CHECK(q[n] == 0);
  }
}

TEST_CASE("elliptic models have one-dimensional top cohomology") {
  for (const auto& m : elliptic_corpus()) {
    const int N = *is_elliptic(m).formal_dimension;
    const auto b = betti(m, N + 6);
    CHECK(b.at(N) == 1);
    CHECK(b.top_degree() == N);
  }
}

}
