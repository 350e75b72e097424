#include "doctest.h"
#include "sullivan/cohomology.hpp"
#include "sullivan/ellipticity.hpp"
#include "support.hpp"

using namespace sullivan;
using namespace testing_support;

namespace {

// dim ker - dim im from dense oracle ranks of the derivation matrices.
std::vector<int> oracle_betti(const Model& m, const Derivation& d, int n_max) {
  std::vector<int> out;
  for (int n = 0; n <= n_max; ++n) {
    const int size = static_cast<int>(basis(m.space, n).size());
    const int out_rank = size ? oracle::rank(dense(derivation_matrix(d, n))) : 0;
    const int in_rank = n > 0 && basis(m.space, n - 1).size() ? oracle::rank(dense(derivation_matrix(d, n - 1))) : 0;
    out.push_back(size - out_rank - in_rank);
  }
  return out;
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("betti examples") {
  CHECK(betti(corpus_model("S2"), 8).dims == std::vector<int>{1, 0, 1, 0, 0, 0, 0, 0, 0});
  CHECK(betti(corpus_model("CP2"), 10).dims == std::vector<int>{1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0});
  CHECK(betti(corpus_model("S3"), 4).dims == std::vector<int>{1, 0, 0, 1, 0});
}

TEST_CASE("betti agrees with the dense rank oracle") {
  for (const auto& m : corpus_models()) {
    CAPTURE(m.name);
    const auto b = betti(m, 16);
    CHECK(b.dims == oracle_betti(m, m.differential, 16));
    CHECK(b.dims[0] == 1);
    CHECK(b.dims[1] == 0);
    const auto k = lowest_wordlength(m);
    if (k) CHECK(betti(m, part(m, *k), 16).dims == oracle_betti(m, part(m, *k), 16));
  }
}

TEST_CASE("bigraded betti") {
  const Model cp2 = corpus_model("CP2");
  const auto bg = bigraded_betti(cp2, part(cp2, 3), 0, 10);
  CHECK(bg.at({2, 2}) == 1);
  CHECK(bg.at({1, 1}) == 1);
  CHECK(bg.at({0, 0}) == 1);
  CHECK(bg.size() == 3);

  const Model s3 = corpus_model("S3");
  CHECK(bigraded_betti(s3, s3.differential, 0, 6) == Bigraded{{{0, 0}, 1}, {{1, 2}, 1}});

  const Model s2 = corpus_model("S2");
  CHECK(bigraded_betti(s2, part(s2, 2), 0, 6) == Bigraded{{{0, 0}, 1}, {{1, 1}, 1}});

  const Model x2 = corpus_model("X2U4Y5V7");
  CHECK_THROWS_AS(bigraded_betti(x2, x2.differential, 0, 8),
                  std::invalid_argument);

  // Sums over p recover betti for every homogeneous derivation.
  for (const auto& m : corpus_models()) {
    const auto k = lowest_wordlength(m);
    const Derivation dk = k ? part(m, *k) : m.differential;
    const auto b = betti(m, dk, 14);
    const auto g = bigraded_betti(m, dk, 0, 14);
    for (int n = 0; n <= 14; ++n) {
      int sum = 0;
      for (const auto& [pq, dim] : g)
        if (pq.first + pq.second == n) sum += dim;
      CHECK(sum == b.at(n));
    }
  }
}

TEST_CASE("odd-weight bigrading of pure models sums to betti") {
  for (const auto& m : elliptic_corpus()) {
    const Model p = pure(m);
    const auto g = bigraded_betti(p, p.differential, 0, 14, Grading::odd_weight);
    const auto b = betti(p, 14);
    for (int n = 0; n <= 14; ++n) {
      int sum = 0;
      for (const auto& [pq, dim] : g)
        if (pq.first + pq.second == n) sum += dim;
      CHECK(sum == b.at(n));
    }
  }
}

TEST_CASE("fundamental classes") {
  auto s2 = fundamental_class(corpus_model("S2"));
  CHECK(s2.degree == 2);
  CHECK(s2.representative.to_string() == "x");
  auto cp2 = fundamental_class(corpus_model("CP2"));
  CHECK(cp2.degree == 4);
  CHECK(cp2.representative.to_string() == "x^2");
  const Model xyz = corpus_model("XYZ");
  auto w = fundamental_class(xyz);
  CHECK(w.degree == 11);
  CHECK(w.nonzero);
  CHECK(make_class(xyz.differential, parse_polynomial(xyz.space, "x*y*z")).nonzero);
  CHECK_FALSE(make_class(xyz.differential, parse_polynomial(xyz.space, "x*y")).nonzero);
  CHECK_THROWS_AS(fundamental_class(corpus_model("L2")), std::invalid_argument);
}

TEST_CASE("toomer invariant by both routes") {
  CHECK(toomer(corpus_model("S2")) == 1);
  CHECK(toomer(corpus_model("CP2")) == 2);
  CHECK(toomer(corpus_model("XYZ")) == 3);
  CHECK(toomer(corpus_model("X2U4Y5V7")) == 4);
  for (const auto& m : elliptic_corpus()) {
    CAPTURE(m.name);
    const auto r = toomer_report(m);
    CHECK(r.fundamental_class_route == r.injectivity_route);
    CHECK(r.fundamental_class_route >= 1);
    CHECK(r.fundamental_class_route <= r.max_top_wordlength);
    for (const auto& [mono, c] : r.representative.terms()) CHECK(mono.length() >= r.fundamental_class_route);
    CHECK(make_class(m.differential, r.representative).nonzero);
  }
}

TEST_CASE("poincare duality report") {
  const auto cp2 = poincare_report(betti(corpus_model("CP2"), 6), 4);
  CHECK(cp2.ok());
  CHECK(poincare_report(betti(corpus_model("S3xS3"), 8), 6).ok());
  CHECK(betti(corpus_model("S3xS3"), 6).dims == std::vector<int>{1, 0, 0, 2, 0, 0, 1});
  CHECK_FALSE(poincare_report(betti(corpus_model("L2"), 8), 2).ok());
}

TEST_CASE("Euler characteristic of d and d_sigma agree on [0, N]") {
  for (const auto& m : elliptic_corpus()) {
    const int N = *is_elliptic(m).formal_dimension;
    const auto b = betti(m, N);
    const Model p = pure(m);
    const auto bp = betti(p, N);
    int chi = 0, chi_p = 0;
    for (int n = 0; n <= N; ++n) {
      chi += (n % 2 ? -1 : 1) * b.at(n);
      chi_p += (n % 2 ? -1 : 1) * bp.at(n);
    }
    CAPTURE(m.name);
    CHECK(chi == chi_p);
  }
}

}
