#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace sullivan;
using namespace testing_support;

namespace {

bool has_kind(const ValidationReport& r, Violation::Kind k) {
  for (const auto& v : r.violations)
    if (v.kind == k) return true;
  return false;
}

}  // namespace

TEST_SUITE("differential") {

TEST_CASE("d squares to zero on every corpus basis through degree 20") {
  for (const auto& model : corpus_models()) {
    CAPTURE(model.name);
    for (int n = 0; n <= 19; ++n) {
      const auto d0 = derivation_matrix(model.differential, n);
      const auto d1 = derivation_matrix(model.differential, n + 1);
      CHECK(is_zero(product(d1, d0)));
    }
  }
}

TEST_CASE("Leibniz rule on random products") {
  std::mt19937 rng(21);
  for (const auto& model : corpus_models()) {
    const auto& s = *model.space;
    for (int trial = 0; trial < 60; ++trial) {
      const Monomial a = random_monomial(s, rng);
      const Monomial b = random_monomial(s, rng);
      const auto pa = Polynomial::term(model.space, a);
      const auto pb = Polynomial::term(model.space, b);
      const auto& d = model.differential;
      const Rational sign = s.degree(a) % 2 ? -1 : 1;
      CHECK(d.apply(pa * pb) == d.apply(pa) * pb + sign * (pa * d.apply(pb)));
    }
  }
}

TEST_CASE("derivation matrix columns are the images of basis monomials") {
  const Model m = corpus_model("X2U4Y5V7");
  for (int n = 0; n <= 12; ++n) {
    const auto& src = basis(m.space, n);
    const auto& dst = basis(m.space, n + 1);
    const auto mat = derivation_matrix(m.differential, n);
    for (std::size_t i = 0; i < src.size(); ++i) {
      const auto img = m.differential.apply(src.monomials[i]);
      CHECK(from_coordinates(m.space, dst, mat.column(static_cast<int>(i))) == img);
      CHECK(coordinates(img, dst) == mat.column(static_cast<int>(i)));
    }
  }
}

TEST_CASE("validation") {
  SUBCASE("corpus models are valid") {
    for (const auto& model : corpus_models()) CHECK(validate(model).ok());
  }
  SUBCASE("wrong degree") {
    const Model m = make_model("bad", {{"x", 2}, {"y", 3}}, {{"y", "x"}});
    const auto r = validate(m);
    CHECK(has_kind(r, Violation::Kind::degree));
    CHECK(has_kind(r, Violation::Kind::minimality));
    CHECK_FALSE(has_kind(r, Violation::Kind::homogeneity));
  }
  SUBCASE("inhomogeneous value") {
    const Model m = make_model("bad", {{"x", 2}, {"y", 5}}, {{"y", "x^3 + x^2"}});
    CHECK(has_kind(validate(m), Violation::Kind::homogeneity));
  }
  SUBCASE("linear term breaks minimality") {
    const Model n = make_model("bad", {{"x", 3}, {"y", 4}}, {{"x", "y"}});
    CHECK(has_kind(validate(n), Violation::Kind::minimality));
  }
  SUBCASE("d squared nonzero") {
    // d(xy) = x^3.
    const Model m = make_model("bad", {{"x", 2}, {"y", 3}, {"z", 4}}, {{"y", "x^2"}, {"z", "x*y"}});
    CHECK(has_kind(validate(m), Violation::Kind::square));
  }
  CHECK_THROWS(make_model("bad", {{"x", 2}}, {{"q", "x^2"}}));
}

TEST_CASE("lowest word length and parts") {
  const Model m = corpus_model("X2U4Y5V7");
  CHECK(lowest_wordlength(m) == 2);
  const Derivation d2 = part(m, 2);
  const Derivation d4 = part(m, 4);
  CHECK(is_wordlength_homogeneous(d2));
  CHECK_FALSE(is_wordlength_homogeneous(m.differential));
  for (std::size_t i = 0; i < m.space->size(); ++i)
    CHECK(d2.value(i) + d4.value(i) == m.differential.value(i));
  CHECK(part(m, 3).is_zero());
  CHECK_FALSE(lowest_wordlength(corpus_model("S3")).has_value());
  CHECK(lowest_wordlength(corpus_model("CP4")) == 5);
}

TEST_CASE("pure model") {
  const Model xyz = corpus_model("XYZ");
  CHECK_FALSE(is_pure(xyz));
  CHECK(pure(xyz).differential.is_zero());
  const Model x2 = corpus_model("X2U4Y5V7");
  CHECK(is_pure(x2));
  CHECK(pure(x2).differential == x2.differential);
  for (const auto& model : corpus_models()) {
    CAPTURE(model.name);
    CHECK(commuting_check(model));
    CHECK(is_pure(pure(model)));
  }
}

}
