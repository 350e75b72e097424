#include <random>

#include "doctest.h"
#include "sullivan/ellipticity.hpp"
#include "sullivan/ext.hpp"
#include "support.hpp"

using namespace sullivan;
using namespace testing_support;

TEST_SUITE("ext") {

TEST_CASE("Hom differential squares to zero on the truncated complexes") {
  for (const auto& m : corpus_models()) {
    CAPTURE(m.name);
    const int G = 2 * m.max_generator_degree() + 2;
    const auto cc = acyclic_closure(m, m.differential, G + m.max_generator_degree() + 1,
                                    constraints_for(HomFiltration::weighted, filtration_k(m.differential)));
    const HomComplex hom(cc, G);
    const int N = formal_dimension_bound(m);
    for (int n = N - 4; n <= N + 3; ++n) {
      const auto d0 = hom.differential(n);
      const auto d1 = hom.differential(n + 1);
      REQUIRE(d1.cols() == d0.rows());
      CHECK(is_zero(product(d1, d0)));
    }
  }
}

TEST_CASE("matrix and element differentials agree") {
  std::mt19937 rng(31);
  const Model m = corpus_model("XYZ");
  const auto cc = acyclic_closure(m, m.differential, 20);
  const int G = 12;
  const HomComplex hom(cc, G);
  for (int n = 8; n <= 12; ++n) {
    const auto mat = hom.differential(n);
    for (int trial = 0; trial < 10; ++trial) {
      const auto v = random_vector(mat.cols(), rng, 3);
      const auto f = hom.element(n, v);
      CHECK(hom.coordinates(f) == v);
      const auto df = hom_differential(cc, f, G);
      CHECK(hom.coordinates(df) == mat.multiply(v));
    }
  }
}

TEST_CASE("G basis is a prefix of the G' basis") {
  const Model m = corpus_model("CP2");
  const auto cc = acyclic_closure(m, m.differential, 24);
  const HomComplex small(cc, 8), large(cc, 14);
  for (int n = 2; n <= 6; ++n) {
    const auto& a = small.basis(n);
    const auto& b = large.basis(n);
    REQUIRE(a.size() <= b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].word == b[i].word);
      CHECK(a[i].value == b[i].value);
    }
  }
}

TEST_CASE("calibration pair") {
  const Model s3 = corpus_model("S3");
  const Model l2 = corpus_model("L2");
  CHECK(depth(s3, s3.differential) == 1);
  CHECK(depth(l2, l2.differential) == 0);
}

TEST_CASE("depth values") {
  const Model cp2 = corpus_model("CP2");
  CHECK(depth(cp2, part(cp2, 3)) == 2);
  const Model cp3 = corpus_model("CP3");
  CHECK(depth(cp3, cp3.differential) == 3);
  const Model xyz = corpus_model("XYZ");
  CHECK(depth(xyz, xyz.differential) == 3);
  const Model x = corpus_model("X2U4Y5V7");
  CHECK(depth(x, part(x, 2)) == 2);
  CHECK(depth(x, x.differential) == 2);
}

TEST_CASE("evaluation map") {
  const Model s3 = corpus_model("S3");
  const auto e = ext(s3, s3.differential);
  REQUIRE(e.classes.size() == 1);
  CHECK(e.classes[0].evaluation_nonzero);
  CHECK(evaluation(s3, s3.differential, e.classes[0].representative).representative.to_string() == "x");

  const Model l2 = corpus_model("L2");
  const auto el = ext(l2, l2.differential);
  REQUIRE(el.classes.size() == 1);
  CHECK_FALSE(el.classes[0].evaluation_nonzero);

  const Model cp2 = corpus_model("CP2");
  const auto ec = ext(cp2, cp2.differential);
  REQUIRE(ec.classes.size() == 1);
  const auto ev = evaluation(cp2, cp2.differential, ec.classes[0].representative);
  CHECK(ev.nonzero);
  CHECK(ev.degree == 4);
}

TEST_CASE("Gorenstein property on the corpus") {
  for (const auto& f : corpus()) {
    CAPTURE(f.name);
    const Model m = f.model();
    const auto g = gorenstein_check(m, m.differential);
    CHECK(g.stable);
    CHECK(g.dim == 1);
    const bool elliptic = is_elliptic(m).elliptic;
    CHECK(g.evaluation_nonzero == elliptic);
    if (elliptic) CHECK(g.degree == is_elliptic(m).formal_dimension);
  }
}

TEST_CASE("representatives are cycles and levels are attained") {
  for (const auto& m : elliptic_corpus()) {
    CAPTURE(m.name);
    const auto e = ext(m, m.differential);
    REQUIRE(e.stable);
    const int k = filtration_k(m.differential);
    const auto cc = acyclic_closure(m, m.differential, e.gamma_bound + m.max_generator_degree() + 1,
                                    constraints_for(e.filtration, k));
    for (const auto& c : e.classes) {
      const HomComplex hom(cc, e.gamma_bound);
      const auto v = hom.coordinates(c.representative);
      CHECK(hom.differential(c.degree).multiply(v).empty());
      int lowest = 1 << 20;
      for (const auto& [i, q] : v) lowest = std::min(lowest, hom.level(hom.basis(c.degree)[i], e.filtration, k));
      CHECK(lowest == c.level);
    }
  }
}

TEST_CASE("ev over d_k and over d agree on the corpus") {
  for (const auto& m : elliptic_corpus()) {
    CAPTURE(m.name);
    const Derivation dk = lowest_part(m);
    if (!is_elliptic(m.with_differential(dk)).elliptic) continue;
    const auto ek = ext(m, dk);
    const auto ed = ext(m, m.differential);
    REQUIRE(ek.classes.size() == 1);
    REQUIRE(ed.classes.size() == 1);
    CHECK(ek.classes[0].evaluation_nonzero);
    CHECK(ed.classes[0].evaluation_nonzero);
    CHECK(ek.classes[0].level == ed.classes[0].level);
    CHECK(ek.classes[0].degree == ed.classes[0].degree);
  }
}

TEST_CASE("truncation schedule is recorded") {
  const Model m = corpus_model("CP2");
  const auto e = ext(m, m.differential);
  CHECK(e.stable);
  CHECK(e.schedule.size() >= 2);
  CHECK(e.gamma_step == 5);
  CHECK(e.schedule.front() == 10);
  ExtOptions tiny;
  tiny.max_rounds = 1;
  CHECK_FALSE(ext(m, m.differential, tiny).stable);
  CHECK_THROWS_AS(depth(m, m.differential, tiny), TruncationError);
}

}
