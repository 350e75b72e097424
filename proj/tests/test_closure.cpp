#include "doctest.h"
#include "sullivan/closure.hpp"
#include "sullivan/ext.hpp"
#include "support.hpp"

using namespace sullivan;
using namespace testing_support;

namespace {

int closure_bound(const Model& m) { return m.max_generator_degree() + 8; }

}  // namespace

TEST_SUITE("closure") {

TEST_CASE("corpus closures are acyclic with D^2 = 0") {
  for (const auto& m : corpus_models()) {
    CAPTURE(m.name);
    const int bound = closure_bound(m);
    const auto cc = acyclic_closure(m, m.differential, bound);
    const auto check = verify_closure(cc, bound);
    CHECK(check.ok());
    CHECK(check.checked_through == bound);
    REQUIRE(check.homology_dims.size() == static_cast<std::size_t>(bound) + 1);
    CHECK(check.homology_dims[0] == 1);
    for (int n = 1; n <= bound; ++n) CHECK(check.homology_dims[n] == 0);
  }
}

TEST_CASE("constrained closures for every filtration") {
  for (const auto& m : corpus_models()) {
    CAPTURE(m.name);
    const auto k = lowest_wordlength(m);
    const Derivation dk = k ? part(m, *k) : m.differential;
    for (auto f : {HomFiltration::weighted, HomFiltration::wordlength, HomFiltration::odd}) {
      for (const auto* d : {&m.differential, &dk}) {
        const int kk = filtration_k(*d);
        const auto cc = acyclic_closure(m, *d, closure_bound(m), constraints_for(f, kk));
        CHECK(verify_closure(cc, closure_bound(m)).ok());
      }
    }
  }
}

TEST_CASE("suspension values are v plus a correction in Lambda (x) Gamma^+") {
  const Model m = corpus_model("X2U4Y5V7");
  const auto cc = acyclic_closure(m, m.differential, 12);
  const std::size_t n = cc.generator_count();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& dv = cc.suspension_value(i);
    const auto v = cc.embed(Polynomial::term(m.space, m.space->generator_monomial(i)));
    const Polynomial correction = cc.correction(i);
    CHECK(dv - v == correction);
    for (const auto& [mono, c] : correction.terms()) {
      const auto [a, g] = cc.split(mono);
      (void)a;
      CHECK(g.length() >= 1);
    }
    CHECK(*dv.degree() == m.space->generator(i).degree);
  }
}

TEST_CASE("divided-power rule D(gamma^p w) = D(w) gamma^{p-1}(w)") {
  const Model m = corpus_model("CP2");
  const auto cc = acyclic_closure(m, m.differential, 14);
  const auto& total = cc.total();
  // sx has degree 1 (exterior), sy has degree 4 (divided powers).
  const auto sy = total->index_of("sy");
  REQUIRE(sy.has_value());
  for (int p = 1; p <= 3; ++p) {
    Monomial gp = total->unit();
    gp[*sy] = p;
    Monomial gp1 = total->unit();
    gp1[*sy] = p - 1;
    const auto lhs = cc.differential().apply(gp);
    const auto rhs = cc.differential().apply(total->generator_monomial(*sy)) * Polynomial::term(total, gp1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("bound below the generator degrees is rejected") {
  const Model m = corpus_model("CP3");
  CHECK_THROWS(acyclic_closure(m, m.differential, 3));
}

}
