#include "sullivan/harness.hpp"

namespace sullivan {

namespace {

// Provenance tags: "hand" values were worked out by hand from the model,
// "formula" values come from dim V^odd + (k-2) dim V^even, "computed" values
// were produced by the independent test oracles and frozen.
constexpr const char* kCorpus[] = {
    R"(# The 2-sphere.
[model]
name = S2
generators = [x:2, y:3]
[differential]
y = x^2
[expected]
betti = [1, 0, 1, 0, 0, 0, 0]
elliptic = true
formal_dimension = 2
k = 2
dk_elliptic = true
toomer = 1
depth = 1
depth_dk = 1
depth_pure = 1
ext_dim = 1
ext_degree = 2
evaluation_nonzero = true
[provenance]
betti = hand
toomer = formula
depth = hand
ext_degree = hand
)",
    R"(# The 3-sphere.
[model]
name = S3
generators = [x:3]
[differential]
[expected]
betti = [1, 0, 0, 1, 0, 0, 0]
elliptic = true
formal_dimension = 3
k = none
dk_elliptic = true
toomer = 1
depth = 1
depth_pure = 1
ext_dim = 1
ext_degree = 3
evaluation_nonzero = true
[provenance]
betti = hand
toomer = formula
depth = hand
)",
    R"(# Product of two 3-spheres.
[model]
name = S3xS3
generators = [a:3, b:3]
[differential]
[expected]
betti = [1, 0, 0, 2, 0, 0, 1, 0, 0]
elliptic = true
formal_dimension = 6
k = none
dk_elliptic = true
toomer = 2
depth = 2
depth_pure = 2
ext_dim = 1
ext_degree = 6
evaluation_nonzero = true
[provenance]
betti = hand
toomer = formula
depth = computed
)",
    R"(# Complex projective plane.
[model]
name = CP2
generators = [x:2, y:5]
[differential]
y = x^3
[expected]
betti = [1, 0, 1, 0, 1, 0, 0, 0]
elliptic = true
formal_dimension = 4
k = 3
dk_elliptic = true
toomer = 2
depth = 2
depth_dk = 2
depth_pure = 2
ext_dim = 1
ext_degree = 4
evaluation_nonzero = true
[provenance]
betti = hand
toomer = formula
depth = hand
)",
    R"(# Complex projective 3-space.
[model]
name = CP3
generators = [x:2, y:7]
[differential]
y = x^4
[expected]
betti = [1, 0, 1, 0, 1, 0, 1, 0, 0]
elliptic = true
formal_dimension = 6
k = 4
dk_elliptic = true
toomer = 3
depth = 3
depth_dk = 3
depth_pure = 3
ext_dim = 1
ext_degree = 6
evaluation_nonzero = true
[provenance]
betti = hand
toomer = formula
depth = formula
)",
    R"(# Complex projective 4-space.
[model]
name = CP4
generators = [x:2, y:9]
[differential]
y = x^5
[expected]
betti = [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0]
elliptic = true
formal_dimension = 8
k = 5
dk_elliptic = true
toomer = 4
depth = 4
depth_dk = 4
depth_pure = 4
ext_dim = 1
ext_degree = 8
evaluation_nonzero = true
[provenance]
betti = hand
toomer = formula
depth = formula
)",
    R"(# Non-pure, coformal: d z = x y.
[model]
name = XYZ
generators = [x:3, y:3, z:5]
[differential]
z = x*y
[expected]
betti = [1, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 1, 0]
elliptic = true
formal_dimension = 11
k = 2
dk_elliptic = true
toomer = 3
depth = 3
depth_dk = 3
depth_pure = 3
ext_dim = 1
ext_degree = 11
evaluation_nonzero = true
[provenance]
betti = hand
toomer = formula
depth = computed
depth_pure = hand
)",
    R"(# Elliptic, but its quadratic part is not.
[model]
name = X2U4Y5V7
generators = [x:2, u:4, y:5, v:7]
[differential]
y = x*u
v = u^2 + x^4
[expected]
betti = [1, 0, 1, 0, 2, 0, 1, 0, 1, 0, 0]
elliptic = true
formal_dimension = 8
k = 2
dk_elliptic = false
toomer = 4
depth = 2
depth_dk = 2
depth_pure = 2
ext_dim = 1
ext_degree = 8
evaluation_nonzero = true
[provenance]
betti = hand
toomer = hand
depth = computed
depth_dk = computed
)",
    R"(# Free polynomial algebra on one even generator: Gorenstein, not elliptic.
[model]
name = L2
generators = [x:2]
[differential]
[expected]
betti = [1, 0, 1, 0, 1, 0, 1]
elliptic = false
k = none
depth = 0
depth_pure = 0
ext_dim = 1
ext_degree = -1
evaluation_nonzero = false
[provenance]
betti = hand
depth = hand
ext_degree = hand
)",
    R"(# Product of a 2-sphere and a 3-sphere.
[model]
name = S2xS3
generators = [x:2, y:3, z:3]
[differential]
y = x^2
[expected]
betti = [1, 0, 1, 1, 0, 1, 0, 0]
elliptic = true
formal_dimension = 5
k = 2
dk_elliptic = true
toomer = 2
depth = 2
depth_dk = 2
depth_pure = 2
ext_dim = 1
ext_degree = 5
evaluation_nonzero = true
[provenance]
betti = hand
toomer = formula
depth = computed
)",
};

}  // namespace

const std::vector<ModelFile>& corpus() {
  static const std::vector<ModelFile> models = [] {
    std::vector<ModelFile> out;
    for (const char* text : kCorpus) out.push_back(parse_model_file(text));
    return out;
  }();
  return models;
}

std::optional<ModelFile> corpus_entry(std::string_view name) {
  for (const auto& m : corpus())
    if (m.name == name) return m;
  return std::nullopt;
}

}  // namespace sullivan
