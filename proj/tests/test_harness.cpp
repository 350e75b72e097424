#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

using namespace sullivan;
using namespace testing_support;

namespace {

void expect_error_at(const std::string& text, int line, int column) {
  try {
    parse_model_file(text);
    FAIL("no error for:\n" << text);
  } catch (const ModelFileError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.relation << " " << to_string(r.overall()) << "\n";
  for (const auto& row : r.rows) {
    os << row.model << " " << to_string(row.verdict) << " " << row.detail;
    for (const auto& [k, v] : row.quantities) os << " " << k << "=" << v;
    os << "\n";
  }
  return os.str();
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("parse a model file") {
  const Model m = parse_model(R"(
# comment
[model]
name = CP2
generators = [x:2, y:5]   # trailing comment

[differential]
y = x^3
)");
  CHECK(m.name == "CP2");
  CHECK(lowest_wordlength(m) == 3);
  const Model z = parse_model("[model]\nname = S3\ngenerators = [x:3]\n[differential]\n");
  CHECK(z.differential.is_zero());
}

TEST_CASE("parse errors carry line and column") {
  expect_error_at("[model]\nname = A\ngenerators = [x:2, y:5]\n[differential]\ny = x^3 + q\n", 5, 11);
  expect_error_at("[model]\nname = A\ngenerators = [x:2, y 5]\n", 3, 20);
  expect_error_at("[model]\nname = A\n[other]\n", 3, 2);
  expect_error_at("[model]\nname = A\ngenerators = [x:2]\n[differential]\n  bogus line\n", 5, 3);
  expect_error_at("name = A\n", 1, 1);
  expect_error_at("[model]\nname = A\ngenerators = [x:two]\n", 3, 17);
  expect_error_at("[model]\nname = A\ngenerators = [x:2]\n[differential]\nz = x^2\n", 5, 1);
}

TEST_CASE("validation errors are forwarded") {
  try {
    parse_model("[model]\nname = bad\ngenerators = [x:2, y:3]\n[differential]\ny = x\n");
    FAIL("accepted");
  } catch (const ValidationError& e) {
    CHECK_FALSE(e.report().ok());
    CHECK(std::string(e.what()).find("degree") != std::string::npos);
  }
}

TEST_CASE("corpus contents") {
  CHECK(corpus().size() >= 9);
  for (const auto* name : {"S2", "S3", "S3xS3", "CP2", "CP3", "CP4", "XYZ", "X2U4Y5V7", "L2"})
    CHECK(corpus_entry(name).has_value());
  for (const auto& f : corpus()) {
    CAPTURE(f.name);
    CHECK(validate(f.model()).ok());
    CHECK_FALSE(f.expected.empty());
    CHECK_FALSE(f.provenance.empty());
    for (const auto& [k, tag] : f.provenance) {
      CHECK(f.expected.count(k) == 1);
      CHECK((tag == "hand" || tag == "formula" || tag == "computed"));
    }
  }
}

TEST_CASE("golden values match") {
  for (const auto& f : corpus()) {
    CAPTURE(f.name);
    const auto mm = check_expected(f);
    for (const auto& x : mm) MESSAGE(x.key << ": expected " << x.expected << ", computed " << x.computed);
    CHECK(mm.empty());
  }
}

TEST_CASE("a wrong golden is reported with both values") {
  auto f = *corpus_entry("CP2");
  f.expected["toomer"] = "3";
  const auto mm = check_expected(f);
  REQUIRE(mm.size() == 1);
  CHECK(mm[0].expected == "3");
  CHECK(mm[0].computed == "2");
}

TEST_CASE("model text round trip and shipped model files") {
  for (const auto& f : corpus()) {
    const auto back = parse_model_file(f.to_text());
    CHECK(back.name == f.name);
    CHECK(back.generators == f.generators);
    CHECK(back.differential == f.differential);
    CHECK(back.expected == f.expected);
    CHECK(back.provenance == f.provenance);

    const auto path = std::filesystem::path(SULLIVAN_MODELS_DIR) / (f.name + ".model");
    REQUIRE(std::filesystem::exists(path));
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    const auto shipped = parse_model_file(text.str());
    CHECK(shipped.generators == f.generators);
    CHECK(shipped.differential == f.differential);
    CHECK(shipped.expected == f.expected);
  }
}

TEST_CASE("relations on the corpus") {
  const auto models = corpus_models();
  for (auto rel : {Relation::depth_ellipticity, Relation::pure_depth, Relation::toomer_formula}) {
    const auto r = verify(rel, models);
    CAPTURE(r.relation);
    CHECK(r.overall() == Verdict::pass);
    for (const auto& row : r.rows) {
      CHECK(row.verdict != Verdict::fail);
      CHECK(row.verdict != Verdict::inconclusive);
    }
  }
  CHECK(relation_from_string("pure-depth") == Relation::pure_depth);
  CHECK_FALSE(relation_from_string("bogus").has_value());
}

TEST_CASE("non-elliptic lowest part fails both sides together") {
  const auto row = verify_depth_ellipticity(corpus_model("X2U4Y5V7"));
  CHECK(row.verdict == Verdict::pass);
  std::map<std::string, std::string> q(row.quantities.begin(), row.quantities.end());
  CHECK(q.at("d_k elliptic") == "false");
  CHECK(q.at("e0") == "4");
  CHECK(q.at("depth(d_k)") == "2");
}

TEST_CASE("not-applicable rows") {
  CHECK(verify_depth_ellipticity(corpus_model("L2")).verdict == Verdict::not_applicable);
  CHECK(verify_toomer_formula(corpus_model("X2U4Y5V7")).verdict == Verdict::not_applicable);
  CHECK(verify_toomer_formula(corpus_model("S3xS3")).verdict == Verdict::pass);
}

TEST_CASE("pure depth scan") {
  const auto rows = scan_pure_depth(corpus_models());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].model == "X2U4Y5V7");
  CHECK(rows[0].k == 2);
  CHECK(rows[0].depth_pure_dk == 2);
  CHECK(rows[0].formula == 2);
  CHECK_FALSE(rows[0].inconclusive);
}

TEST_CASE("reports are deterministic") {
  const auto models = corpus_models();
  CHECK(report_text(verify(Relation::depth_ellipticity, models)) ==
        report_text(verify(Relation::depth_ellipticity, models)));
}

}
