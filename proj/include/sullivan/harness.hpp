#pragma once

// Model files, the built-in corpus and the verification reports run on it.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sullivan/differential.hpp"

namespace sullivan {

/// Syntax error in a model file; line and column are 1-based.
class ModelFileError : public std::runtime_error {
 public:
  ModelFileError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// The file parsed but the model fails validate().
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, ValidationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Model file:
///
///   # comment
///   [model]
///   name = CP2
///   generators = [x:2, y:5]
///   [differential]
///   y = x^3
///   [expected]
///   toomer = 2
///   [provenance]
///   toomer = computed
///
/// Unassigned generators get d = 0. [expected] and [provenance] are optional.
struct ModelFile {
  std::string name;
  std::vector<std::pair<std::string, int>> generators;
  std::vector<std::pair<std::string, std::string>> differential;
  std::map<std::string, std::string> expected;
  std::map<std::string, std::string> provenance;

  Model model() const;
  std::string to_text() const;
};

ModelFile parse_model_file(std::string_view text);
/// parse_model_file + validation; throws ModelFileError or ValidationError.
Model parse_model(std::string_view text);

/// Shipped example models.
const std::vector<ModelFile>& corpus();
std::optional<ModelFile> corpus_entry(std::string_view name);

/// Value computed for an [expected] key, as the text the file would hold.
/// Keys: betti, elliptic, formal_dimension, k, toomer, depth, depth_dk,
/// depth_pure, ext_dim, ext_degree, evaluation_nonzero, dk_elliptic.
std::optional<std::string> computed_value(const Model& model, const std::string& key);

struct GoldenMismatch {
  std::string key;
  std::string expected;
  std::string computed;
};

std::vector<GoldenMismatch> check_expected(const ModelFile& file);

enum class Verdict { pass, fail, inconclusive, not_applicable };
const char* to_string(Verdict v);

struct ModelVerification {
  std::string model;
  std::vector<std::pair<std::string, std::string>> quantities;  // in report order
  std::string relation;
  Verdict verdict = Verdict::not_applicable;
  std::string detail;  // on failure: the two mismatching values
  double seconds = 0;
};

/// The relations checked by the harness.
enum class Relation { depth_ellipticity, pure_depth, toomer_formula };
const char* to_string(Relation r);
std::optional<Relation> relation_from_string(std::string_view s);

struct VerificationReport {
  std::string relation;
  std::vector<ModelVerification> rows;
  Verdict overall() const;
};

/// The differential d_k, or d itself when d = 0.
Derivation lowest_part(const Model& model);

/// (e0 = depth(d_k)) <=> (d_k elliptic), for elliptic models.
ModelVerification verify_depth_ellipticity(const Model& model);
/// depth(d) = depth(d_sigma), for elliptic models.
ModelVerification verify_pure_depth(const Model& model);
/// e0(d) = e0(d_k) = dim V^odd + (k - 2) dim V^even when d_k is elliptic.
ModelVerification verify_toomer_formula(const Model& model);

VerificationReport verify(Relation relation, const std::vector<Model>& models);

struct PureDepthRow {
  std::string model;
  int k = 0;
  std::optional<int> depth_pure_dk;
  int formula = 0;
  bool inconclusive = false;
  std::string note;
};

/// depth of the pure part of d_k against dim V^odd + (k - 2) dim V^even, for
/// models whose d_k is not elliptic; other models are skipped.
std::vector<PureDepthRow> scan_pure_depth(const std::vector<Model>& models);

}  // namespace sullivan
