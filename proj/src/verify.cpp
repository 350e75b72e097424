#include <algorithm>
#include <chrono>

#include "sullivan/ellipticity.hpp"
#include "sullivan/ext.hpp"
#include "sullivan/harness.hpp"

namespace sullivan {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::not_applicable: return "n/a";
  }
  return "?";
}

Verdict VerificationReport::overall() const {
  bool inconclusive = false;
  for (const auto& r : rows) {
    if (r.verdict == Verdict::fail) return Verdict::fail;
    inconclusive |= r.verdict == Verdict::inconclusive;
  }
  if (inconclusive) return Verdict::inconclusive;
  for (const auto& r : rows)
    if (r.verdict == Verdict::pass) return Verdict::pass;
  return Verdict::not_applicable;
}

Derivation lowest_part(const Model& model) {
  auto k = lowest_wordlength(model);
  return k ? part(model, *k) : model.differential;
}

namespace {

std::string str(bool b) { return b ? "true" : "false"; }
std::string str(int v) { return std::to_string(v); }

std::string list(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

int formula(const Model& model, int k) { return model.odd_count() + (k - 2) * model.even_count(); }

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs body, turning truncation and consistency problems into verdicts.
template <class Body>
ModelVerification guarded(const Model& model, const std::string& relation, Body body) {
  ModelVerification v;
  v.model = model.name;
  v.relation = relation;
  Stopwatch clock;
  try {
    body(v);
  } catch (const TruncationError& e) {
    v.verdict = Verdict::inconclusive;
    v.detail = e.what();
  } catch (const InconsistencyError& e) {
    v.verdict = Verdict::fail;
    v.detail = e.what();
  }
  v.seconds = clock.seconds();
  return v;
}

}  // namespace

ModelVerification verify_depth_ellipticity(const Model& model) {
  return guarded(model, "(e0 = depth(d_k)) <=> d_k elliptic", [&](ModelVerification& v) {
    if (!is_elliptic(model).elliptic) {
      v.detail = "model is not elliptic";
      return;
    }
    const auto k = lowest_wordlength(model);
    const Model dk = model.with_differential(lowest_part(model), "_dk");
    const int e0 = toomer(model);
    const int depth_dk = depth(model, dk.differential);
    const bool dk_elliptic = is_elliptic(dk).elliptic;
    v.quantities = {{"k", k ? str(*k) : "none"},
                    {"e0", str(e0)},
                    {"depth(d_k)", str(depth_dk)},
                    {"d_k elliptic", str(dk_elliptic)}};
    const bool lhs = e0 == depth_dk;
    v.verdict = lhs == dk_elliptic ? Verdict::pass : Verdict::fail;
    if (v.verdict == Verdict::fail)
      v.detail = "e0 = " + str(e0) + ", depth(d_k) = " + str(depth_dk) + ", d_k elliptic = " + str(dk_elliptic);
  });
}

ModelVerification verify_pure_depth(const Model& model) {
  return guarded(model, "depth(d) = depth(d_sigma)", [&](ModelVerification& v) {
    if (!is_elliptic(model).elliptic) {
      v.detail = "model is not elliptic";
      return;
    }
    const Model p = pure(model);
    const int full = depth(model, model.differential);
    const int sigma = depth(p, p.differential);
    v.quantities = {{"depth(d)", str(full)}, {"depth(d_sigma)", str(sigma)}, {"pure", str(is_pure(model))}};
    v.verdict = full == sigma ? Verdict::pass : Verdict::fail;
    if (v.verdict == Verdict::fail) v.detail = "depth(d) = " + str(full) + ", depth(d_sigma) = " + str(sigma);
  });
}

ModelVerification verify_toomer_formula(const Model& model) {
  return guarded(model, "e0(d) = e0(d_k) = dim V^odd + (k-2) dim V^even", [&](ModelVerification& v) {
    const Model dk = model.with_differential(lowest_part(model), "_dk");
    if (!is_elliptic(dk).elliptic) {
      v.detail = "d_k is not elliptic";
      return;
    }
    if (!is_elliptic(model).elliptic) throw InconsistencyError(model.name + ": d_k elliptic but d is not");
    const int k = lowest_wordlength(model).value_or(2);
    const int e0 = toomer(model);
    const int e0_dk = toomer(dk);
    const int f = formula(model, k);
    v.quantities = {{"k", str(k)},
                    {"dim V^odd", str(model.odd_count())},
                    {"dim V^even", str(model.even_count())},
                    {"e0(d)", str(e0)},
                    {"e0(d_k)", str(e0_dk)},
                    {"formula", str(f)}};
    v.verdict = e0 == e0_dk && e0 == f ? Verdict::pass : Verdict::fail;
    if (v.verdict == Verdict::fail)
      v.detail = "e0(d) = " + str(e0) + ", e0(d_k) = " + str(e0_dk) + ", formula = " + str(f);
  });
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::depth_ellipticity: return "depth-ellipticity";
    case Relation::pure_depth: return "pure-depth";
    case Relation::toomer_formula: return "toomer-formula";
  }
  return "?";
}

std::optional<Relation> relation_from_string(std::string_view s) {
  for (auto r : {Relation::depth_ellipticity, Relation::pure_depth, Relation::toomer_formula})
    if (s == to_string(r)) return r;
  return std::nullopt;
}

VerificationReport verify(Relation relation, const std::vector<Model>& models) {
  VerificationReport r;
  r.relation = to_string(relation);
  for (const auto& m : models) {
    switch (relation) {
      case Relation::depth_ellipticity: r.rows.push_back(verify_depth_ellipticity(m)); break;
      case Relation::pure_depth: r.rows.push_back(verify_pure_depth(m)); break;
      case Relation::toomer_formula: r.rows.push_back(verify_toomer_formula(m)); break;
    }
  }
  return r;
}

std::vector<PureDepthRow> scan_pure_depth(const std::vector<Model>& models) {
  std::vector<PureDepthRow> rows;
  for (const auto& m : models) {
    const auto k = lowest_wordlength(m);
    if (!k) continue;
    const Model dk = m.with_differential(part(m, *k), "_dk");
    if (is_elliptic(dk).elliptic) continue;
    PureDepthRow row;
    row.model = m.name;
    row.k = *k;
    row.formula = formula(m, *k);
    try {
      const Model p = pure(dk);
      row.depth_pure_dk = depth(p, p.differential);
    } catch (const TruncationError& e) {
      row.inconclusive = true;
      row.note = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<std::string> computed_value(const Model& model, const std::string& key) {
  auto betti_list = [&](int n) { return list(betti(model, n).dims); };
  if (key == "betti") return betti_list(12);
  if (key == "elliptic") return str(is_elliptic(model).elliptic);
  if (key == "formal_dimension") {
    auto v = is_elliptic(model);
    return v.formal_dimension ? str(*v.formal_dimension) : "none";
  }
  if (key == "k") {
    auto k = lowest_wordlength(model);
    return k ? str(*k) : "none";
  }
  if (key == "dk_elliptic") return str(is_elliptic(model.with_differential(lowest_part(model))).elliptic);
  if (key == "toomer") return is_elliptic(model).elliptic ? str(toomer(model)) : "none";
  if (key == "depth") return str(depth(model, model.differential));
  if (key == "depth_dk") return str(depth(model, lowest_part(model)));
  if (key == "depth_pure") {
    const Model p = pure(model);
    return str(depth(p, p.differential));
  }
  if (key == "ext_dim" || key == "ext_degree" || key == "evaluation_nonzero") {
    const auto g = gorenstein_check(model, model.differential);
    if (!g.stable) throw TruncationError("Ext did not stabilise");
    if (key == "ext_dim") return str(g.dim);
    if (key == "ext_degree") return g.degree ? str(*g.degree) : "none";
    return str(g.evaluation_nonzero);
  }
  return std::nullopt;
}

std::vector<GoldenMismatch> check_expected(const ModelFile& file) {
  const Model model = file.model();
  std::vector<GoldenMismatch> out;
  for (const auto& [key, expected] : file.expected) {
    std::optional<std::string> got;
    if (key == "betti") {
      const int entries = static_cast<int>(std::count(expected.begin(), expected.end(), ',')) + 1;
      got = list(betti(model, entries - 1).dims);
    } else {
      got = computed_value(model, key);
    }
    if (!got) {
      out.push_back({key, expected, "<unknown key>"});
      continue;
    }
    if (*got != expected) out.push_back({key, expected, *got});
  }
  return out;
}

}  // namespace sullivan
