// Command-line front end: sullivan <command> [options] MODEL
//
// MODEL is a path to a model file or the name of a corpus model.
// Exit codes: 0 success, 1 assertion failure, 2 inconclusive, 3 input error.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sullivan/ellipticity.hpp"
#include "sullivan/ext.hpp"
#include "sullivan/harness.hpp"
#include "sullivan/spectral.hpp"

namespace {

using namespace sullivan;
using Json = nlohmann::ordered_json;

enum Exit { ok = 0, assertion = 1, inconclusive = 2, input = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  bool timing = false;
};

std::string rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json polynomial_json(const Polynomial& p) {
  Json out = Json::object();
  for (const auto& [m, c] : p.terms()) out[p.space()->render(m)] = rational(c);
  return out;
}

Json hom_json(const SpacePtr& gamma, const HomElement& f) {
  Json out = Json::object();
  for (const auto& [g, p] : f.values)
    if (!p.is_zero()) out[gamma->render(g)] = polynomial_json(p);
  return out;
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      if (width.size() < r.size()) width.resize(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::string line;
      for (std::size_t i = 0; i < rows_[k].size(); ++i) {
        if (i) line += "  ";
        line += rows_[k][i] + std::string(width[i] - rows_[k][i].size(), ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << "\n";
      if (k == 0) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i ? 2 : 0);
        os << std::string(total, '-') << "\n";
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

Model load(const std::string& source) {
  std::string text;
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else if (auto entry = corpus_entry(source)) {
    text = entry->to_text();
  } else {
    throw InputError("no model file or corpus model named '" + source + "'");
  }
  return parse_model(text);
}

std::vector<Model> all_corpus() {
  std::vector<Model> out;
  for (const auto& f : corpus()) out.push_back(f.model());
  return out;
}

void emit(const Options& opt, const Json& j, const std::function<void(std::ostream&)>& text) {
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    text(std::cout);
}

// ---- commands ----

int cmd_validate(const Options& opt, const std::string& source) {
  const Model m = load(source);
  const auto k = lowest_wordlength(m);
  Json j;
  j["model"] = m.name;
  Json gens = Json::array();
  for (const auto& g : m.space->generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  j["generators"] = gens;
  Json diff = Json::object();
  for (std::size_t i = 0; i < m.space->size(); ++i)
    diff[m.space->generator(i).name] = polynomial_json(m.differential.value(i));
  j["differential"] = diff;
  j["valid"] = true;
  j["k"] = k ? Json(*k) : Json(nullptr);
  j["pure"] = is_pure(m);
  emit(opt, j, [&](std::ostream& os) {
    os << "model " << m.name << ": valid\n";
    Table t({"generator", "degree", "d"});
    for (std::size_t i = 0; i < m.space->size(); ++i)
      t.add({m.space->generator(i).name, std::to_string(m.space->generator(i).degree),
             m.differential.value(i).to_string()});
    t.print(os);
    os << "k = " << (k ? std::to_string(*k) : "none (d = 0)") << ", pure = " << yes(is_pure(m)) << "\n";
  });
  return ok;
}

int cmd_betti(const Options& opt, const std::string& source, int max_degree) {
  const Model m = load(source);
  const auto b = betti(m, max_degree);
  Json j;
  j["model"] = m.name;
  j["max_degree"] = max_degree;
  j["betti"] = b.dims;
  emit(opt, j, [&](std::ostream& os) {
    Table t({"n", "dim H^n"});
    for (int n = 0; n <= max_degree; ++n) t.add({std::to_string(n), std::to_string(b.at(n))});
    t.print(os);
  });
  return ok;
}

int cmd_elliptic(const Options& opt, const std::string& source) {
  const Model m = load(source);
  const auto v = is_elliptic(m);
  Json j;
  j["model"] = m.name;
  j["elliptic"] = v.elliptic;
  j["formal_dimension"] = v.formal_dimension ? Json(*v.formal_dimension) : Json(nullptr);
  j["formal_dimension_bound"] = formal_dimension_bound(m);
  j["witness"] = v.witness;
  emit(opt, j, [&](std::ostream& os) {
    os << m.name << ": " << (v.elliptic ? "elliptic" : "not elliptic");
    if (v.formal_dimension) os << ", formal dimension " << *v.formal_dimension;
    os << "\n  " << v.witness << "\n";
  });
  return ok;
}

int cmd_toomer(const Options& opt, const std::string& source) {
  const Model m = load(source);
  const auto r = toomer_report(m);
  const bool agree = r.fundamental_class_route == r.injectivity_route;
  Json j;
  j["model"] = m.name;
  j["formal_dimension"] = r.formal_dimension;
  j["toomer"] = r.fundamental_class_route;
  j["fundamental_class_route"] = r.fundamental_class_route;
  j["injectivity_route"] = r.injectivity_route;
  j["representative"] = polynomial_json(r.representative);
  j["routes_agree"] = agree;
  emit(opt, j, [&](std::ostream& os) {
    os << m.name << ": e0 = " << r.fundamental_class_route << " (formal dimension " << r.formal_dimension << ")\n";
    os << "  fundamental class route: " << r.fundamental_class_route << "\n";
    os << "  injectivity route:       " << r.injectivity_route << "\n";
    os << "  representative: " << r.representative.to_string() << "\n";
  });
  return agree ? ok : assertion;
}

Derivation select_differential(const Model& m, const std::string& which, Model& target) {
  target = m;
  if (which == "full") return m.differential;
  if (which == "dk") return lowest_part(m);
  if (which == "pure") {
    target = pure(m);
    return target.differential;
  }
  if (which == "dk-pure") {
    target = pure(m.with_differential(lowest_part(m)));
    return target.differential;
  }
  throw InputError("unknown differential '" + which + "'");
}

HomFiltration parse_filtration(const std::string& f) {
  if (f == "weighted") return HomFiltration::weighted;
  if (f == "wordlength") return HomFiltration::wordlength;
  if (f == "odd") return HomFiltration::odd;
  throw InputError("unknown Hom filtration '" + f + "'");
}

int cmd_depth(const Options& opt, const std::string& source, const std::string& which, const std::string& filt) {
  const Model m = load(source);
  Model target;
  const Derivation delta = select_differential(m, which, target);
  ExtOptions eo;
  eo.filtration = parse_filtration(filt);
  const auto r = ext(target, delta, eo);
  const auto cc = acyclic_closure(target, delta, target.max_generator_degree() + 1,
                                  constraints_for(eo.filtration, r.k));
  Json j;
  j["model"] = m.name;
  j["differential"] = which;
  j["filtration"] = to_string(eo.filtration);
  j["k"] = r.k;
  j["stable"] = r.stable;
  j["gamma_bound"] = r.gamma_bound;
  j["depth"] = r.stable && r.depth() ? Json(*r.depth()) : Json(nullptr);
  j["ext_dim"] = r.dim();
  Json classes = Json::array();
  for (const auto& c : r.classes)
    classes.push_back({{"degree", c.degree},
                       {"level", c.level},
                       {"evaluation_nonzero", c.evaluation_nonzero},
                       {"representative", hom_json(cc.gamma(), c.representative)}});
  j["classes"] = classes;
  if (!r.stable) j["note"] = r.note;
  emit(opt, j, [&](std::ostream& os) {
    os << m.name << " [" << which << ", " << to_string(eo.filtration) << " filtration, k = " << r.k << "]\n";
    if (!r.stable) {
      os << "  inconclusive: " << r.note << "\n";
      return;
    }
    os << "  depth = " << (r.depth() ? std::to_string(*r.depth()) : "none") << ", dim Ext = " << r.dim()
       << " (Gamma-degree <= " << r.gamma_bound << ")\n";
    Table t({"degree", "level", "ev != 0"});
    for (const auto& c : r.classes) t.add({std::to_string(c.degree), std::to_string(c.level), yes(c.evaluation_nonzero)});
    t.print(os);
  });
  return r.stable ? ok : inconclusive;
}

int cmd_pages(const Options& opt, const std::string& source, const std::string& filtration, int r_max,
              std::optional<int> lo, std::optional<int> hi, bool literal) {
  const Model m = load(source);
  std::vector<PageTable> ps;
  SpectralWindow w;
  w.r_max = r_max;
  if (filtration == "wordlength" || filtration == "odd") {
    w.lo = lo.value_or(0);
    w.hi = hi.value_or(12);
    ps = filtration == "wordlength" ? wordlength_ss(m, w) : odd_ss(m, w);
  } else if (filtration == "ext-wordlength" || filtration == "ext-odd") {
    const int n = formal_dimension_bound(m);
    w.lo = lo.value_or(n - 1);
    w.hi = hi.value_or(n + 1);
    ps = filtration == "ext-odd"
             ? ext_odd_ss(m, w)
             : ext_wordlength_ss(m, w, literal ? HomFiltration::wordlength : HomFiltration::weighted);
  } else {
    throw InputError("unknown filtration '" + filtration + "'");
  }
  std::set<std::pair<int, int>> cells;
  for (const auto& p : ps)
    for (const auto& [pq, d] : p.dims) cells.insert(pq);
  Json j;
  j["model"] = m.name;
  j["filtration"] = filtration;
  j["window"] = {w.lo, w.hi};
  Json jp = Json::array();
  for (const auto& p : ps) {
    Json cellsj = Json::array();
    for (const auto& [pq, d] : p.dims) cellsj.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", d}});
    Json leaks = Json::array();
    for (const auto& pq : p.leaks) leaks.push_back({{"p", pq.first}, {"q", pq.second}});
    jp.push_back({{"r", p.r}, {"cells", cellsj}, {"leaks", leaks}});
  }
  j["pages"] = jp;
  emit(opt, j, [&](std::ostream& os) {
    os << m.name << ": " << filtration << " spectral sequence, total degrees " << w.lo << ".." << w.hi << "\n";
    std::vector<std::string> header = {"p", "q", "n"};
    for (const auto& p : ps) header.push_back("E" + std::to_string(p.r));
    Table t(header);
    for (const auto& pq : cells) {
      std::vector<std::string> row = {std::to_string(pq.first), std::to_string(pq.second),
                                      std::to_string(pq.first + pq.second)};
      for (const auto& p : ps) row.push_back(std::to_string(p.at(pq.first, pq.second)) + (p.leaks.count(pq) ? "*" : ""));
      t.add(row);
    }
    t.print(os);
    bool any_leak = std::any_of(ps.begin(), ps.end(), [](const auto& p) { return !p.leaks.empty(); });
    if (any_leak) os << "* cell differs between truncations (window leak)\n";
  });
  return ok;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::fail: return assertion;
    case Verdict::inconclusive: return inconclusive;
    default: return ok;
  }
}

int cmd_verify(const Options& opt, Relation relation, bool all, const std::vector<std::string>& sources) {
  std::vector<Model> models;
  if (all) models = all_corpus();
  for (const auto& s : sources) models.push_back(load(s));
  if (models.empty()) throw InputError("verify: give a model or --all-corpus");
  const auto report = verify(relation, models);
  Json j;
  j["relation"] = report.relation;
  j["overall"] = to_string(report.overall());
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json q = Json::object();
    for (const auto& [k, v] : r.quantities) q[k] = v;
    Json row = {{"model", r.model}, {"relation", r.relation}, {"verdict", to_string(r.verdict)}, {"quantities", q}};
    if (!r.detail.empty()) row["detail"] = r.detail;
    if (opt.timing) row["seconds"] = r.seconds;
    rows.push_back(row);
  }
  j["models"] = rows;
  emit(opt, j, [&](std::ostream& os) {
    os << report.relation << ": " << to_string(report.overall()) << "\n";
    std::vector<std::string> header = {"model", "verdict", "values", "detail"};
    if (opt.timing) header.push_back("seconds");
    Table t(header);
    for (const auto& r : report.rows) {
      std::string values;
      for (const auto& [k, v] : r.quantities) values += (values.empty() ? "" : ", ") + k + " = " + v;
      std::vector<std::string> row = {r.model, to_string(r.verdict), values, r.detail};
      if (opt.timing) {
        std::ostringstream s;
        s.precision(3);
        s << std::fixed << r.seconds;
        row.push_back(s.str());
      }
      t.add(row);
    }
    t.print(os);
  });
  return verdict_exit(report.overall());
}

int cmd_pure_depth(const Options& opt, const std::vector<std::string>& sources) {
  std::vector<Model> models;
  for (const auto& s : sources) models.push_back(load(s));
  if (models.empty()) models = all_corpus();
  const auto rows = scan_pure_depth(models);
  Json j = Json::array();
  bool inconclusive_rows = false;
  for (const auto& r : rows) {
    inconclusive_rows |= r.inconclusive;
    j.push_back({{"model", r.model},
                 {"k", r.k},
                 {"depth_pure_dk", r.depth_pure_dk ? Json(*r.depth_pure_dk) : Json(nullptr)},
                 {"dim_odd_plus_k_minus_2_dim_even", r.formula},
                 {"inconclusive", r.inconclusive}});
  }
  emit(opt, Json{{"rows", j}}, [&](std::ostream& os) {
    Table t({"model", "k", "depth(d_k,sigma)", "dim V^odd + (k-2) dim V^even", "equal"});
    for (const auto& r : rows)
      t.add({r.model, std::to_string(r.k), r.depth_pure_dk ? std::to_string(*r.depth_pure_dk) : "inconclusive",
             std::to_string(r.formula), r.depth_pure_dk ? yes(*r.depth_pure_dk == r.formula) : "?"});
    t.print(os);
  });
  return inconclusive_rows ? inconclusive : ok;
}

int cmd_corpus(const Options& opt, const std::string& export_dir, bool check) {
  int status = ok;
  Json j = Json::array();
  if (!export_dir.empty()) std::filesystem::create_directories(export_dir);
  Table t({"model", "generators", "golden"});
  for (const auto& f : corpus()) {
    std::string gens;
    for (const auto& [n, d] : f.generators) gens += (gens.empty() ? "" : " ") + n + ":" + std::to_string(d);
    Json e = {{"model", f.name}, {"generators", gens}};
    std::string golden = "-";
    if (check) {
      const auto mm = check_expected(f);
      golden = mm.empty() ? "ok" : "MISMATCH";
      Json bad = Json::array();
      for (const auto& x : mm) {
        bad.push_back({{"key", x.key}, {"expected", x.expected}, {"computed", x.computed}});
        golden += " " + x.key + ": expected " + x.expected + ", computed " + x.computed;
      }
      e["mismatches"] = bad;
      if (!mm.empty()) status = assertion;
    }
    if (!export_dir.empty()) std::ofstream(std::filesystem::path(export_dir) / (f.name + ".model")) << f.to_text();
    j.push_back(e);
    t.add({f.name, gens, golden});
  }
  emit(opt, Json{{"corpus", j}}, [&](std::ostream& os) { t.print(os); });
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sullivan algebra invariants: cohomology, ellipticity, Toomer invariant, depth and spectral sequences"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_flag("--timing", opt.timing, "Include wall-clock timings in verification reports");

  std::string source;
  auto add_model = [&](CLI::App* c) { c->add_option("model", source, "Model file or corpus name")->required(); };

  auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a model");
  add_model(validate_cmd);

  int max_degree = 12;
  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers");
  add_model(betti_cmd);
  betti_cmd->add_option("--max-degree", max_degree, "Largest degree")->check(CLI::NonNegativeNumber);

  auto* elliptic_cmd = app.add_subcommand("elliptic", "Ellipticity verdict and formal dimension");
  add_model(elliptic_cmd);

  auto* toomer_cmd = app.add_subcommand("toomer", "Toomer invariant e0 (elliptic models)");
  add_model(toomer_cmd);

  std::string which = "full", hom_filtration = "weighted";
  auto* depth_cmd = app.add_subcommand("depth", "Depth via Ext over the acyclic closure");
  add_model(depth_cmd);
  depth_cmd->add_option("--differential", which, "full | dk | pure | dk-pure")
      ->check(CLI::IsMember({"full", "dk", "pure", "dk-pure"}));
  depth_cmd->add_option("--filtration", hom_filtration, "weighted | wordlength | odd")
      ->check(CLI::IsMember({"weighted", "wordlength", "odd"}));

  std::string filtration = "wordlength";
  int r_max = 6;
  std::optional<int> lo, hi;
  bool literal = false;
  auto* pages_cmd = app.add_subcommand("pages", "Spectral sequence pages");
  add_model(pages_cmd);
  pages_cmd->add_option("--filtration", filtration, "wordlength | odd | ext-wordlength | ext-odd")
      ->check(CLI::IsMember({"wordlength", "odd", "ext-wordlength", "ext-odd"}));
  pages_cmd->add_option("--r-max", r_max, "Last page")->check(CLI::NonNegativeNumber);
  pages_cmd->add_option("--lo", lo, "Lowest total degree");
  pages_cmd->add_option("--hi", hi, "Highest total degree");
  pages_cmd->add_flag("--literal", literal, "ext-wordlength: unweighted word length of the values");

  std::string relation;
  bool all = false;
  std::vector<std::string> sources;
  auto* verify_cmd = app.add_subcommand("verify", "Check a relation between invariants on models");
  verify_cmd->add_option("--relation", relation, "depth-ellipticity | pure-depth | toomer-formula")
      ->required()
      ->check(CLI::IsMember({"depth-ellipticity", "pure-depth", "toomer-formula"}));
  verify_cmd->add_flag("--all-corpus", all, "Run on every corpus model");
  verify_cmd->add_option("models", sources, "Model files or corpus names");

  auto* scan_cmd = app.add_subcommand("scan-pure-depth", "Tabulate depth of the pure part of d_k where d_k is not elliptic");
  scan_cmd->add_option("models", sources, "Model files or corpus names (default: corpus)");

  std::string export_dir;
  bool check = false;
  auto* corpus_cmd = app.add_subcommand("corpus", "List the built-in models");
  corpus_cmd->add_option("--export", export_dir, "Write each model file into this directory");
  corpus_cmd->add_flag("--check", check, "Compare expected invariants with computed ones");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input;
  }

  try {
    if (*validate_cmd) return cmd_validate(opt, source);
    if (*betti_cmd) return cmd_betti(opt, source, max_degree);
    if (*elliptic_cmd) return cmd_elliptic(opt, source);
    if (*toomer_cmd) return cmd_toomer(opt, source);
    if (*depth_cmd) return cmd_depth(opt, source, which, hom_filtration);
    if (*pages_cmd) return cmd_pages(opt, source, filtration, r_max, lo, hi, literal);
    if (*verify_cmd) return cmd_verify(opt, *relation_from_string(relation), all, sources);
    if (*scan_cmd) return cmd_pure_depth(opt, sources);
    if (*corpus_cmd) return cmd_corpus(opt, export_dir, check);
  } catch (const ModelFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input;
  } catch (const TruncationError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return inconclusive;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input;
  } catch (const std::exception& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return assertion;
  }
  return ok;
}
