#include "sullivan/differential.hpp"

#include <algorithm>
#include <stdexcept>

namespace sullivan {

Derivation::Derivation(SpacePtr space, std::vector<Polynomial> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_->size())
    throw std::invalid_argument("derivation needs one value per generator");
  for (auto& v : values_) {
    if (!v.space()) v = Polynomial(space_);
    if (v.space() != space_) throw std::invalid_argument("derivation value over a different space");
  }
}

Derivation Derivation::zero(SpacePtr space) {
  std::vector<Polynomial> values(space->size(), Polynomial(space));
  return Derivation(space, std::move(values));
}

bool Derivation::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.is_zero(); });
}

Polynomial Derivation::apply(const Monomial& m) const {
  Polynomial out(space_);
  const std::size_t n = space_->size();
  // Leibniz over the canonical factorization prefix * g^e * suffix.
  Monomial prefix = space_->unit();
  int prefix_degree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int e = m[i];
    if (e == 0) continue;
    const auto& gen = space_->generator(i);
    if (!values_[i].is_zero()) {
      Monomial rest = space_->unit();  // g^{e-1} (or gamma^{e-1}) times the suffix
      rest[i] = e - 1;
      for (std::size_t j = i + 1; j < n; ++j) rest[j] = m[j];
      // Polynomial: d(x^e) = e x^{e-1} dx; divided power: D(gamma^e) = D(w) gamma^{e-1}.
      Rational factor = gen.kind == GeneratorKind::polynomial ? Rational(e) : Rational(1);
      if (prefix_degree % 2 != 0) factor = -factor;
      Polynomial left = Polynomial::term(space_, prefix, factor) * values_[i];
      out += left * Polynomial::term(space_, rest);
    }
    prefix[i] = e;
    prefix_degree += e * gen.degree;
  }
  return out;
}

Polynomial Derivation::apply(const Polynomial& p) const {
  if (p.space() && p.space() != space_) throw std::invalid_argument("polynomial over a different model");
  Polynomial out(space_);
  for (const auto& [m, c] : p.terms()) out += apply(m) * c;
  return out;
}

bool Derivation::operator==(const Derivation& other) const {
  return space_ == other.space_ && values_ == other.values_;
}

SparseVector coordinates(const Polynomial& p, const DegreeBasis& basis) {
  SparseVector v;
  for (const auto& [m, c] : p.terms()) {
    auto idx = basis.find(m);
    if (!idx) throw std::invalid_argument("polynomial term outside the requested degree");
    v.emplace_back(*idx, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Polynomial from_coordinates(const SpacePtr& space, const DegreeBasis& basis, const SparseVector& v) {
  Polynomial p(space);
  for (const auto& [i, c] : v) p.add_term(basis.monomials[static_cast<std::size_t>(i)], c);
  return p;
}

SparseMatrix derivation_matrix(const Derivation& d, int degree) {
  const auto& src = d.space()->basis(degree);
  const auto& dst = d.space()->basis(degree + 1);
  SparseMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j)
    m.set_column(static_cast<int>(j), coordinates(d.apply(src.monomials[j]), dst));
  return m;
}

// ---------------------------------------------------------------------------
// Model

Model Model::with_differential(Derivation d, std::string suffix) const {
  if (d.space() != space) throw std::invalid_argument("differential over a different space");
  return Model{name + suffix, space, std::move(d)};
}

int Model::odd_count() const {
  return static_cast<int>(std::count_if(space->generators().begin(), space->generators().end(),
                                        [](const auto& g) { return g.odd(); }));
}

int Model::even_count() const { return static_cast<int>(space->size()) - odd_count(); }

int Model::max_generator_degree() const {
  int m = 0;
  for (const auto& g : space->generators()) m = std::max(m, g.degree);
  return m;
}

Model make_model(std::string name, const std::vector<std::pair<std::string, int>>& generators,
                 const std::vector<std::pair<std::string, std::string>>& differential) {
  std::vector<Generator> gens;
  for (const auto& [n, deg] : generators) {
    if (deg < 2)
      throw std::invalid_argument("generator '" + n + "' has degree " + std::to_string(deg) +
                                  " < 2 (models must be simply connected)");
    gens.push_back({n, deg, lambda_kind(deg)});
  }
  auto space = Space::create(std::move(gens));
  std::vector<Polynomial> values(space->size(), Polynomial(space));
  for (const auto& [gen, text] : differential) {
    auto idx = space->index_of(gen);
    if (!idx) throw std::invalid_argument("differential assigned to unknown generator '" + gen + "'");
    values[*idx] = parse_polynomial(space, text);
  }
  return Model{std::move(name), space, Derivation(space, std::move(values))};
}

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::degree: return "degree";
    case Violation::Kind::homogeneity: return "homogeneity";
    case Violation::Kind::minimality: return "minimality";
    case Violation::Kind::square: return "square";
  }
  return "?";
}

ValidationReport validate(const Model& model) {
  ValidationReport report;
  const auto& space = *model.space;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto& g = space.generator(i);
    if (g.degree < 2)
      report.violations.push_back({Violation::Kind::degree, g.name, "degree must be >= 2"});
    const auto& dg = model.differential.value(i);
    if (dg.is_zero()) continue;
    auto deg = dg.degree();
    if (!deg) {
      report.violations.push_back({Violation::Kind::homogeneity, g.name,
                                   "d(" + g.name + ") = " + dg.to_string() + " is not homogeneous"});
    } else if (*deg != g.degree + 1) {
      report.violations.push_back({Violation::Kind::degree, g.name,
                                   "d(" + g.name + ") = " + dg.to_string() + " has degree " +
                                       std::to_string(*deg) + ", expected " + std::to_string(g.degree + 1)});
    }
    for (const auto& [m, c] : dg.terms()) {
      if (m.length() < 2) {
        report.violations.push_back({Violation::Kind::minimality, g.name,
                                     "d(" + g.name + ") has a term of word length " +
                                         std::to_string(m.length()) + ": " + space.render(m)});
        break;
      }
    }
  }
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto dd = model.differential.apply(model.differential.value(i));
    if (!dd.is_zero()) {
      const auto& g = space.generator(i);
      report.violations.push_back(
          {Violation::Kind::square, g.name, "d(d(" + g.name + ")) = " + dd.to_string() + " != 0"});
    }
  }
  return report;
}

std::optional<int> lowest_wordlength(const Derivation& d) {
  std::optional<int> k;
  for (const auto& v : d.values())
    for (const auto& [m, c] : v.terms()) {
      const int len = m.length();
      if (!k || len < *k) k = len;
    }
  return k;
}

std::optional<int> lowest_wordlength(const Model& model) { return lowest_wordlength(model.differential); }

Derivation part(const Derivation& d, int i) {
  std::vector<Polynomial> values;
  for (const auto& v : d.values()) {
    Polynomial p(d.space());
    for (const auto& [m, c] : v.terms())
      if (m.length() == i) p.add_term(m, c);
    values.push_back(std::move(p));
  }
  return Derivation(d.space(), std::move(values));
}

Derivation part(const Model& model, int i) { return part(model.differential, i); }

bool is_wordlength_homogeneous(const Derivation& d) {
  std::optional<int> len;
  for (const auto& v : d.values())
    for (const auto& [m, c] : v.terms()) {
      if (len && *len != m.length()) return false;
      len = m.length();
    }
  return true;
}

namespace {

Derivation pure_part(const Derivation& d) {
  const auto& space = d.space();
  std::vector<Polynomial> values;
  for (std::size_t i = 0; i < space->size(); ++i) {
    Polynomial p(space);
    if (space->generator(i).odd()) {
      for (const auto& [m, c] : d.value(i).terms())
        if (space->odd_length(m) == 0) p.add_term(m, c);
    }
    values.push_back(std::move(p));
  }
  return Derivation(space, std::move(values));
}

}  // namespace

bool is_pure(const Model& model) { return pure_part(model.differential) == model.differential; }

Model pure(const Model& model) {
  Model out = model.with_differential(pure_part(model.differential));
  for (std::size_t i = 0; i < out.space->size(); ++i) {
    if (!out.differential.apply(out.differential.value(i)).is_zero())
      throw std::logic_error("pure differential does not square to zero on " +
                             out.space->generator(i).name);
  }
  return out;
}

bool commuting_check(const Model& model) {
  auto k = lowest_wordlength(model);
  if (!k) return true;
  const Derivation lhs = pure_part(part(model.differential, *k));
  const Derivation rhs = part(pure_part(model.differential), *k);
  return lhs == rhs;
}

}  // namespace sullivan
