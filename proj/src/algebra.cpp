#include "sullivan/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace sullivan {

std::string to_string(const Rational& q) { return q.get_str(); }

GeneratorKind lambda_kind(int degree) {
  return degree % 2 != 0 ? GeneratorKind::exterior : GeneratorKind::polynomial;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

int Monomial::length(std::size_t first, std::size_t last) const {
  int total = 0;
  for (std::size_t i = first; i < last; ++i) total += exps_[i];
  return total;
}

// ---------------------------------------------------------------------------
// Space

Space::Space(std::vector<Generator> generators) : gens_(std::move(generators)) {}

SpacePtr Space::create(std::vector<Generator> generators, Order order) {
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (g.name.empty()) throw std::invalid_argument("generator with empty name");
    if (!names.insert(g.name).second)
      throw std::invalid_argument("duplicate generator name '" + g.name + "'");
    if (g.degree <= 0)
      throw std::invalid_argument("generator '" + g.name + "' must have positive degree");
    const bool odd = g.degree % 2 != 0;
    if (odd != (g.kind == GeneratorKind::exterior))
      throw std::invalid_argument("generator '" + g.name +
                                  "': exterior generators must be exactly the odd ones");
  }
  if (order == Order::canonical) {
    std::stable_sort(generators.begin(), generators.end(), [](const auto& a, const auto& b) {
      return std::tie(a.degree, a.name) < std::tie(b.degree, b.name);
    });
  }
  return SpacePtr(new Space(std::move(generators)));
}

std::optional<std::size_t> Space::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

int Space::degree(const Monomial& m) const {
  int total = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) total += m[i] * gens_[i].degree;
  return total;
}

int Space::odd_length(const Monomial& m) const {
  int total = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].odd()) total += m[i];
  return total;
}

Monomial Space::generator_monomial(std::size_t i) const {
  Monomial m = unit();
  m[i] = 1;
  return m;
}

std::pair<Integer, Monomial> Space::multiply(const Monomial& a, const Monomial& b) const {
  Integer coeff = 1;
  Monomial out = a;
  // Koszul sign: every odd factor of b moves left past the odd factors of a
  // that sit after it in canonical order.
  int odd_in_a_after = 0;
  for (std::size_t i = gens_.size(); i-- > 0;) {
    const auto kind = gens_[i].kind;
    if (kind == GeneratorKind::exterior) {
      if (b[i] != 0) {
        if (a[i] != 0) return {Integer(0), out};
        if (odd_in_a_after % 2 != 0) coeff = -coeff;
      }
      odd_in_a_after += a[i];
    } else if (kind == GeneratorKind::divided_power && a[i] != 0 && b[i] != 0) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a[i] + b[i]),
                   static_cast<unsigned long>(a[i]));
      coeff *= binom;
    }
    out[i] = a[i] + b[i];
  }
  return {coeff, out};
}

namespace {

void enumerate(const std::vector<Generator>& gens, std::size_t i, int remaining,
               std::vector<int>& exps, std::vector<Monomial>& out) {
  if (i == gens.size()) {
    if (remaining == 0) out.emplace_back(exps);
    return;
  }
  const int deg = gens[i].degree;
  const int max_exp = gens[i].kind == GeneratorKind::exterior ? std::min(1, remaining / deg)
                                                              : remaining / deg;
  for (int e = max_exp; e >= 0; --e) {
    exps[i] = e;
    enumerate(gens, i + 1, remaining - e * deg, exps, out);
  }
  exps[i] = 0;
}

}  // namespace

const DegreeBasis& Space::basis(int degree) const {
  std::lock_guard lock(cache_mutex_);
  auto& slot = cache_[degree];
  if (!slot) {
    auto b = std::make_unique<DegreeBasis>();
    b->degree = degree;
    if (degree >= 0) {
      std::vector<int> exps(gens_.size(), 0);
      enumerate(gens_, 0, degree, exps, b->monomials);
    }
    for (std::size_t k = 0; k < b->monomials.size(); ++k)
      b->index.emplace(b->monomials[k], static_cast<int>(k));
    slot = std::move(b);
  }
  return *slot;
}

std::string Space::render(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += gens_[i].name;
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

const DegreeBasis& basis(const SpacePtr& space, int degree) { return space->basis(degree); }

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(SpacePtr space, const Rational& c) {
  Polynomial p(space);
  p.add_term(space->unit(), c);
  return p;
}

Polynomial Polynomial::term(SpacePtr space, Monomial m, const Rational& c) {
  Polynomial p(std::move(space));
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::generator(SpacePtr space, std::string_view name) {
  auto idx = space->index_of(name);
  if (!idx) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  auto m = space->generator_monomial(*idx);
  return term(std::move(space), std::move(m));
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = space_->degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (space_->degree(m) != d) return std::nullopt;
  return d;
}

bool Polynomial::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_space(const Polynomial& other) const {
  if (space_ != other.space_ && space_ && other.space_)
    throw std::invalid_argument("polynomials belong to different models");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_space(other);
  if (!space_) space_ = other.space_;
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_space(other);
  if (!space_) space_ = other.space_;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_space(b);
  Polynomial out(a.space_ ? a.space_ : b.space_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [sign, m] = out.space_->multiply(ma, mb);
      if (sign == 0) continue;
      out.add_term(m, Rational(sign) * ca * cb);
    }
  }
  return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) { return a * b; }

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.empty() && other.terms_.empty()) return true;
  return space_ == other.space_ && terms_ == other.terms_;
}

std::map<int, Polynomial> Polynomial::wordlength_split() const {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    auto [it, inserted] = out.try_emplace(m.length(), space_);
    it->second.add_term(m, c);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Highest degree first, then reverse canonical order: reads naturally.
  std::vector<std::pair<const Monomial*, const Rational*>> items;
  for (const auto& [m, c] : terms_) items.emplace_back(&m, &c);
  std::stable_sort(items.begin(), items.end(), [&](const auto& x, const auto& y) {
    const int dx = space_->degree(*x.first), dy = space_->degree(*y.first);
    if (dx != dy) return dx > dy;
    return *x.first > *y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : items) {
    Rational mag = abs(*c);
    const bool negative = sgn(*c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (m->is_unit()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      os << space_->render(*m);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const SpacePtr& space, std::string_view text) : space_(space), text_(text) {}

  Polynomial parse() {
    Polynomial result(space_);
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", column());
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", column());
      }
      first = false;
      result += parse_term() * sign;
      skip_ws();
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Polynomial term = Polynomial::constant(space_, 1);
    bool expect_factor = true;
    bool any = false;
    while (expect_factor) {
      skip_ws();
      if (at_end()) throw ParseError("expected a factor", column());
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        term *= parse_rational();
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        term = term * parse_power();
      } else {
        throw ParseError(std::string("unexpected character '") + peek() + "'", column());
      }
      any = true;
      skip_ws();
      expect_factor = !at_end() && peek() == '*';
      if (expect_factor) ++pos_;
    }
    if (!any) throw ParseError("empty term", column());
    return term;
  }

  Rational parse_rational() {
    Integer num = parse_integer();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const int col = column();
      Integer den = parse_integer();
      if (den == 0) throw ParseError("zero denominator", col);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  Integer parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", column());
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial parse_power() {
    const int col = column();
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    auto idx = space_->index_of(name);
    if (!idx) throw ParseError("unknown generator '" + name + "'", col);
    skip_ws();
    long exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      const int ecol = column();
      Integer e = parse_integer();
      if (!e.fits_slong_p() || e > 10000) throw ParseError("exponent too large", ecol);
      exponent = e.get_si();
    }
    Polynomial out = Polynomial::constant(space_, 1);
    const auto g = Polynomial::term(space_, space_->generator_monomial(*idx));
    for (long i = 0; i < exponent; ++i) out = out * g;
    return out;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  int column() const { return static_cast<int>(pos_) + 1; }

  const SpacePtr& space_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const SpacePtr& space, std::string_view text) {
  return PolynomialParser(space, text).parse();
}

}  // namespace sullivan
