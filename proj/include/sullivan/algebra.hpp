#pragma once

// Free graded-commutative algebras over Q: exterior generators (odd degree),
// polynomial generators (even degree) and divided-power generators (even
// degree, used for Gamma(sV) in the acyclic closure).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sullivan {

using Rational = mpq_class;
using Integer = mpz_class;

/// Renders an exact rational as "num" or "num/den".
std::string to_string(const Rational& q);

enum class GeneratorKind : std::uint8_t { exterior, polynomial, divided_power };

struct Generator {
  std::string name;
  int degree = 0;
  GeneratorKind kind = GeneratorKind::polynomial;

  bool odd() const { return degree % 2 != 0; }
};

/// Kind implied by the degree for a generator of LambdaV.
GeneratorKind lambda_kind(int degree);

/// Exponent vector indexed by generator position in the owning Space.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {}

  static Monomial unit(std::size_t generator_count) {
    return Monomial(std::vector<int>(generator_count, 0));
  }

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  std::span<const int> exponents() const { return exps_; }
  bool is_unit() const;

  /// Sum of exponents over [first, last).
  int length(std::size_t first, std::size_t last) const;
  int length() const { return length(0, exps_.size()); }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

struct DegreeBasis {
  int degree = 0;
  std::vector<Monomial> monomials;
  std::map<Monomial, int> index;

  std::size_t size() const { return monomials.size(); }
  std::optional<int> find(const Monomial& m) const {
    auto it = index.find(m);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// A finite list of generators together with the multiplication rule of the
/// free graded-commutative (divided-power) algebra they span.
class Space {
 public:
  enum class Order { canonical, as_given };

  /// canonical sorts by (degree, name). Throws std::invalid_argument on
  /// duplicate names, non-positive degrees or kinds inconsistent with parity.
  static SpacePtr create(std::vector<Generator> generators,
                         Order order = Order::canonical);

  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const Generator& generator(std::size_t i) const { return gens_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  int degree(const Monomial& m) const;
  /// Number of odd-degree factors.
  int odd_length(const Monomial& m) const;
  Monomial unit() const { return Monomial::unit(gens_.size()); }
  Monomial generator_monomial(std::size_t i) const;

  /// Product of two basis monomials: coefficient (Koszul sign times
  /// divided-power binomials; zero if the product vanishes) and the result.
  std::pair<Integer, Monomial> multiply(const Monomial& a, const Monomial& b) const;

  /// All monomials of the given degree; memoized and thread-safe.
  const DegreeBasis& basis(int degree) const;

  std::string render(const Monomial& m) const;

 private:
  explicit Space(std::vector<Generator> generators);

  std::vector<Generator> gens_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::unique_ptr<DegreeBasis>> cache_;
};

/// Element of a free algebra: monomial -> nonzero rational coefficient.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(SpacePtr space) : space_(std::move(space)) {}

  static Polynomial constant(SpacePtr space, const Rational& c);
  static Polynomial term(SpacePtr space, Monomial m, const Rational& c = 1);
  static Polynomial generator(SpacePtr space, std::string_view name);

  const SpacePtr& space() const { return space_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Degree when homogeneous; nullopt for zero or mixed-degree polynomials.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  /// Adds c*m, dropping the term if the coefficient cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial& other) const;

  /// Components by word length (sum of exponents). Components sum to *this.
  std::map<int, Polynomial> wordlength_split() const;

  std::string to_string() const;

 private:
  void require_same_space(const Polynomial& other) const;

  SpacePtr space_;
  Terms terms_;
};

Polynomial multiply(const Polynomial& a, const Polynomial& b);
const DegreeBasis& basis(const SpacePtr& space, int degree);

/// Thrown for malformed polynomial text; column is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int column)
      : std::runtime_error(what), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

/// Parses `u^2 + x^4`, `x*y - 1/2*z`, `3`, ... over the given space.
Polynomial parse_polynomial(const SpacePtr& space, std::string_view text);

}  // namespace sullivan
