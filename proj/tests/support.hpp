#pragma once

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sullivan/harness.hpp"
#include "sullivan/linalg.hpp"

namespace testing_support {

using namespace sullivan;

inline Model corpus_model(const std::string& name) { return corpus_entry(name)->model(); }

inline std::vector<Model> corpus_models() {
  std::vector<Model> out;
  for (const auto& f : corpus()) out.push_back(f.model());
  return out;
}

inline std::vector<Model> elliptic_corpus() {
  std::vector<Model> out;
  for (const auto& f : corpus())
    if (f.expected.at("elliptic") == "true") out.push_back(f.model());
  return out;
}

inline oracle::Dense dense(const SparseMatrix& m) {
  oracle::Dense out(static_cast<std::size_t>(m.rows()), std::vector<Rational>(static_cast<std::size_t>(m.cols())));
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) out[r][c] = v;
  return out;
}

inline SparseMatrix product(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows(), b.cols());
  for (int c = 0; c < b.cols(); ++c) out.set_column(c, a.multiply(b.column(c)));
  return out;
}

inline bool is_zero(const SparseMatrix& m) { return m.nonzeros() == 0; }

/// Random monomial of the given space with small exponents.
inline Monomial random_monomial(const Space& space, std::mt19937& rng) {
  Monomial m = space.unit();
  for (std::size_t i = 0; i < space.size(); ++i) {
    const bool odd = space.generator(i).odd();
    m[i] = static_cast<int>(rng() % (odd ? 2 : 4));
  }
  return m;
}

inline std::vector<oracle::Letter> letters(const Space& space, const Monomial& m) {
  std::vector<oracle::Letter> out;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (int e = 0; e < m[i]; ++e) out.push_back({static_cast<int>(i), space.generator(i).odd()});
  return out;
}

inline SparseVector random_vector(int size, std::mt19937& rng, int density = 3) {
  SparseVector v;
  for (int i = 0; i < size; ++i)
    if (rng() % static_cast<unsigned>(density) == 0) {
      const long num = static_cast<long>(rng() % 11) - 5;
      if (num) v.emplace_back(i, Rational(num, static_cast<long>(rng() % 3) + 1));
    }
  for (auto& [i, q] : v) q.canonicalize();
  return v;
}

}  // namespace testing_support
