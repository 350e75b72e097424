#pragma once

// Reference computations written without the library's algebra or
// elimination code. Slow and dense on purpose.

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Dense = std::vector<std::vector<Q>>;

/// Coefficients 0..n of prod_{odd d} (1 + t^d) * prod_{even d} 1 / (1 - t^d).
inline std::vector<long> hilbert_series(const std::vector<int>& degrees, int n) {
  std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int d : degrees) {
    if (d % 2) {
      for (int i = n; i >= d; --i) c[i] += c[i - d];
    } else {
      for (int i = d; i <= n; ++i) c[i] += c[i - d];
    }
  }
  return c;
}

/// Gauss-Jordan rank over Q.
inline int rank(Dense a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Q f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

inline Dense transpose(const Dense& a) {
  if (a.empty()) return {};
  Dense t(a[0].size(), std::vector<Q>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline std::vector<Q> apply(const Dense& a, const std::vector<Q>& v) {
  std::vector<Q> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

/// A generator occurrence: its position and parity. Divided powers are
/// modelled as x^p / p!, so a word in them behaves like an ordinary monomial.
struct Letter {
  int index;
  bool odd;
};

/// Sign of sorting the word into ascending index order by adjacent swaps,
/// or 0 if an odd letter repeats.
inline int sort_sign(std::vector<Letter> word) {
  int sign = 1;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = 0; j + 1 < word.size() - i; ++j)
      if (word[j].index > word[j + 1].index) {
        if (word[j].odd && word[j + 1].odd) sign = -sign;
        std::swap(word[j], word[j + 1]);
      }
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i].index == word[i + 1].index && word[i].odd) return 0;
  return sign;
}

inline mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace oracle
