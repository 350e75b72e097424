#pragma once

// Spectral sequences of decreasingly filtered cochain complexes, computed
// page by page from
//   E_r^p = Z_r^p / (Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1}),  Z_r^p = {x in F^p : dx in F^{p+r}}.

#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "sullivan/ext.hpp"

namespace sullivan {

/// Cochain complex over a window of degrees with a filtration level on each
/// basis vector (F^p = span of basis vectors of level >= p).
struct FilteredComplex {
  int lo = 0;
  int hi = -1;
  std::map<int, std::vector<int>> levels;    // degrees lo-1 .. hi+1
  std::map<int, SparseMatrix> differential;  // n -> (C^n -> C^{n+1}), n = lo-1 .. hi
  /// For a truncated complex: the same complex truncated further out, whose
  /// basis in each degree extends this one as a prefix. Cycle conditions are
  /// imposed there and projected back.
  std::shared_ptr<const FilteredComplex> extension;

  /// Throws std::invalid_argument when shapes disagree or d lowers a level.
  void check() const;
  int size(int n) const;
};

struct PageTable {
  int r = 0;
  std::map<std::pair<int, int>, int> dims;  // (p, q = n - p) -> dim, zeros omitted
  /// Cells whose value differs between the truncation and its extension.
  std::set<std::pair<int, int>> leaks;

  int at(int p, int q) const;
  int total(int n) const;
  /// Same dims restricted to total degrees in [lo, hi].
  bool same_dims(const PageTable& other, int lo, int hi) const;
};

std::vector<PageTable> pages(const FilteredComplex& fc, int r_max);

/// Page index past which every differential vanishes for this complex.
int limit_page(const FilteredComplex& fc);

struct SpectralWindow {
  int lo = 0;
  int hi = 12;
  int r_max = 6;
};

FilteredComplex wordlength_complex(const Model& model, const Derivation& d, int lo, int hi);
FilteredComplex odd_complex(const Model& model, const Derivation& d, int lo, int hi);

/// Word-length filtration Lambda^{>=p}V on (LambdaV, d).
std::vector<PageTable> wordlength_ss(const Model& model, SpectralWindow window);
/// Filtration by phi = degree + odd length; its E_1 is H(LambdaV, d_sigma).
std::vector<PageTable> odd_ss(const Model& model, SpectralWindow window);

/// Filtered Hom complex at the stable truncation found by ext().
struct ExtComplex {
  ExtResult ext;
  FilteredComplex complex;
};

/// Cells for total degrees lo..hi; the truncation is the one ext() accepts
/// on that same range of degrees.
ExtComplex ext_complex(const Model& model, const Derivation& delta, HomFiltration f, int lo, int hi);

std::vector<PageTable> ext_wordlength_ss(const Model& model, SpectralWindow window,
                                         HomFiltration f = HomFiltration::weighted);
std::vector<PageTable> ext_odd_ss(const Model& model, SpectralWindow window);

/// The first page on which an Ext spectral sequence is identified with an Ext
/// group, as bigraded dims of that Ext group (q = n - p).
std::map<std::pair<int, int>, int> bigraded_ext(const ExtResult& r);

}  // namespace sullivan
