#pragma once

#include <cstddef>
#include <vector>

#include "snccoh/exactla.hpp"
#include "snccoh/presheaf.hpp"

namespace snccoh {

/// First-quadrant bicomplex on the grid 0 <= p <= width, 0 <= q <= height.
/// horizontal(p, q) : C^{p,q} -> C^{p+1,q} and vertical(p, q) : C^{p,q} -> C^{p,q+1}.
/// Maps leaving the grid are zero and are not stored.
class Bicomplex {
 public:
  Bicomplex() = default;
  /// All cells zero-dimensional.
  Bicomplex(std::size_t width, std::size_t height);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }

  std::size_t dim(std::size_t p, std::size_t q) const { return dims_[index(p, q)]; }
  /// Resizes the cell and resets every map touching it to zero.
  void set_dim(std::size_t p, std::size_t q, std::size_t d);
  void set_horizontal(std::size_t p, std::size_t q, RationalMatrix m);
  void set_vertical(std::size_t p, std::size_t q, RationalMatrix m);

  /// Zero map of the right shape when (p+1, q) is off the grid.
  const RationalMatrix& horizontal(std::size_t p, std::size_t q) const { return horizontal_[index(p, q)]; }
  const RationalMatrix& vertical(std::size_t p, std::size_t q) const { return vertical_[index(p, q)]; }

  /// Throws InvalidBicomplex unless delta^2 = 0, d^2 = 0 and
  /// d delta + delta d = 0 everywhere.
  void validate() const;

  /// Total complex C^m = (+)_{p+q=m} C^{p,q}, summands ordered by ascending
  /// p, with differential delta + d.
  CochainComplex total_complex() const;

 private:
  std::size_t index(std::size_t p, std::size_t q) const;
  void reset_maps_at(std::size_t p, std::size_t q);

  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<RationalMatrix> horizontal_;
  std::vector<RationalMatrix> vertical_;
};

enum class PageIndex { Zero, One, Two, Infinity };

struct SpectralPage {
  PageIndex page = PageIndex::Zero;
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::size_t> dims;  // row-major over p, index p * (height + 1) + q

  std::size_t at(std::size_t p, std::size_t q) const { return dims[p * (height + 1) + q]; }
  /// Sum over p + q = m.
  std::size_t antidiagonal(std::size_t m) const;

  friend bool operator==(const SpectralPage& a, const SpectralPage& b) {
    return a.width == b.width && a.height == b.height && a.dims == b.dims;
  }
};

/// h^0..h^{width+height} of the total complex.
std::vector<std::size_t> total_cohomology(const Bicomplex& b);

/// E_0, E_1 or E_2 of the spectral sequence of the column filtration
/// F^p = (+)_{p' >= p} C^{p',*}. Pass PageIndex::Infinity to get page_infinity.
SpectralPage page(const Bicomplex& b, PageIndex r);

/// E_inf^{p,q}: dimension of the p-th graded piece of the filtration induced
/// on h^{p+q}(total), measured as dim im(H(F^p) -> H) - dim im(H(F^{p+1}) -> H).
SpectralPage page_infinity(const Bicomplex& b);

bool degenerates_at_two(const Bicomplex& b);

/// Places the given cochain complexes as rows q = 0, 1, ... with the
/// horizontal differential of row q multiplied by (-1)^q and zero vertical
/// maps. Rows shorter than the longest are padded with zero spaces.
Bicomplex bicomplex_from_rows(const std::vector<CochainComplex>& rows);

}  // namespace snccoh
