#include "snccoh/bicomplex.hpp"

#include <algorithm>
#include <string>

namespace snccoh {
namespace {

std::string cell(std::size_t p, std::size_t q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

}  // namespace

Bicomplex::Bicomplex(std::size_t width, std::size_t height)
    : width_(width),
      height_(height),
      dims_((width + 1) * (height + 1), 0),
      horizontal_((width + 1) * (height + 1)),
      vertical_((width + 1) * (height + 1)) {}

std::size_t Bicomplex::index(std::size_t p, std::size_t q) const {
  if (p > width_ || q > height_) throw Error(ErrorKind::InvalidBicomplex, "cell " + cell(p, q) + " off the grid");
  return p * (height_ + 1) + q;
}

void Bicomplex::reset_maps_at(std::size_t p, std::size_t q) {
  const std::size_t d = dims_[index(p, q)];
  horizontal_[index(p, q)] = RationalMatrix(p < width_ ? dim(p + 1, q) : 0, d);
  vertical_[index(p, q)] = RationalMatrix(q < height_ ? dim(p, q + 1) : 0, d);
  if (p > 0) horizontal_[index(p - 1, q)] = RationalMatrix(d, dim(p - 1, q));
  if (q > 0) vertical_[index(p, q - 1)] = RationalMatrix(d, dim(p, q - 1));
}

void Bicomplex::set_dim(std::size_t p, std::size_t q, std::size_t d) {
  dims_[index(p, q)] = d;
  reset_maps_at(p, q);
}

void Bicomplex::set_horizontal(std::size_t p, std::size_t q, RationalMatrix m) {
  const std::size_t rows = p < width_ ? dim(p + 1, q) : 0;
  if (m.rows() != rows || m.cols() != dim(p, q))
    throw Error(ErrorKind::InvalidBicomplex, "horizontal map at " + cell(p, q) + " has shape " + m.shape());
  horizontal_[index(p, q)] = std::move(m);
}

void Bicomplex::set_vertical(std::size_t p, std::size_t q, RationalMatrix m) {
  const std::size_t rows = q < height_ ? dim(p, q + 1) : 0;
  if (m.rows() != rows || m.cols() != dim(p, q))
    throw Error(ErrorKind::InvalidBicomplex, "vertical map at " + cell(p, q) + " has shape " + m.shape());
  vertical_[index(p, q)] = std::move(m);
}

void Bicomplex::validate() const {
  for (std::size_t p = 0; p <= width_; ++p)
    for (std::size_t q = 0; q <= height_; ++q) {
      if (p < width_ && !(horizontal(p + 1, q) * horizontal(p, q)).is_zero())
        throw Error(ErrorKind::InvalidBicomplex, "horizontal maps square to nonzero at " + cell(p, q));
      if (q < height_ && !(vertical(p, q + 1) * vertical(p, q)).is_zero())
        throw Error(ErrorKind::InvalidBicomplex, "vertical maps square to nonzero at " + cell(p, q));
      if (p < width_ && q < height_) {
        const RationalMatrix sum = vertical(p + 1, q) * horizontal(p, q) + horizontal(p, q + 1) * vertical(p, q);
        if (!sum.is_zero()) throw Error(ErrorKind::InvalidBicomplex, "differentials do not anticommute at " + cell(p, q));
      }
    }
}

namespace {

/// Cells (p, m - p) of total degree m, ascending p, with their offsets.
struct Antidiagonal {
  std::vector<std::size_t> ps;
  std::vector<std::size_t> offsets;
  std::size_t size = 0;
};

Antidiagonal antidiagonal(const Bicomplex& b, std::size_t m) {
  Antidiagonal a;
  const std::size_t lo = m > b.height() ? m - b.height() : 0;
  const std::size_t hi = std::min(b.width(), m);
  for (std::size_t p = lo; p <= hi; ++p) {
    a.ps.push_back(p);
    a.offsets.push_back(a.size);
    a.size += b.dim(p, m - p);
  }
  return a;
}

}  // namespace

CochainComplex Bicomplex::total_complex() const {
  const std::size_t top = width_ + height_;
  CochainComplex c;
  std::vector<Antidiagonal> diag;
  for (std::size_t m = 0; m <= top; ++m) {
    diag.push_back(antidiagonal(*this, m));
    c.space_dims.push_back(diag.back().size);
  }
  for (std::size_t m = 0; m < top; ++m) {
    const Antidiagonal& src = diag[m];
    const Antidiagonal& dst = diag[m + 1];
    RationalMatrix d(dst.size, src.size);
    auto dst_offset = [&](std::size_t p) {
      for (std::size_t i = 0; i < dst.ps.size(); ++i)
        if (dst.ps[i] == p) return dst.offsets[i];
      throw Error(ErrorKind::InvalidBicomplex, "total complex offset lookup");
    };
    for (std::size_t i = 0; i < src.ps.size(); ++i) {
      const std::size_t p = src.ps[i];
      const std::size_t q = m - p;
      if (p < width_) d.set_block(dst_offset(p + 1), src.offsets[i], horizontal(p, q));
      if (q < height_) d.set_block(dst_offset(p), src.offsets[i], vertical(p, q));
    }
    c.differentials.push_back(std::move(d));
  }
  return c;
}

std::size_t SpectralPage::antidiagonal(std::size_t m) const {
  std::size_t sum = 0;
  for (std::size_t p = 0; p <= width; ++p)
    if (m >= p && m - p <= height) sum += at(p, m - p);
  return sum;
}

std::vector<std::size_t> total_cohomology(const Bicomplex& b) {
  b.validate();
  return cohomology(b.total_complex());
}

namespace {

SpectralPage blank_page(const Bicomplex& b, PageIndex r) {
  SpectralPage page;
  page.page = r;
  page.width = b.width();
  page.height = b.height();
  page.dims.assign((b.width() + 1) * (b.height() + 1), 0);
  return page;
}

/// Generators of im(vertical(p, q-1)) inside C^{p,q}; no columns for q = 0.
RationalMatrix vertical_image(const Bicomplex& b, std::size_t p, std::size_t q) {
  return q == 0 ? RationalMatrix(b.dim(p, q), 0) : b.vertical(p, q - 1);
}

}  // namespace

SpectralPage page(const Bicomplex& b, PageIndex r) {
  if (r == PageIndex::Infinity) return page_infinity(b);
  b.validate();
  SpectralPage out = blank_page(b, r);
  const std::size_t h = b.height();
  for (std::size_t p = 0; p <= b.width(); ++p)
    for (std::size_t q = 0; q <= h; ++q) {
      std::size_t& slot = out.dims[p * (h + 1) + q];
      if (r == PageIndex::Zero) {
        slot = b.dim(p, q);
        continue;
      }
      if (r == PageIndex::One) {
        slot = homology_dim(vertical_image(b, p, q), b.vertical(p, q));
        continue;
      }
      // E_2: {x : d x = 0, delta x in im d} modulo (im d + delta(ker d on column p-1)).
      const RationalMatrix cycles = kernel_basis(b.vertical(p, q));
      std::size_t into_quotient = 0;
      if (p < b.width()) {
        const RationalMatrix image_next = vertical_image(b, p + 1, q);
        into_quotient = rank(hstack(b.horizontal(p, q) * cycles, image_next)) - rank(image_next);
      }
      const std::size_t numerator = cycles.cols() - into_quotient;

      RationalMatrix boundaries = vertical_image(b, p, q);
      if (p > 0) boundaries = hstack(boundaries, b.horizontal(p - 1, q) * kernel_basis(b.vertical(p - 1, q)));
      slot = numerator - rank(boundaries);
    }
  return out;
}

SpectralPage page_infinity(const Bicomplex& b) {
  b.validate();
  SpectralPage out = blank_page(b, PageIndex::Infinity);
  const CochainComplex total = b.total_complex();
  const std::size_t top = b.width() + b.height();

  for (std::size_t m = 0; m <= top; ++m) {
    const Antidiagonal cells = antidiagonal(b, m);
    const std::size_t n = cells.size;
    const RationalMatrix d_out = m < top ? total.differentials[m] : RationalMatrix(0, n);
    const RationalMatrix boundaries = m > 0 ? total.differentials[m - 1] : RationalMatrix(n, 0);
    const std::size_t boundary_rank = rank(boundaries);

    // image_dim(k): dimension of the image of H^m(F^p) in H^m(total), where
    // F^p occupies the coordinates of cells k, k+1, ... of this antidiagonal.
    auto image_dim = [&](std::size_t k) -> std::size_t {
      if (k >= cells.ps.size()) return 0;
      const std::size_t first = cells.offsets[k];
      const RationalMatrix local = kernel_basis(d_out.block(0, first, d_out.rows(), n - first));
      RationalMatrix cycles(n, local.cols());
      cycles.set_block(first, 0, local);
      return rank(hstack(cycles, boundaries)) - boundary_rank;
    };

    std::vector<std::size_t> images;
    for (std::size_t k = 0; k <= cells.ps.size(); ++k) images.push_back(image_dim(k));
    for (std::size_t k = 0; k < cells.ps.size(); ++k) {
      const std::size_t p = cells.ps[k];
      out.dims[p * (b.height() + 1) + (m - p)] = images[k] - images[k + 1];
    }
  }
  return out;
}

bool degenerates_at_two(const Bicomplex& b) { return page(b, PageIndex::Two) == page_infinity(b); }

Bicomplex bicomplex_from_rows(const std::vector<CochainComplex>& rows) {
  std::size_t longest = 1;
  for (const auto& row : rows) {
    if (row.start != 0) throw Error(ErrorKind::InvalidBicomplex, "rows must start in degree 0");
    longest = std::max(longest, row.space_dims.size());
  }
  Bicomplex b(longest - 1, rows.empty() ? 0 : rows.size() - 1);
  for (std::size_t q = 0; q < rows.size(); ++q)
    for (std::size_t p = 0; p < rows[q].space_dims.size(); ++p) b.set_dim(p, q, rows[q].space_dims[p]);
  for (std::size_t q = 0; q < rows.size(); ++q)
    for (std::size_t p = 0; p < rows[q].differentials.size(); ++p)
      b.set_horizontal(p, q, q % 2 == 0 ? rows[q].differentials[p] : -rows[q].differentials[p]);
  b.validate();
  return b;
}

}  // namespace snccoh
