#include "snccoh/presheaf.hpp"

#include <string>

namespace snccoh {
namespace {

std::string describe(const Simplex& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

RationalMatrix column(const std::vector<Rational>& v) {
  RationalMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

}  // namespace

void CochainComplex::validate() const {
  if (differentials.size() + 1 != space_dims.size() && !(space_dims.empty() && differentials.empty()))
    throw Error(ErrorKind::ShapeMismatch, "cochain complex needs one differential between each pair of spaces");
  for (std::size_t i = 0; i < differentials.size(); ++i) {
    const auto& d = differentials[i];
    if (d.cols() != space_dims[i] || d.rows() != space_dims[i + 1])
      throw Error(ErrorKind::ShapeMismatch, "differential " + std::to_string(i) + " has shape " + d.shape());
    if (i > 0 && !(d * differentials[i - 1]).is_zero())
      throw Error(ErrorKind::CompositionNonzero, "consecutive differentials compose to nonzero");
  }
}

std::vector<std::size_t> cohomology(const CochainComplex& c) {
  c.validate();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.space_dims.size(); ++i) {
    const RationalMatrix d_in = i == 0 ? RationalMatrix(c.space_dims[0], 0) : c.differentials[i - 1];
    const RationalMatrix d_out =
        i + 1 == c.space_dims.size() ? RationalMatrix(0, c.space_dims[i]) : c.differentials[i];
    out.push_back(homology_dim(d_in, d_out));
  }
  return out;
}

Presheaf::Presheaf(SimplicialComplex base) : base_(std::move(base)) {
  const int top = base_.dimension();
  dims_.resize(static_cast<std::size_t>(top + 1));
  restrictions_.resize(static_cast<std::size_t>(top + 1));
  for (int p = 0; p <= top; ++p) {
    const auto n = base_.simplices(p).size();
    dims_[static_cast<std::size_t>(p)].assign(n, 0);
    restrictions_[static_cast<std::size_t>(p)].assign(n, std::vector<RationalMatrix>(p > 0 ? p + 1 : 0));
  }
}

Presheaf Presheaf::constant(const SimplicialComplex& base, std::size_t d) {
  Presheaf v(base);
  for (int p = 0; p <= base.dimension(); ++p) {
    const auto up = static_cast<std::size_t>(p);
    for (std::size_t i = 0; i < v.dims_[up].size(); ++i) {
      v.dims_[up][i] = d;
      for (auto& m : v.restrictions_[up][i]) m = RationalMatrix::identity(d);
    }
  }
  return v;
}

std::size_t Presheaf::dim(const Simplex& s) const {
  const auto idx = base_.index_of(s);
  if (!idx) throw Error(ErrorKind::BadTuple, "simplex " + describe(s) + " not in base complex");
  return dims_[static_cast<std::size_t>(s.dimension())][*idx];
}

const RationalMatrix& Presheaf::restriction(const Simplex& tau, std::size_t k) const {
  const auto idx = base_.index_of(tau);
  if (!idx || tau.size() < 2 || k >= tau.size())
    throw Error(ErrorKind::BadTuple, "no codimension-one restriction into " + describe(tau));
  return restrictions_[static_cast<std::size_t>(tau.dimension())][*idx][k];
}

const RationalMatrix& Presheaf::restriction(const Simplex& face, const Simplex& tau) const {
  if (face.size() + 1 != tau.size() || !tau.contains(face))
    throw Error(ErrorKind::BadTuple, describe(face) + " is not a codimension-one face of " + describe(tau));
  for (std::size_t k = 0; k < tau.size(); ++k)
    if (tau.facet(k) == face) return restriction(tau, k);
  throw Error(ErrorKind::BadTuple, "unreachable face lookup");
}

bool Presheaf::is_zero() const {
  for (const auto& layer : dims_)
    for (auto d : layer)
      if (d != 0) return false;
  return true;
}

PresheafBuilder::PresheafBuilder(SimplicialComplex base) : base_(std::move(base)) {}

PresheafBuilder& PresheafBuilder::set_dim(const Simplex& s, std::size_t d) {
  if (!base_.contains(s)) throw Error(ErrorKind::BadTuple, "simplex " + describe(s) + " not in base complex");
  dims_[s] = d;
  return *this;
}

PresheafBuilder& PresheafBuilder::set_restriction(const Simplex& face, const Simplex& tau, RationalMatrix m) {
  if (!base_.contains(tau) || face.size() + 1 != tau.size() || !tau.contains(face))
    throw Error(ErrorKind::BadTuple, describe(face) + " -> " + describe(tau) + " is not a codimension-one inclusion");
  maps_[{face, tau}] = std::move(m);
  return *this;
}

Presheaf PresheafBuilder::build() const {
  Presheaf v(base_);
  auto dim_of = [&](const Simplex& s) {
    auto it = dims_.find(s);
    return it == dims_.end() ? std::size_t{0} : it->second;
  };
  for (int p = 0; p <= base_.dimension(); ++p) {
    const auto up = static_cast<std::size_t>(p);
    const auto layer = base_.simplices(p);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      const Simplex& tau = layer[i];
      v.dims_[up][i] = dim_of(tau);
      if (p == 0) continue;
      for (std::size_t k = 0; k < tau.size(); ++k) {
        const Simplex face = tau.facet(k);
        const std::size_t rows = dim_of(tau);
        const std::size_t cols = dim_of(face);
        auto it = maps_.find({face, tau});
        if (it == maps_.end()) {
          if (rows != 0 && cols != 0)
            throw Error(ErrorKind::UnderdeterminedRestrictions,
                        "no restriction given for " + describe(face) + " -> " + describe(tau));
          v.restrictions_[up][i][k] = RationalMatrix(rows, cols);
          continue;
        }
        if (it->second.rows() != rows || it->second.cols() != cols)
          throw Error(ErrorKind::ShapeMismatch, "restriction " + describe(face) + " -> " + describe(tau) +
                                                    " has shape " + it->second.shape() + ", expected " +
                                                    std::to_string(rows) + "x" + std::to_string(cols));
        v.restrictions_[up][i][k] = it->second;
      }
    }
  }

  // Path independence on every codimension-two inclusion sigma < tau:
  // tau = sigma + {a, b}; both two-step composites must agree.
  for (int p = 2; p <= base_.dimension(); ++p) {
    for (const Simplex& tau : base_.simplices(p)) {
      for (std::size_t a = 0; a < tau.size(); ++a)
        for (std::size_t b = a + 1; b < tau.size(); ++b) {
          const Simplex via_a = tau.facet(b);  // keeps vertex a
          const Simplex via_b = tau.facet(a);  // keeps vertex b
          const Simplex sigma = via_a.facet(a);
          const RationalMatrix route_a = v.restriction(via_a, tau) * v.restriction(sigma, via_a);
          const RationalMatrix route_b = v.restriction(via_b, tau) * v.restriction(sigma, via_b);
          if (!(route_a == route_b))
            throw Error(ErrorKind::FunctorialityViolation,
                        "restrictions " + describe(sigma) + " -> " + describe(tau) + " depend on the path");
        }
    }
  }
  return v;
}

CochainComplex cech_complex(const Presheaf& v) {
  const SimplicialComplex& k = v.base();
  CochainComplex c;
  const int top = k.dimension();
  std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(top + 1));
  for (int p = 0; p <= top; ++p) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < k.simplices(p).size(); ++i) {
      offsets[static_cast<std::size_t>(p)].push_back(total);
      total += v.dim(p, i);
    }
    c.space_dims.push_back(total);
  }
  for (int p = 0; p < top; ++p) {
    RationalMatrix d(c.space_dims[static_cast<std::size_t>(p) + 1], c.space_dims[static_cast<std::size_t>(p)]);
    const auto cofaces = k.simplices(p + 1);
    for (std::size_t t = 0; t < cofaces.size(); ++t) {
      const Simplex& tau = cofaces[t];
      const std::size_t row0 = offsets[static_cast<std::size_t>(p) + 1][t];
      for (std::size_t j = 0; j < tau.size(); ++j) {
        const auto face_idx = *k.index_of(tau.facet(j));
        const std::size_t col0 = offsets[static_cast<std::size_t>(p)][face_idx];
        const RationalMatrix& r = v.restriction(p + 1, t, j);
        d.set_block(row0, col0, j % 2 == 0 ? r : -r);
      }
    }
    c.differentials.push_back(std::move(d));
  }
  return c;
}

std::vector<std::size_t> presheaf_cohomology(const Presheaf& v) { return cohomology(cech_complex(v)); }

Presheaf direct_sum(const Presheaf& v, const Presheaf& w) {
  if (!(v.base() == w.base())) throw Error(ErrorKind::BaseMismatch, "direct sum of presheaves on different bases");
  PresheafBuilder b(v.base());
  const SimplicialComplex& k = v.base();
  for (int p = 0; p <= k.dimension(); ++p) {
    const auto layer = k.simplices(p);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      b.set_dim(layer[i], v.dim(p, i) + w.dim(p, i));
      if (p == 0) continue;
      for (std::size_t j = 0; j < layer[i].size(); ++j) {
        const RationalMatrix& rv = v.restriction(p, i, j);
        const RationalMatrix& rw = w.restriction(p, i, j);
        RationalMatrix m(rv.rows() + rw.rows(), rv.cols() + rw.cols());
        m.set_block(0, 0, rv);
        m.set_block(rv.rows(), rv.cols(), rw);
        b.set_restriction(layer[i].facet(j), layer[i], std::move(m));
      }
    }
  }
  return b.build();
}

ConstantSplit split_constant(const Presheaf& v, const Section& unit) {
  const SimplicialComplex& k = v.base();

  // Unknown layout: the row vector phi_sigma occupies [offset, offset + dim).
  std::map<Simplex, std::size_t> offset;
  std::size_t unknowns = 0;
  for (int p = 0; p <= k.dimension(); ++p)
    for (const Simplex& s : k.simplices(p)) {
      auto it = unit.find(s);
      if (it == unit.end()) throw Error(ErrorKind::ZeroSection, "no unit vector on " + describe(s));
      if (it->second.size() != v.dim(s))
        throw Error(ErrorKind::IncompatibleSection, "unit vector on " + describe(s) + " has wrong length");
      bool nonzero = false;
      for (const auto& x : it->second) nonzero = nonzero || sgn(x) != 0;
      if (!nonzero) throw Error(ErrorKind::ZeroSection, "unit vector vanishes on " + describe(s));
      offset[s] = unknowns;
      unknowns += v.dim(s);
    }

  for (int p = 1; p <= k.dimension(); ++p)
    for (const Simplex& tau : k.simplices(p))
      for (std::size_t j = 0; j < tau.size(); ++j) {
        const Simplex face = tau.facet(j);
        if (!(v.restriction(tau, j) * column(unit.at(face)) == column(unit.at(tau))))
          throw Error(ErrorKind::IncompatibleSection,
                      "unit on " + describe(face) + " does not restrict to the unit on " + describe(tau));
      }

  // Equations: phi_sigma . u_sigma = 1, and phi_tau R - phi_sigma = 0.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  std::vector<Rational> rhs;
  for (const auto& [s, off] : offset) {
    std::vector<std::pair<std::size_t, Rational>> eq;
    const auto& u = unit.at(s);
    for (std::size_t i = 0; i < u.size(); ++i)
      if (sgn(u[i]) != 0) eq.emplace_back(off + i, u[i]);
    rows.push_back(std::move(eq));
    rhs.emplace_back(1);
  }
  for (int p = 1; p <= k.dimension(); ++p)
    for (const Simplex& tau : k.simplices(p))
      for (std::size_t j = 0; j < tau.size(); ++j) {
        const Simplex face = tau.facet(j);
        const RationalMatrix& r = v.restriction(tau, j);
        for (std::size_t c = 0; c < r.cols(); ++c) {
          std::vector<std::pair<std::size_t, Rational>> eq;
          for (std::size_t i = 0; i < r.rows(); ++i)
            if (sgn(r(i, c)) != 0) eq.emplace_back(offset.at(tau) + i, r(i, c));
          eq.emplace_back(offset.at(face) + c, Rational(-1));
          rows.push_back(std::move(eq));
          rhs.emplace_back(0);
        }
      }

  RationalMatrix a(rows.size(), unknowns);
  RationalMatrix b(rows.size(), 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, x] : rows[r]) a(r, c) += x;
    b(r, 0) = rhs[r];
  }
  const auto phi = solve(a, b);
  if (!phi) throw Error(ErrorKind::NotSplit, "no restriction-compatible retraction onto the unit section");

  ConstantSplit out{1, Presheaf::zero(k), {}};
  std::map<Simplex, RationalMatrix> kernel;
  for (const auto& [s, off] : offset) {
    const std::size_t d = v.dim(s);
    RationalMatrix row(1, d);
    std::vector<Rational> functional(d);
    for (std::size_t i = 0; i < d; ++i) {
      row(0, i) = (*phi)(off + i, 0);
      functional[i] = row(0, i);
    }
    out.retraction.emplace(s, std::move(functional));
    kernel.emplace(s, kernel_basis(row));
  }

  PresheafBuilder builder(k);
  for (const auto& [s, basis] : kernel) builder.set_dim(s, basis.cols());
  for (int p = 1; p <= k.dimension(); ++p)
    for (const Simplex& tau : k.simplices(p))
      for (std::size_t j = 0; j < tau.size(); ++j) {
        const Simplex face = tau.facet(j);
        const auto coords = solve(kernel.at(tau), v.restriction(tau, j) * kernel.at(face));
        // phi_tau R = phi_face guarantees R maps ker phi_face into ker phi_tau.
        builder.set_restriction(face, tau, *coords);
      }
  out.complement = builder.build();
  return out;
}

}  // namespace snccoh
