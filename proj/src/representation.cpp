#include "quiverlab/representation.hpp"

#include <numeric>
#include <sstream>

#include "quiverlab/errors.hpp"

namespace quiverlab {

namespace {

Mat empty_columns(const Field& f, std::size_t rows) { return Mat(f, rows, 0); }

}  // namespace

Representation::Representation(Trusted, AlgebraPtr algebra, DimVector dims, std::vector<Mat> arrow_maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(arrow_maps)) {}

Representation::Representation(AlgebraPtr algebra, DimVector dims, std::vector<Mat> arrow_maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(arrow_maps)) {
  const Quiver& q = algebra_->quiver();
  if (dims_.size() != q.vertex_count()) throw InputError("dimension vector has the wrong length");
  if (maps_.size() != q.arrow_count()) throw InputError("wrong number of arrow matrices");
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Mat& m = maps_[a];
    if (m.rows() != dims_[q.arrow(a).target] || m.cols() != dims_[q.arrow(a).source])
      throw InputError("matrix for arrow '" + q.arrow(a).name + "' has the wrong shape");
    if (m.field() != algebra_->field()) throw InputError("matrix for arrow '" + q.arrow(a).name + "' over wrong field");
  }
  for (const auto& r : algebra_->relations()) {
    const Path& p0 = r.terms.front().path;
    Mat sum(field(), dims_[p0.target], dims_[p0.source]);
    for (const auto& t : r.terms) sum = sum + act(t.path).scaled(t.coeff);
    if (!sum.is_zero())
      throw InputError("relation '" + path_to_string(q, p0) + "...' does not vanish on the representation");
  }
}

Representation Representation::zero(AlgebraPtr algebra) {
  const Quiver& q = algebra->quiver();
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < q.arrow_count(); ++i) maps.emplace_back(algebra->field(), 0, 0);
  DimVector dims(q.vertex_count(), 0);
  return Representation(Trusted{}, std::move(algebra), std::move(dims), std::move(maps));
}

std::size_t Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Mat Representation::act(const Path& p) const {
  Mat out = Mat::identity(field(), dims_.at(p.source));
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) out = maps_.at(*it) * out;
  return out;
}

std::string dims_to_string(const DimVector& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(d[i]);
  }
  return out + ")";
}

bool same_algebra(const Representation& m, const Representation& n) { return m.algebra() == n.algebra(); }

void require_same_algebra(const Representation& m, const Representation& n) {
  if (!same_algebra(m, n)) throw InputError("modules live over different algebras");
}

bool is_module_map(const Representation& m, const Representation& n, const ModuleMap& f) {
  const Quiver& q = m.algebra()->quiver();
  if (f.components.size() != q.vertex_count()) return false;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    if (f.at(v).rows() != n.dim(v) || f.at(v).cols() != m.dim(v)) return false;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    if (n.map(a) * f.at(ar.source) != f.at(ar.target) * m.map(a)) return false;
  }
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap out;
  for (std::size_t v = 0; v < f.components.size(); ++v) out.components.push_back(g.at(v) * f.at(v));
  return out;
}

ModuleMap identity_map(const Representation& m) {
  ModuleMap out;
  for (auto d : m.dims()) out.components.push_back(Mat::identity(m.field(), d));
  return out;
}

ModuleMap zero_map(const Representation& m, const Representation& n) {
  ModuleMap out;
  for (VertexId v = 0; v < m.dims().size(); ++v) out.components.emplace_back(m.field(), n.dim(v), m.dim(v));
  return out;
}

ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap out;
  for (std::size_t v = 0; v < f.components.size(); ++v) out.components.push_back(f.at(v) + g.at(v));
  return out;
}

ModuleMap scale_map(const ModuleMap& f, const Scalar& c) {
  ModuleMap out;
  for (const auto& m : f.components) out.components.push_back(m.scaled(c));
  return out;
}

ModuleMap linear_combination(const std::vector<ModuleMap>& basis, const std::vector<Scalar>& coeffs,
                             const Representation& m, const Representation& n) {
  ModuleMap out = zero_map(m, n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    out = add_maps(out, scale_map(basis[i], coeffs[i]));
  }
  return out;
}

std::size_t map_rank(const ModuleMap& f) {
  std::size_t r = 0;
  for (const auto& m : f.components) r += rank(m);
  return r;
}

bool is_zero_map(const ModuleMap& f) {
  for (const auto& m : f.components)
    if (!m.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::size_t projective_sum_offset(const BoundQuiverAlgebra& a, const std::vector<VertexId>& gens, std::size_t k,
                                  VertexId w) {
  std::size_t off = 0;
  for (std::size_t j = 0; j < k; ++j) off += a.basis_between(gens[j], w).size();
  return off;
}

Representation projective_sum(const AlgebraPtr& a, const std::vector<VertexId>& gens) {
  const Quiver& q = a->quiver();
  DimVector dims(q.vertex_count(), 0);
  for (VertexId w = 0; w < q.vertex_count(); ++w)
    for (auto g : gens) dims[w] += a->basis_between(g, w).size();
  std::vector<Mat> maps;
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    const auto& ar = q.arrow(x);
    Mat m(a->field(), dims[ar.target], dims[ar.source]);
    std::size_t src_off = 0;
    std::size_t tgt_off = 0;
    for (auto g : gens) {
      const auto& cols = a->basis_between(g, ar.source);
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [k, coeff] : a->product(a->arrow_index(x), cols[c])) m(tgt_off + a->between_position(k), src_off + c) = coeff;
      src_off += cols.size();
      tgt_off += a->basis_between(g, ar.target).size();
    }
    maps.push_back(std::move(m));
  }
  return Representation(Representation::Trusted{}, a, std::move(dims), std::move(maps));
}

Representation projective(const AlgebraPtr& a, VertexId v) {
  if (v >= a->vertex_count()) throw InputError("vertex out of range");
  return projective_sum(a, {v});
}

Representation injective(const AlgebraPtr& a, VertexId v) {
  if (v >= a->vertex_count()) throw InputError("vertex out of range");
  const Quiver& q = a->quiver();
  DimVector dims(q.vertex_count());
  for (VertexId w = 0; w < q.vertex_count(); ++w) dims[w] = a->basis_between(w, v).size();
  std::vector<Mat> maps;
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    const auto& ar = q.arrow(x);
    Mat m(a->field(), dims[ar.target], dims[ar.source]);
    const auto& rows = a->basis_between(ar.target, v);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [k, coeff] : a->product(rows[r], a->arrow_index(x))) m(r, a->between_position(k)) = coeff;
    maps.push_back(std::move(m));
  }
  return Representation(Representation::Trusted{}, a, std::move(dims), std::move(maps));
}

Representation simple(const AlgebraPtr& a, VertexId v) {
  if (v >= a->vertex_count()) throw InputError("vertex out of range");
  const Quiver& q = a->quiver();
  DimVector dims(q.vertex_count(), 0);
  dims[v] = 1;
  std::vector<Mat> maps;
  for (const auto& ar : q.arrows()) maps.emplace_back(a->field(), dims[ar.target], dims[ar.source]);
  return Representation(Representation::Trusted{}, a, std::move(dims), std::move(maps));
}

Representation direct_sum(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  const Quiver& q = m.algebra()->quiver();
  DimVector dims(q.vertex_count());
  for (VertexId v = 0; v < q.vertex_count(); ++v) dims[v] = m.dim(v) + n.dim(v);
  std::vector<Mat> maps;
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    const auto& ar = q.arrow(x);
    Mat b(m.field(), dims[ar.target], dims[ar.source]);
    b.set_block(0, 0, m.map(x));
    b.set_block(m.dim(ar.target), m.dim(ar.source), n.map(x));
    maps.push_back(std::move(b));
  }
  return Representation(Representation::Trusted{}, m.algebra(), std::move(dims), std::move(maps));
}

Representation direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts) {
  Representation out = Representation::zero(a);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

Representation dualize(const Representation& m) {
  std::vector<Mat> maps;
  for (const auto& x : m.maps()) maps.push_back(x.transpose());
  return Representation(Representation::Trusted{}, m.algebra()->opposite(), m.dims(), std::move(maps));
}

// ---------------------------------------------------------------------------

Sub subrepresentation(const Representation& m, const std::vector<Mat>& subspaces) {
  const Quiver& q = m.algebra()->quiver();
  DimVector dims(q.vertex_count());
  for (VertexId v = 0; v < q.vertex_count(); ++v) dims[v] = subspaces[v].cols();
  std::vector<Mat> maps;
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    const auto& ar = q.arrow(x);
    auto sol = solve(subspaces[ar.target], m.map(x) * subspaces[ar.source]);
    if (!sol) throw InternalFault("subspaces are not closed under arrow '" + ar.name + "'");
    maps.push_back(std::move(*sol));
  }
  return Sub{Representation(Representation::Trusted{}, m.algebra(), std::move(dims), std::move(maps)),
             ModuleMap{subspaces}};
}

Quo quotient_representation(const Representation& m, const std::vector<Mat>& subspaces) {
  const Quiver& q = m.algebra()->quiver();
  const std::size_t n = q.vertex_count();
  std::vector<Mat> complements(n);
  std::vector<Mat> projections(n);
  DimVector dims(n);
  for (VertexId v = 0; v < n; ++v) {
    complements[v] = complement_basis(subspaces[v]);
    auto inv = inverse(subspaces[v].hstack(complements[v]));
    if (!inv) throw InternalFault("subspace basis is not independent");
    dims[v] = complements[v].cols();
    projections[v] = inv->block(subspaces[v].cols(), 0, dims[v], m.dim(v));
  }
  std::vector<Mat> maps;
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    const auto& ar = q.arrow(x);
    maps.push_back(projections[ar.target] * m.map(x) * complements[ar.source]);
  }
  return Quo{Representation(Representation::Trusted{}, m.algebra(), std::move(dims), std::move(maps)),
             ModuleMap{std::move(projections)}};
}

Sub kernel(const Representation& m, const ModuleMap& f) {
  std::vector<Mat> subs;
  for (const auto& c : f.components) subs.push_back(kernel_basis(c));
  return subrepresentation(m, subs);
}

std::vector<Mat> image_subspaces(const ModuleMap& f) {
  std::vector<Mat> subs;
  for (const auto& c : f.components) subs.push_back(column_space_basis(c));
  return subs;
}

Quo cokernel(const Representation& n, const ModuleMap& f) { return quotient_representation(n, image_subspaces(f)); }

std::vector<Mat> radical_subspaces(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Mat> out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    Mat span = empty_columns(m.field(), m.dim(v));
    for (ArrowId x = 0; x < q.arrow_count(); ++x)
      if (q.arrow(x).target == v) span = span.hstack(m.map(x));
    out.push_back(column_space_basis(span));
  }
  return out;
}

std::vector<Mat> socle_subspaces(const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Mat> out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    Mat stacked(m.field(), 0, m.dim(v));
    for (ArrowId x = 0; x < q.arrow_count(); ++x)
      if (q.arrow(x).source == v) stacked = stacked.vstack(m.map(x));
    out.push_back(kernel_basis(stacked));
  }
  return out;
}

DimVector top_dims(const Representation& m) {
  auto rad = radical_subspaces(m);
  DimVector out(rad.size());
  for (std::size_t v = 0; v < rad.size(); ++v) out[v] = m.dim(v) - rad[v].cols();
  return out;
}

DimVector socle_dims(const Representation& m) {
  auto soc = socle_subspaces(m);
  DimVector out(soc.size());
  for (std::size_t v = 0; v < soc.size(); ++v) out[v] = soc[v].cols();
  return out;
}

std::vector<Mat> word_actions(const Representation& n) {
  const auto& a = *n.algebra();
  std::vector<Mat> out;
  out.reserve(a.dimension());
  for (std::size_t i = 0; i < a.dimension(); ++i) out.push_back(n.act_basis(i));
  return out;
}

ModuleMap map_from_projectives(const std::vector<VertexId>& gens, const std::vector<Mat>& images,
                               const Representation& source, const Representation& target) {
  const auto& a = *target.algebra();
  const auto acts = word_actions(target);
  ModuleMap f;
  for (VertexId w = 0; w < a.vertex_count(); ++w) {
    Mat c(target.field(), target.dim(w), source.dim(w));
    std::size_t off = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto& words = a.basis_between(gens[j], w);
      for (std::size_t p = 0; p < words.size(); ++p) c.set_block(0, off + p, acts[words[p]] * images[j]);
      off += words.size();
    }
    f.components.push_back(std::move(c));
  }
  return f;
}

ProjectiveCover projective_cover(const Representation& m) {
  auto rad = radical_subspaces(m);
  std::vector<VertexId> gens;
  std::vector<Mat> images;
  for (VertexId v = 0; v < rad.size(); ++v) {
    Mat comp = complement_basis(rad[v]);
    for (std::size_t c = 0; c < comp.cols(); ++c) {
      gens.push_back(v);
      images.push_back(comp.col(c));
    }
  }
  Representation p = projective_sum(m.algebra(), gens);
  ModuleMap f = map_from_projectives(gens, images, p, m);
  return ProjectiveCover{std::move(gens), std::move(images), std::move(p), std::move(f)};
}

Presentation present(const Representation& m) {
  Presentation out;
  out.cover = projective_cover(m);
  out.syzygy = kernel(out.cover.projective, out.cover.map);
  auto rad = radical_subspaces(out.syzygy.module);
  for (VertexId v = 0; v < rad.size(); ++v) {
    Mat comp = complement_basis(rad[v]);
    for (std::size_t c = 0; c < comp.cols(); ++c) {
      out.rel_gens.push_back(v);
      out.rel_images.push_back(out.syzygy.inclusion.at(v) * comp.col(c));
    }
  }
  return out;
}

Mat evaluate_element(const Representation& n, const std::vector<Mat>& acts, const std::vector<VertexId>& gens,
                     VertexId v, const Mat& y) {
  const auto& a = *n.algebra();
  std::size_t cols = 0;
  for (auto g : gens) cols += n.dim(g);
  Mat out(n.field(), n.dim(v), cols);
  std::size_t row_off = 0;
  std::size_t col_off = 0;
  for (auto g : gens) {
    const auto& words = a.basis_between(g, v);
    Mat block(n.field(), n.dim(v), n.dim(g));
    bool any = false;
    for (std::size_t p = 0; p < words.size(); ++p) {
      const Scalar& c = y(row_off + p, 0);
      if (sgn(c) == 0) continue;
      block = block + acts[words[p]].scaled(c);
      any = true;
    }
    if (any) out.set_block(0, col_off, block);
    row_off += words.size();
    col_off += n.dim(g);
  }
  return out;
}

namespace {

// Right inverse of a surjective matrix.
Mat right_inverse(const Mat& m) {
  Echelon e = rref(m);
  if (e.pivots.size() != m.rows()) throw InternalFault("right inverse of a non-surjective map");
  Mat square = m.select_columns(e.pivots);
  auto inv = inverse(square);
  if (!inv) throw InternalFault("pivot columns are singular");
  Mat out(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) out(e.pivots[i], j) = (*inv)(i, j);
  return out;
}

}  // namespace

std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  const auto& a = *m.algebra();
  if (m.is_zero() || n.is_zero()) return {};
  const Presentation pres = present(m);
  const auto& gens = pres.cover.gens;
  const auto acts = word_actions(n);
  std::size_t unknowns = 0;
  for (auto g : gens) unknowns += n.dim(g);
  Mat system(n.field(), 0, unknowns);
  for (std::size_t k = 0; k < pres.rel_gens.size(); ++k)
    system = system.vstack(evaluate_element(n, acts, gens, pres.rel_gens[k], pres.rel_images[k]));
  const Mat sol = kernel_basis(system);

  std::vector<Mat> sections;
  for (VertexId w = 0; w < a.vertex_count(); ++w) sections.push_back(right_inverse(pres.cover.map.at(w)));

  std::vector<ModuleMap> out;
  for (std::size_t s = 0; s < sol.cols(); ++s) {
    std::vector<Mat> xs;
    std::size_t off = 0;
    for (auto g : gens) {
      xs.push_back(sol.block(off, s, n.dim(g), 1));
      off += n.dim(g);
    }
    ModuleMap f;
    for (VertexId w = 0; w < a.vertex_count(); ++w) {
      Mat psi(n.field(), n.dim(w), pres.cover.projective.dim(w));
      std::size_t col = 0;
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const auto& words = a.basis_between(gens[j], w);
        for (std::size_t p = 0; p < words.size(); ++p) psi.set_block(0, col + p, acts[words[p]] * xs[j]);
        col += words.size();
      }
      f.components.push_back(psi * sections[w]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  if (m.is_zero() || n.is_zero()) return 0;
  const Presentation pres = present(m);
  const auto acts = word_actions(n);
  std::size_t unknowns = 0;
  for (auto g : pres.cover.gens) unknowns += n.dim(g);
  Mat system(n.field(), 0, unknowns);
  for (std::size_t k = 0; k < pres.rel_gens.size(); ++k)
    system = system.vstack(evaluate_element(n, acts, pres.cover.gens, pres.rel_gens[k], pres.rel_images[k]));
  return unknowns - rank(system);
}

std::vector<ModuleMap> hom_space_by_intertwiners(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  const Quiver& q = m.algebra()->quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (VertexId v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  auto var = [&](VertexId v, std::size_t r, std::size_t c) { return offset[v] + r * m.dim(v) + c; };

  std::size_t eqs = 0;
  for (const auto& ar : q.arrows()) eqs += n.dim(ar.target) * m.dim(ar.source);
  Mat system(m.field(), eqs, offset[nv]);
  std::size_t row = 0;
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    const auto& ar = q.arrow(x);
    const Mat& nm = n.map(x);
    const Mat& mm = m.map(x);
    for (std::size_t r = 0; r < n.dim(ar.target); ++r) {
      for (std::size_t c = 0; c < m.dim(ar.source); ++c, ++row) {
        // (N(a) f_s)[r][c] - (f_t M(a))[r][c]
        for (std::size_t i = 0; i < n.dim(ar.source); ++i)
          if (sgn(nm(r, i)) != 0) system(row, var(ar.source, i, c)) += nm(r, i);
        for (std::size_t i = 0; i < m.dim(ar.target); ++i)
          if (sgn(mm(i, c)) != 0) system(row, var(ar.target, r, i)) = m.field().sub(system(row, var(ar.target, r, i)), mm(i, c));
      }
    }
  }
  for (std::size_t i = 0; i < system.rows(); ++i)
    for (std::size_t j = 0; j < system.cols(); ++j) system(i, j) = m.field().reduce(system(i, j));
  const Mat sol = kernel_basis(system);
  std::vector<ModuleMap> out;
  for (std::size_t s = 0; s < sol.cols(); ++s) {
    ModuleMap f;
    for (VertexId v = 0; v < nv; ++v) {
      Mat c(m.field(), n.dim(v), m.dim(v));
      for (std::size_t r = 0; r < n.dim(v); ++r)
        for (std::size_t k = 0; k < m.dim(v); ++k) c(r, k) = sol(var(v, r, k), s);
      f.components.push_back(std::move(c));
    }
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------

Sub f_hom(const Idempotent& e, const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Mat> u;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    u.push_back(e.contains(v) ? empty_columns(m.field(), m.dim(v)) : Mat::identity(m.field(), m.dim(v)));
  bool changed = true;
  while (changed) {
    changed = false;
    for (ArrowId x = 0; x < q.arrow_count(); ++x) {
      const auto& ar = q.arrow(x);
      const Mat& us = u[ar.source];
      if (us.cols() == 0) continue;
      // z with M(a) U_s z in U_t
      Mat k = kernel_basis((m.map(x) * us).hstack(u[ar.target].scaled(-1)));
      Mat shrunk = column_space_basis(us * k.block(0, 0, us.cols(), k.cols()));
      if (shrunk.cols() < us.cols()) {
        u[ar.source] = std::move(shrunk);
        changed = true;
      }
    }
  }
  return subrepresentation(m, u);
}

Quo tensor_quotient(const Idempotent& e, const Representation& m) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<Mat> w;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    w.push_back(e.contains(v) ? Mat::identity(m.field(), m.dim(v)) : empty_columns(m.field(), m.dim(v)));
  bool changed = true;
  while (changed) {
    changed = false;
    for (ArrowId x = 0; x < q.arrow_count(); ++x) {
      const auto& ar = q.arrow(x);
      if (w[ar.source].cols() == 0) continue;
      Mat grown = column_space_basis(w[ar.target].hstack(m.map(x) * w[ar.source]));
      if (grown.cols() > w[ar.target].cols()) {
        w[ar.target] = std::move(grown);
        changed = true;
      }
    }
  }
  return quotient_representation(m, w);
}

bool annihilated_by(const Idempotent& e, const Representation& m) {
  for (auto v : e.vertices())
    if (m.dim(v) != 0) return false;
  return true;
}

Representation inflate(const Quotient& q, const Representation& m) {
  if (m.algebra() != q.algebra) throw InputError("module is not over the quotient algebra");
  const BoundQuiverAlgebra& a = *q.parent;
  const Quiver& pq = a.quiver();
  DimVector dims(pq.vertex_count(), 0);
  for (VertexId v = 0; v < q.to_parent.size(); ++v) dims[q.to_parent[v]] = m.dim(v);
  std::vector<Mat> maps;
  for (const auto& ar : pq.arrows()) maps.emplace_back(a.field(), dims[ar.target], dims[ar.source]);
  for (ArrowId x = 0; x < q.arrow_to_parent.size(); ++x) maps[q.arrow_to_parent[x]] = m.map(x);
  return Representation(q.parent, std::move(dims), std::move(maps));
}

Representation restrict_to_quotient(const Quotient& q, const Representation& m) {
  if (m.algebra() != q.parent) throw InputError("module is not over the parent algebra");
  if (!annihilated_by(q.killed, m)) throw PreconditionError("module does not vanish at the idempotent");
  DimVector dims;
  for (auto v : q.to_parent) dims.push_back(m.dim(v));
  std::vector<Mat> maps;
  for (auto x : q.arrow_to_parent) maps.push_back(m.map(x));
  return Representation(Representation::Trusted{}, q.algebra, std::move(dims), std::move(maps));
}

Representation quotient_algebra_module(const AlgebraPtr& a, const Idempotent& e) {
  std::vector<Representation> parts;
  for (VertexId w = 0; w < a->vertex_count(); ++w)
    if (!e.contains(w)) parts.push_back(tensor_quotient(e, projective(a, w)).module);
  return direct_sum(a, parts);
}

}  // namespace quiverlab
