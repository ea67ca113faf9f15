#include "quiverlab/homology.hpp"

#include <string>

#include "quiverlab/errors.hpp"

namespace quiverlab {

std::size_t ProjectiveResolution::multiplicity(std::size_t i, VertexId v) const {
  if (i >= gens.size()) return 0;
  std::size_t n = 0;
  for (auto g : gens[i]) n += g == v ? 1 : 0;
  return n;
}

ProjectiveResolution projective_resolution(const Representation& m, std::size_t length) {
  ProjectiveResolution r;
  r.module = m;
  r.syzygies.push_back(m);
  ModuleMap into_previous = identity_map(m);
  for (std::size_t i = 0; i <= length; ++i) {
    const Representation& cur = r.syzygies.back();
    if (cur.is_zero()) break;
    ProjectiveCover cover = projective_cover(cur);
    std::vector<Mat> images;
    images.reserve(cover.gens.size());
    for (std::size_t k = 0; k < cover.gens.size(); ++k)
      images.push_back(into_previous.at(cover.gens[k]) * cover.images[k]);
    r.gens.push_back(cover.gens);
    r.images.push_back(std::move(images));
    Sub k = kernel(cover.projective, cover.map);
    into_previous = std::move(k.inclusion);
    r.syzygies.push_back(std::move(k.module));
  }
  r.complete = r.syzygies.back().is_zero();
  return r;
}

namespace {

// Matrix of Hom(P_i, N) -> Hom(P_{i+1}, N), precomposition with the differential.
Mat cochain_differential(const ProjectiveResolution& r, const Representation& n, const std::vector<Mat>& acts,
                         std::size_t i) {
  std::size_t cols = 0;
  for (auto g : r.gens[i]) cols += n.dim(g);
  Mat d(n.field(), 0, cols);
  if (i + 1 >= r.gens.size()) return d;
  for (std::size_t k = 0; k < r.gens[i + 1].size(); ++k)
    d = d.vstack(evaluate_element(n, acts, r.gens[i], r.gens[i + 1][k], r.images[i + 1][k]));
  return d;
}

}  // namespace

std::vector<std::size_t> ext_dims_from_resolution(const ProjectiveResolution& r, const Representation& n,
                                                  std::size_t max_degree) {
  require_same_algebra(r.module, n);
  if (!r.complete && r.gens.size() < max_degree + 2)
    throw InternalFault("resolution too short for Ext^" + std::to_string(max_degree));
  const auto acts = word_actions(n);
  std::vector<std::size_t> out;
  std::size_t previous_rank = 0;
  for (std::size_t i = 0; i <= max_degree; ++i) {
    if (i >= r.gens.size()) {
      out.push_back(0);
      previous_rank = 0;
      continue;
    }
    std::size_t cochains = 0;
    for (auto g : r.gens[i]) cochains += n.dim(g);
    const std::size_t rk = rank(cochain_differential(r, n, acts, i));
    out.push_back(cochains - rk - previous_rank);
    previous_rank = rk;
  }
  return out;
}

std::size_t ext_dim_projective(std::size_t i, const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  if (m.is_zero() || n.is_zero()) return 0;
  return ext_dims_from_resolution(projective_resolution(m, i + 1), n, i)[i];
}

std::size_t ext_dim_injective(std::size_t i, const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  if (m.is_zero() || n.is_zero()) return 0;
  const Representation dn = dualize(n);
  return ext_dims_from_resolution(projective_resolution(dn, i + 1), dualize(m), i)[i];
}

std::size_t ext_dim(std::size_t i, const Representation& m, const Representation& n) {
  const std::size_t p = ext_dim_projective(i, m, n);
  const std::size_t q = ext_dim_injective(i, m, n);
  if (p != q)
    throw InternalFault("Ext^" + std::to_string(i) + " disagrees: " + std::to_string(p) + " from the projective side, " +
                        std::to_string(q) + " from the injective side");
  return p;
}

Representation syzygy(const Representation& m) {
  if (m.is_zero()) return m;
  ProjectiveCover cover = projective_cover(m);
  return kernel(cover.projective, cover.map).module;
}

Representation cosyzygy(const Representation& m) {
  if (m.is_zero()) return m;
  return dualize(syzygy(dualize(m)));
}

Representation syzygy_power(const Representation& m, std::size_t k) {
  Representation out = m;
  for (std::size_t i = 0; i < k && !out.is_zero(); ++i) out = syzygy(out);
  return out;
}

Representation cosyzygy_power(const Representation& m, std::size_t k) {
  Representation out = m;
  for (std::size_t i = 0; i < k && !out.is_zero(); ++i) out = cosyzygy(out);
  return out;
}

std::optional<std::size_t> proj_dim(const Representation& m, std::optional<std::size_t> cap) {
  const std::size_t limit = cap.value_or(2 * m.algebra()->vertex_count());
  if (m.is_zero()) return 0;
  ProjectiveResolution r = projective_resolution(m, limit);
  if (!r.complete) return std::nullopt;
  return r.gens.size() - 1;
}

std::optional<std::size_t> inj_dim(const Representation& m, std::optional<std::size_t> cap) {
  return proj_dim(dualize(m), cap.value_or(2 * m.algebra()->vertex_count()));
}

bool is_projective(const Representation& m) {
  if (m.is_zero()) return true;
  return projective_cover(m).projective.total_dim() == m.total_dim();
}

bool is_injective(const Representation& m) { return is_projective(dualize(m)); }

Representation transpose(const Representation& m) {
  const AlgebraPtr& a = m.algebra();
  const AlgebraPtr op = a->opposite();
  if (m.is_zero()) return Representation::zero(op);
  const Presentation pres = present(m);
  const auto& w = pres.cover.gens;
  const auto& v = pres.rel_gens;
  const Representation s = projective_sum(op, w);
  const Representation t = projective_sum(op, v);
  std::vector<Mat> images;
  images.reserve(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    Mat col(a->field(), t.dim(w[j]), 1);
    for (std::size_t k = 0; k < v.size(); ++k) {
      const std::size_t from = projective_sum_offset(*a, w, j, v[k]);
      const std::size_t to = projective_sum_offset(*op, v, k, w[j]);
      for (auto u : a->basis_between(w[j], v[k])) {
        const Scalar& c = pres.rel_images[k](from + a->between_position(u), 0);
        if (sgn(c) == 0) continue;
        for (const auto& [idx, coeff] : a->opposite_image(u)) {
          Scalar& entry = col(to + op->between_position(idx), 0);
          a->field().add_mul(entry, c, coeff);
        }
      }
    }
    images.push_back(std::move(col));
  }
  return cokernel(t, map_from_projectives(w, images, s, t)).module;
}

Representation ar_translate(const Representation& m) { return dualize(transpose(m)); }

Representation ar_translate_inv(const Representation& m) { return transpose(dualize(m)); }

Representation tau_d(std::size_t d, const Representation& m) {
  if (d == 0) throw InputError("d must be at least 1");
  return ar_translate(syzygy_power(m, d - 1));
}

Representation tau_d_inv(std::size_t d, const Representation& m) {
  if (d == 0) throw InputError("d must be at least 1");
  return ar_translate_inv(cosyzygy_power(m, d - 1));
}

namespace {

Mat flatten(const ModuleMap& f) {
  std::vector<Scalar> values;
  for (const auto& c : f.components) values.insert(values.end(), c.values().begin(), c.values().end());
  return Mat::column(f.components.empty() ? Field{} : f.components.front().field(), values);
}

// u |-> u * alpha from P_target(alpha) to P_source(alpha).
ModuleMap right_multiplication(const BoundQuiverAlgebra& a, ArrowId alpha, const Representation& from,
                               const Representation& to) {
  const auto& ar = a.quiver().arrow(alpha);
  ModuleMap f;
  for (VertexId x = 0; x < a.vertex_count(); ++x) {
    Mat c(a.field(), to.dim(x), from.dim(x));
    const auto& words = a.basis_between(ar.target, x);
    for (std::size_t p = 0; p < words.size(); ++p)
      for (const auto& [k, coeff] : a.product(words[p], a.arrow_index(alpha))) c(a.between_position(k), p) = coeff;
    f.components.push_back(std::move(c));
  }
  return f;
}

}  // namespace

Representation nakayama(const Representation& m) {
  const AlgebraPtr& a = m.algebra();
  const AlgebraPtr op = a->opposite();
  if (m.is_zero()) return Representation::zero(a);
  const std::size_t n = a->vertex_count();
  std::vector<Representation> proj;
  std::vector<std::vector<ModuleMap>> homs;
  std::vector<Mat> flat;
  DimVector dims(n);
  for (VertexId w = 0; w < n; ++w) {
    proj.push_back(projective(a, w));
    homs.push_back(hom_space(m, proj.back()));
    dims[w] = homs.back().size();
    std::size_t rows = 0;
    for (VertexId x = 0; x < n; ++x) rows += m.dim(x) * proj.back().dim(x);
    Mat basis(a->field(), rows, 0);
    for (const auto& f : homs.back()) basis = basis.hstack(flatten(f));
    flat.push_back(std::move(basis));
  }
  std::vector<Mat> maps;
  for (ArrowId alpha = 0; alpha < a->quiver().arrow_count(); ++alpha) {
    const auto& ar = a->quiver().arrow(alpha);
    const ModuleMap rho = right_multiplication(*a, alpha, proj[ar.target], proj[ar.source]);
    Mat action(a->field(), dims[ar.source], dims[ar.target]);
    for (std::size_t c = 0; c < homs[ar.target].size(); ++c) {
      auto coords = solve(flat[ar.source], flatten(compose(rho, homs[ar.target][c])));
      if (!coords) throw InternalFault("Hom(M, A) is not closed under right multiplication");
      action.set_block(0, c, *coords);
    }
    maps.push_back(std::move(action));
  }
  return dualize(Representation(op, std::move(dims), std::move(maps)));
}

bool Complex::composites_vanish() const {
  for (std::size_t j = 0; j + 1 < maps.size(); ++j)
    if (!is_zero_map(compose(maps[j + 1], maps[j]))) return false;
  return true;
}

bool Complex::exact_at(std::size_t j) const {
  if (j >= terms.size()) return true;
  const std::size_t n = terms[j].dims().size();
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t kernel_dim =
        j < maps.size() ? terms[j].dim(v) - rank(maps[j].at(v)) : terms[j].dim(v);
    const std::size_t image_dim = j == 0 ? 0 : rank(maps[j - 1].at(v));
    if (kernel_dim != image_dim) return false;
  }
  if (j > 0 && j < maps.size() && !is_zero_map(compose(maps[j], maps[j - 1]))) return false;
  return true;
}

std::size_t InjectiveCoresolution::multiplicity(std::size_t j, VertexId v) const {
  if (j >= socles.size()) return 0;
  std::size_t n = 0;
  for (auto s : socles[j]) n += s == v ? 1 : 0;
  return n;
}

namespace {

ModuleMap dual_map(const ModuleMap& f) {
  ModuleMap out;
  for (const auto& c : f.components) out.components.push_back(c.transpose());
  return out;
}

}  // namespace

InjectiveCoresolution injective_coresolution(const Representation& n, std::size_t length) {
  const AlgebraPtr& a = n.algebra();
  const AlgebraPtr op = a->opposite();
  const Representation dn = dualize(n);
  const ProjectiveResolution r = projective_resolution(dn, length);
  InjectiveCoresolution out;
  out.complex.terms.push_back(n);
  std::vector<Representation> projectives;
  for (std::size_t j = 0; j <= length; ++j) {
    const std::vector<VertexId> gens = j < r.gens.size() ? r.gens[j] : std::vector<VertexId>{};
    projectives.push_back(projective_sum(op, gens));
    out.socles.push_back(gens);
    out.complex.terms.push_back(dualize(projectives.back()));
    const Representation& source = projectives.back();
    const Representation& target = j == 0 ? dn : projectives[j - 1];
    const std::vector<Mat> images = j < r.images.size() ? r.images[j] : std::vector<Mat>{};
    out.complex.maps.push_back(dual_map(map_from_projectives(gens, images, source, target)));
  }
  return out;
}

bool FCoresolution::ok() const {
  for (bool b : injective)
    if (!b) return false;
  for (bool b : exact)
    if (!b) return false;
  return true;
}

bool is_injective_by_socle(const Representation& m) {
  if (m.is_zero()) return true;
  const AlgebraPtr& a = m.algebra();
  const DimVector soc = socle_dims(m);
  std::size_t envelope = 0;
  for (VertexId v = 0; v < soc.size(); ++v)
    if (soc[v] > 0) envelope += soc[v] * injective(a, v).total_dim();
  return envelope == m.total_dim();
}

FCoresolution coresolve_under_F(const Quotient& q, const Representation& n, std::size_t length) {
  const AlgebraPtr& a = n.algebra();
  if (a != q.parent) throw InputError("module is not over the parent algebra of the quotient");
  if (length > 1) {
    const Representation quotient_module = quotient_algebra_module(a, q.killed);
    for (std::size_t i = 1; i < length; ++i)
      if (ext_dim(i, quotient_module, n) != 0)
        throw PreconditionError("Ext^" + std::to_string(i) + "(A/<e>, N) is nonzero");
  }
  const InjectiveCoresolution full = injective_coresolution(n, length);
  std::vector<Sub> images;
  for (const auto& t : full.complex.terms) images.push_back(f_hom(q.killed, t));

  FCoresolution out;
  for (const auto& s : images) out.complex.terms.push_back(s.module);
  for (std::size_t j = 0; j < full.complex.maps.size(); ++j) {
    ModuleMap restricted;
    for (VertexId v = 0; v < a->vertex_count(); ++v) {
      const Mat pushed = full.complex.maps[j].at(v) * images[j].inclusion.at(v);
      auto sol = solve(images[j + 1].inclusion.at(v), pushed);
      if (!sol) throw InternalFault("F does not preserve a coresolution map");
      restricted.components.push_back(std::move(*sol));
    }
    out.complex.maps.push_back(std::move(restricted));
  }
  for (std::size_t j = 1; j < out.complex.terms.size(); ++j) {
    const Representation& t = out.complex.terms[j];
    out.injective.push_back(q.is_zero() || is_injective_by_socle(restrict_to_quotient(q, t)));
  }
  for (std::size_t j = 0; j <= length; ++j) out.exact.push_back(out.complex.exact_at(j));
  return out;
}

}  // namespace quiverlab
