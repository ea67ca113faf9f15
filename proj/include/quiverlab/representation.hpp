#pragma once

// Finite-dimensional left modules as quiver representations.

#include <string>
#include <utility>
#include <vector>

#include "quiverlab/algebra.hpp"
#include "quiverlab/linalg.hpp"

namespace quiverlab {

using DimVector = std::vector<std::size_t>;

class Representation {
 public:
  Representation() = default;
  /// Throws InputError when shapes are wrong or a relation does not vanish.
  Representation(AlgebraPtr algebra, DimVector dims, std::vector<Mat> arrow_maps);
  /// Skips the relation check; for modules built from ones already checked.
  struct Trusted {};
  Representation(Trusted, AlgebraPtr algebra, DimVector dims, std::vector<Mat> arrow_maps);

  static Representation zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  const DimVector& dims() const { return dims_; }
  std::size_t dim(VertexId v) const { return dims_.at(v); }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  /// Matrix of arrow a, dim(target) x dim(source).
  const Mat& map(ArrowId a) const { return maps_.at(a); }
  const std::vector<Mat>& maps() const { return maps_; }

  /// Action of a path (or of basis element i), dim(target) x dim(source).
  Mat act(const Path& p) const;
  Mat act_basis(std::size_t i) const { return act(algebra_->basis_path(i)); }

 private:
  AlgebraPtr algebra_;
  DimVector dims_;
  std::vector<Mat> maps_;
};

std::string dims_to_string(const DimVector& d);

/// Per-vertex matrices f_v : M_v -> N_v.
struct ModuleMap {
  std::vector<Mat> components;

  const Mat& at(VertexId v) const { return components.at(v); }
};

bool same_algebra(const Representation& m, const Representation& n);
void require_same_algebra(const Representation& m, const Representation& n);

bool is_module_map(const Representation& m, const Representation& n, const ModuleMap& f);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f
ModuleMap identity_map(const Representation& m);
ModuleMap zero_map(const Representation& m, const Representation& n);
ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g);
ModuleMap scale_map(const ModuleMap& f, const Scalar& c);
ModuleMap linear_combination(const std::vector<ModuleMap>& basis, const std::vector<Scalar>& coeffs,
                             const Representation& m, const Representation& n);
std::size_t map_rank(const ModuleMap& f);
bool is_zero_map(const ModuleMap& f);

/// Basis of Hom_A(M, N), computed from a minimal presentation of M.
std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

/// Same space, solved directly from the intertwiner equations. Slower; kept
/// as an independent check.
std::vector<ModuleMap> hom_space_by_intertwiners(const Representation& m, const Representation& n);

Representation projective(const AlgebraPtr& a, VertexId v);
Representation injective(const AlgebraPtr& a, VertexId v);
Representation simple(const AlgebraPtr& a, VertexId v);

Representation direct_sum(const Representation& m, const Representation& n);
Representation direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts);

/// DM over the opposite algebra: transposed arrow matrices.
Representation dualize(const Representation& m);

/// A submodule given by invariant subspaces U_v (independent columns), with
/// its inclusion map.
struct Sub {
  Representation module;
  ModuleMap inclusion;
};
/// A quotient module with its projection map.
struct Quo {
  Representation module;
  ModuleMap projection;
};

Sub subrepresentation(const Representation& m, const std::vector<Mat>& subspaces);
Quo quotient_representation(const Representation& m, const std::vector<Mat>& subspaces);

Sub kernel(const Representation& m, const ModuleMap& f);
Quo cokernel(const Representation& n, const ModuleMap& f);
std::vector<Mat> image_subspaces(const ModuleMap& f);

/// Sum of the images of all arrows, per vertex.
std::vector<Mat> radical_subspaces(const Representation& m);
/// Intersection of the kernels of all outgoing arrows, per vertex.
std::vector<Mat> socle_subspaces(const Representation& m);
/// dim of top(M) at each vertex.
DimVector top_dims(const Representation& m);
DimVector socle_dims(const Representation& m);

/// Module map out of a direct sum of projectives P_{v_k}, sending the k-th
/// generator to `images[k]` (a vector in target_{v_k}).
ModuleMap map_from_projectives(const std::vector<VertexId>& gens, const std::vector<Mat>& images,
                               const Representation& source, const Representation& target);

/// Minimal projective cover: generators lift a basis of top(M).
struct ProjectiveCover {
  std::vector<VertexId> gens;
  std::vector<Mat> images;    // generator k as a column of M at gens[k]
  Representation projective;  // projective_sum(gens)
  ModuleMap map;              // onto M
};
ProjectiveCover projective_cover(const Representation& m);

/// Minimal presentation P1 -> P0 -> M -> 0. Relation k lives at vertex
/// rel_gens[k] and is the column rel_images[k] of P0 at that vertex.
struct Presentation {
  ProjectiveCover cover;
  std::vector<VertexId> rel_gens;
  std::vector<Mat> rel_images;
  Sub syzygy;  // kernel of the cover, included in P0
};
Presentation present(const Representation& m);

/// Matrix of x |-> (sum_u y_u N(u)) x_j over the summands j of a projective
/// sum with generators `gens`, where y is a column of that sum at vertex v.
/// Shape: dim N_v x sum_j dim N_{gens[j]}.
Mat evaluate_element(const Representation& n, const std::vector<Mat>& word_actions,
                     const std::vector<VertexId>& gens, VertexId v, const Mat& y);

/// N(u) for every basis word u.
std::vector<Mat> word_actions(const Representation& n);

/// Direct sum of indecomposable projectives at the listed vertices, in order.
Representation projective_sum(const AlgebraPtr& a, const std::vector<VertexId>& gens);

/// Coordinates of summand k inside the vertex-w space of projective_sum.
std::size_t projective_sum_offset(const BoundQuiverAlgebra& a, const std::vector<VertexId>& gens, std::size_t k,
                                  VertexId w);

// Idempotent functors.

/// Hom_A(A/<e>, M): the largest submodule vanishing at the e-vertices.
Sub f_hom(const Idempotent& e, const Representation& m);
/// A/<e> tensor M: M modulo the submodule generated by the e-vertex spaces.
Quo tensor_quotient(const Idempotent& e, const Representation& m);

/// Whether M vanishes at every e-vertex (equivalently <e>M = 0).
bool annihilated_by(const Idempotent& e, const Representation& m);

/// View a module over A/<e> as an A-module.
Representation inflate(const Quotient& q, const Representation& m);
/// View an A-module annihilated by <e> as a module over A/<e>.
/// Throws PreconditionError when M does not vanish at e.
Representation restrict_to_quotient(const Quotient& q, const Representation& m);

/// A/<e> as a left A-module: the direct sum of tensor_quotient(e, P_w) over w
/// outside e.
Representation quotient_algebra_module(const AlgebraPtr& a, const Idempotent& e);

}  // namespace quiverlab
