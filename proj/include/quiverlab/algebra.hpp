#pragma once

// Bound quiver algebras KQ/I with an explicit normal-form basis.
//
// Paths are stored in written order: for a: i -> j and b: j -> k the
// composite is written b*a and stored as {b, a}, so the front arrow is the
// one applied last. Multiplication of paths is then concatenation.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverlab/linalg.hpp"

namespace quiverlab {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string name;
  VertexId source = 0;
  VertexId target = 0;
};

class Quiver {
 public:
  VertexId add_vertex(std::string label);
  ArrowId add_arrow(std::string name, VertexId source, VertexId target);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<VertexId> find_vertex(std::string_view label) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;

  /// Same vertices and arrow ids with every arrow turned around.
  Quiver reversed() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
};

struct Path {
  VertexId source = 0;
  VertexId target = 0;
  std::vector<ArrowId> arrows;  // written order

  static Path trivial(VertexId v) { return Path{v, v, {}}; }
  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Validates composability and fills in the endpoints.
Path make_path(const Quiver& q, std::vector<ArrowId> written);

/// `left` after `right`; nullopt when right.target != left.source.
std::optional<Path> concat(const Path& left, const Path& right);

/// The same path read in the opposite quiver.
Path reverse(const Path& p);

/// Length-lexicographic order. Ties in length are broken by comparing arrow
/// ids (declaration order) from the left of the written word.
struct PathLess {
  bool operator()(const Path& a, const Path& b) const;
};

/// Orders leading terms first.
struct PathGreater {
  bool operator()(const Path& a, const Path& b) const { return PathLess{}(b, a); }
};

std::string path_to_string(const Quiver& q, const Path& p);

struct Term {
  Scalar coeff;
  Path path;
};

/// Linear combination of parallel paths of length at least two.
struct Relation {
  std::vector<Term> terms;
};

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;
using Poly = std::map<Path, Scalar, PathGreater>;

struct BuildOptions {
  std::size_t length_cap = 30;
};

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

class BoundQuiverAlgebra {
 public:
  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const std::vector<Relation>& relations() const { return relations_; }
  /// Reduced Groebner basis of the ideal, each element monic.
  const std::vector<Poly>& groebner_basis() const { return groebner_; }
  std::size_t length_cap() const { return length_cap_; }

  std::size_t vertex_count() const { return quiver_.vertex_count(); }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(std::size_t i) const { return basis_.at(i); }
  std::optional<std::size_t> basis_index(const Path& p) const;

  /// Basis words starting at `from` and ending at `to`, i.e. e_to A e_from.
  const std::vector<std::size_t>& basis_between(VertexId from, VertexId to) const {
    return between_.at(from * vertex_count() + to);
  }
  /// Position of basis word i within basis_between(source, target).
  std::size_t between_position(std::size_t i) const { return between_position_.at(i); }
  std::size_t trivial_index(VertexId v) const { return trivial_index_.at(v); }
  std::size_t arrow_index(ArrowId a) const { return arrow_index_.at(a); }

  /// Product of basis elements x*y (x after y) as a combination of basis
  /// elements; empty when zero.
  const SparseVec& product(std::size_t x, std::size_t y) const {
    return table_[x * basis_.size() + y];
  }
  std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

  SparseVec normal_form(const Path& p) const;
  Poly reduce(Poly f) const;

  AlgebraPtr opposite() const { return opposite_.lock(); }
  /// Normal form in the opposite algebra of the reversed basis word i.
  const SparseVec& opposite_image(std::size_t i) const { return opposite_image_.at(i); }

  /// Longest basis word plus one: the smallest power of the arrow ideal
  /// that vanishes.
  std::size_t loewy_length() const;

  bool is_zero_algebra() const { return vertex_count() == 0; }

 private:
  friend AlgebraPtr build_algebra(Quiver, std::vector<Relation>, Field, BuildOptions);
  friend struct AlgebraPair;

  void complete_relations();
  void enumerate_basis();
  void fill_table();

  Quiver quiver_;
  Field field_;
  std::vector<Relation> relations_;
  std::size_t length_cap_ = 30;
  std::vector<Poly> groebner_;
  std::vector<Path> tips_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t, PathLess> index_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<std::size_t> between_position_;
  std::vector<std::size_t> trivial_index_;
  std::vector<std::size_t> arrow_index_;
  std::vector<SparseVec> table_;
  std::weak_ptr<const BoundQuiverAlgebra> opposite_;
  std::vector<SparseVec> opposite_image_;
};

/// Completes the relations to a confluent rewriting system and builds the
/// algebra together with its opposite. Throws InputError for malformed
/// relations and NotFiniteDimensional when words exceed the length cap.
AlgebraPtr build_algebra(Quiver quiver, std::vector<Relation> relations, Field field,
                         BuildOptions options = {});

AlgebraPtr opposite_algebra(const AlgebraPtr& a);

/// Sum of trivial paths over a vertex subset.
class Idempotent {
 public:
  Idempotent() = default;
  explicit Idempotent(std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  bool contains(VertexId v) const;
  bool empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }
  Idempotent complement(std::size_t vertex_count) const;

  friend bool operator==(const Idempotent&, const Idempotent&) = default;

 private:
  std::vector<VertexId> vertices_;
};

/// Parses "1,3" or "1 3" against the vertex labels of `q`.
Idempotent parse_idempotent(const Quiver& q, std::string_view text);
std::string idempotent_to_string(const Quiver& q, const Idempotent& e);

/// A/<e> realised concretely, with the vertex correspondence to A.
struct Quotient {
  AlgebraPtr parent;
  AlgebraPtr algebra;
  Idempotent killed;
  std::vector<VertexId> to_parent;                   // quotient vertex -> A vertex
  std::vector<std::optional<VertexId>> from_parent;  // A vertex -> quotient vertex
  std::vector<ArrowId> arrow_to_parent;

  bool is_zero() const { return algebra->is_zero_algebra(); }
};

Quotient quotient_by_idempotent(const AlgebraPtr& a, const Idempotent& e);

/// dim AeA, the two-sided ideal generated by e.
std::size_t ideal_dimension(const BoundQuiverAlgebra& a, const Idempotent& e);

}  // namespace quiverlab
