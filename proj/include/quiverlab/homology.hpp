#pragma once

// Minimal resolutions, Ext, syzygies, the transpose, Auslander-Reiten
// translates and the Nakayama functor.

#include <optional>
#include <vector>

#include "quiverlab/representation.hpp"

namespace quiverlab {

/// Minimal projective resolution ... -> P_1 -> P_0 -> M, stored as generator
/// data: P_i = sum_k P_{gens[i][k]}, and generator k of P_i maps to the
/// column images[i][k] at vertex gens[i][k] of P_{i-1} (of M when i = 0).
struct ProjectiveResolution {
  Representation module;
  std::vector<std::vector<VertexId>> gens;
  std::vector<std::vector<Mat>> images;
  std::vector<Representation> syzygies;  // syzygies[i] = Omega^i M, i = 0..computed
  bool complete = false;                 // a zero syzygy was reached

  std::size_t computed_length() const { return gens.size(); }
  /// Multiplicity of P_v in P_i.
  std::size_t multiplicity(std::size_t i, VertexId v) const;
};

/// Computes P_0 .. P_length, or fewer when the resolution stops.
ProjectiveResolution projective_resolution(const Representation& m, std::size_t length);

/// dim Ext^i(M, N) for i = 0..max_degree from a resolution of M reaching
/// P_{max_degree+1} (or complete).
std::vector<std::size_t> ext_dims_from_resolution(const ProjectiveResolution& r, const Representation& n,
                                                  std::size_t max_degree);

/// Ext dimension from the projective resolution of M only.
std::size_t ext_dim_projective(std::size_t i, const Representation& m, const Representation& n);
/// Ext dimension from the injective coresolution of N only, computed as
/// Ext^i over the opposite algebra of (DN, DM).
std::size_t ext_dim_injective(std::size_t i, const Representation& m, const Representation& n);
/// Both of the above; throws InternalFault when they disagree.
std::size_t ext_dim(std::size_t i, const Representation& m, const Representation& n);

Representation syzygy(const Representation& m);
Representation cosyzygy(const Representation& m);
Representation syzygy_power(const Representation& m, std::size_t k);
Representation cosyzygy_power(const Representation& m, std::size_t k);

/// Length of the minimal resolution, or nullopt when it exceeds `cap`.
/// The default cap is twice the number of vertices.
std::optional<std::size_t> proj_dim(const Representation& m, std::optional<std::size_t> cap = std::nullopt);
std::optional<std::size_t> inj_dim(const Representation& m, std::optional<std::size_t> cap = std::nullopt);

bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

/// Tr M over the opposite algebra.
Representation transpose(const Representation& m);
Representation ar_translate(const Representation& m);      // D Tr
Representation ar_translate_inv(const Representation& m);  // Tr D
Representation tau_d(std::size_t d, const Representation& m);
Representation tau_d_inv(std::size_t d, const Representation& m);

/// D Hom_A(M, A).
Representation nakayama(const Representation& m);

/// A cochain complex X^0 -> X^1 -> ...
struct Complex {
  std::vector<Representation> terms;
  std::vector<ModuleMap> maps;  // maps[j] : terms[j] -> terms[j+1]

  bool composites_vanish() const;
  /// ker maps[j] = im maps[j-1]; for j = 0, maps[0] is injective.
  bool exact_at(std::size_t j) const;
};

/// 0 -> N -> I_0 -> ... -> I_length as a complex with terms N, I_0, ...
struct InjectiveCoresolution {
  Complex complex;
  std::vector<std::vector<VertexId>> socles;  // I_j = sum of I_v over socles[j]

  std::size_t multiplicity(std::size_t j, VertexId v) const;
};
InjectiveCoresolution injective_coresolution(const Representation& n, std::size_t length);

/// F = Hom(A/<e>, -) applied to the minimal injective coresolution of N.
struct FCoresolution {
  Complex complex;               // FN, FI_0, ..., FI_length over A
  std::vector<bool> injective;   // FI_j injective over A/<e>
  std::vector<bool> exact;       // exactness at FN, FI_0, ..., FI_{length-1}
  bool ok() const;
};
/// Checks Ext^i(A/<e>, N) = 0 for 0 < i < length first; throws
/// PreconditionError naming the first failing i.
FCoresolution coresolve_under_F(const Quotient& q, const Representation& n, std::size_t length);

/// Injective over the algebra: dim equals that of its injective envelope.
bool is_injective_by_socle(const Representation& m);

}  // namespace quiverlab
