#pragma once

// The two reduction theorems for 2-precluster tilting subcategories and the
// Jasso-Kulshammer criterion. Each checker reports its hypotheses and an
// independently verified conclusion separately.

#include <optional>

#include "quiverlab/tilting.hpp"

namespace quiverlab {

struct TheoremOptions {
  EngineOptions engine;
  /// theorem2 (iii): read "nonzero for every J" as "nonzero for some J".
  bool exists_reading = false;
};

/// coll_tilde is a 2-precluster tilting collection over A (checked first;
/// PreconditionError otherwise).
CheckReport check_theorem1(const AlgebraPtr& a, const Idempotent& e, const ModuleCollection& coll_tilde,
                           const TheoremOptions& opts = {});

/// coll is a 2-precluster tilting collection over q.algebra (checked first).
CheckReport check_theorem2(const Quotient& q, const ModuleCollection& coll,
                           const TheoremOptions& opts = {});

/// coll_tilde is d-cluster tilting over A: verified when `indecs` is given,
/// otherwise assumed. The cluster-tilting half of the conclusion needs
/// `quotient_indecs`, the indecomposables of A/<e>.
CheckReport check_jk_criterion(std::size_t d, const Quotient& q, const ModuleCollection& coll_tilde,
                               const std::optional<ModuleCollection>& indecs = std::nullopt,
                               const std::optional<ModuleCollection>& quotient_indecs = std::nullopt,
                               const TheoremOptions& opts = {});

/// Connected components of the quiver of an algebra, as sorted vertex lists.
std::vector<std::vector<VertexId>> quiver_blocks(const BoundQuiverAlgebra& a);

}  // namespace quiverlab
