#pragma once

// Collections of indecomposables and the checkers for precluster tilting,
// cluster tilting, idempotent ideals and the Iyama duality.

#include <optional>
#include <string>
#include <vector>

#include "quiverlab/decompose.hpp"
#include "quiverlab/module_expr.hpp"
#include "quiverlab/report.hpp"

namespace quiverlab {

/// Pairwise non-isomorphic indecomposables over one algebra.
struct ModuleCollection {
  AlgebraPtr algebra;
  std::vector<NamedModule> members;

  std::vector<Representation> modules() const;
  std::size_t size() const { return members.size(); }
  const std::string& name(std::size_t i) const { return members.at(i).name; }
};

/// Decomposes every input and keeps one summand per isomorphism class.
/// Summands of a decomposable input are named "name[k]".
ModuleCollection make_collection(const AlgebraPtr& a, const std::vector<NamedModule>& inputs,
                                 const EngineOptions& opts = {});

/// Smallest collection containing the seeds and closed under tau_d and
/// tau_d^- (up to summands). Throws InternalFault past `cap` members.
ModuleCollection tau_closure(std::size_t d, const ModuleCollection& seeds, const EngineOptions& opts = {},
                             std::size_t cap = 400);

/// P1 generator-cogenerator, P2 closure under tau_d and tau_d^-, P3 d-rigidity.
CheckReport is_precluster_tilting(std::size_t d, const ModuleCollection& coll, const EngineOptions& opts = {});

/// Both Ext-orthogonality equalities, tested over a complete list of
/// indecomposables.
CheckReport is_cluster_tilting(std::size_t d, const ModuleCollection& coll, const ModuleCollection& indecs,
                               const EngineOptions& opts = {});

struct Enumeration {
  ModuleCollection modules;
  bool partial = false;  // some dimension vector had too many candidates
};

/// All indecomposables of total dimension at most `bound`, by exhaustive
/// search over arrow matrices. Prime fields only.
Enumeration enumerate_indecomposables(const AlgebraPtr& a, std::size_t bound, const EngineOptions& opts = {},
                                      std::size_t candidate_cap = std::size_t{1} << 20);

/// A/<e> as a left A-module and the injectives of A/<e> viewed over A.
std::vector<Representation> quotient_injectives(const Quotient& q);
std::vector<Representation> quotient_projectives(const Quotient& q);
std::vector<Representation> quotient_simples(const Quotient& q);

/// Ext^i(A/<e>, inflate I) = 0 for every injective I of A/<e>, 0 < i <= k.
CheckReport is_k_idempotent_ideal(const AlgebraPtr& a, const Idempotent& e, std::size_t k);

/// (i) Ext^i(A/<e>, N) = 0 for 0 < i < d against (ii) the Ext comparison
/// for M among the simples and projectives of A/<e>; reports the
/// equivalence.
CheckReport check_apt_equivalence(const AlgebraPtr& a, const Idempotent& e, const Representation& n,
                                  std::size_t d);

/// Ext over A/<e> against Ext over A for simples, projectives and
/// injectives of A/<e>, 0 <= i < d, against the injective criterion.
CheckReport check_idempotent_equivalence(const AlgebraPtr& a, const Idempotent& e, std::size_t d);

/// Membership of N in I_d decided by Ext^i(A/<e>, N) = 0 for 0 <= i < d,
/// cross-checked against the socles of the minimal injective coresolution
/// and against the simples of A/<e>.
CheckReport in_I_d(const AlgebraPtr& a, const Idempotent& e, const Representation& n, std::size_t d);

/// F applied to the minimal injective coresolution of N: exactness and
/// injectivity of the terms over A/<e>.
CheckReport check_coresolution_under_F(const AlgebraPtr& a, const Idempotent& e, const Representation& n,
                                       std::size_t d);

/// Ae and D(eA) are both projective and injective.
struct ProjInjCondition {
  std::vector<VertexId> ae_failures;   // v in e with P(v) not injective
  std::vector<VertexId> dea_failures;  // v in e with I(v) not projective
  bool ae() const { return ae_failures.empty(); }
  bool dea() const { return dea_failures.empty(); }
  bool holds() const { return ae() && dea(); }
};
ProjInjCondition projective_injective_condition(const AlgebraPtr& a, const Idempotent& e);
bool is_projective_injective_bimodule_condition(const AlgebraPtr& a, const Idempotent& e);

/// Third term of the minimal injective coresolution of M against
/// Ext^2(A/<1-e>, M). Throws PreconditionError when Ae or D(eA) is not
/// projective-injective.
CheckReport check_boundary_lemma(const AlgebraPtr& a, const Idempotent& e, const Representation& m);

/// Dimension identities of the higher Auslander-Reiten duality over the
/// members of `coll`, wherever the vanishing hypotheses hold.
CheckReport check_iyama_duality(std::size_t d, const ModuleCollection& coll);

}  // namespace quiverlab
