#pragma once

// Krull-Schmidt decomposition, isomorphism and add(-) membership.

#include <cstdint>
#include <optional>
#include <vector>

#include "quiverlab/representation.hpp"

namespace quiverlab {

/// Knobs shared by every randomised search. Identical options give identical
/// results.
struct EngineOptions {
  std::uint64_t seed = 1;
  std::size_t sweep_depth = 64;
  bool parallel = true;
};

/// Univariate polynomial, coefficients from the constant term up.
using Polynomial = std::vector<Scalar>;

Polynomial minimal_polynomial(const ModuleMap& phi, const Field& f);

/// Rational roots (over Q) or all roots (over small prime fields).
std::vector<Scalar> polynomial_roots(const Polynomial& p, const Field& f);

/// dim End(M) / rad End(M). Exact over Q; over F_p returns nullopt.
std::optional<std::size_t> endomorphism_top_dimension(const Representation& m);

/// Indecomposable summands, in a deterministic order. Throws InternalFault if
/// the search cannot decide a module with a non-split endomorphism ring.
std::vector<Representation> decompose(const Representation& m, const EngineOptions& opts = {});

bool is_indecomposable(const Representation& m, const EngineOptions& opts = {});

/// Exact test for indecomposable X and Y: some composite of basis maps
/// X -> Y -> X is invertible.
bool indecomposables_isomorphic(const Representation& x, const Representation& y);

bool is_isomorphic(const Representation& m, const Representation& n, const EngineOptions& opts = {});

struct Membership {
  bool member = true;
  std::optional<Representation> missing;  // an indecomposable summand outside add
};

/// X in add(coll): the identity of X is a sum of maps factoring through members.
Membership add_membership(const Representation& x, const std::vector<Representation>& coll,
                          const EngineOptions& opts = {});

/// Index of a member isomorphic to the indecomposable X, if any.
std::optional<std::size_t> find_isomorphic(const Representation& x, const std::vector<Representation>& coll);

}  // namespace quiverlab
