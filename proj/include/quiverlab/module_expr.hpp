#pragma once

// Module expressions: P(v), I(v), S(v), sum(X, ...), omega, coomega, tau,
// taum, tau2, taum2, nu; P(*), I(*) and S(*) expand to every vertex. A list
// is a comma-separated sequence of expressions.

#include <string>
#include <string_view>
#include <vector>

#include "quiverlab/representation.hpp"

namespace quiverlab {

struct NamedModule {
  std::string name;
  Representation module;
};

/// Evaluates a comma-separated list. Throws InputError with the offending
/// position on malformed input or unknown vertices.
std::vector<NamedModule> evaluate_module_list(const AlgebraPtr& a, std::string_view text);

/// A single module; a list or a `*` expansion is summed.
Representation evaluate_module(const AlgebraPtr& a, std::string_view text);

}  // namespace quiverlab
