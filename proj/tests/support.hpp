#pragma once

// Shared helpers and independent oracles for the test binaries.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quiverlab/constructions.hpp"
#include "quiverlab/homology.hpp"
#include "quiverlab/theorems.hpp"

namespace qltest {

using namespace quiverlab;

AlgebraPtr algebra(const std::string& text);
VertexId vertex(const AlgebraPtr& a, const std::string& label);
Representation P(const AlgebraPtr& a, const std::string& label);
Representation I(const AlgebraPtr& a, const std::string& label);
Representation S(const AlgebraPtr& a, const std::string& label);
Idempotent idem(const AlgebraPtr& a, const std::string& text);

ModuleCollection collection(const AlgebraPtr& a, const std::string& modules);

/// Each vertex independently with probability 1/3.
Idempotent random_idempotent(std::mt19937& rng, const AlgebraPtr& a);

std::vector<AlgebraPtr> fixture_algebras();

/// Simples, projectives and injectives, each named.
std::vector<NamedModule> spi_modules(const AlgebraPtr& a);

/// dim KQ/I for relations homogeneous in path length, from ranks of the
/// graded pieces I_L = span{u r w}. Independent of the rewriting system.
/// Returns nullopt if some relation is inhomogeneous or the path count
/// never stabilises by `max_length`.
std::optional<std::size_t> graded_dimension(const AlgebraPtr& a, std::size_t max_length = 12);

/// Random bound quiver: at most 4 vertices and 6 arrows, no loops, every
/// path of length three zero, plus random length-two zero and commutativity
/// relations.
AlgebraSource random_rad3_source(std::mt19937& rng, Field field = Field::rationals());

/// tau S found as the left end of an almost split sequence 0 -> X -> E -> S
/// -> 0, by brute force over all extensions with X among `indecs`. Needs a
/// prime field small enough to enumerate the extension cocycles.
std::optional<Representation> tau_by_almost_split(const Representation& s, const std::vector<Representation>& indecs);

/// Closure of P(*) and I(*) under tau_2 and tau_2^-, abandoned once a
/// translate exceeds `max_dim` or the closure exceeds `max_members`.
std::optional<ModuleCollection> bounded_tau2_closure(const AlgebraPtr& a, std::size_t max_members = 24,
                                                     std::size_t max_dim = 16);

/// theorem1 and theorem2 (both readings) on seeded random
/// radical-cube-zero algebras with random idempotents, using the bounded
/// tau_2 closure of P and I. Cases whose translates grow past a small
/// dimension are skipped, since wild algebras make them huge.
std::vector<CheckReport> theorem_sweep(std::uint32_t seed, int algebras);

/// Every basis triple satisfies (xy)z = x(yz).
bool associative(const BoundQuiverAlgebra& a);

}  // namespace qltest
