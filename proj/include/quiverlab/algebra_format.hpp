#pragma once

// Line-oriented algebra description files.
//
//   field Q | field F <p>
//   vertex <label>
//   arrow <name> : <src> -> <tgt>
//   rel <term> (+|- <term>)*      term = [coeff*]name(*name)*
//
// `#` starts a comment. b*a means a first, then b.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverlab/algebra.hpp"

namespace quiverlab {

/// Parsed but not yet completed algebra description.
struct AlgebraSource {
  Quiver quiver;
  std::vector<Relation> relations;
  Field field;
};

AlgebraSource parse_algebra_source(std::string_view text);
AlgebraSource read_algebra_source(const std::filesystem::path& path);

AlgebraPtr build_algebra(const AlgebraSource& src, BuildOptions options = {});
AlgebraPtr parse_algebra(std::string_view text, BuildOptions options = {});
AlgebraPtr load_algebra(const std::filesystem::path& path, BuildOptions options = {});

/// Canonical text form; parsing it back yields the same quiver, field and
/// relations.
std::string print_algebra(const BoundQuiverAlgebra& a);

std::string format_relation(const Quiver& q, const Relation& r);

/// Graphviz digraph: one solid labelled edge per arrow, one dashed edge per
/// relation from its source to its target.
std::string export_dot(const BoundQuiverAlgebra& a);

}  // namespace quiverlab
