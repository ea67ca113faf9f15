#pragma once

// Subset algebras, the intertwining and crossing predicates, preprojective
// algebras of type A and the bundled fixtures.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quiverlab/algebra_format.hpp"
#include "quiverlab/tilting.hpp"

namespace quiverlab {

using Subset = std::vector<int>;

/// (d+1)-subsets of {base, ..., base+n-1}.
struct SubsetCollection {
  int n = 0;
  std::size_t d = 0;
  std::vector<Subset> sets;
  bool cyclic = false;  // i+1 wraps from base+n-1 to base
  int base = 1;
};

/// "135,136,146" (one digit per element) or "1.3.5,1.3.6" (dotted). Sets are
/// sorted; d is inferred from the first set.
SubsetCollection parse_subset_collection(int n, std::string_view text, bool cyclic = false, int base = 1);

/// "135" when every element is a single digit, "1.3.10" otherwise.
std::string subset_label(const Subset& s);

/// One vertex per set, an arrow X -> Y whenever Y = X \ {i} u {i+1}, and for
/// every X and i != j in X the relation a_j a_i - a_i a_j, where a branch
/// through a missing vertex is zero.
AlgebraSource subset_algebra_source(const SubsetCollection& c, Field field = Field::rationals());
AlgebraPtr subset_algebra(const SubsetCollection& c, Field field = Field::rationals());

/// i_1 < j_1 < i_2 < j_2 < ... < i_l < j_l for sorted I, J of equal size.
bool is_intertwining(const Subset& i, const Subset& j);

/// Some cyclically ordered s, t, u, v with s, u in I \ J and t, v in J \ I.
bool is_crossing(const Subset& i, const Subset& j, int n);

/// Double quiver of the linear quiver 1 -> ... -> rank with the
/// preprojective relation at every vertex.
AlgebraSource preprojective_source(std::size_t rank, Field field = Field::rationals());
AlgebraPtr preprojective_algebra_A(std::size_t rank, Field field = Field::rationals());

/// A named module collection of a fixture. `over` names an idempotent when
/// the collection lives over the quotient; `closure` asks for the closure
/// under tau_2 and tau_2^-.
struct FixtureCollection {
  std::string expression;
  std::string over;
  bool closure = false;
};

struct Fixture {
  std::string name;
  std::filesystem::path path;
  AlgebraPtr algebra;
  std::map<std::string, FixtureCollection> collections;
  std::map<std::string, Idempotent> idempotents;
  /// Expected connected components of the quotient by an idempotent.
  std::map<std::string, std::vector<std::vector<std::string>>> expected_blocks;
};

std::vector<std::string> fixture_names();
std::filesystem::path fixture_directory();
/// Loads fixtures/<name>.alg with its `#@` annotations, optionally over
/// another field. Throws InputError for unknown names.
///
///   #@ idempotent <name> = <vertices>
///   #@ collection <name> [over <idempotent>] = [closure] <module list>
///   #@ blocks <idempotent> = <vertices> | <vertices> ...
Fixture fixture(const std::string& name, std::optional<Field> field = std::nullopt);
Fixture load_fixture(const std::filesystem::path& path, std::optional<Field> field = std::nullopt);

/// A fixture collection made concrete. `quotient` is set when the
/// collection lives over A/<e>.
struct ResolvedCollection {
  std::optional<Quotient> quotient;
  ModuleCollection modules;
};
ResolvedCollection resolve_collection(const Fixture& f, const std::string& name, const EngineOptions& opts = {});

}  // namespace quiverlab
