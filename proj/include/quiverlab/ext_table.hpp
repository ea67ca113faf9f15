#pragma once

// Pairwise Ext dimensions between two lists of modules.

#include <vector>

#include "quiverlab/representation.hpp"

namespace quiverlab {

/// dims[m][n][i] = dim Ext^i(ms[m], ns[n]) for i = 0..max_degree.
struct ExtTable {
  std::size_t max_degree = 0;
  std::vector<std::vector<std::vector<std::size_t>>> dims;

  std::size_t at(std::size_t m, std::size_t n, std::size_t i) const { return dims.at(m).at(n).at(i); }
  friend bool operator==(const ExtTable&, const ExtTable&) = default;
};

/// Resolves every module once on each side and fills the table with an
/// OpenMP loop over pairs. Both sides are compared per entry; a mismatch
/// throws InternalFault.
ExtTable ext_table(const std::vector<Representation>& ms, const std::vector<Representation>& ns,
                   std::size_t max_degree);

/// Reference: ext_dim per entry, no sharing, no threads.
ExtTable ext_table_serial(const std::vector<Representation>& ms, const std::vector<Representation>& ns,
                          std::size_t max_degree);

}  // namespace quiverlab
