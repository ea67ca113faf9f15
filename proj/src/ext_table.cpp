#include "quiverlab/ext_table.hpp"

#include <exception>
#include <string>

#include "quiverlab/errors.hpp"
#include "quiverlab/homology.hpp"

namespace quiverlab {

namespace {

ExtTable empty_table(std::size_t rows, std::size_t cols, std::size_t max_degree) {
  ExtTable t;
  t.max_degree = max_degree;
  t.dims.assign(rows, std::vector<std::vector<std::size_t>>(cols, std::vector<std::size_t>(max_degree + 1, 0)));
  return t;
}

}  // namespace

ExtTable ext_table(const std::vector<Representation>& ms, const std::vector<Representation>& ns,
                   std::size_t max_degree) {
  ExtTable table = empty_table(ms.size(), ns.size(), max_degree);
  const long rows = static_cast<long>(ms.size());
  const long cols = static_cast<long>(ns.size());
  std::vector<ProjectiveResolution> left(ms.size());
  std::vector<ProjectiveResolution> right(ns.size());
  std::vector<Representation> dual_ms(ms.size());
  std::exception_ptr failure;

#pragma omp parallel
  {
#pragma omp for schedule(dynamic) nowait
    for (long m = 0; m < rows; ++m) {
      try {
        left[m] = projective_resolution(ms[m], max_degree + 1);
        dual_ms[m] = dualize(ms[m]);
      } catch (...) {
#pragma omp critical(ext_table_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp for schedule(dynamic)
    for (long n = 0; n < cols; ++n) {
      try {
        right[n] = projective_resolution(dualize(ns[n]), max_degree + 1);
      } catch (...) {
#pragma omp critical(ext_table_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

#pragma omp parallel for collapse(2) schedule(dynamic)
  for (long m = 0; m < rows; ++m) {
    for (long n = 0; n < cols; ++n) {
      try {
        if (ms[m].is_zero() || ns[n].is_zero()) continue;
        const auto p = ext_dims_from_resolution(left[m], ns[n], max_degree);
        const auto q = ext_dims_from_resolution(right[n], dual_ms[m], max_degree);
        for (std::size_t i = 0; i <= max_degree; ++i)
          if (p[i] != q[i])
            throw InternalFault("Ext^" + std::to_string(i) + " disagrees between the two sides at pair (" +
                                std::to_string(m) + ", " + std::to_string(n) + ")");
        table.dims[m][n] = p;
      } catch (...) {
#pragma omp critical(ext_table_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

ExtTable ext_table_serial(const std::vector<Representation>& ms, const std::vector<Representation>& ns,
                          std::size_t max_degree) {
  ExtTable table = empty_table(ms.size(), ns.size(), max_degree);
  for (std::size_t m = 0; m < ms.size(); ++m)
    for (std::size_t n = 0; n < ns.size(); ++n)
      for (std::size_t i = 0; i <= max_degree; ++i) table.dims[m][n][i] = ext_dim(i, ms[m], ns[n]);
  return table;
}

}  // namespace quiverlab
