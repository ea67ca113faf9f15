#include <algorithm>

#include "quiverlab/errors.hpp"
#include "quiverlab/tilting.hpp"

namespace quiverlab {

namespace {

void dimension_vectors(std::size_t vertices, std::size_t budget, DimVector& cur, std::vector<DimVector>& out) {
  if (cur.size() == vertices) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = 0; k <= budget; ++k) {
    cur.push_back(k);
    dimension_vectors(vertices, budget - k, cur, out);
    cur.pop_back();
  }
}

bool satisfies_relations(const Representation& m) {
  const auto& a = *m.algebra();
  for (const auto& rel : a.relations()) {
    const Path& first = rel.terms.front().path;
    Mat sum(m.field(), m.dim(first.target), m.dim(first.source));
    for (const auto& t : rel.terms) sum = sum + m.act(t.path).scaled(t.coeff);
    if (!sum.is_zero()) return false;
  }
  return true;
}

}  // namespace

Enumeration enumerate_indecomposables(const AlgebraPtr& a, std::size_t bound, const EngineOptions& opts,
                                      std::size_t candidate_cap) {
  const Field& f = a->field();
  if (f.is_rational()) throw InputError("enumeration needs a prime field");
  const std::uint64_t p = f.characteristic();
  const Quiver& q = a->quiver();

  std::vector<DimVector> vectors;
  DimVector cur;
  dimension_vectors(q.vertex_count(), bound, cur, vectors);
  std::stable_sort(vectors.begin(), vectors.end(), [](const DimVector& x, const DimVector& y) {
    std::size_t sx = 0, sy = 0;
    for (auto v : x) sx += v;
    for (auto v : y) sy += v;
    return sx < sy;
  });

  Enumeration out{ModuleCollection{a, {}}, false};
  for (const auto& dims : vectors) {
    std::size_t total = 0;
    for (auto v : dims) total += v;
    if (total == 0) continue;

    std::size_t entries = 0;
    for (const auto& ar : q.arrows()) entries += dims[ar.source] * dims[ar.target];
    std::size_t count = 1;
    bool too_many = false;
    for (std::size_t i = 0; i < entries && !too_many; ++i) {
      if (count > candidate_cap / p) too_many = true;
      count *= p;
    }
    if (too_many) {
      out.partial = true;
      continue;
    }

    std::vector<Representation> found;
    std::vector<std::uint64_t> digits(entries, 0);
    for (std::size_t c = 0; c < count; ++c) {
      std::vector<Mat> maps;
      std::size_t k = 0;
      for (const auto& ar : q.arrows()) {
        Mat m(f, dims[ar.target], dims[ar.source]);
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t s = 0; s < m.cols(); ++s) m(r, s) = Scalar(static_cast<unsigned long>(digits[k++]));
        maps.push_back(std::move(m));
      }
      Representation rep(Representation::Trusted{}, a, dims, std::move(maps));
      if (satisfies_relations(rep) && is_indecomposable(rep, opts) && !find_isomorphic(rep, found))
        found.push_back(std::move(rep));
      for (std::size_t i = 0; i < entries; ++i) {
        if (++digits[i] < p) break;
        digits[i] = 0;
      }
    }
    for (std::size_t i = 0; i < found.size(); ++i) {
      std::string name = "X" + dims_to_string(dims);
      if (found.size() > 1) name += "#" + std::to_string(i + 1);
      out.modules.members.push_back({std::move(name), std::move(found[i])});
    }
  }
  return out;
}

}  // namespace quiverlab
