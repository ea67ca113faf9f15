#include "support.hpp"

#include <map>

#include "quiverlab/errors.hpp"

namespace qltest {

AlgebraPtr algebra(const std::string& text) { return parse_algebra(text); }

VertexId vertex(const AlgebraPtr& a, const std::string& label) {
  auto v = a->quiver().find_vertex(label);
  if (!v) throw InputError("no vertex " + label);
  return *v;
}

Representation P(const AlgebraPtr& a, const std::string& label) { return projective(a, vertex(a, label)); }
Representation I(const AlgebraPtr& a, const std::string& label) { return injective(a, vertex(a, label)); }
Representation S(const AlgebraPtr& a, const std::string& label) { return simple(a, vertex(a, label)); }
Idempotent idem(const AlgebraPtr& a, const std::string& text) { return parse_idempotent(a->quiver(), text); }

ModuleCollection collection(const AlgebraPtr& a, const std::string& modules) {
  return make_collection(a, evaluate_module_list(a, modules));
}

Idempotent random_idempotent(std::mt19937& rng, const AlgebraPtr& a) {
  std::vector<VertexId> vs;
  for (VertexId v = 0; v < a->vertex_count(); ++v)
    if (rng() % 3 == 0) vs.push_back(v);
  return Idempotent(vs);
}

std::vector<AlgebraPtr> fixture_algebras() {
  std::vector<AlgebraPtr> out;
  for (const auto& n : fixture_names()) out.push_back(fixture(n).algebra);
  return out;
}

std::vector<NamedModule> spi_modules(const AlgebraPtr& a) {
  std::vector<NamedModule> out;
  for (VertexId v = 0; v < a->vertex_count(); ++v) {
    const std::string l = a->quiver().label(v);
    out.push_back({"S(" + l + ")", simple(a, v)});
    out.push_back({"P(" + l + ")", projective(a, v)});
    out.push_back({"I(" + l + ")", injective(a, v)});
  }
  return out;
}

std::optional<std::size_t> graded_dimension(const AlgebraPtr& a, std::size_t max_length) {
  const Quiver& q = a->quiver();
  const Field& f = a->field();
  for (const auto& r : a->relations())
    for (const auto& t : r.terms)
      if (t.path.length() != r.terms.front().path.length()) return std::nullopt;

  // paths[L] in written order; arrows prepended.
  std::vector<std::vector<Path>> paths(1);
  for (VertexId v = 0; v < q.vertex_count(); ++v) paths[0].push_back(Path::trivial(v));
  auto extend = [&](std::size_t len) {
    while (paths.size() <= len) {
      std::vector<Path> next;
      for (const auto& p : paths.back())
        for (ArrowId ar = 0; ar < q.arrow_count(); ++ar)
          if (q.arrow(ar).source == p.target) {
            Path n{p.source, q.arrow(ar).target, {ar}};
            n.arrows.insert(n.arrows.end(), p.arrows.begin(), p.arrows.end());
            next.push_back(std::move(n));
          }
      paths.push_back(std::move(next));
    }
  };

  std::size_t total = 0;
  for (std::size_t len = 0; len <= max_length; ++len) {
    extend(len);
    const auto& level = paths[len];
    if (level.empty()) return total;
    std::map<std::vector<ArrowId>, std::size_t> index;
    for (std::size_t k = 0; k < level.size(); ++k) index[level[k].arrows] = k;
    std::vector<std::vector<Scalar>> rows;
    for (const auto& r : a->relations()) {
      const std::size_t k = r.terms.front().path.length();
      if (k > len) continue;
      const VertexId rs = r.terms.front().path.source;
      const VertexId rt = r.terms.front().path.target;
      for (std::size_t left = 0; left + k <= len; ++left) {
        const std::size_t right = len - k - left;
        extend(std::max(left, right));
        for (const auto& u : paths[left]) {
          if (u.source != rt) continue;
          for (const auto& w : paths[right]) {
            if (w.target != rs) continue;
            std::vector<Scalar> row(level.size(), f.from_int(0));
            for (const auto& t : r.terms) {
              std::vector<ArrowId> word = u.arrows;
              word.insert(word.end(), t.path.arrows.begin(), t.path.arrows.end());
              word.insert(word.end(), w.arrows.begin(), w.arrows.end());
              Scalar& c = row[index.at(word)];
              c = f.add(c, t.coeff);
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
    std::size_t rk = 0;
    if (!rows.empty()) {
      Mat m(f, rows.size(), level.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < level.size(); ++j) m(i, j) = rows[i][j];
      rk = rank(m);
    }
    total += level.size() - rk;
    if (rk == level.size()) return total;
  }
  return std::nullopt;
}

AlgebraSource random_rad3_source(std::mt19937& rng, Field field) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  AlgebraSource src;
  src.field = field;
  const int n = pick(1, 4);
  for (int v = 1; v <= n; ++v) src.quiver.add_vertex(std::to_string(v));
  const int m = n == 1 ? 0 : pick(1, 6);
  for (int k = 0; k < m; ++k) {
    const VertexId s = pick(0, n - 1);
    VertexId t = pick(0, n - 2);
    if (t >= s) ++t;
    src.quiver.add_arrow("x" + std::to_string(k + 1), s, t);
  }
  const Quiver& q = src.quiver;
  std::vector<Path> two;
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    for (ArrowId b = 0; b < q.arrow_count(); ++b)
      if (q.arrow(a).target == q.arrow(b).source) two.push_back(make_path(q, {b, a}));
  for (const auto& p : two)
    for (ArrowId c = 0; c < q.arrow_count(); ++c)
      if (q.arrow(c).source == p.target) {
        std::vector<ArrowId> w{c};
        w.insert(w.end(), p.arrows.begin(), p.arrows.end());
        src.relations.push_back({{{field.from_int(1), make_path(q, w)}}});
      }
  std::vector<bool> used(two.size(), false);
  for (std::size_t i = 0; i < two.size(); ++i) {
    if (used[i]) continue;
    const int roll = pick(0, 2);
    if (roll == 0) continue;
    std::optional<std::size_t> partner;
    for (std::size_t j = i + 1; j < two.size() && !partner; ++j)
      if (!used[j] && two[j].source == two[i].source && two[j].target == two[i].target) partner = j;
    used[i] = true;
    if (roll == 2 && partner) {
      used[*partner] = true;
      src.relations.push_back({{{field.from_int(1), two[i]}, {field.from_int(-1), two[*partner]}}});
    } else {
      src.relations.push_back({{{field.from_int(1), two[i]}}});
    }
  }
  return src;
}

namespace {

std::vector<Scalar> flatten(const ModuleMap& f) {
  std::vector<Scalar> out;
  for (const auto& c : f.components)
    for (const auto& x : c.values()) out.push_back(x);
  return out;
}

std::size_t span_rank(const Field& f, const std::vector<std::vector<Scalar>>& vecs) {
  if (vecs.empty() || vecs.front().empty()) return 0;
  Mat m(f, vecs.size(), vecs.front().size());
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < vecs[i].size(); ++j) m(i, j) = vecs[i][j];
  return rank(m);
}

}  // namespace

std::optional<Representation> tau_by_almost_split(const Representation& s, const std::vector<Representation>& indecs) {
  const AlgebraPtr& a = s.algebra();
  const Field& f = a->field();
  if (f.is_rational()) throw InputError("almost split search needs a prime field");
  const Quiver& q = a->quiver();
  const std::uint64_t p = f.characteristic();

  for (const auto& x : indecs) {
    if (x.is_zero()) continue;
    std::size_t entries = 0;
    for (const auto& ar : q.arrows()) entries += x.dim(ar.target) * s.dim(ar.source);
    constexpr std::size_t kCap = std::size_t{1} << 16;
    std::size_t count = 1;
    for (std::size_t i = 0; i < entries && count <= kCap; ++i) count *= p;
    if (count > kCap) continue;

    DimVector dims(q.vertex_count());
    for (VertexId v = 0; v < q.vertex_count(); ++v) dims[v] = x.dim(v) + s.dim(v);
    const Representation split = direct_sum(x, s);

    std::vector<std::uint64_t> digits(entries, 0);
    for (std::size_t c = 0; c < count; ++c) {
      std::vector<Mat> maps;
      std::size_t k = 0;
      for (ArrowId ar = 0; ar < q.arrow_count(); ++ar) {
        const VertexId src = q.arrow(ar).source;
        const VertexId tgt = q.arrow(ar).target;
        Mat m(f, dims[tgt], dims[src]);
        m.set_block(0, 0, x.map(ar));
        m.set_block(x.dim(tgt), x.dim(src), s.map(ar));
        for (std::size_t r = 0; r < x.dim(tgt); ++r)
          for (std::size_t col = 0; col < s.dim(src); ++col)
            m(r, x.dim(src) + col) = Scalar(static_cast<unsigned long>(digits[k++]));
        maps.push_back(std::move(m));
      }
      for (std::size_t i = 0; i < entries; ++i) {
        if (++digits[i] < p) break;
        digits[i] = 0;
      }
      std::optional<Representation> e;
      try {
        e = Representation(a, dims, std::move(maps));
      } catch (const InputError&) {
        continue;
      }
      if (is_isomorphic(*e, split)) continue;

      ModuleMap pi;
      for (VertexId v = 0; v < q.vertex_count(); ++v) {
        Mat m(f, s.dim(v), dims[v]);
        m.set_block(0, x.dim(v), Mat::identity(f, s.dim(v)));
        pi.components.push_back(std::move(m));
      }
      bool right_almost_split = true;
      for (const auto& y : indecs) {
        if (y.is_zero() || is_isomorphic(y, s)) continue;
        std::vector<std::vector<Scalar>> lifted;
        for (const auto& g : hom_space(y, *e)) lifted.push_back(flatten(compose(pi, g)));
        if (span_rank(f, lifted) != hom_dim(y, s)) {
          right_almost_split = false;
          break;
        }
      }
      if (right_almost_split) return x;
    }
  }
  return std::nullopt;
}

std::optional<ModuleCollection> bounded_tau2_closure(const AlgebraPtr& a, std::size_t max_members,
                                                     std::size_t max_dim) {
  ModuleCollection c = collection(a, "P(*), I(*)");
  std::vector<Representation> seen = c.modules();
  for (std::size_t k = 0; k < c.members.size(); ++k) {
    const Representation m = c.members[k].module;
    for (bool inverse : {false, true}) {
      const Representation t = inverse ? tau_d_inv(2, m) : tau_d(2, m);
      if (t.total_dim() > max_dim) return std::nullopt;
      for (auto& x : decompose(t)) {
        if (find_isomorphic(x, seen)) continue;
        seen.push_back(x);
        c.members.push_back({(inverse ? "taum2 " : "tau2 ") + c.members[k].name, std::move(x)});
        if (c.members.size() > max_members) return std::nullopt;
      }
    }
  }
  return c;
}

namespace {

std::optional<ModuleCollection> precluster_closure(const AlgebraPtr& a) {
  auto c = bounded_tau2_closure(a);
  if (c && is_precluster_tilting(2, *c).passed()) return c;
  return std::nullopt;
}

bool small_translates(const std::vector<Representation>& ms, std::size_t max_dim = 16) {
  for (const auto& m : ms)
    if (tau_d(2, m).total_dim() > max_dim || tau_d_inv(2, m).total_dim() > max_dim) return false;
  return true;
}

}  // namespace

std::vector<CheckReport> theorem_sweep(std::uint32_t seed, int algebras) {
  std::mt19937 rng(seed);
  std::vector<CheckReport> out;
  for (int k = 0; k < algebras; ++k) {
    const auto a = build_algebra(random_rad3_source(rng));
    const Idempotent e = random_idempotent(rng, a);
    const auto c_a = precluster_closure(a);
    if (!c_a) continue;
    const Quotient q = quotient_by_idempotent(a, e);
    std::vector<Representation> restricted;
    for (const auto& m : c_a->modules())
      if (annihilated_by(e, m)) restricted.push_back(restrict_to_quotient(q, m));
    if (small_translates(restricted)) out.push_back(check_theorem1(a, e, *c_a));
    if (q.is_zero()) continue;
    const auto c = precluster_closure(q.algebra);
    if (!c) continue;
    std::vector<Representation> inflated;
    for (const auto& m : c->modules()) inflated.push_back(inflate(q, m));
    if (!small_translates(inflated)) continue;
    for (bool exists : {false, true}) {
      TheoremOptions opts;
      opts.exists_reading = exists;
      out.push_back(check_theorem2(q, *c, opts));
    }
  }
  return out;
}

bool associative(const BoundQuiverAlgebra& a) {
  const std::size_t n = a.dimension();
  const Field& f = a.field();
  auto accumulate = [&](std::map<std::size_t, Scalar>& acc, const SparseVec& v, const Scalar& c) {
    for (const auto& [k, x] : v) {
      auto [it, fresh] = acc.try_emplace(k, f.from_int(0));
      f.add_mul(it->second, c, x);
    }
  };
  auto clean = [&](std::map<std::size_t, Scalar>& m) {
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const SparseVec& xy = a.product(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        std::map<std::size_t, Scalar> left;
        std::map<std::size_t, Scalar> right;
        for (const auto& [k, c] : xy) accumulate(left, a.product(k, z), c);
        for (const auto& [k, c] : a.product(y, z)) accumulate(right, a.product(x, k), c);
        clean(left);
        clean(right);
        if (left != right) return false;
      }
    }
  return true;
}

}  // namespace qltest
