#include "quiverlab/algebra.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>
#include <tuple>

#include "quiverlab/errors.hpp"

namespace quiverlab {

VertexId Quiver::add_vertex(std::string label) {
  if (find_vertex(label)) throw InputError("duplicate vertex '" + label + "'");
  labels_.push_back(std::move(label));
  return labels_.size() - 1;
}

ArrowId Quiver::add_arrow(std::string name, VertexId source, VertexId target) {
  if (find_arrow(name)) throw InputError("duplicate arrow '" + name + "'");
  if (source >= labels_.size() || target >= labels_.size())
    throw InputError("arrow '" + name + "' has an unknown endpoint");
  arrows_.push_back(Arrow{std::move(name), source, target});
  return arrows_.size() - 1;
}

std::optional<VertexId> Quiver::find_vertex(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return i;
  return std::nullopt;
}

Quiver Quiver::reversed() const {
  Quiver q;
  q.labels_ = labels_;
  q.arrows_ = arrows_;
  for (auto& a : q.arrows_) std::swap(a.source, a.target);
  return q;
}

Path make_path(const Quiver& q, std::vector<ArrowId> written) {
  if (written.empty()) throw InputError("empty path needs an explicit vertex");
  for (std::size_t i = 0; i + 1 < written.size(); ++i) {
    // written[i] is applied after written[i+1]
    if (q.arrow(written[i + 1]).target != q.arrow(written[i]).source)
      throw InputError("arrows '" + q.arrow(written[i]).name + "' and '" + q.arrow(written[i + 1]).name +
                       "' do not compose");
  }
  Path p;
  p.source = q.arrow(written.back()).source;
  p.target = q.arrow(written.front()).target;
  p.arrows = std::move(written);
  return p;
}

std::optional<Path> concat(const Path& left, const Path& right) {
  if (right.target != left.source) return std::nullopt;
  Path p;
  p.source = right.source;
  p.target = left.target;
  p.arrows.reserve(left.arrows.size() + right.arrows.size());
  p.arrows.insert(p.arrows.end(), left.arrows.begin(), left.arrows.end());
  p.arrows.insert(p.arrows.end(), right.arrows.begin(), right.arrows.end());
  return p;
}

Path reverse(const Path& p) {
  Path r;
  r.source = p.target;
  r.target = p.source;
  r.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
  return r;
}

bool PathLess::operator()(const Path& a, const Path& b) const {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return std::tie(a.source, a.target) < std::tie(b.source, b.target);
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e" + q.label(p.source);
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += "*";
    out += q.arrow(p.arrows[i]).name;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relation completion

namespace {

struct GbEntry {
  Poly poly;
  bool alive = true;
};

const Path& tip(const Poly& p) { return p.begin()->first; }

void add_scaled(Poly& acc, const Poly& p, const Scalar& c, const Field& f) {
  for (const auto& [path, coeff] : p) {
    auto [it, inserted] = acc.try_emplace(path, 0);
    f.add_mul(it->second, c, coeff);
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

// u * p * w for paths u, w (either may be trivial).
Poly sandwich(const Path& u, const Poly& p, const Path& w) {
  Poly out;
  for (const auto& [path, coeff] : p) {
    auto left = concat(u, path);
    auto full = concat(*left, w);
    out.emplace(std::move(*full), coeff);
  }
  return out;
}

Path subpath(const Quiver& q, const Path& p, std::size_t begin, std::size_t end) {
  if (begin == end) {
    // trivial path at the junction: the target of arrow[begin] or source of p
    VertexId v = begin < p.arrows.size() ? q.arrow(p.arrows[begin]).target : p.source;
    return Path::trivial(v);
  }
  return make_path(q, std::vector<ArrowId>(p.arrows.begin() + begin, p.arrows.begin() + end));
}

// Position where `needle` occurs in `hay` as a contiguous block, if any.
std::optional<std::size_t> find_subword(const std::vector<ArrowId>& hay, const std::vector<ArrowId>& needle) {
  if (needle.size() > hay.size()) return std::nullopt;
  auto it = std::search(hay.begin(), hay.end(), needle.begin(), needle.end());
  if (it == hay.end()) return std::nullopt;
  return static_cast<std::size_t>(it - hay.begin());
}

Poly reduce_by(Poly f, const std::vector<GbEntry>& gb, const Quiver& q, const Field& field) {
  Poly out;
  while (!f.empty()) {
    auto lead = f.begin();
    const Path term = lead->first;
    const Scalar coeff = lead->second;
    bool reduced = false;
    for (const auto& g : gb) {
      if (!g.alive) continue;
      const Path& t = tip(g.poly);
      if (term.source == term.target && term.arrows.empty()) break;
      auto pos = find_subword(term.arrows, t.arrows);
      if (!pos) continue;
      Path u = subpath(q, term, 0, *pos);
      Path w = subpath(q, term, *pos + t.arrows.size(), term.arrows.size());
      add_scaled(f, sandwich(u, g.poly, w), field.neg(coeff), field);
      reduced = true;
      break;
    }
    if (!reduced) {
      out.emplace(term, coeff);
      f.erase(f.begin());
    }
  }
  return out;
}

void make_monic(Poly& p, const Field& f) {
  Scalar inv = f.inverse(p.begin()->second);
  for (auto& [path, coeff] : p) coeff = f.mul(coeff, inv);
}

}  // namespace

void BoundQuiverAlgebra::complete_relations() {
  const Field& f = field_;
  std::vector<GbEntry> gb;

  struct Pair {
    std::size_t degree;
    std::size_t serial;
    std::size_t left;
    std::size_t right;
    std::size_t overlap;
    bool operator>(const Pair& o) const {
      return std::tie(degree, serial) > std::tie(o.degree, o.serial);
    }
  };
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;
  std::size_t serial = 0;
  std::deque<Poly> pending;

  auto queue_overlaps = [&](std::size_t i, std::size_t j) {
    const auto& a = tip(gb[i].poly).arrows;
    const auto& b = tip(gb[j].poly).arrows;
    const std::size_t lim = std::min(a.size(), b.size());
    for (std::size_t k = 1; k < lim; ++k) {
      if (std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin()))
        pairs.push(Pair{a.size() + b.size() - k, serial++, i, j, k});
    }
  };

  auto insert = [&](Poly p) {
    make_monic(p, f);
    if (tip(p).length() > length_cap_)
      throw NotFiniteDimensional("relation completion produced a word longer than the cap (" +
                                 std::to_string(length_cap_) + "); not finite-dimensional within cap");
    const std::size_t idx = gb.size();
    gb.push_back(GbEntry{std::move(p), true});
    const Path& t = tip(gb[idx].poly);
    for (std::size_t i = 0; i < idx; ++i) {
      if (!gb[i].alive) continue;
      if (find_subword(tip(gb[i].poly).arrows, t.arrows)) {
        gb[i].alive = false;
        pending.push_back(gb[i].poly);
      }
    }
    for (std::size_t i = 0; i <= idx; ++i) {
      if (!gb[i].alive) continue;
      queue_overlaps(i, idx);
      if (i != idx) queue_overlaps(idx, i);
    }
  };

  for (const auto& r : relations_) {
    Poly p;
    for (const auto& t : r.terms) {
      auto [it, inserted] = p.try_emplace(t.path, 0);
      it->second = f.add(it->second, f.reduce(t.coeff));
      if (sgn(it->second) == 0) p.erase(it);
    }
    if (!p.empty()) pending.push_back(std::move(p));
  }

  while (!pending.empty() || !pairs.empty()) {
    if (!pending.empty()) {
      Poly p = reduce_by(std::move(pending.front()), gb, quiver_, f);
      pending.pop_front();
      if (!p.empty()) insert(std::move(p));
      continue;
    }
    Pair pr = pairs.top();
    pairs.pop();
    if (!gb[pr.left].alive || !gb[pr.right].alive) continue;
    const Poly& g = gb[pr.left].poly;
    const Poly& h = gb[pr.right].poly;
    const Path& tg = tip(g);
    const Path& th = tip(h);
    Path u = subpath(quiver_, tg, 0, tg.length() - pr.overlap);
    Path w = subpath(quiver_, th, pr.overlap, th.length());
    Poly s = sandwich(Path::trivial(tg.target), g, w);
    add_scaled(s, sandwich(u, h, Path::trivial(th.source)), f.from_int(-1), f);
    s = reduce_by(std::move(s), gb, quiver_, f);
    if (!s.empty()) insert(std::move(s));
  }

  // Tail-reduce the survivors.
  std::vector<GbEntry> alive;
  for (auto& g : gb)
    if (g.alive) alive.push_back(std::move(g));
  std::sort(alive.begin(), alive.end(),
            [](const GbEntry& a, const GbEntry& b) { return PathLess{}(tip(a.poly), tip(b.poly)); });
  for (std::size_t i = 0; i < alive.size(); ++i) {
    Poly head;
    head.emplace(tip(alive[i].poly), alive[i].poly.begin()->second);
    Poly tail = alive[i].poly;
    tail.erase(tail.begin());
    alive[i].alive = false;
    tail = reduce_by(std::move(tail), alive, quiver_, f);
    alive[i].alive = true;
    for (auto& kv : tail) head.emplace(kv.first, kv.second);
    alive[i].poly = std::move(head);
  }
  for (auto& g : alive) {
    tips_.push_back(tip(g.poly));
    groebner_.push_back(std::move(g.poly));
  }
}

void BoundQuiverAlgebra::enumerate_basis() {
  const std::size_t n = quiver_.vertex_count();
  std::vector<Path> frontier;
  for (VertexId v = 0; v < n; ++v) frontier.push_back(Path::trivial(v));
  std::vector<Path> words = frontier;
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const auto& w : frontier) {
      for (ArrowId a = 0; a < quiver_.arrow_count(); ++a) {
        if (quiver_.arrow(a).source != w.target) continue;
        Path ext;
        ext.source = w.source;
        ext.target = quiver_.arrow(a).target;
        ext.arrows.reserve(w.arrows.size() + 1);
        ext.arrows.push_back(a);
        ext.arrows.insert(ext.arrows.end(), w.arrows.begin(), w.arrows.end());
        bool normal = true;
        for (const auto& t : tips_) {
          if (t.arrows.size() <= ext.arrows.size() &&
              std::equal(t.arrows.begin(), t.arrows.end(), ext.arrows.begin())) {
            normal = false;
            break;
          }
        }
        if (!normal) continue;
        if (ext.length() > length_cap_)
          throw NotFiniteDimensional("normal words exceed the length cap (" + std::to_string(length_cap_) +
                                     "); not finite-dimensional within cap");
        next.push_back(std::move(ext));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(words.begin(), words.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.source != b.source) return a.source < b.source;
    if (a.target != b.target) return a.target < b.target;
    return a.arrows < b.arrows;
  });
  basis_ = std::move(words);
  between_.assign(n * n, {});
  trivial_index_.assign(n, 0);
  arrow_index_.assign(quiver_.arrow_count(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Path& p = basis_[i];
    index_.emplace(p, i);
    between_position_.push_back(between_[p.source * n + p.target].size());
    between_[p.source * n + p.target].push_back(i);
    if (p.is_trivial()) trivial_index_[p.source] = i;
    if (p.length() == 1) arrow_index_[p.arrows[0]] = i;
  }
}

std::optional<std::size_t> BoundQuiverAlgebra::basis_index(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Poly BoundQuiverAlgebra::reduce(Poly f) const {
  std::vector<GbEntry> gb;
  gb.reserve(groebner_.size());
  for (const auto& g : groebner_) gb.push_back(GbEntry{g, true});
  return reduce_by(std::move(f), gb, quiver_, field_);
}

SparseVec BoundQuiverAlgebra::normal_form(const Path& p) const {
  Poly f;
  f.emplace(p, Scalar(1));
  SparseVec out;
  for (const auto& [path, coeff] : reduce(std::move(f))) out.emplace_back(index_.at(path), coeff);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void BoundQuiverAlgebra::fill_table() {
  const std::size_t b = basis_.size();
  table_.assign(b * b, {});
  std::vector<GbEntry> gb;
  for (const auto& g : groebner_) gb.push_back(GbEntry{g, true});
  for (std::size_t x = 0; x < b; ++x) {
    for (std::size_t y = 0; y < b; ++y) {
      auto p = concat(basis_[x], basis_[y]);
      if (!p) continue;
      Poly f;
      f.emplace(std::move(*p), Scalar(1));
      SparseVec out;
      for (const auto& [path, coeff] : reduce_by(std::move(f), gb, quiver_, field_))
        out.emplace_back(index_.at(path), coeff);
      std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
      table_[x * b + y] = std::move(out);
    }
  }
}

std::vector<Scalar> BoundQuiverAlgebra::multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const {
  const std::size_t b = basis_.size();
  std::vector<Scalar> out(b);
  for (std::size_t i = 0; i < b; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < b; ++j) {
      if (sgn(y[j]) == 0) continue;
      Scalar c = field_.mul(x[i], y[j]);
      for (const auto& [k, v] : product(i, j)) field_.add_mul(out[k], c, v);
    }
  }
  return out;
}

std::size_t BoundQuiverAlgebra::loewy_length() const {
  std::size_t longest = 0;
  for (const auto& p : basis_) longest = std::max(longest, p.length());
  return basis_.empty() ? 0 : longest + 1;
}

// ---------------------------------------------------------------------------

namespace {

void validate_relation(const Quiver& q, const Relation& r) {
  if (r.terms.empty()) throw InputError("empty relation");
  const Path& first = r.terms.front().path;
  for (const auto& t : r.terms) {
    if (t.path.length() < 2)
      throw InputError("relation term '" + path_to_string(q, t.path) + "' has length below two (not admissible)");
    if (t.path.source != first.source || t.path.target != first.target)
      throw InputError("relation terms '" + path_to_string(q, first) + "' and '" + path_to_string(q, t.path) +
                       "' are not parallel");
    for (auto a : t.path.arrows)
      if (a >= q.arrow_count()) throw InputError("relation uses an unknown arrow");
  }
}

}  // namespace

struct AlgebraPair {
  BoundQuiverAlgebra algebra;
  BoundQuiverAlgebra opposite;
};

AlgebraPtr build_algebra(Quiver quiver, std::vector<Relation> relations, Field field, BuildOptions options) {
  for (const auto& r : relations) validate_relation(quiver, r);

  auto pair = std::make_shared<AlgebraPair>();
  BoundQuiverAlgebra& a = pair->algebra;
  BoundQuiverAlgebra& op = pair->opposite;

  op.quiver_ = quiver.reversed();
  for (const auto& r : relations) {
    Relation rr;
    for (const auto& t : r.terms) rr.terms.push_back(Term{t.coeff, reverse(t.path)});
    op.relations_.push_back(std::move(rr));
  }
  a.quiver_ = std::move(quiver);
  a.relations_ = std::move(relations);

  for (BoundQuiverAlgebra* alg : {&a, &op}) {
    alg->field_ = field;
    alg->length_cap_ = options.length_cap;
    alg->complete_relations();
    alg->enumerate_basis();
    alg->fill_table();
  }

  AlgebraPtr pa(pair, &pair->algebra);
  AlgebraPtr pop(pair, &pair->opposite);
  a.opposite_ = pop;
  op.opposite_ = pa;
  a.opposite_image_.reserve(a.dimension());
  for (const auto& p : a.basis_) a.opposite_image_.push_back(op.normal_form(reverse(p)));
  op.opposite_image_.reserve(op.dimension());
  for (const auto& p : op.basis_) op.opposite_image_.push_back(a.normal_form(reverse(p)));
  return pa;
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) { return a->opposite(); }

// ---------------------------------------------------------------------------

Idempotent::Idempotent(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Idempotent::contains(VertexId v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

Idempotent Idempotent::complement(std::size_t vertex_count) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count; ++v)
    if (!contains(v)) out.push_back(v);
  return Idempotent(std::move(out));
}

Idempotent parse_idempotent(const Quiver& q, std::string_view text) {
  std::vector<VertexId> out;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    auto v = q.find_vertex(token);
    if (!v) throw InputError("unknown vertex '" + token + "' in idempotent");
    out.push_back(*v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '+' || c == '\t') flush();
    else token.push_back(c);
  }
  flush();
  return Idempotent(std::move(out));
}

std::string idempotent_to_string(const Quiver& q, const Idempotent& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.vertices().size(); ++i) {
    if (i) out += ",";
    out += q.label(e.vertices()[i]);
  }
  return out + "}";
}

Quotient quotient_by_idempotent(const AlgebraPtr& a, const Idempotent& e) {
  const Quiver& q = a->quiver();
  for (auto v : e.vertices())
    if (v >= q.vertex_count()) throw InputError("idempotent vertex outside the algebra");
  Quotient out;
  out.parent = a;
  out.killed = e;
  out.from_parent.assign(q.vertex_count(), std::nullopt);
  Quiver sub;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (e.contains(v)) continue;
    out.from_parent[v] = sub.add_vertex(q.label(v));
    out.to_parent.push_back(v);
  }
  std::vector<std::optional<ArrowId>> arrow_map(q.arrow_count());
  for (ArrowId x = 0; x < q.arrow_count(); ++x) {
    const Arrow& ar = q.arrow(x);
    if (e.contains(ar.source) || e.contains(ar.target)) continue;
    arrow_map[x] = sub.add_arrow(ar.name, *out.from_parent[ar.source], *out.from_parent[ar.target]);
    out.arrow_to_parent.push_back(x);
  }
  // Deleting the e-vertices is an algebra map KQ -> KQ'; the images of the
  // relations generate the quotient ideal.
  std::vector<Relation> rels;
  for (const auto& r : a->relations()) {
    Relation img;
    for (const auto& t : r.terms) {
      bool survives = true;
      std::vector<ArrowId> word;
      for (auto x : t.path.arrows) {
        if (!arrow_map[x]) {
          survives = false;
          break;
        }
        word.push_back(*arrow_map[x]);
      }
      if (survives) img.terms.push_back(Term{t.coeff, make_path(sub, std::move(word))});
    }
    if (!img.terms.empty()) rels.push_back(std::move(img));
  }
  out.algebra = build_algebra(std::move(sub), std::move(rels), a->field(), BuildOptions{a->length_cap()});
  return out;
}

std::size_t ideal_dimension(const BoundQuiverAlgebra& a, const Idempotent& e) {
  const std::size_t b = a.dimension();
  std::vector<std::vector<Scalar>> vecs;
  for (auto v : e.vertices()) {
    for (VertexId t = 0; t < a.vertex_count(); ++t) {
      for (auto x : a.basis_between(v, t)) {
        for (VertexId s = 0; s < a.vertex_count(); ++s) {
          for (auto y : a.basis_between(s, v)) {
            std::vector<Scalar> vec(b);
            for (const auto& [k, c] : a.product(x, y)) vec[k] = c;
            vecs.push_back(std::move(vec));
          }
        }
      }
    }
  }
  Mat m(a.field(), b, vecs.size());
  for (std::size_t j = 0; j < vecs.size(); ++j)
    for (std::size_t i = 0; i < b; ++i) m(i, j) = vecs[j][i];
  return rank(m);
}

}  // namespace quiverlab
