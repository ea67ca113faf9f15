#include "quiverlab/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "quiverlab/errors.hpp"

namespace quiverlab {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InputError("'" + s + "' is not a subset element");
  return std::stoi(s);
}

}  // namespace

SubsetCollection parse_subset_collection(int n, std::string_view text, bool cyclic, int base) {
  SubsetCollection c;
  c.n = n;
  c.cyclic = cyclic;
  c.base = base;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) throw InputError("empty subset in '" + std::string(text) + "'");
    Subset s;
    if (item.find('.') != std::string::npos) {
      for (const auto& part : split(item, '.')) s.push_back(parse_int(part));
    } else {
      for (char ch : item) s.push_back(parse_int(std::string(1, ch)));
    }
    std::sort(s.begin(), s.end());
    c.sets.push_back(std::move(s));
  }
  if (c.sets.empty()) throw InputError("no subsets given");
  c.d = c.sets.front().size() - 1;
  return c;
}

std::string subset_label(const Subset& s) {
  const bool short_form = std::all_of(s.begin(), s.end(), [](int x) { return x >= 0 && x < 10; });
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!short_form && k > 0) out += '.';
    out += std::to_string(s[k]);
  }
  return out;
}

namespace {

void validate(const SubsetCollection& c) {
  if (c.n <= 0) throw InputError("n must be positive");
  std::set<Subset> seen;
  for (const auto& s : c.sets) {
    if (s.size() != c.d + 1)
      throw InputError("subset " + subset_label(s) + " does not have " + std::to_string(c.d + 1) + " elements");
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < c.base || s[k] >= c.base + c.n)
        throw InputError("subset " + subset_label(s) + " leaves the ground set");
      if (k > 0 && s[k] == s[k - 1]) throw InputError("subset " + subset_label(s) + " repeats an element");
    }
    if (!seen.insert(s).second) throw InputError("subset " + subset_label(s) + " listed twice");
  }
}

struct SubsetQuiver {
  const SubsetCollection& c;
  std::map<Subset, VertexId> index;

  std::optional<int> successor(int i) const {
    if (i + 1 < c.base + c.n) return i + 1;
    if (c.cyclic) return c.base;
    return std::nullopt;
  }

  // alpha_i(X), when X contains i, misses i+1 and the result is a vertex.
  std::optional<Subset> move(const Subset& x, int i) const {
    if (!std::binary_search(x.begin(), x.end(), i)) return std::nullopt;
    const auto next = successor(i);
    if (!next || std::binary_search(x.begin(), x.end(), *next)) return std::nullopt;
    Subset y = x;
    *std::find(y.begin(), y.end(), i) = *next;
    std::sort(y.begin(), y.end());
    if (!index.count(y)) return std::nullopt;
    return y;
  }
};

std::string arrow_name(int i, const Subset& x) {
  std::string label = subset_label(x);
  std::replace(label.begin(), label.end(), '.', '_');
  return "a" + std::to_string(i) + "_" + label;
}

}  // namespace

AlgebraSource subset_algebra_source(const SubsetCollection& c, Field field) {
  validate(c);
  AlgebraSource src;
  src.field = field;
  SubsetQuiver sq{c, {}};
  for (const auto& s : c.sets) sq.index[s] = src.quiver.add_vertex(subset_label(s));
  std::map<std::pair<Subset, int>, ArrowId> arrows;
  for (const auto& x : c.sets)
    for (int i : x)
      if (auto y = sq.move(x, i)) arrows[{x, i}] = src.quiver.add_arrow(arrow_name(i, x), sq.index[x], sq.index[*y]);

  // Branch alpha_j(alpha_i(X)) as a written path, if every step exists.
  auto branch = [&](const Subset& x, int first, int second) -> std::optional<Path> {
    auto y = sq.move(x, first);
    if (!y) return std::nullopt;
    if (!sq.move(*y, second)) return std::nullopt;
    return make_path(src.quiver, {arrows.at({*y, second}), arrows.at({x, first})});
  };
  for (const auto& x : c.sets) {
    for (std::size_t p = 0; p < x.size(); ++p) {
      for (std::size_t q = p + 1; q < x.size(); ++q) {
        const auto ij = branch(x, x[p], x[q]);
        const auto ji = branch(x, x[q], x[p]);
        Relation r;
        if (ij) r.terms.push_back({field.from_int(1), *ij});
        if (ji) r.terms.push_back({field.from_int(ij ? -1 : 1), *ji});
        if (!r.terms.empty()) src.relations.push_back(std::move(r));
      }
    }
  }
  return src;
}

AlgebraPtr subset_algebra(const SubsetCollection& c, Field field) {
  return build_algebra(subset_algebra_source(c, field));
}

bool is_intertwining(const Subset& i, const Subset& j) {
  if (i.size() != j.size()) throw InputError("intertwining needs subsets of equal size");
  for (std::size_t k = 0; k < i.size(); ++k) {
    if (!(i[k] < j[k])) return false;
    if (k + 1 < i.size() && !(j[k] < i[k + 1])) return false;
  }
  return true;
}

bool is_crossing(const Subset& i, const Subset& j, int n) {
  for (const auto* s : {&i, &j})
    for (int x : *s)
      if (x < 1 || x > n) throw InputError("element " + std::to_string(x) + " outside 1.." + std::to_string(n));
  std::vector<int> only_i;
  std::vector<int> only_j;
  for (int x : i)
    if (std::find(j.begin(), j.end(), x) == j.end()) only_i.push_back(x);
  for (int x : j)
    if (std::find(i.begin(), i.end(), x) == i.end()) only_j.push_back(x);
  // s, t, u, v cyclically ordered: exactly one descent around the cycle.
  auto cyclic = [](int s, int t, int u, int v) {
    const int seq[5] = {s, t, u, v, s};
    int descents = 0;
    for (int k = 0; k < 4; ++k) descents += seq[k + 1] < seq[k] ? 1 : 0;
    return descents == 1;
  };
  for (int s : only_i)
    for (int u : only_i)
      for (int t : only_j)
        for (int v : only_j)
          if (s != u && t != v && cyclic(s, t, u, v)) return true;
  return false;
}

AlgebraSource preprojective_source(std::size_t rank, Field field) {
  if (rank == 0) throw InputError("rank must be at least 1");
  AlgebraSource src;
  src.field = field;
  for (std::size_t v = 1; v <= rank; ++v) src.quiver.add_vertex(std::to_string(v));
  std::vector<ArrowId> up;
  std::vector<ArrowId> down;
  for (std::size_t v = 0; v + 1 < rank; ++v) {
    up.push_back(src.quiver.add_arrow("a" + std::to_string(v + 1), v, v + 1));
    down.push_back(src.quiver.add_arrow("abar" + std::to_string(v + 1), v + 1, v));
  }
  for (std::size_t v = 0; v < rank; ++v) {
    Relation r;
    // a_{v-1} abar_{v-1}: v -> v-1 -> v, and abar_v a_v: v -> v+1 -> v.
    if (v > 0) r.terms.push_back({field.from_int(1), make_path(src.quiver, {up[v - 1], down[v - 1]})});
    if (v + 1 < rank) r.terms.push_back({field.from_int(v > 0 ? -1 : 1), make_path(src.quiver, {down[v], up[v]})});
    if (!r.terms.empty()) src.relations.push_back(std::move(r));
  }
  return src;
}

AlgebraPtr preprojective_algebra_A(std::size_t rank, Field field) {
  return build_algebra(preprojective_source(rank, field));
}

// ---------------------------------------------------------------------------

std::vector<std::string> fixture_names() { return {"aus2", "pi3", "hnak", "boundary"}; }

std::filesystem::path fixture_directory() { return QUIVERLAB_FIXTURE_DIR; }

Fixture fixture(const std::string& name, std::optional<Field> field) {
  const auto names = fixture_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw InputError("unknown fixture '" + name + "'");
  Fixture f = load_fixture(fixture_directory() / (name + ".alg"), field);
  f.name = name;
  return f;
}

Fixture load_fixture(const std::filesystem::path& path, std::optional<Field> field) {
  AlgebraSource src = read_algebra_source(path);
  if (field) {
    Field target = *field;
    for (auto& r : src.relations)
      for (auto& t : r.terms) {
        if (!target.is_rational() && t.coeff.get_den() % static_cast<unsigned long>(target.characteristic()) == 0)
          throw InputError("relation coefficient has no image in " + target.to_string());
        t.coeff = target.reduce(t.coeff);
      }
    src.field = target;
  }
  Fixture out;
  out.name = path.stem().string();
  out.path = path;
  out.algebra = build_algebra(src);

  std::ifstream in(path);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw InputError(path.string() + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.rfind("#@", 0) != 0) continue;
    const std::string body = trim(std::string_view(line).substr(2));
    const auto eq = body.find('=');
    if (eq == std::string::npos) fail("annotation without '='");
    std::istringstream head(body.substr(0, eq));
    std::string kind;
    std::string name;
    head >> kind >> name;
    if (name.empty()) fail("annotation without a name");
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (kind == "idempotent") {
      out.idempotents[name] = parse_idempotent(out.algebra->quiver(), value);
    } else if (kind == "collection") {
      FixtureCollection c;
      std::string word;
      if (head >> word) {
        if (word != "over" || !(head >> c.over)) fail("expected 'over <idempotent>'");
      }
      c.expression = value;
      if (c.expression.rfind("closure ", 0) == 0) {
        c.closure = true;
        c.expression = trim(std::string_view(c.expression).substr(8));
      }
      out.collections[name] = std::move(c);
    } else if (kind == "blocks") {
      std::vector<std::vector<std::string>> blocks;
      for (const auto& part : split(value, '|')) {
        std::istringstream words(part);
        std::vector<std::string> labels;
        for (std::string w; words >> w;) labels.push_back(w);
        blocks.push_back(std::move(labels));
      }
      out.expected_blocks[name] = std::move(blocks);
    } else {
      fail("unknown annotation '" + kind + "'");
    }
  }
  for (const auto& [cname, c] : out.collections)
    if (!c.over.empty() && !out.idempotents.count(c.over))
      throw InputError(path.string() + ": collection '" + cname + "' refers to unknown idempotent '" + c.over + "'");
  return out;
}

ResolvedCollection resolve_collection(const Fixture& f, const std::string& name, const EngineOptions& opts) {
  const auto it = f.collections.find(name);
  if (it == f.collections.end()) throw InputError("fixture '" + f.name + "' has no collection '" + name + "'");
  const FixtureCollection& c = it->second;
  ResolvedCollection out{std::nullopt, ModuleCollection{f.algebra, {}}};
  AlgebraPtr over = f.algebra;
  if (!c.over.empty()) {
    out.quotient = quotient_by_idempotent(f.algebra, f.idempotents.at(c.over));
    over = out.quotient->algebra;
  }
  out.modules = make_collection(over, evaluate_module_list(over, c.expression), opts);
  if (c.closure) out.modules = tau_closure(2, out.modules, opts);
  return out;
}

}  // namespace quiverlab
