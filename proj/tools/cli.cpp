#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "quiverlab/constructions.hpp"
#include "quiverlab/errors.hpp"
#include "quiverlab/homology.hpp"
#include "quiverlab/theorems.hpp"

namespace quiverlab::cli {

namespace {

using nlohmann::ordered_json;

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string field;
  bool timings = false;
  bool serial = false;
};

Field parse_field(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s == "Q") return Field::rationals();
  if (!s.empty() && (s[0] == 'F' || s[0] == 'f')) s.erase(0, 1);
  try {
    std::size_t used = 0;
    const unsigned long long p = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return Field::prime(p);
  } catch (const std::invalid_argument& e) {
    throw InputError("bad field '" + text + "': expected Q, F<p> or <p> (" + e.what() + ")");
  } catch (const std::out_of_range&) {
    throw InputError("bad field '" + text + "'");
  }
}

/// Everything a command needs after flag parsing.
class Context {
 public:
  Context(const Globals& g, std::ostream& out) : g_(g), out_(out) {
    opts_.seed = g.seed;
    opts_.parallel = !g.serial;
  }

  const EngineOptions& engine() const { return opts_; }
  bool json() const { return g_.format == "json"; }

  Fixture load(const std::string& file) const {
    std::optional<Field> f;
    if (!g_.field.empty()) f = parse_field(g_.field);
    return load_fixture(file, f);
  }

  Field load_field_or_rationals() const { return g_.field.empty() ? Field::rationals() : parse_field(g_.field); }

  Idempotent idempotent(const Fixture& f, const std::string& text) const {
    const auto it = f.idempotents.find(text);
    if (it != f.idempotents.end() && !f.algebra->quiver().find_vertex(text)) return it->second;
    return parse_idempotent(f.algebra->quiver(), text);
  }

  void start() { t0_ = std::chrono::steady_clock::now(); }

  ordered_json timings() const {
    ordered_json t = ordered_json::object();
    if (g_.timings)
      t["total_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    return t;
  }

  int report(const CheckReport& r, const std::string& command, const ordered_json& inputs) const {
    if (json())
      out_ << render_json(r, command, inputs, timings()).dump(2) << "\n";
    else
      out_ << render_text(r);
    return r.passed() ? kPass : kFail;
  }

  /// Plain results: `text` for humans, `result` under the JSON envelope.
  int value(const std::string& command, const ordered_json& inputs, const ordered_json& result,
            const std::string& text) const {
    if (json()) {
      ordered_json j;
      j["command"] = command;
      j["inputs"] = inputs;
      j["result"] = result;
      j["timings"] = timings();
      out_ << j.dump(2) << "\n";
    } else {
      out_ << text;
    }
    return kPass;
  }

  std::ostream& out() const { return out_; }

 private:
  Globals g_;
  std::ostream& out_;
  EngineOptions opts_;
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void write_or_print(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
  if (!f) throw InputError("failed writing '" + path + "'");
}

std::string block_text(const BoundQuiverAlgebra& a) {
  std::string out;
  for (const auto& block : quiver_blocks(a)) {
    if (!out.empty()) out += " | ";
    for (std::size_t k = 0; k < block.size(); ++k) out += (k ? " " : "") + a.quiver().label(block[k]);
  }
  return out;
}

ordered_json blocks_json(const BoundQuiverAlgebra& a) {
  ordered_json j = ordered_json::array();
  for (const auto& block : quiver_blocks(a)) {
    ordered_json b = ordered_json::array();
    for (auto v : block) b.push_back(a.quiver().label(v));
    j.push_back(b);
  }
  return j;
}

std::string gens_text(const BoundQuiverAlgebra& a, const std::vector<VertexId>& gens, char kind) {
  if (gens.empty()) return "0";
  std::string out;
  for (auto v : gens) out += (out.empty() ? "" : " + ") + std::string(1, kind) + "(" + a.quiver().label(v) + ")";
  return out;
}

ordered_json gens_json(const BoundQuiverAlgebra& a, const std::vector<VertexId>& gens) {
  ordered_json j = ordered_json::array();
  for (auto v : gens) j.push_back(a.quiver().label(v));
  return j;
}

/// --modules / --collection / --closure, shared by the collection checks.
struct CollectionFlags {
  std::string modules;
  std::string collection;
  bool closure = false;

  void attach(CLI::App* app) {
    auto* m = app->add_option("--modules", modules, "module list, e.g. \"P(*),S(1),S(3)\"");
    auto* c = app->add_option("--collection", collection, "named collection from the file's #@ annotations");
    m->excludes(c);
    app->add_flag("--closure", closure, "close the collection under tau_d and tau_d^-");
  }

  ordered_json inputs() const {
    ordered_json j;
    if (!modules.empty()) j["modules"] = modules;
    if (!collection.empty()) j["collection"] = collection;
    if (closure) j["closure"] = true;
    return j;
  }

  /// The collection over `over`; named collections must not live over a
  /// quotient.
  ModuleCollection build(const Fixture& f, const AlgebraPtr& over, std::size_t d, const EngineOptions& o) const {
    ModuleCollection c{over, {}};
    if (!collection.empty()) {
      ResolvedCollection r = resolve_collection(f, collection, o);
      if (r.quotient) throw InputError("collection '" + collection + "' lives over a quotient");
      c = std::move(r.modules);
    } else if (!modules.empty()) {
      c = make_collection(over, evaluate_module_list(over, modules), o);
    } else {
      throw InputError("give --modules or --collection");
    }
    if (closure) c = tau_closure(d, c, o);
    return c;
  }
};

ordered_json merge(ordered_json a, const ordered_json& b) {
  for (auto it = b.begin(); it != b.end(); ++it) a[it.key()] = it.value();
  return a;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quiverlab: homological computations over bound quiver algebras"};
  app.name("quiverlab");
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for randomized searches");
  app.add_option("--field", g.field, "override the field of the input: Q, F<p> or <p>");
  app.add_flag("--timings", g.timings, "include wall-clock timings in JSON output");
  app.add_flag("--serial", g.serial, "disable the parallel Ext kernels");

  std::function<int(Context&)> action;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string file;
  std::string out_path;
  std::string e_text;
  std::string m_expr;
  std::string n_expr;
  std::size_t degree = 0;
  std::size_t d = 2;
  std::size_t k = 1;
  std::optional<std::size_t> length;
  std::optional<std::size_t> enumerate;
  bool inverse = false;
  bool injective_side = false;
  bool exists_reading = false;
  CollectionFlags cf;

  auto add_file = [&](CLI::App* s) { s->add_option("file", file, "algebra file")->required()->check(CLI::ExistingFile); };

  // info
  auto* info = sub(&app, "info", "dimension, counts, projectives and blocks");
  add_file(info);
  info->callback([&] {
    action = [&](Context& ctx) {
      const Fixture f = ctx.load(file);
      const auto& a = *f.algebra;
      std::ostringstream text;
      ordered_json res;
      res["field"] = a.field().to_string();
      res["vertices"] = a.vertex_count();
      res["arrows"] = a.quiver().arrow_count();
      res["relations"] = a.relations().size();
      res["dimension"] = a.dimension();
      text << "field: " << a.field().to_string() << "\nvertices: " << a.vertex_count()
           << "\narrows: " << a.quiver().arrow_count() << "\nrelations: " << a.relations().size()
           << "\ndimension: " << a.dimension() << "\nblocks: " << block_text(a) << "\n";
      res["blocks"] = blocks_json(a);
      ordered_json proj = ordered_json::object();
      for (VertexId v = 0; v < a.vertex_count(); ++v) {
        const DimVector dims = projective(f.algebra, v).dims();
        proj[a.quiver().label(v)] = dims;
        text << "P(" << a.quiver().label(v) << ") " << dims_to_string(dims) << "\n";
      }
      res["projectives"] = proj;
      return ctx.value("info", {{"file", file}}, res, text.str());
    };
  });

  // basis
  auto* basis = sub(&app, "basis", "normal-form basis words");
  add_file(basis);
  basis->callback([&] {
    action = [&](Context& ctx) {
      const Fixture f = ctx.load(file);
      const auto& a = *f.algebra;
      std::ostringstream text;
      ordered_json words = ordered_json::array();
      for (const auto& p : a.basis()) {
        const std::string w = path_to_string(a.quiver(), p);
        words.push_back({{"source", a.quiver().label(p.source)}, {"target", a.quiver().label(p.target)}, {"word", w}});
        text << a.quiver().label(p.source) << " -> " << a.quiver().label(p.target) << "  " << w << "\n";
      }
      text << "dimension: " << a.dimension() << "\n";
      return ctx.value("basis", {{"file", file}}, {{"dimension", a.dimension()}, {"basis", words}}, text.str());
    };
  });

  // ext
  auto* ext = sub(&app, "ext", "dim Ext^i(M, N)");
  add_file(ext);
  ext->add_option("-i,--degree", degree, "degree i")->required();
  ext->add_option("-M", m_expr, "first argument")->required();
  ext->add_option("-N", n_expr, "second argument")->required();
  ext->callback([&] {
    action = [&](Context& ctx) {
      const Fixture f = ctx.load(file);
      const Representation m = evaluate_module(f.algebra, m_expr);
      const Representation n = evaluate_module(f.algebra, n_expr);
      const std::size_t dim = ext_dim(degree, m, n);
      return ctx.value("ext", {{"file", file}, {"i", degree}, {"M", m_expr}, {"N", n_expr}}, {{"dim", dim}},
                       std::to_string(dim) + "\n");
    };
  });

  // resolve
  auto* resolve = sub(&app, "resolve", "minimal projective resolution or injective coresolution");
  add_file(resolve);
  resolve->add_option("-M", m_expr, "module")->required();
  resolve->add_option("--length", length, "number of steps (default 2 * vertices)");
  resolve->add_flag("--injective", injective_side, "minimal injective coresolution instead");
  resolve->callback([&] {
    action = [&](Context& ctx) {
      const Fixture f = ctx.load(file);
      const auto& a = *f.algebra;
      const Representation m = evaluate_module(f.algebra, m_expr);
      const std::size_t len = length.value_or(2 * a.vertex_count());
      std::vector<std::vector<VertexId>> terms;
      bool complete = false;
      if (injective_side) {
        const InjectiveCoresolution c = injective_coresolution(m, len);
        terms = c.socles;
        while (!terms.empty() && terms.back().empty()) {
          terms.pop_back();
          complete = true;
        }
      } else {
        const ProjectiveResolution r = projective_resolution(m, len);
        terms = r.gens;
        complete = r.complete;
        while (!terms.empty() && terms.back().empty()) terms.pop_back();
      }
      const char kind = injective_side ? 'I' : 'P';
      std::ostringstream text;
      ordered_json js = ordered_json::array();
      for (std::size_t i = 0; i < terms.size(); ++i) {
        text << kind << "_" << i << ": " << gens_text(a, terms[i], kind) << "\n";
        js.push_back(gens_json(a, terms[i]));
      }
      ordered_json res{{"terms", js}, {"complete", complete}};
      if (complete) {
        const std::size_t dim = terms.empty() ? 0 : terms.size() - 1;
        res["dimension"] = dim;
        text << (injective_side ? "inj.dim " : "proj.dim ") << dim << "\n";
      } else {
        text << "not finished after " << len << " steps\n";
      }
      return ctx.value("resolve", {{"file", file}, {"M", m_expr}, {"length", len}, {"injective", injective_side}},
                       res, text.str());
    };
  });

  // tau
  auto* tau = sub(&app, "tau", "higher Auslander-Reiten translates");
  add_file(tau);
  tau->add_option("-M", m_expr, "module")->required();
  tau->add_option("-d", d, "tau_d = tau Omega^(d-1)")->check(CLI::PositiveNumber);
  tau->add_flag("--inverse", inverse, "tau_d^- instead");
  tau->callback([&] {
    action = [&](Context& ctx) {
      const Fixture f = ctx.load(file);
      const Representation m = evaluate_module(f.algebra, m_expr);
      const Representation t = inverse ? tau_d_inv(d, m) : tau_d(d, m);
      std::ostringstream text;
      text << "tau_" << d << (inverse ? "^-" : "") << "(" << m_expr << ") = "
           << dims_to_string(t.dims()) << "\n";
      ordered_json summands = ordered_json::array();
      for (const auto& s : decompose(t, ctx.engine())) {
        summands.push_back(s.dims());
        text << "  " << dims_to_string(s.dims()) << "\n";
      }
      return ctx.value("tau", {{"file", file}, {"M", m_expr}, {"d", d}, {"inverse", inverse}},
                       {{"dims", t.dims()}, {"summands", summands}}, text.str());
    };
  });

  // quotient
  auto* quotient = sub(&app, "quotient", "A/<e> in the algebra file format");
  add_file(quotient);
  quotient->add_option("-e", e_text, "vertices of e, or a named idempotent")->required();
  quotient->add_option("-o", out_path, "output file (default stdout)");
  quotient->callback([&] {
    action = [&](Context& ctx) {
      const Fixture f = ctx.load(file);
      const Quotient q = quotient_by_idempotent(f.algebra, ctx.idempotent(f, e_text));
      write_or_print(out_path, print_algebra(*q.algebra), ctx.out());
      return int{kPass};
    };
  });

  // construct
  auto* construct = sub(&app, "construct", "generate algebra files");
  construct->require_subcommand(1);
  int n = 0;
  int base = 1;
  std::string sets;
  bool cyclic = false;
  std::size_t rank = 0;
  auto* subset = sub(construct, "subset", "algebra of a collection of (d+1)-subsets");
  subset->add_option("--n", n, "ground set size")->required()->check(CLI::PositiveNumber);
  subset->add_option("--sets", sets, "e.g. 135,136,146 or 1.3.5,1.3.6")->required();
  subset->add_flag("--cyclic", cyclic, "i+1 wraps around");
  subset->add_option("--base", base, "smallest element of the ground set");
  subset->add_option("-o", out_path, "output file (default stdout)");
  subset->callback([&] {
    action = [&](Context& ctx) {
      const Field field = ctx.load_field_or_rationals();
      const SubsetCollection c = parse_subset_collection(n, sets, cyclic, base);
      write_or_print(out_path, print_algebra(*subset_algebra(c, field)), ctx.out());
      return int{kPass};
    };
  });
  auto* pre = sub(construct, "preprojective", "preprojective algebra of type A");
  pre->add_option("--rank", rank, "number of vertices")->required()->check(CLI::PositiveNumber);
  pre->add_option("-o", out_path, "output file (default stdout)");
  pre->callback([&] {
    action = [&](Context& ctx) {
      write_or_print(out_path, print_algebra(*preprojective_algebra_A(rank, ctx.load_field_or_rationals())),
                     ctx.out());
      return int{kPass};
    };
  });

  // export-dot
  auto* dot = sub(&app, "export-dot", "Graphviz rendering of the quiver");
  add_file(dot);
  dot->add_option("-o", out_path, "output file (default stdout)");
  dot->callback([&] {
    action = [&](Context& ctx) {
      write_or_print(out_path, export_dot(*ctx.load(file).algebra), ctx.out());
      return int{kPass};
    };
  });

  // check
  auto* check = sub(&app, "check", "run a checker; exit 1 on failure");
  check->require_subcommand(1);
  auto add_d = [&](CLI::App* s) { s->add_option("-d", d, "d")->check(CLI::PositiveNumber); };
  auto add_e = [&](CLI::App* s) { s->add_option("-e", e_text, "vertices of e, or a named idempotent")->required(); };

  auto* c_pre = sub(check, "precluster", "d-precluster tilting");
  add_file(c_pre);
  add_d(c_pre);
  cf.attach(c_pre);
  c_pre->callback([&] {
    action = [&](Context& ctx) {
      const Fixture f = ctx.load(file);
      const ModuleCollection c = cf.build(f, f.algebra, d, ctx.engine());
      return ctx.report(is_precluster_tilting(d, c, ctx.engine()), "check precluster",
                        merge({{"file", file}, {"d", d}}, cf.inputs()));
    };
  });

  auto* c_ct = sub(check, "cluster", "d-cluster tilting against enumerated indecomposables");
  add_file(c_ct);
  add_d(c_ct);
  cf.attach(c_ct);
  c_ct->add_option("--enumerate", enumerate, "total dimension bound of the enumeration")->required();
  c_ct->callback([&] {
    action = [&](Context& ctx) {
      const Fixture f = ctx.load(file);
      const ModuleCollection c = cf.build(f, f.algebra, d, ctx.engine());
      const Enumeration en = enumerate_indecomposables(f.algebra, *enumerate, ctx.engine());
      CheckReport r = is_cluster_tilting(d, c, en.modules, ctx.engine());
      r.info("enumeration", std::to_string(en.modules.size()) + " indecomposables of dimension <= " +
                                std::to_string(*enumerate) + (en.partial ? " (partial)" : ""));
      return ctx.report(r, "check cluster",
                        merge({{"file", file}, {"d", d}, {"enumerate", *enumerate}}, cf.inputs()));
    };
  });

  auto* c_idem = sub(check, "idempotent", "Ext over A/<e> against Ext over A, and (d-1)-idempotence");
  add_file(c_idem);
  add_e(c_idem);
  add_d(c_idem);
  c_idem->callback([&] {
    action = [&](Context& ctx) {
      const Fixture f = ctx.load(file);
      return ctx.report(check_idempotent_equivalence(f.algebra, ctx.idempotent(f, e_text), d), "check idempotent",
                        {{"file", file}, {"e", e_text}, {"d", d}});
    };
  });

  auto* c_ideal = sub(check, "ideal", "<e> is a k-idempotent ideal");
  add_file(c_ideal);
  add_e(c_ideal);
  c_ideal->add_option("-k", k, "k")->check(CLI::PositiveNumber);
  c_ideal->callback([&] {
    action = [&](Context& ctx) {
      const Fixture f = ctx.load(file);
      return ctx.report(is_k_idempotent_ideal(f.algebra, ctx.idempotent(f, e_text), k), "check ideal",
                        {{"file", file}, {"e", e_text}, {"k", k}});
    };
  });

  auto module_check = [&](const std::string& name, const std::string& help, char which,
                          std::function<CheckReport(const AlgebraPtr&, const Idempotent&, const Representation&)> fn) {
    auto* s = sub(check, name, help);
    add_file(s);
    add_e(s);
    if (which == 'N') {
      add_d(s);
      s->add_option("-N", n_expr, "module")->required();
    } else {
      s->add_option("-M", m_expr, "module")->required();
    }
    s->callback([&, name, which, fn] {
      action = [&, name, which, fn](Context& ctx) {
        const Fixture f = ctx.load(file);
        const std::string& expr = which == 'N' ? n_expr : m_expr;
        ordered_json inputs{{"file", file}, {"e", e_text}, {std::string(1, which), expr}};
        if (which == 'N') inputs["d"] = d;
        return ctx.report(fn(f.algebra, ctx.idempotent(f, e_text), evaluate_module(f.algebra, expr)),
                          "check " + name, inputs);
      };
    });
  };
  module_check("apt", "Ext vanishing against A/<e> versus the Ext comparison", 'N',
               [&](const AlgebraPtr& a, const Idempotent& e, const Representation& m) {
                 return check_apt_equivalence(a, e, m, d);
               });
  module_check("Id", "membership of N in I_d", 'N', [&](const AlgebraPtr& a, const Idempotent& e, const Representation& m) {
    return in_I_d(a, e, m, d);
  });
  module_check("coresolution", "F applied to the minimal injective coresolution", 'N',
               [&](const AlgebraPtr& a, const Idempotent& e, const Representation& m) {
                 return check_coresolution_under_F(a, e, m, d);
               });
  module_check("lemma", "third injective term against Ext^2(A/<1-e>, M)", 'M',
               [](const AlgebraPtr& a, const Idempotent& e, const Representation& m) {
                 return check_boundary_lemma(a, e, m);
               });

  auto* c_t1 = sub(check, "theorem1", "restriction of a 2-precluster tilting collection to A/<e>");
  add_file(c_t1);
  add_e(c_t1);
  cf.attach(c_t1);
  c_t1->callback([&] {
    action = [&](Context& ctx) {
      const Fixture f = ctx.load(file);
      const ModuleCollection c = cf.build(f, f.algebra, 2, ctx.engine());
      TheoremOptions to{ctx.engine(), false};
      return ctx.report(check_theorem1(f.algebra, ctx.idempotent(f, e_text), c, to), "check theorem1",
                        merge({{"file", file}, {"e", e_text}}, cf.inputs()));
    };
  });

  auto* c_t2 = sub(check, "theorem2", "extension of a 2-precluster tilting collection of A/<e> to A");
  add_file(c_t2);
  c_t2->add_option("-e", e_text, "vertices of e, or a named idempotent (default: the collection's)");
  cf.attach(c_t2);
  c_t2->add_flag("--exists-reading", exists_reading, "read (iii) as: nonzero for some J");
  c_t2->callback([&] {
    action = [&](Context& ctx) {
      const Fixture f = ctx.load(file);
      TheoremOptions to{ctx.engine(), exists_reading};
      std::optional<Quotient> q;
      ModuleCollection c;
      if (!cf.collection.empty()) {
        ResolvedCollection r = resolve_collection(f, cf.collection, ctx.engine());
        if (!r.quotient) throw InputError("collection '" + cf.collection + "' does not live over a quotient");
        if (!e_text.empty() && !(ctx.idempotent(f, e_text) == r.quotient->killed))
          throw InputError("-e differs from the idempotent of collection '" + cf.collection + "'");
        q = std::move(r.quotient);
        c = std::move(r.modules);
        if (cf.closure) c = tau_closure(2, c, ctx.engine());
      } else {
        if (e_text.empty()) throw InputError("give -e with --modules");
        q = quotient_by_idempotent(f.algebra, ctx.idempotent(f, e_text));
        CollectionFlags over_q = cf;
        c = over_q.build(f, q->algebra, 2, ctx.engine());
      }
      ordered_json inputs = merge({{"file", file}, {"e", idempotent_to_string(f.algebra->quiver(), q->killed)}},
                                  cf.inputs());
      if (exists_reading) inputs["exists_reading"] = true;
      return ctx.report(check_theorem2(*q, c, to), "check theorem2", inputs);
    };
  });

  auto* c_jk = sub(check, "jk", "(d-1)-idempotence and cluster tilting over A/<e>");
  add_file(c_jk);
  add_d(c_jk);
  add_e(c_jk);
  cf.attach(c_jk);
  c_jk->add_option("--enumerate", enumerate, "enumerate indecomposables of A and A/<e> up to this dimension");
  c_jk->callback([&] {
    action = [&](Context& ctx) {
      const Fixture f = ctx.load(file);
      const Quotient q = quotient_by_idempotent(f.algebra, ctx.idempotent(f, e_text));
      const ModuleCollection c = cf.build(f, f.algebra, d, ctx.engine());
      std::optional<ModuleCollection> indecs;
      std::optional<ModuleCollection> quotient_indecs;
      ordered_json inputs = merge({{"file", file}, {"d", d}, {"e", e_text}}, cf.inputs());
      if (enumerate) {
        Enumeration ea = enumerate_indecomposables(f.algebra, *enumerate, ctx.engine());
        Enumeration eq = enumerate_indecomposables(q.algebra, *enumerate, ctx.engine());
        if (ea.partial || eq.partial) throw InputError("enumeration incomplete: raise the candidate cap or lower the bound");
        indecs = std::move(ea.modules);
        quotient_indecs = std::move(eq.modules);
        inputs["enumerate"] = *enumerate;
      }
      TheoremOptions to{ctx.engine(), false};
      return ctx.report(check_jk_criterion(d, q, c, indecs, quotient_indecs, to), "check jk", inputs);
    };
  });

  auto* c_iy = sub(check, "iyama", "higher Auslander-Reiten duality identities");
  add_file(c_iy);
  add_d(c_iy);
  cf.attach(c_iy);
  c_iy->callback([&] {
    action = [&](Context& ctx) {
      const Fixture f = ctx.load(file);
      const ModuleCollection c = cf.build(f, f.algebra, d, ctx.engine());
      return ctx.report(check_iyama_duality(d, c), "check iyama", merge({{"file", file}, {"d", d}}, cf.inputs()));
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kPass;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Context ctx(g, out);
    ctx.start();
    return action(ctx);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalFault& e) {
    err << "internal fault: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace quiverlab::cli
