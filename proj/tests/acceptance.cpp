// One line per acceptance criterion. Criteria 4 (theorem half) and 8 are
// known to fail on faithful transcriptions; they print FAIL with the
// discrepancy and do not change the exit code. Any other failure does.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "quiverlab/errors.hpp"
#include "support.hpp"

using namespace qltest;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<CheckReport> g_theorem_reports;

CheckReport keep(CheckReport r) {
  if (r.hypothesis) g_theorem_reports.push_back(r);
  return r;
}

std::string failure_text(const CheckReport& r) {
  const Condition* f = r.first_failure();
  return f ? r.check() + " " + f->id + ": " + f->witness : r.check() + " passed";
}

const Condition* find(const CheckReport& r, const std::string& id) {
  for (const auto& c : r.conditions())
    if (c.id == id) return &c;
  return nullptr;
}

Outcome criterion1() {
  const auto a = fixture("aus2").algebra;
  const auto pre = is_precluster_tilting(2, collection(a, "S(1), S(3), P(*)"));
  if (!pre.passed()) return {false, failure_text(pre)};
  const auto f2 = fixture("aus2", Field::prime(2)).algebra;
  const Enumeration en = enumerate_indecomposables(f2, 3);
  if (en.partial || en.modules.size() != 5)
    return {false, std::to_string(en.modules.size()) + " indecomposables" + (en.partial ? " (partial)" : "")};
  const auto ct = is_cluster_tilting(2, collection(f2, "S(1), S(3), P(*)"), en.modules);
  if (!ct.passed()) return {false, failure_text(ct)};
  const Condition* excluded = find(ct, "excluded");
  if (!excluded || excluded->detail.find("(0,1,0)") == std::string::npos ||
      excluded->witness.find("Ext^1") == std::string::npos)
    return {false, "no Ext^1 witness excluding S_2"};
  return {true, "precluster pass; 5 indecomposables over F_2; cluster pass; S_2 excluded by " + excluded->witness};
}

Outcome criterion2() {
  const auto a = fixture("pi3").algebra;
  if (a->dimension() != 10) return {false, "dimension " + std::to_string(a->dimension())};
  const auto oracle = graded_dimension(a);
  if (oracle != std::optional<std::size_t>(10)) return {false, "graded oracle disagrees"};
  for (VertexId v = 0; v < a->vertex_count(); ++v)
    if (!is_injective(projective(a, v))) return {false, "P(" + a->quiver().label(v) + ") not injective"};
  const auto r = is_precluster_tilting(2, collection(a, "S(1), S(3), P(*)"));
  if (!r.passed()) return {false, failure_text(r)};
  return {true, "dimension 10 (oracle 10); self-injective; precluster pass"};
}

Outcome criterion3() {
  const Fixture f = fixture("hnak");
  const auto s = S(f.algebra, "04");
  const auto pd = proj_dim(s);
  const auto id = inj_dim(s);
  if (pd != std::optional<std::size_t>(1) || id != std::optional<std::size_t>(1))
    return {false, "discrepancy: proj.dim/inj.dim of S(04) are not both 1"};
  const auto t1 = keep(check_theorem1(f.algebra, f.idempotents.at("e"), resolve_collection(f, "pct").modules));
  const ResolvedCollection rc = resolve_collection(f, "quotient");
  const auto t2 = keep(check_theorem2(*rc.quotient, rc.modules));
  for (const auto* r : {&t1, &t2})
    if (!r->passed()) return {false, "discrepancy: " + failure_text(*r)};
  return {true, "pd = id = 1; theorem1 and theorem2 pass (hypotheses and conclusion)"};
}

Outcome criterion4() {
  const Fixture f = fixture("boundary");
  const Idempotent& e = f.idempotents.at("e");
  const Quotient q = quotient_by_idempotent(f.algebra, e);
  std::set<std::set<std::string>> got;
  for (const auto& b : quiver_blocks(*q.algebra)) {
    std::set<std::string> labels;
    for (auto v : b) labels.insert(q.algebra->quiver().label(v));
    got.insert(labels);
  }
  std::set<std::set<std::string>> want;
  for (const auto& b : f.expected_blocks.at("e")) want.insert({b.begin(), b.end()});
  const bool blocks = got == want && q.algebra->quiver().arrow_count() > 0;
  std::string blocks_text = blocks ? "blocks {135,136,146} | {256} | {347} match" : "block structure differs";

  std::vector<std::string> problems;
  try {
    const auto t1 = keep(check_theorem1(f.algebra, e, resolve_collection(f, "pct").modules));
    if (!t1.passed()) problems.push_back(failure_text(t1));
  } catch (const PreconditionError& err) {
    problems.push_back(std::string("theorem1 precondition: ") + err.what());
  }
  const ResolvedCollection rc = resolve_collection(f, "quotient");
  const auto t2 = keep(check_theorem2(*rc.quotient, rc.modules));
  if (!t2.passed()) problems.push_back(failure_text(t2));

  if (!blocks) return {false, blocks_text};
  if (problems.empty()) return {true, blocks_text + "; theorem1 and theorem2 pass"};
  std::string detail = blocks_text + "; discrepancy on the transcribed fixture: ";
  for (std::size_t k = 0; k < problems.size(); ++k) detail += (k ? "; " : "") + problems[k];
  return {false, detail};
}

Outcome criterion5() {
  std::size_t compared = 0;
  for (const auto& name : fixture_names()) {
    const auto a = fixture(name).algebra;
    std::vector<Representation> mods;
    for (const auto& m : spi_modules(a)) mods.push_back(m.module);
    for (const auto& x : mods)
      for (const auto& y : mods)
        for (std::size_t i = 0; i <= 3; ++i) {
          const auto p = ext_dim_projective(i, x, y);
          const auto q = ext_dim_injective(i, x, y);
          if (p != q)
            return {false, name + ": Ext^" + std::to_string(i) + " " + std::to_string(p) + " vs " + std::to_string(q)};
          ++compared;
        }
  }
  return {true, std::to_string(compared) + " Ext dimensions agree"};
}

Outcome criterion6() {
  for (const auto& name : fixture_names()) {
    const auto r = check_iyama_duality(2, collection(fixture(name).algebra, "S(*), P(*), I(*)"));
    if (!r.passed()) return {false, name + ": " + failure_text(r)};
  }
  return {true, "duality identities hold on all fixtures"};
}

Outcome criterion7() {
  std::vector<std::pair<std::string, AlgebraPtr>> algebras;
  for (const auto& name : fixture_names()) algebras.emplace_back(name, fixture(name).algebra);
  std::mt19937 rng(20);
  for (int k = 0; k < 20; ++k) algebras.emplace_back("random " + std::to_string(k), build_algebra(random_rad3_source(rng)));

  std::size_t runs = 0;
  std::mt19937 pick(7);
  for (const auto& [name, a] : algebras) {
    std::vector<Idempotent> es{random_idempotent(pick, a)};
    if (name.rfind("random", 0) != 0)
      for (const auto& [_, e] : fixture(name).idempotents) es.push_back(e);
    for (const auto& e : es) {
      const auto eq = check_idempotent_equivalence(a, e, 2);
      if (!find(eq, "(i)<=>(iii)") || find(eq, "(i)<=>(iii)")->status != Status::pass)
        return {false, name + ": " + failure_text(eq)};
      for (const auto& m : spi_modules(a)) {
        const auto apt = check_apt_equivalence(a, e, m.module, 2);
        const auto idd = in_I_d(a, e, m.module, 2);
        const auto fc = check_coresolution_under_F(a, e, m.module, 2);
        if (find(apt, "(i)<=>(ii)")->status != Status::pass) return {false, name + " " + m.name + ": " + failure_text(apt)};
        if (find(idd, "(i)<=>(ii)<=>(iii)")->status != Status::pass)
          return {false, name + " " + m.name + ": " + failure_text(idd)};
        if (!fc.passed()) return {false, name + " " + m.name + ": " + failure_text(fc)};
        runs += 3;
      }
      ++runs;
    }
  }
  return {true, std::to_string(runs) + " checks on 4 fixtures and 20 random algebras"};
}

Outcome criterion8() {
  std::size_t checked = 0;
  std::string literal_failure;
  for (const auto& name : fixture_names()) {
    const Fixture f = fixture(name);
    for (const auto& [_, e] : f.idempotents) {
      std::string elabel;
      for (auto v : e.vertices()) elabel += (elabel.empty() ? "" : "+") + f.algebra->quiver().label(v);
      if (!projective_injective_condition(f.algebra, e).holds()) continue;
      for (VertexId v = 0; v < f.algebra->vertex_count(); ++v) {
        const auto r = check_boundary_lemma(f.algebra, e, simple(f.algebra, v));
        if (!r.passed()) return {false, name + ": corrected reading fails: " + failure_text(r)};
        const Condition* lit = find(r, "lemma-literal");
        if (literal_failure.empty() && lit->detail.rfind("disagrees", 0) == 0)
          literal_failure = name + " e=" + elabel + " M=S(" + f.algebra->quiver().label(v) + "): " + lit->witness;
        ++checked;
      }
    }
  }
  if (!literal_failure.empty())
    return {false, "literal biconditional fails at " + literal_failure + "; reading with D((1-e)A) holds in all " +
                       std::to_string(checked) + " cases"};
  return {true, std::to_string(checked) + " cases"};
}

Outcome criterion9() {
  const auto a = fixture("aus2", Field::prime(2)).algebra;
  const Enumeration en = enumerate_indecomposables(a, 3);
  const ModuleCollection ct = collection(a, "S(1), S(3), P(*)");
  for (const char* e : {"1", "2", "3"}) {
    const Quotient q = quotient_by_idempotent(a, idem(a, e));
    std::optional<ModuleCollection> qen;
    if (!q.is_zero()) qen = enumerate_indecomposables(q.algebra, 3).modules;
    keep(check_jk_criterion(2, q, ct, en.modules, qen));
  }
  const auto pi3 = fixture("pi3").algebra;
  keep(check_theorem1(pi3, idem(pi3, "1"), collection(pi3, "S(1), S(3), P(*)")));
  for (auto& r : theorem_sweep(2718, 40)) keep(std::move(r));
  std::size_t hyp = 0;
  for (const auto& r : g_theorem_reports) {
    if (r.unsound()) return {false, r.check() + " hypotheses pass but the conclusion fails"};
    hyp += r.hypothesis.value_or(false) ? 1 : 0;
  }
  return {true, std::to_string(g_theorem_reports.size()) + " theorem reports, " + std::to_string(hyp) +
                    " with hypotheses satisfied, none unsound"};
}

std::string run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  quiverlab::cli::run(args, out, err);
  return out.str() + err.str();
}

Outcome criterion10() {
  const std::string dir = fixture_directory().string() + "/";
  const std::vector<std::vector<std::string>> commands{
      {"check", "precluster", dir + "aus2.alg", "--collection", "ct"},
      {"--field", "F2", "check", "cluster", dir + "aus2.alg", "--collection", "ct", "--enumerate", "3"},
      {"check", "precluster", dir + "pi3.alg", "--collection", "pct"},
      {"check", "theorem1", dir + "hnak.alg", "-e", "e", "--collection", "pct"},
      {"check", "theorem2", dir + "hnak.alg", "--collection", "quotient"},
      {"check", "theorem2", dir + "boundary.alg", "--collection", "quotient"},
      {"check", "lemma", dir + "pi3.alg", "-e", "1", "-M", "S(1)"},
      {"check", "iyama", dir + "hnak.alg", "--modules", "S(*), P(*), I(*)"},
  };
  std::size_t bytes = 0;
  for (const auto& cmd : commands) {
    std::vector<std::string> base{"--format", "json", "--seed", "11"};
    base.insert(base.end(), cmd.begin(), cmd.end());
    std::vector<std::string> serial = base;
    serial.insert(serial.begin(), "--serial");
    const std::string first = run_cli(base);
    const std::string second = run_cli(base);
    const std::string third = run_cli(serial);
    if (first != second || first != third) return {false, "output differs for " + cmd[1] + " " + cmd[2]};
    bytes += first.size();
  }
  return {true, std::to_string(commands.size()) + " reports, " + std::to_string(bytes) +
                    " bytes identical across runs and against the serial kernels"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::function<Outcome()> run;
    bool recorded_discrepancy;
  };
  const std::vector<Criterion> criteria{
      {1, criterion1, false}, {2, criterion2, false}, {3, criterion3, false}, {4, criterion4, true},
      {5, criterion5, false}, {6, criterion6, false}, {7, criterion7, false}, {8, criterion8, true},
      {9, criterion9, false}, {10, criterion10, false},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& err) {
      o = {false, std::string("exception: ") + err.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << "  ["
              << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
    if (!o.pass && !c.recorded_discrepancy) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
