#include "quiverlab/tilting.hpp"

#include <deque>
#include <sstream>

#include "quiverlab/errors.hpp"
#include "quiverlab/ext_table.hpp"
#include "quiverlab/homology.hpp"

namespace quiverlab {

namespace {

std::string ext_witness(std::size_t i, const std::string& m, const std::string& n, std::size_t dim) {
  return "dim Ext^" + std::to_string(i) + "(" + m + ", " + n + ") = " + std::to_string(dim);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

std::string vertex_name(const AlgebraPtr& a, VertexId v) { return a->quiver().label(v); }

}  // namespace

std::vector<Representation> ModuleCollection::modules() const {
  std::vector<Representation> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.module);
  return out;
}

ModuleCollection make_collection(const AlgebraPtr& a, const std::vector<NamedModule>& inputs,
                                 const EngineOptions& opts) {
  ModuleCollection out{a, {}};
  std::vector<Representation> seen;
  for (const auto& in : inputs) {
    if (in.module.algebra() != a) throw InputError("module '" + in.name + "' is over a different algebra");
    auto parts = decompose(in.module, opts);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (find_isomorphic(parts[k], seen)) continue;
      seen.push_back(parts[k]);
      std::string name = parts.size() == 1 ? in.name : in.name + "[" + std::to_string(k + 1) + "]";
      out.members.push_back({std::move(name), std::move(parts[k])});
    }
  }
  return out;
}

ModuleCollection tau_closure(std::size_t d, const ModuleCollection& seeds, const EngineOptions& opts,
                             std::size_t cap) {
  ModuleCollection out{seeds.algebra, {}};
  std::vector<Representation> seen;
  std::deque<NamedModule> queue(seeds.members.begin(), seeds.members.end());
  const std::string suffix = d == 1 ? "" : std::to_string(d);
  while (!queue.empty()) {
    NamedModule cur = std::move(queue.front());
    queue.pop_front();
    if (find_isomorphic(cur.module, seen)) continue;
    if (seen.size() >= cap) throw InternalFault("tau closure exceeds " + std::to_string(cap) + " members");
    seen.push_back(cur.module);
    for (int dir = 0; dir < 2; ++dir) {
      Representation t = dir == 0 ? tau_d(d, cur.module) : tau_d_inv(d, cur.module);
      const std::string op = (dir == 0 ? "tau" : "taum") + suffix;
      auto parts = decompose(t, opts);
      for (std::size_t k = 0; k < parts.size(); ++k) {
        std::string name = op + "(" + cur.name + ")";
        if (parts.size() > 1) name += "[" + std::to_string(k + 1) + "]";
        queue.push_back({std::move(name), std::move(parts[k])});
      }
    }
    out.members.push_back(std::move(cur));
  }
  return out;
}

CheckReport is_precluster_tilting(std::size_t d, const ModuleCollection& coll, const EngineOptions& opts) {
  if (d == 0) throw InputError("d must be at least 1");
  CheckReport r("precluster (d=" + std::to_string(d) + ")");
  const AlgebraPtr& a = coll.algebra;
  const auto members = coll.modules();

  std::vector<std::string> missing;
  for (VertexId v = 0; v < a->vertex_count(); ++v) {
    if (!find_isomorphic(projective(a, v), members)) missing.push_back("P(" + vertex_name(a, v) + ")");
    if (!find_isomorphic(injective(a, v), members)) missing.push_back("I(" + vertex_name(a, v) + ")");
  }
  r.add("P1", missing.empty(), "every P(v) and I(v) in add", missing.empty() ? "" : join(missing) + " missing");

  std::string p2_witness;
  for (std::size_t k = 0; k < coll.size() && p2_witness.empty(); ++k) {
    for (int dir = 0; dir < 2 && p2_witness.empty(); ++dir) {
      const Representation t = dir == 0 ? tau_d(d, members[k]) : tau_d_inv(d, members[k]);
      const auto m = add_membership(t, members, opts);
      if (!m.member)
        p2_witness = std::string(dir == 0 ? "tau" : "taum") + std::to_string(d) + "(" + coll.name(k) +
                     ") has a summand with dims " + dims_to_string(m.missing->dims()) + " outside add";
    }
  }
  r.add("P2", p2_witness.empty(), "tau_d and tau_d^- of every member in add", p2_witness);

  std::string p3_witness;
  if (d > 1 && !members.empty()) {
    const ExtTable t = ext_table(members, members, d - 1);
    for (std::size_t x = 0; x < members.size() && p3_witness.empty(); ++x)
      for (std::size_t y = 0; y < members.size() && p3_witness.empty(); ++y)
        for (std::size_t i = 1; i < d; ++i)
          if (t.at(x, y, i) != 0) {
            p3_witness = ext_witness(i, coll.name(x), coll.name(y), t.at(x, y, i));
            break;
          }
  }
  r.add("P3", p3_witness.empty(), "Ext^i(M, M) = 0 for 0 < i < d", p3_witness);
  return r;
}

CheckReport is_cluster_tilting(std::size_t d, const ModuleCollection& coll, const ModuleCollection& indecs,
                               const EngineOptions&) {
  if (d == 0) throw InputError("d must be at least 1");
  if (coll.algebra != indecs.algebra) throw InputError("indecomposables are over a different algebra");
  CheckReport r("cluster (d=" + std::to_string(d) + ")");
  const auto members = coll.modules();
  const auto xs = indecs.modules();
  ExtTable into;
  ExtTable out_of;
  if (d > 1 && !members.empty() && !xs.empty()) {
    into = ext_table(members, xs, d - 1);
    out_of = ext_table(xs, members, d - 1);
  }
  std::string w1;
  std::string w2;
  std::vector<bool> listed(members.size(), false);
  for (std::size_t x = 0; x < xs.size(); ++x) {
    const auto idx = find_isomorphic(xs[x], members);
    if (idx) listed[*idx] = true;
    std::string right;  // first nonzero Ext^i(coll, X)
    std::string left;   // first nonzero Ext^i(X, coll)
    if (d > 1)
      for (std::size_t c = 0; c < members.size(); ++c)
        for (std::size_t i = 1; i < d; ++i) {
          if (right.empty() && into.at(c, x, i) != 0)
            right = ext_witness(i, coll.name(c), indecs.name(x), into.at(c, x, i));
          if (left.empty() && out_of.at(x, c, i) != 0)
            left = ext_witness(i, indecs.name(x), coll.name(c), out_of.at(x, c, i));
        }
    const bool in_add = idx.has_value();
    if (in_add != right.empty() && w1.empty())
      w1 = indecs.name(x) + (in_add ? " in add but " + right : " outside add with Ext^i(M, -) vanishing");
    if (in_add != left.empty() && w2.empty())
      w2 = indecs.name(x) + (in_add ? " in add but " + left : " outside add with Ext^i(-, M) vanishing");
    if (!in_add) {
      Condition c{"excluded", Status::info, indecs.name(x) + " dims " + dims_to_string(xs[x].dims()),
                  right.empty() ? left : right};
      r.add(std::move(c));
    }
  }
  r.add("CT1", w1.empty(), "add(M) = {X : Ext^i(M, X) = 0, 0 < i < d}", w1);
  r.add("CT2", w2.empty(), "add(M) = {X : Ext^i(X, M) = 0, 0 < i < d}", w2);
  std::vector<std::string> unlisted;
  for (std::size_t c = 0; c < members.size(); ++c)
    if (!listed[c]) unlisted.push_back(coll.name(c));
  r.add("complete", unlisted.empty(), "every member occurs among the indecomposables",
        unlisted.empty() ? "" : join(unlisted) + " not listed");
  return r;
}

// ---------------------------------------------------------------------------

std::vector<Representation> quotient_injectives(const Quotient& q) {
  std::vector<Representation> out;
  for (VertexId w = 0; w < q.algebra->vertex_count(); ++w) out.push_back(inflate(q, injective(q.algebra, w)));
  return out;
}

std::vector<Representation> quotient_projectives(const Quotient& q) {
  std::vector<Representation> out;
  for (VertexId w = 0; w < q.algebra->vertex_count(); ++w) out.push_back(inflate(q, projective(q.algebra, w)));
  return out;
}

std::vector<Representation> quotient_simples(const Quotient& q) {
  std::vector<Representation> out;
  for (VertexId w = 0; w < q.algebra->vertex_count(); ++w) out.push_back(inflate(q, simple(q.algebra, w)));
  return out;
}

namespace {

std::string quotient_name(const Quotient& q, const char* kind, VertexId w) {
  return std::string(kind) + "(" + q.algebra->quiver().label(w) + ")";
}

// Ext^i(A/<e>, N) for i = from..to, or the first nonzero one.
std::optional<std::pair<std::size_t, std::size_t>> first_nonvanishing(const Representation& quotient_module,
                                                                      const Representation& n, std::size_t from,
                                                                      std::size_t to) {
  for (std::size_t i = from; i <= to; ++i) {
    const std::size_t dim = ext_dim(i, quotient_module, n);
    if (dim != 0) return std::make_pair(i, dim);
  }
  return std::nullopt;
}

}  // namespace

CheckReport is_k_idempotent_ideal(const AlgebraPtr& a, const Idempotent& e, std::size_t k) {
  CheckReport r("idempotent (k=" + std::to_string(k) + ")");
  const Quotient q = quotient_by_idempotent(a, e);
  const Representation quotient_module = quotient_algebra_module(a, e);
  const auto injectives = quotient_injectives(q);
  for (std::size_t i = 1; i <= k; ++i) {
    std::string witness;
    for (VertexId w = 0; w < injectives.size() && witness.empty(); ++w) {
      const std::size_t dim = ext_dim(i, quotient_module, injectives[w]);
      if (dim != 0) witness = ext_witness(i, "A/<e>", quotient_name(q, "I", w), dim);
    }
    r.add("K-" + std::to_string(i), witness.empty(), "Ext^" + std::to_string(i) + "(A/<e>, I) = 0 for I in inj(A/<e>)",
          witness);
  }
  return r;
}

CheckReport check_apt_equivalence(const AlgebraPtr& a, const Idempotent& e, const Representation& n,
                                  std::size_t d) {
  CheckReport r("apt (d=" + std::to_string(d) + ")");
  const Quotient q = quotient_by_idempotent(a, e);
  const Representation quotient_module = quotient_algebra_module(a, e);

  std::optional<std::pair<std::size_t, std::size_t>> bad;
  if (d > 1) bad = first_nonvanishing(quotient_module, n, 1, d - 1);
  const bool cond_i = !bad.has_value();
  r.add({"(i)", Status::info, cond_i ? "holds" : "fails",
         bad ? ext_witness(bad->first, "A/<e>", "N", bad->second) : ""});

  std::string mismatch;
  if (!q.is_zero() && d > 1) {
    const Representation fn = restrict_to_quotient(q, f_hom(e, n).module);
    std::vector<std::pair<std::string, Representation>> tests;
    for (VertexId w = 0; w < q.algebra->vertex_count(); ++w) {
      tests.emplace_back(quotient_name(q, "S", w), simple(q.algebra, w));
      tests.emplace_back(quotient_name(q, "P", w), projective(q.algebra, w));
    }
    for (const auto& [name, m] : tests) {
      for (std::size_t i = 1; i < d && mismatch.empty(); ++i) {
        const std::size_t over_quotient = ext_dim(i, m, fn);
        const std::size_t over_a = ext_dim(i, inflate(q, m), n);
        if (over_quotient != over_a)
          mismatch = "dim Ext^" + std::to_string(i) + "(" + name + ", FN) over A/<e> = " +
                     std::to_string(over_quotient) + ", over A = " + std::to_string(over_a);
      }
      if (!mismatch.empty()) break;
    }
  }
  const bool cond_ii = mismatch.empty();
  r.add({"(ii)", Status::info, cond_ii ? "holds" : "fails", mismatch});
  r.add("(i)<=>(ii)", cond_i == cond_ii, "conditions agree",
        cond_i == cond_ii ? "" : std::string("(i) ") + (cond_i ? "holds" : "fails") + ", (ii) " +
                                     (cond_ii ? "holds" : "fails"));
  return r;
}

CheckReport check_idempotent_equivalence(const AlgebraPtr& a, const Idempotent& e, std::size_t d) {
  CheckReport r("idempotent equivalence (d=" + std::to_string(d) + ")");
  const Quotient q = quotient_by_idempotent(a, e);
  std::vector<std::pair<std::string, Representation>> tests;
  for (VertexId w = 0; w < q.algebra->vertex_count(); ++w) {
    tests.emplace_back(quotient_name(q, "S", w), simple(q.algebra, w));
    tests.emplace_back(quotient_name(q, "P", w), projective(q.algebra, w));
    tests.emplace_back(quotient_name(q, "I", w), injective(q.algebra, w));
  }
  std::string mismatch;
  for (std::size_t x = 0; x < tests.size() && mismatch.empty(); ++x)
    for (std::size_t y = 0; y < tests.size() && mismatch.empty(); ++y)
      for (std::size_t i = 0; i < d; ++i) {
        const std::size_t over_quotient = ext_dim(i, tests[x].second, tests[y].second);
        const std::size_t over_a = ext_dim(i, inflate(q, tests[x].second), inflate(q, tests[y].second));
        if (over_quotient != over_a) {
          mismatch = "dim Ext^" + std::to_string(i) + "(" + tests[x].first + ", " + tests[y].first +
                     ") over A/<e> = " + std::to_string(over_quotient) + ", over A = " + std::to_string(over_a);
          break;
        }
      }
  const bool cond_i = mismatch.empty();
  r.add({"(i)", Status::info, cond_i ? "holds" : "fails", mismatch});
  const CheckReport k = is_k_idempotent_ideal(a, e, d == 0 ? 0 : d - 1);
  const bool cond_iii = k.passed();
  const Condition* f = k.first_failure();
  r.add({"(iii)", Status::info, cond_iii ? "holds" : "fails", f ? f->witness : ""});
  r.add("(i)<=>(iii)", cond_i == cond_iii, "conditions agree",
        cond_i == cond_iii ? "" : std::string("(i) ") + (cond_i ? "holds" : "fails") + ", (iii) " +
                                      (cond_iii ? "holds" : "fails"));
  return r;
}

CheckReport in_I_d(const AlgebraPtr& a, const Idempotent& e, const Representation& n, std::size_t d) {
  if (d == 0) throw InputError("d must be at least 1");
  CheckReport r("I_d (d=" + std::to_string(d) + ")");
  const Quotient q = quotient_by_idempotent(a, e);
  const Representation quotient_module = quotient_algebra_module(a, e);

  const auto bad = first_nonvanishing(quotient_module, n, 0, d - 1);
  const bool cond_iii = !bad.has_value();

  std::string simple_witness;
  const auto simples = quotient_simples(q);
  for (VertexId w = 0; w < simples.size() && simple_witness.empty(); ++w)
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t dim = ext_dim(i, simples[w], n);
      if (dim != 0) {
        simple_witness = ext_witness(i, quotient_name(q, "S", w), "N", dim);
        break;
      }
    }
  const bool cond_ii = simple_witness.empty();

  // Socles of I_0 .. I_d.
  const InjectiveCoresolution c = injective_coresolution(n, d);
  std::string corrected_witness;
  for (std::size_t j = 0; j < d && corrected_witness.empty(); ++j)
    for (auto v : c.socles[j])
      if (!e.contains(v)) {
        corrected_witness = "I_" + std::to_string(j) + " has summand I(" + vertex_name(a, v) + ")";
        break;
      }
  const bool cond_i = corrected_witness.empty();
  std::string literal_witness;
  for (std::size_t j = 0; j <= d && literal_witness.empty(); ++j)
    for (auto v : c.socles[j])
      if (e.contains(v)) {
        literal_witness = "I_" + std::to_string(j) + " has summand I(" + vertex_name(a, v) + ")";
        break;
      }

  r.add("I_d", cond_iii, "Ext^i(A/<e>, N) = 0 for 0 <= i < d",
        bad ? ext_witness(bad->first, "A/<e>", "N", bad->second) : "");
  r.add({"(i)", Status::info, std::string(cond_i ? "holds" : "fails") + ": I_0 .. I_{d-1} in add D(eA)",
         corrected_witness});
  r.add({"(ii)", Status::info, std::string(cond_ii ? "holds" : "fails") + ": Ext^i(S, N) = 0 for simples S of A/<e>",
         simple_witness});
  r.add({"(i)-literal", Status::info,
         std::string(literal_witness.empty() ? "holds" : "fails") + ": I_0 .. I_d in add D((1-e)A)",
         literal_witness});
  const bool agree = cond_i == cond_iii && cond_ii == cond_iii;
  r.add("(i)<=>(ii)<=>(iii)", agree, "conditions agree",
        agree ? "" : std::string("(i) ") + (cond_i ? "holds" : "fails") + ", (ii) " + (cond_ii ? "holds" : "fails") +
                         ", (iii) " + (cond_iii ? "holds" : "fails"));
  return r;
}

CheckReport check_coresolution_under_F(const AlgebraPtr& a, const Idempotent& e, const Representation& n,
                                       std::size_t d) {
  CheckReport r("F-coresolution (d=" + std::to_string(d) + ")");
  const Quotient q = quotient_by_idempotent(a, e);
  FCoresolution f;
  try {
    f = coresolve_under_F(q, n, d);
  } catch (const PreconditionError& err) {
    r.info("hypothesis", err.what());
    return r;
  }
  r.info("hypothesis", "Ext^i(A/<e>, N) = 0 for 0 < i < d");
  std::string exact;
  for (std::size_t j = 0; j < f.exact.size(); ++j)
    if (!f.exact[j]) {
      exact = j == 0 ? "FN -> FI_0 not injective" : "not exact at FI_" + std::to_string(j - 1);
      break;
    }
  r.add("exact", exact.empty(), "0 -> FN -> FI_0 -> ... -> FI_d exact up to FI_{d-1}", exact);
  std::string inj;
  for (std::size_t j = 0; j < f.injective.size(); ++j)
    if (!f.injective[j]) {
      inj = "FI_" + std::to_string(j) + " is not injective over A/<e>";
      break;
    }
  r.add("injective", inj.empty(), "every FI_j injective over A/<e>", inj);
  return r;
}

ProjInjCondition projective_injective_condition(const AlgebraPtr& a, const Idempotent& e) {
  ProjInjCondition c;
  for (auto v : e.vertices()) {
    const Representation p = projective(a, v);
    const Representation i = injective(a, v);
    if (!is_injective(p)) c.ae_failures.push_back(v);
    if (!is_projective(i)) c.dea_failures.push_back(v);
  }
  return c;
}

bool is_projective_injective_bimodule_condition(const AlgebraPtr& a, const Idempotent& e) {
  return projective_injective_condition(a, e).holds();
}

CheckReport check_boundary_lemma(const AlgebraPtr& a, const Idempotent& e, const Representation& m) {
  const ProjInjCondition pi = projective_injective_condition(a, e);
  if (!pi.ae()) throw PreconditionError("Ae is not projective-injective");
  if (!pi.dea()) throw PreconditionError("D(eA) is not projective-injective");
  CheckReport r("boundary lemma");
  const Idempotent complement = e.complement(a->vertex_count());
  const std::size_t ext2 = ext_dim(2, quotient_algebra_module(a, complement), m);
  const InjectiveCoresolution c = injective_coresolution(m, 2);
  std::vector<std::string> at_e;
  std::vector<std::string> off_e;
  for (auto v : c.socles[2]) (e.contains(v) ? at_e : off_e).push_back("I(" + vertex_name(a, v) + ")");
  const bool in_off_e = at_e.empty();
  const bool in_e = off_e.empty();
  const bool vanishes = ext2 == 0;
  const std::string ext_text = "dim Ext^2(A/<1-e>, M) = " + std::to_string(ext2);
  r.info("Ext^2", ext_text);
  std::vector<std::string> all = at_e;
  all.insert(all.end(), off_e.begin(), off_e.end());
  r.info("I_2", all.empty() ? "0" : join(all));
  r.add("lemma", in_off_e == vanishes, "I_2 in add D((1-e)A) <=> Ext^2(A/<1-e>, M) = 0",
        in_off_e == vanishes ? "" : ext_text + ", I_2 summands at e: " + (at_e.empty() ? "none" : join(at_e)));
  r.add({"lemma-literal", Status::info,
         std::string(in_e == vanishes ? "agrees" : "disagrees") + ": I_2 in add D(eA) <=> Ext^2(A/<1-e>, M) = 0",
         in_e == vanishes ? "" : ext_text + ", I_2 summands off e: " + (off_e.empty() ? "none" : join(off_e))});
  return r;
}

CheckReport check_iyama_duality(std::size_t d, const ModuleCollection& coll) {
  if (d < 2) throw InputError("d must be at least 2");
  CheckReport r("iyama duality (d=" + std::to_string(d) + ")");
  const AlgebraPtr& a = coll.algebra;
  const auto members = coll.modules();
  std::vector<Representation> ps;
  std::vector<Representation> is;
  for (VertexId v = 0; v < a->vertex_count(); ++v) {
    ps.push_back(projective(a, v));
    is.push_back(injective(a, v));
  }
  const ExtTable to_a = ext_table(members, ps, d - 1);
  const ExtTable from_da = ext_table(is, members, d - 1);

  std::size_t first_hyp = 0;
  std::size_t second_hyp = 0;
  std::string first_witness;
  std::string second_witness;
  for (std::size_t m = 0; m < members.size(); ++m) {
    bool hyp = true;
    for (std::size_t v = 0; v < ps.size() && hyp; ++v)
      for (std::size_t i = 1; i < d; ++i)
        if (to_a.at(m, v, i) != 0) hyp = false;
    if (!hyp) continue;
    ++first_hyp;
    const Representation t = tau_d(d, members[m]);
    for (std::size_t n = 0; n < members.size() && first_witness.empty(); ++n)
      for (std::size_t i = 1; i < d; ++i) {
        const std::size_t lhs = ext_dim(i, members[m], members[n]);
        const std::size_t rhs = ext_dim(d - i, members[n], t);
        if (lhs != rhs) {
          first_witness = ext_witness(i, coll.name(m), coll.name(n), lhs) + " but dim Ext^" + std::to_string(d - i) +
                          "(" + coll.name(n) + ", tau_d " + coll.name(m) + ") = " + std::to_string(rhs);
          break;
        }
      }
  }
  for (std::size_t n = 0; n < members.size(); ++n) {
    bool hyp = true;
    for (std::size_t v = 0; v < is.size() && hyp; ++v)
      for (std::size_t i = 1; i < d; ++i)
        if (from_da.at(v, n, i) != 0) hyp = false;
    if (!hyp) continue;
    ++second_hyp;
    const Representation t = tau_d_inv(d, members[n]);
    for (std::size_t m = 0; m < members.size() && second_witness.empty(); ++m)
      for (std::size_t i = 1; i < d; ++i) {
        const std::size_t lhs = ext_dim(i, members[m], members[n]);
        const std::size_t rhs = ext_dim(d - i, t, members[m]);
        if (lhs != rhs) {
          second_witness = ext_witness(i, coll.name(m), coll.name(n), lhs) + " but dim Ext^" +
                           std::to_string(d - i) + "(tau_d^- " + coll.name(n) + ", " + coll.name(m) +
                           ") = " + std::to_string(rhs);
          break;
        }
      }
  }
  r.add("duality", first_witness.empty(),
        "Ext^i(M, N) ~ D Ext^{d-i}(N, tau_d M) for " + std::to_string(first_hyp) + " members M with Ext^i(M, A) = 0",
        first_witness);
  r.add("duality-dual", second_witness.empty(),
        "Ext^i(M, N) ~ D Ext^{d-i}(tau_d^- N, M) for " + std::to_string(second_hyp) +
            " members N with Ext^i(DA, N) = 0",
        second_witness);
  return r;
}

}  // namespace quiverlab
