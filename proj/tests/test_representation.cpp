#include <random>

#include "doctest.h"
#include "quiverlab/errors.hpp"
#include "support.hpp"

using namespace qltest;

namespace {

AlgebraPtr aus2() { return fixture("aus2").algebra; }


bool vanishes_through(const Idempotent& e, const Representation& m) {
  const auto& a = *m.algebra();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    const Path& p = a.basis_path(i);
    bool meets = e.contains(p.source);
    for (ArrowId ar : p.arrows) meets = meets || e.contains(a.quiver().arrow(ar).target);
    if (meets && !m.act(p).is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("projectives, injectives and simples on the A2 Auslander algebra") {
  const auto a = aus2();
  CHECK(P(a, "1").dims() == DimVector{1, 1, 0});
  CHECK(P(a, "2").dims() == DimVector{0, 1, 1});
  CHECK(P(a, "3").dims() == DimVector{0, 0, 1});
  CHECK(I(a, "2").dims() == DimVector{1, 1, 0});
  CHECK(is_isomorphic(I(a, "2"), P(a, "1")));
  CHECK(is_isomorphic(I(a, "1"), S(a, "1")));
  CHECK(S(a, "2").dims() == DimVector{0, 1, 0});
}

TEST_CASE("preprojective A3: P_2 has dimension vector (1,2,1)") {
  const auto a = fixture("pi3").algebra;
  CHECK(P(a, "2").dims() == DimVector{1, 2, 1});
}

TEST_CASE("semisimple algebra: projectives and injectives are simple") {
  const auto a = algebra("vertex 1\nvertex 2\n");
  for (const char* v : {"1", "2"}) {
    CHECK(is_isomorphic(P(a, v), S(a, v)));
    CHECK(is_isomorphic(I(a, v), S(a, v)));
  }
}

TEST_CASE("tops of projectives and socles of injectives are simple") {
  for (const auto& a : fixture_algebras())
    for (VertexId v = 0; v < a->vertex_count(); ++v) {
      DimVector indicator(a->vertex_count(), 0);
      indicator[v] = 1;
      CHECK(top_dims(projective(a, v)) == indicator);
      CHECK(socle_dims(injective(a, v)) == indicator);
    }
}

TEST_CASE("Hom dimensions on the A2 Auslander algebra") {
  const auto a = aus2();
  CHECK(hom_dim(S(a, "1"), S(a, "1")) == 1);
  CHECK(hom_dim(S(a, "1"), S(a, "3")) == 0);
  CHECK(hom_dim(P(a, "1"), P(a, "2")) == 0);
  CHECK(hom_dim(P(a, "2"), P(a, "1")) == 1);
  CHECK(hom_space_by_intertwiners(P(a, "2"), P(a, "1")).size() == 1);
}

TEST_CASE("Hom from projectives and into injectives picks out a vertex") {
  for (const auto& a : fixture_algebras()) {
    const auto mods = spi_modules(a);
    for (VertexId v = 0; v < a->vertex_count(); ++v)
      for (const auto& x : mods) {
        CHECK(hom_dim(projective(a, v), x.module) == x.module.dim(v));
        CHECK(hom_dim(x.module, injective(a, v)) == x.module.dim(v));
      }
  }
}

TEST_CASE("presentation-based Hom agrees with the intertwiner system") {
  for (const auto& a : fixture_algebras()) {
    const auto mods = spi_modules(a);
    for (std::size_t i = 0; i < mods.size(); i += 2)
      for (std::size_t j = 1; j < mods.size(); j += 3) {
        const auto basis = hom_space(mods[i].module, mods[j].module);
        CHECK(basis.size() == hom_space_by_intertwiners(mods[i].module, mods[j].module).size());
        for (const auto& f : basis) CHECK(is_module_map(mods[i].module, mods[j].module, f));
      }
  }
}

TEST_CASE("duality") {
  const auto a = aus2();
  const Representation dp = dualize(P(a, "1"));
  CHECK(dp.algebra() == opposite_algebra(a));
  CHECK(dp.dims() == DimVector{1, 1, 0});
  CHECK(is_isomorphic(dp, injective(dp.algebra(), vertex(dp.algebra(), "1"))));
  CHECK(is_isomorphic(dualize(S(a, "2")), simple(dp.algebra(), 1)));
  for (const auto& a2 : fixture_algebras())
    for (const auto& m : spi_modules(a2)) CHECK(is_isomorphic(dualize(dualize(m.module)), m.module));
}

TEST_CASE("decomposition") {
  const auto a = aus2();
  const auto two = decompose(direct_sum(S(a, "1"), S(a, "1")));
  REQUIRE(two.size() == 2);
  CHECK(is_isomorphic(two[0], S(a, "1")));
  CHECK(is_isomorphic(two[1], S(a, "1")));

  const Representation regular = direct_sum(a, {P(a, "1"), P(a, "2"), P(a, "3")});
  const auto parts = decompose(regular);
  REQUIRE(parts.size() == 3);
  std::vector<DimVector> dims;
  for (const auto& p : parts) dims.push_back(p.dims());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<DimVector>{{0, 0, 1}, {0, 1, 1}, {1, 1, 0}});

  const auto one = decompose(P(a, "2"));
  REQUIRE(one.size() == 1);
  CHECK(is_isomorphic(one[0], P(a, "2")));
}

TEST_CASE("decomposition preserves dimension and reassembles") {
  std::mt19937 rng(17);
  for (const auto& a : fixture_algebras()) {
    const auto mods = spi_modules(a);
    for (int trial = 0; trial < 5; ++trial) {
      const auto& x = mods[rng() % mods.size()].module;
      const auto& y = mods[rng() % mods.size()].module;
      const auto& z = mods[rng() % mods.size()].module;
      const Representation m = direct_sum(a, {x, y, z});
      const auto parts = decompose(m);
      DimVector total(a->vertex_count(), 0);
      for (const auto& p : parts) {
        CHECK(is_indecomposable(p));
        for (VertexId v = 0; v < a->vertex_count(); ++v) total[v] += p.dim(v);
      }
      CHECK(total == m.dims());
      CHECK(is_isomorphic(direct_sum(a, parts), m));
    }
  }
}

TEST_CASE("decomposition over a small prime field") {
  const auto a = fixture("pi3", Field::prime(2)).algebra;
  const Representation m = direct_sum(a, {P(a, "2"), S(a, "1"), P(a, "2")});
  CHECK(decompose(m).size() == 3);
}

TEST_CASE("isomorphism is an equivalence relation on fixture modules") {
  std::mt19937 rng(23);
  for (const auto& a : fixture_algebras()) {
    const auto mods = spi_modules(a);
    for (int trial = 0; trial < 10; ++trial) {
      const auto& x = mods[rng() % mods.size()].module;
      const auto& y = mods[rng() % mods.size()].module;
      const auto& z = mods[rng() % mods.size()].module;
      CHECK(is_isomorphic(x, x));
      CHECK(is_isomorphic(x, y) == is_isomorphic(y, x));
      if (is_isomorphic(x, y) && is_isomorphic(y, z)) CHECK(is_isomorphic(x, z));
    }
  }
  const auto a = aus2();
  CHECK_FALSE(is_isomorphic(S(a, "1"), S(a, "2")));
}

TEST_CASE("add membership") {
  const auto a = aus2();
  const std::vector<Representation> coll{S(a, "1"), S(a, "3"), P(a, "1"), P(a, "2")};
  CHECK(add_membership(Representation::zero(a), coll).member);
  const auto s2 = add_membership(S(a, "2"), coll);
  CHECK_FALSE(s2.member);
  REQUIRE(s2.missing);
  CHECK(is_isomorphic(*s2.missing, S(a, "2")));
  CHECK(add_membership(direct_sum(P(a, "1"), S(a, "3")), coll).member);
}

TEST_CASE("F and the tensor quotient") {
  const auto a = aus2();
  const Idempotent e2 = idem(a, "2");
  CHECK(is_isomorphic(f_hom(Idempotent{}, P(a, "1")).module, P(a, "1")));
  CHECK(f_hom(e2, S(a, "2")).module.is_zero());
  CHECK(f_hom(e2, P(a, "1")).module.is_zero());
  CHECK(is_isomorphic(tensor_quotient(Idempotent{}, P(a, "1")).module, P(a, "1")));
  CHECK(tensor_quotient(idem(a, "1,2,3"), P(a, "2")).module.is_zero());
  CHECK(is_isomorphic(tensor_quotient(e2, P(a, "1")).module, S(a, "1")));
}

TEST_CASE("F embeds, the tensor quotient is a quotient, both vanish through e") {
  std::mt19937 rng(31);
  for (const auto& a : fixture_algebras()) {
    const auto mods = spi_modules(a);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<VertexId> vs;
      for (VertexId v = 0; v < a->vertex_count(); ++v)
        if (rng() % 3 == 0) vs.push_back(v);
      const Idempotent e(vs);
      const auto& m = mods[rng() % mods.size()].module;
      const Sub f = f_hom(e, m);
      const Quo t = tensor_quotient(e, m);
      CHECK(is_module_map(f.module, m, f.inclusion));
      CHECK(map_rank(f.inclusion) == f.module.total_dim());
      CHECK(is_module_map(m, t.module, t.projection));
      CHECK(map_rank(t.projection) == t.module.total_dim());
      CHECK(vanishes_through(e, f.module));
      CHECK(vanishes_through(e, t.module));
    }
  }
}

TEST_CASE("inflated modules are fixed by F and by the tensor quotient") {
  for (const auto& name : fixture_names()) {
    const Fixture fx = fixture(name);
    for (const auto& [ename, e] : fx.idempotents) {
      const Quotient q = quotient_by_idempotent(fx.algebra, e);
      for (const auto& m : spi_modules(q.algebra)) {
        const Representation x = inflate(q, m.module);
        CHECK(is_isomorphic(f_hom(e, x).module, x));
        CHECK(is_isomorphic(tensor_quotient(e, x).module, x));
        CHECK(is_isomorphic(restrict_to_quotient(q, x), m.module));
      }
    }
  }
}

TEST_CASE("inflation of the quotient's projective S_1 is no longer projective") {
  const auto a = aus2();
  const Quotient q = quotient_by_idempotent(a, idem(a, "2"));
  const Representation s1 = inflate(q, projective(q.algebra, 0));
  CHECK(is_isomorphic(s1, S(a, "1")));
  CHECK_FALSE(is_isomorphic(s1, P(a, "1")));
  CHECK(inflate(q, Representation::zero(q.algebra)).is_zero());
}

TEST_CASE("representations must satisfy the relations") {
  const auto a = aus2();
  const Field f = a->field();
  Mat one(f, 1, 1);
  one(0, 0) = 1;
  CHECK_THROWS_AS(Representation(a, {1, 1, 1}, {one, one}), InputError);
  CHECK_NOTHROW(Representation(a, {1, 1, 1}, {one, Mat(f, 1, 1)}));
  CHECK_THROWS_AS(Representation(a, {1, 1}, {one, one}), InputError);
}

TEST_CASE("module expressions") {
  const auto a = aus2();
  CHECK(evaluate_module_list(a, "P(*)").size() == 3);
  CHECK(is_isomorphic(evaluate_module(a, "sum(S(1), S(1))"), direct_sum(S(a, "1"), S(a, "1"))));
  CHECK(is_isomorphic(evaluate_module(a, "tau(S(1))"), S(a, "2")));
  CHECK(is_isomorphic(evaluate_module(a, "tau2(S(1))"), S(a, "3")));
  CHECK(is_isomorphic(evaluate_module(a, "taum2(S(3))"), S(a, "1")));
  CHECK(is_isomorphic(evaluate_module(a, "omega(S(1))"), S(a, "2")));
  CHECK(is_isomorphic(evaluate_module(a, "coomega(S(3))"), S(a, "2")));
  CHECK(is_isomorphic(evaluate_module(a, "nu(P(1))"), S(a, "1")));
  const auto names = evaluate_module_list(a, "tau2(S(1)), I(*)");
  CHECK(names.front().name == "tau2(S(1))");
  CHECK_THROWS_AS(evaluate_module(a, "P(9)"), InputError);
  CHECK_THROWS_AS(evaluate_module(a, "frob(S(1))"), InputError);
  CHECK_THROWS_AS(evaluate_module(a, "S(1"), InputError);
}
