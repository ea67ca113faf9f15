#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "quiverlab/errors.hpp"
#include "support.hpp"

using namespace qltest;

namespace {

const char* kAus2 = R"(
field Q
vertex 1
vertex 2
vertex 3
arrow a : 1 -> 2
arrow b : 2 -> 3
rel b*a
)";

std::set<std::string> basis_words(const BoundQuiverAlgebra& a) {
  std::set<std::string> out;
  for (const auto& p : a.basis()) out.insert(path_to_string(a.quiver(), p));
  return out;
}

std::vector<Scalar> unit(const BoundQuiverAlgebra& a, std::size_t i) {
  std::vector<Scalar> v(a.dimension(), a.field().from_int(0));
  v[i] = a.field().from_int(1);
  return v;
}


}  // namespace

TEST_CASE("A2 Auslander algebra has basis e1 e2 e3 a b") {
  const auto a = algebra(kAus2);
  CHECK(a->dimension() == 5);
  CHECK(basis_words(*a) == std::set<std::string>{"e1", "e2", "e3", "a", "b"});
  CHECK(a->loewy_length() == 2);
}

TEST_CASE("one vertex without arrows is one-dimensional") {
  CHECK(algebra("vertex x\n")->dimension() == 1);
}

TEST_CASE("preprojective A3 has dimension 10, confirmed by the graded oracle") {
  const auto a = fixture("pi3").algebra;
  CHECK(a->dimension() == 10);
  CHECK(graded_dimension(a) == std::optional<std::size_t>(10));
}

TEST_CASE("graded oracle agrees with the rewriting system on every fixture") {
  for (const auto& a : fixture_algebras()) {
    CAPTURE(a->dimension());
    CHECK(graded_dimension(a) == std::optional<std::size_t>(a->dimension()));
  }
}

TEST_CASE("multiplication: idempotents, orthogonality and the zero relation") {
  const auto a = algebra(kAus2);
  const Quiver& q = a->quiver();
  for (VertexId v = 0; v < 3; ++v)
    for (VertexId w = 0; w < 3; ++w) {
      const auto p = a->multiply(unit(*a, a->trivial_index(w)), unit(*a, a->trivial_index(v)));
      CHECK(p == (v == w ? unit(*a, a->trivial_index(v)) : std::vector<Scalar>(5, 0)));
    }
  const auto ba = a->multiply(unit(*a, a->arrow_index(*q.find_arrow("b"))), unit(*a, a->arrow_index(*q.find_arrow("a"))));
  CHECK(ba == std::vector<Scalar>(5, 0));
  // a then b in the other order does not compose
  const auto ab = a->multiply(unit(*a, a->arrow_index(*q.find_arrow("a"))), unit(*a, a->arrow_index(*q.find_arrow("b"))));
  CHECK(ab == std::vector<Scalar>(5, 0));
}

TEST_CASE("trivial paths sum to the identity") {
  for (const auto& a : fixture_algebras()) {
    std::vector<Scalar> one(a->dimension(), a->field().from_int(0));
    for (VertexId v = 0; v < a->vertex_count(); ++v) one[a->trivial_index(v)] = a->field().from_int(1);
    for (std::size_t i = 0; i < a->dimension(); ++i) {
      CHECK(a->multiply(one, unit(*a, i)) == unit(*a, i));
      CHECK(a->multiply(unit(*a, i), one) == unit(*a, i));
    }
  }
}

TEST_CASE("associativity oracle on fixtures and random algebras") {
  for (const auto& a : fixture_algebras()) CHECK(associative(*a));
  std::mt19937 rng(2024);
  for (int k = 0; k < 10; ++k) {
    const auto a = build_algebra(random_rad3_source(rng));
    CHECK(associative(*a));
    CHECK(graded_dimension(a) == std::optional<std::size_t>(a->dimension()));
  }
}

TEST_CASE("opposite algebra reverses arrows and is an involution") {
  const auto a = algebra(kAus2);
  const auto op = opposite_algebra(a);
  CHECK(op->dimension() == 5);
  const Quiver& q = op->quiver();
  CHECK(q.arrow(*q.find_arrow("a")).source == *q.find_vertex("2"));
  CHECK(q.arrow(*q.find_arrow("a")).target == *q.find_vertex("1"));
  CHECK(opposite_algebra(op) == a);
  CHECK(basis_words(*op) == std::set<std::string>{"e1", "e2", "e3", "a", "b"});

  const auto ss = algebra("vertex 1\nvertex 2\n");
  CHECK(opposite_algebra(ss)->dimension() == 2);
  for (const auto& f : fixture_algebras()) CHECK(opposite_algebra(f)->dimension() == f->dimension());
}

TEST_CASE("quotients by vertex idempotents") {
  const auto a = algebra(kAus2);
  CHECK(quotient_by_idempotent(a, Idempotent{}).algebra->dimension() == 5);
  const Quotient all = quotient_by_idempotent(a, idem(a, "1,2,3"));
  CHECK(all.is_zero());
  CHECK(all.algebra->dimension() == 0);
  const Quotient q = quotient_by_idempotent(a, idem(a, "2"));
  CHECK(q.algebra->dimension() == 2);
  CHECK(q.algebra->quiver().arrow_count() == 0);
  CHECK(q.algebra->quiver().labels() == std::vector<std::string>{"1", "3"});
}

TEST_CASE("dim A = dim A/<e> + dim AeA for fixtures and random idempotents") {
  std::mt19937 rng(7);
  for (const auto& a : fixture_algebras()) {
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<VertexId> vs;
      for (VertexId v = 0; v < a->vertex_count(); ++v)
        if (rng() % 3 == 0) vs.push_back(v);
      const Idempotent e(vs);
      CHECK(a->dimension() == quotient_by_idempotent(a, e).algebra->dimension() + ideal_dimension(*a, e));
    }
  }
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_algebra("vertex 1\nvertex 1\n"), InputError);
  CHECK_THROWS_AS(parse_algebra("vertex 1\nvertex 2\narrow a : 1 -> 3\n"), InputError);
  CHECK_THROWS_AS(parse_algebra("vertex 1\nvertex 2\narrow a : 1 -> 2\nrel a\n"), InputError);
  CHECK_THROWS_AS(parse_algebra("vertex 1\nvertex 2\nvertex 3\narrow a : 1 -> 2\narrow b : 2 -> 3\nrel a*b\n"),
                  InputError);
  CHECK_THROWS_AS(parse_algebra("vertex 1\nfield Q\n"), InputError);
  CHECK_THROWS_AS(parse_algebra("field F 4\nvertex 1\n"), InputError);
  CHECK_THROWS_AS(parse_algebra("vertex 1\nvertex 2\narrow a : 1 -> 2\narrow b : 1 -> 2\narrow c : 2 -> 1\n"
                                "rel c*a - b\n"),
                  InputError);
  // non-parallel terms
  CHECK_THROWS_AS(parse_algebra("vertex 1\nvertex 2\nvertex 3\narrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 2 -> 1\n"
                                "rel b*a - a*c\n"),
                  InputError);
  CHECK_THROWS_AS(parse_algebra("vertex 1\nfrobnicate\n"), InputError);
}

TEST_CASE("an unbounded cycle is not finite-dimensional") {
  CHECK_THROWS_AS(parse_algebra("vertex 1\nvertex 2\narrow a : 1 -> 2\narrow b : 2 -> 1\n"), NotFiniteDimensional);
  BuildOptions small;
  small.length_cap = 3;
  CHECK_THROWS_AS(parse_algebra("vertex 1\nvertex 2\narrow a : 1 -> 2\narrow b : 2 -> 1\nrel a*b*a*b*a\n", small),
                  NotFiniteDimensional);
}

TEST_CASE("print then parse reproduces the algebra") {
  for (const auto& a : fixture_algebras()) {
    const std::string text = print_algebra(*a);
    const auto b = parse_algebra(text);
    CHECK(print_algebra(*b) == text);
    CHECK(b->dimension() == a->dimension());
    CHECK(basis_words(*b) == basis_words(*a));
  }
}

TEST_CASE("coefficients and fractions in relations") {
  const auto a = parse_algebra(
      "vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\narrow d : 3 -> 4\n"
      "rel 2*b*a - 1/3*d*c\n");
  CHECK(a->dimension() == 4 + 4 + 1);
  const auto p = parse_algebra(
      "field F 5\nvertex 1\nvertex 2\nvertex 3\nvertex 4\narrow a : 1 -> 2\narrow b : 2 -> 4\narrow c : 1 -> 3\n"
      "arrow d : 3 -> 4\nrel 2*b*a + 3*d*c\n");
  CHECK(p->dimension() == 9);
}

TEST_CASE("graphviz export") {
  auto count = [](const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
  };
  const std::string one = export_dot(*algebra("vertex x\n"));
  CHECK(count(one, "->") == 0);
  CHECK(count(one, "\"x\";") == 1);

  const std::string aus = export_dot(*algebra(kAus2));
  CHECK(count(aus, ";\n") - count(aus, "->") == 3);
  CHECK(count(aus, "[label=") == 2);
  CHECK(count(aus, "style=dashed") == 1);

  const auto h = fixture("hnak").algebra;
  const std::string hn = export_dot(*h);
  CHECK(count(hn, "[label=") == 18);
  CHECK(count(hn, "style=dashed") == 12);
  CHECK(h->vertex_count() == 13);
  CHECK(export_dot(*h) == hn);
}
