#include <algorithm>

#include "doctest.h"
#include "quiverlab/errors.hpp"
#include "support.hpp"

using namespace qltest;

namespace {

std::vector<Subset> all_subsets(int n, int k) {
  std::vector<Subset> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    Subset s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

Subset minus(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// some a < c < b < d (or the mirror) with a, b from I \ J and c, d from J \ I
bool crossing_oracle(const Subset& i, const Subset& j) {
  const Subset x = minus(i, j);
  const Subset y = minus(j, i);
  for (int a : x)
    for (int b : x)
      for (int c : y)
        for (int d : y)
          if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return true;
  return false;
}

bool intertwining_oracle(const Subset& i, const Subset& j) {
  std::vector<int> merged;
  for (std::size_t k = 0; k < i.size(); ++k) {
    merged.push_back(i[k]);
    merged.push_back(j[k]);
  }
  return std::is_sorted(merged.begin(), merged.end()) &&
         std::adjacent_find(merged.begin(), merged.end()) == merged.end();
}

}  // namespace

TEST_CASE("intertwining examples") {
  CHECK(is_intertwining({1, 3}, {2, 4}));
  CHECK_FALSE(is_intertwining({2, 4}, {1, 3}));
  CHECK_FALSE(is_intertwining({1, 2}, {3, 4}));
  CHECK_FALSE(is_intertwining({1, 3}, {1, 3}));
  CHECK(is_intertwining({1, 3, 5}, {2, 4, 6}));
  CHECK(is_intertwining({1}, {7}));
}

TEST_CASE("crossing examples") {
  CHECK(is_crossing({1, 3}, {2, 4}, 4));
  CHECK(is_crossing({2, 4}, {1, 3}, 4));
  CHECK_FALSE(is_crossing({1, 2}, {3, 4}, 4));
  CHECK_FALSE(is_crossing({1, 4}, {2, 3}, 4));
  CHECK_FALSE(is_crossing({1, 3, 5}, {1, 3, 5}, 6));
  CHECK(is_crossing({1, 3, 5}, {2, 4, 6}, 6));
}

TEST_CASE("exhaustive sweep: crossing is symmetric, intertwining antisymmetric, both match brute force") {
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= std::min(3, n); ++k) {
      const auto subsets = all_subsets(n, k);
      for (const auto& i : subsets)
        for (const auto& j : subsets) {
          CAPTURE(n);
          CAPTURE(subset_label(i));
          CAPTURE(subset_label(j));
          const bool c = is_crossing(i, j, n);
          CHECK(c == is_crossing(j, i, n));
          CHECK(c == crossing_oracle(i, j));
          const bool t = is_intertwining(i, j);
          CHECK(t == intertwining_oracle(i, j));
          CHECK_FALSE((t && is_intertwining(j, i)));
          if (i == j) CHECK_FALSE((c || t));
        }
    }
}

TEST_CASE("subset labels and parsing") {
  CHECK(subset_label({1, 3, 5}) == "135");
  CHECK(subset_label({1, 3, 10}) == "1.3.10");
  const auto c = parse_subset_collection(6, "531,1.3.6,146");
  CHECK(c.d == 2);
  CHECK(c.sets == std::vector<Subset>{{1, 3, 5}, {1, 3, 6}, {1, 4, 6}});
  CHECK_THROWS_AS(parse_subset_collection(6, ""), InputError);
  CHECK_THROWS_AS(subset_algebra(parse_subset_collection(6, "135,16")), InputError);
  CHECK_THROWS_AS(subset_algebra(parse_subset_collection(4, "135")), InputError);
  CHECK_THROWS_AS(subset_algebra(parse_subset_collection(6, "135,135")), InputError);
}

TEST_CASE("subset algebra on 135, 136, 146") {
  const auto a = subset_algebra(parse_subset_collection(6, "135,136,146"));
  const Quiver& q = a->quiver();
  CHECK(q.vertex_count() == 3);
  REQUIRE(q.arrow_count() == 2);
  const auto a5 = q.find_arrow("a5_135");
  const auto a3 = q.find_arrow("a3_136");
  REQUIRE(a5);
  REQUIRE(a3);
  CHECK(q.label(q.arrow(*a5).target) == "136");
  CHECK(q.label(q.arrow(*a3).target) == "146");
  // the square through 145 is missing, so the length-two path is zero
  CHECK(a->dimension() == 5);
  CHECK(print_algebra(*a).find("rel a3_136*a5_135") != std::string::npos);
}

TEST_CASE("subset algebras: full square commutes, cyclic arrows wrap") {
  const auto square = subset_algebra(parse_subset_collection(4, "13,14,23,24"));
  // 13 -> 14 -> 24 and 13 -> 23 -> 24 agree
  CHECK(square->dimension() == 4 + 4 + 1);
  const auto line = subset_algebra(parse_subset_collection(3, "1,2,3"));
  CHECK(line->quiver().arrow_count() == 2);
  const auto cycle = parse_subset_collection(3, "1,2,3", true);
  CHECK(subset_algebra_source(cycle).quiver.arrow_count() == 3);
  // singletons carry no relations, so the oriented cycle is unbounded
  CHECK_THROWS_AS(subset_algebra(cycle), NotFiniteDimensional);
}

TEST_CASE("subset algebras agree with the graded oracle") {
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k <= 3 && k < n; ++k) {
      SubsetCollection c;
      c.n = n;
      c.d = static_cast<std::size_t>(k - 1);
      c.sets = all_subsets(n, k);
      for (bool cyclic : {false, true}) {
        c.cyclic = cyclic;
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(cyclic);
        try {
          const auto a = subset_algebra(c);
          CHECK(graded_dimension(a, 16) == std::optional<std::size_t>(a->dimension()));
          CHECK(associative(*a));
        } catch (const NotFiniteDimensional&) {
          CHECK(cyclic);
        }
      }
    }
}

TEST_CASE("preprojective algebras of type A") {
  const std::vector<std::size_t> expected{1, 4, 10, 20};
  for (std::size_t rank = 1; rank <= 4; ++rank) {
    const auto a = preprojective_algebra_A(rank);
    CHECK(a->dimension() == expected[rank - 1]);
    CHECK(graded_dimension(a) == std::optional<std::size_t>(a->dimension()));
    CHECK(a->quiver().arrow_count() == 2 * (rank - 1));
  }
  const auto a = preprojective_algebra_A(3);
  for (VertexId v = 0; v < 3; ++v) CHECK(is_injective(projective(a, v)));
  const auto pi3 = fixture("pi3").algebra;
  for (VertexId v = 0; v < 3; ++v) CHECK(projective(a, v).dims() == projective(pi3, v).dims());
  CHECK_THROWS_AS(preprojective_algebra_A(0), InputError);
}

TEST_CASE("fixtures load with their annotations") {
  auto names = fixture_names();
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"aus2", "boundary", "hnak", "pi3"});
  CHECK_THROWS_AS(fixture("nope"), InputError);
  const Fixture aus = fixture("aus2");
  CHECK(aus.idempotents.count("e") == 1);
  CHECK(aus.collections.at("ct").expression == "S(1), S(3), P(*)");
  const Fixture f2 = fixture("aus2", Field::prime(2));
  CHECK(f2.algebra->field().characteristic() == 2);

  const Fixture hn = fixture("hnak");
  CHECK(hn.algebra->dimension() == 50);
  CHECK(hn.collections.at("quotient").over == "e");
  CHECK(hn.collections.at("quotient").closure);

  const Fixture b = fixture("boundary");
  CHECK(b.algebra->dimension() == 27);
  CHECK(b.idempotents.at("e").size() == 5);
  const auto& expected = b.expected_blocks.at("e");
  const Quotient q = quotient_by_idempotent(b.algebra, b.idempotents.at("e"));
  const auto blocks = quiver_blocks(*q.algebra);
  REQUIRE(blocks.size() == expected.size());
  for (const auto& want : expected) {
    bool found = false;
    for (const auto& got : blocks) {
      std::vector<std::string> labels;
      for (auto v : got) labels.push_back(q.algebra->quiver().label(v));
      std::vector<std::string> sorted_want = want;
      std::sort(labels.begin(), labels.end());
      std::sort(sorted_want.begin(), sorted_want.end());
      found = found || labels == sorted_want;
    }
    CHECK(found);
  }
}

TEST_CASE("resolving a fixture collection over a quotient") {
  const Fixture f = fixture("aus2");
  const ResolvedCollection rc = resolve_collection(f, "ct");
  CHECK_FALSE(rc.quotient);
  CHECK(rc.modules.size() == 4);
  CHECK_THROWS_AS(resolve_collection(f, "missing"), InputError);
}
