#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "quiverlab/fixtures.hpp"
#include "quiverlab/harness.hpp"
#include "quiverlab/lpa.hpp"

using namespace quiverlab;

namespace {

Quiver loop1() { return Quiver("loop1", {"v"}, {{"c", "v", "v"}}); }

Decomposition make(std::initializer_list<std::pair<RingKind, std::uint64_t>>
                       parts) {
  Decomposition d;
  for (const auto& [ring, size] : parts)
    d.summands.push_back({ring, false, size, ""});
  return d;
}

constexpr auto K = RingKind::OverK;
constexpr auto L = RingKind::OverLaurent;

}  // namespace

TEST_CASE("locally finite detection") {
  CHECK(is_locally_finite(fixtures::e()));
  CHECK(is_locally_finite(fixtures::eprime()));
  CHECK(is_locally_finite(fixtures::line3()));
  CHECK(is_locally_finite(fixtures::conv3()));
  CHECK_FALSE(is_locally_finite(fixtures::t()));
  CHECK_FALSE(is_locally_finite(fixtures::rose2()));
  CHECK(is_locally_finite(loop1()));
}

TEST_CASE("decompositions of the running examples") {
  CHECK(decompose(fixtures::line3()).same_as(make({{K, 3}})));
  CHECK(decompose(fixtures::conv3()).same_as(make({{K, 3}})));
  CHECK(decompose(fixtures::e()).same_as(make({{L, 2}, {K, 2}})));
  CHECK(decompose(kronecker_square(fixtures::line3()))
            .same_as(make({{K, 3}, {K, 2}, {K, 2}, {K, 1}, {K, 1}})));
  CHECK(decompose(kronecker_square(fixtures::conv3()))
            .same_as(make({{K, 5}, {K, 1}, {K, 1}, {K, 1}, {K, 1}})));
  CHECK(decompose(kronecker_square(fixtures::a2()))
            .same_as(make({{K, 2}, {K, 1}, {K, 1}})));
  CHECK(decompose(loop1()).same_as(make({{L, 1}})));
  CHECK(decompose(kronecker_square(fixtures::e()))
            .same_as(make({{L, 4}, {K, 3}, {K, 3}, {K, 2}, {K, 1}, {K, 1}})));
  CHECK_THROWS_AS(decompose(fixtures::t()), std::invalid_argument);
}

TEST_CASE("decomposition is invariant under renaming") {
  Quiver q = fixtures::e();
  Quiver r("renamed", {"zz", "aa", "mm"},
           {{"p", "zz", "aa"}, {"q", "zz", "mm"}, {"r", "mm", "mm"}});
  CHECK(decompose(q).same_as(decompose(r)));
}

TEST_CASE("cycle summand size does not depend on the base vertex") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.cls = GeneratorConfig::Class::NoExitCycle;
    Quiver q = random_quiver(cfg);
    if (!is_locally_finite(q)) continue;
    for (const Cycle& c : enumerate_cycles(q)) {
      std::uint64_t first = cycle_summand_size(q, c, q.edge_src(c.edges[0]));
      for (std::size_t e : c.edges)
        CHECK(cycle_summand_size(q, c, q.edge_src(e)) == first);
    }
  }
}

TEST_CASE("socle decomposition of the square of the Toeplitz quiver") {
  SocleResult r = socle_decomposition(kronecker_square(fixtures::t()));
  REQUIRE(r.summands.summands.size() == 3);
  for (const auto& s : r.summands.summands) {
    CHECK(s.ring == RingKind::OverK);
    CHECK(s.infinite);
  }
  CHECK(r.socleSet.vertices ==
        std::vector<std::string>{"u|v", "v|u", "v|v"});
  CHECK(r.quotient.num_vertices() == 1);
  REQUIRE(r.quotient.num_edges() == 1);
  CHECK(r.quotient.edges()[0].src == r.quotient.edges()[0].dst);
}

TEST_CASE("socle decomposition of E and of a sink-free quiver") {
  SocleResult e = socle_decomposition(fixtures::e());
  REQUIRE(e.summands.summands.size() == 1);
  CHECK_FALSE(e.summands.summands[0].infinite);
  CHECK(e.summands.summands[0].size == 2);
  CHECK(e.socleSet.vertices == std::vector<std::string>{"u"});
  CHECK(e.quotient.num_vertices() == 2);

  SocleResult rose = socle_decomposition(fixtures::rose2());
  CHECK(rose.summands.summands.empty());
  CHECK(rose.socleSet.vertices.empty());
  CHECK(rose.quotient == fixtures::rose2());
}

TEST_CASE("graded dimensions of E and its square at degree zero") {
  CHECK(dim_graded(fixtures::e(), 0) == 6);
  CHECK(dim_graded(kronecker_square(fixtures::e()), 0) == 30);
  CHECK(dim_graded(kronecker_square(fixtures::eprime()), 0) == 32);
  CHECK(cross_product_dim(fixtures::e(), fixtures::e(), 0) == 36);
  CHECK(dim_graded(fixtures::eprime(), 0) == 6);
}

TEST_CASE("graded dimension of a single loop is one in every degree") {
  for (long n = -6; n <= 6; ++n) {
    CHECK(dim_graded(loop1(), n) == 1);
    CHECK(dim_graded_oracle(loop1(), n) == 1);
  }
}

TEST_CASE("graded dimension preconditions") {
  CHECK_THROWS_AS(dim_graded(fixtures::t(), 0), std::invalid_argument);
  CHECK_THROWS_AS(dim_graded_oracle(fixtures::rose2(), 0),
                  std::invalid_argument);
}

TEST_CASE("basis count equals the decomposition oracle on fixtures") {
  for (const Quiver& q :
       {fixtures::e(), fixtures::eprime(), fixtures::line3(),
        fixtures::conv3(), fixtures::a2(), fixtures::haz1(),
        fixtures::haz2(), kronecker_square(fixtures::e()),
        kronecker_square(fixtures::line3())})
    for (long n = -5; n <= 5; ++n)
      CHECK(dim_graded(q, n) == dim_graded_oracle(q, n));
}

TEST_CASE("basis count does not depend on the chosen special edges") {
  Quiver q = fixtures::e();
  // default picks f at v and h at w; force g at v instead
  std::map<std::size_t, std::size_t> special;
  for (std::size_t e = 0; e < q.num_edges(); ++e)
    if (q.edges()[e].name == "g") special[q.edge_src(e)] = e;
  for (long n = -4; n <= 4; ++n)
    CHECK(dim_graded(q, n, special) == dim_graded(q, n));
  std::map<std::size_t, std::size_t> bad{{q.vertex_index("w"), 0}};
  CHECK_THROWS_AS(dim_graded(q, 0, bad), std::invalid_argument);
}

TEST_CASE("graded isomorphism invariant separates the HAZ pair") {
  GradedIsoInvariant a = graded_iso_invariant(fixtures::haz1());
  GradedIsoInvariant b = graded_iso_invariant(fixtures::haz2());
  CHECK(a == b);
  REQUIRE(a.sink_lists.size() == 1);
  CHECK(a.sink_lists[0] ==
        std::vector<std::uint64_t>{0, 1, 1, 2, 2});
  CHECK(graded_iso_invariant(kronecker_square(fixtures::haz1())) !=
        graded_iso_invariant(kronecker_square(fixtures::haz2())));
  CHECK_THROWS_AS(graded_iso_invariant(fixtures::t()),
                  std::invalid_argument);
}

TEST_CASE("graded isomorphism invariant ignores labels") {
  Quiver r("renamed", {"a", "b", "c", "d", "e"},
           {{"x1", "a", "b"},
            {"x2", "b", "c"},
            {"x3", "d", "c"},
            {"x4", "e", "d"}});
  CHECK(graded_iso_invariant(r) == graded_iso_invariant(fixtures::haz1()));
}

TEST_CASE("Gelfand-Kirillov dimension") {
  CHECK(gk_dimension(fixtures::e()) == GKDim{false, 1});
  CHECK(gk_dimension(fixtures::t()) == GKDim{false, 2});
  CHECK(gk_dimension(kronecker_square(fixtures::t())) == GKDim{false, 2});
  CHECK(gk_dimension(fixtures::line3()) == GKDim{false, 0});
  CHECK(gk_dimension(fixtures::rose2()).infinite);
  // two cycles in a chain: gk = 3
  Quiver chain("chain", {"a", "b"},
               {{"c1", "a", "a"}, {"m", "a", "b"}, {"c2", "b", "b"}});
  CHECK(gk_dimension(chain) == GKDim{false, 3});
}

TEST_CASE("ring properties") {
  RingProperties c3 = ring_properties(fixtures::conv3());
  CHECK(c3.vonNeumannRegular);
  CHECK(c3.artinian);
  CHECK(c3.noetherian);
  CHECK(c3.prime);
  CHECK(c3.primitive);
  CHECK_FALSE(c3.stronglyGraded);

  RingProperties sq = ring_properties(kronecker_square(fixtures::conv3()));
  CHECK_FALSE(sq.prime);

  RingProperties t = ring_properties(fixtures::t());
  CHECK_FALSE(t.vonNeumannRegular);
  CHECK_FALSE(t.noetherian);
  CHECK_FALSE(t.locallyFinite);
  CHECK(t.prime);
  CHECK(t.primitive);

  CHECK(ring_properties(fixtures::rose2()).stronglyGraded);
  RingProperties e = ring_properties(fixtures::e());
  CHECK(e.noetherian);
  CHECK_FALSE(e.artinian);
  CHECK_FALSE(e.primitive);  // condition (L) fails
}
