#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "quiverlab/analysis.hpp"
#include "quiverlab/fixtures.hpp"
#include "quiverlab/harness.hpp"

using namespace quiverlab;

namespace {

Quiver loop1() { return Quiver("loop1", {"v"}, {{"c", "v", "v"}}); }

std::set<std::string> as_set(const std::vector<std::string>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("degree census of the square of CONV3") {
  DegreeCensus c = degree_census(kronecker_square(fixtures::conv3()));
  CHECK(c.sinks.size() == 5);
  CHECK(c.isolated.size() == 4);
  CHECK(c.sources.size() == 8);  // isolated vertices are also sources
  CHECK(c.regular.size() == 4);
}

TEST_CASE("cycle enumeration") {
  CHECK(enumerate_cycles(fixtures::line3()).empty());

  Quiver t = fixtures::t();
  auto ct = enumerate_cycles(t);
  REQUIRE(ct.size() == 1);
  CHECK(ct[0].edges.size() == 1);
  CHECK(t.edges()[ct[0].edges[0]].name == "c");

  Quiver sq = kronecker_square(t);
  auto csq = enumerate_cycles(sq);
  REQUIRE(csq.size() == 1);
  CHECK(sq.edges()[csq[0].edges[0]].src == "u|u");

  // cycles start at their least vertex name
  Quiver two("two", {"b", "a"}, {{"e1", "b", "a"}, {"e2", "a", "b"}});
  auto c2 = enumerate_cycles(two);
  REQUIRE(c2.size() == 1);
  CHECK(two.edges()[c2[0].edges[0]].src == "a");
}

TEST_CASE("acyclicity") {
  CHECK(is_acyclic(fixtures::line3()));
  CHECK(is_acyclic(fixtures::conv3()));
  CHECK_FALSE(is_acyclic(fixtures::t()));
  CHECK_FALSE(is_acyclic(loop1()));
}

TEST_CASE("conditions L and K") {
  CHECK(condition_L(fixtures::t()));       // the loop has exit f
  CHECK_FALSE(condition_L(fixtures::e())); // h has no exit
  CHECK(condition_L(fixtures::line3()));   // vacuous
  CHECK(condition_K(fixtures::line3()));   // vacuous
  CHECK_FALSE(condition_K(fixtures::t()));
  CHECK_FALSE(condition_K(loop1()));
  CHECK(condition_K(fixtures::rose2()));
}

TEST_CASE("condition K counts closed paths, not simple cycles") {
  // v3 lies on a single simple cycle, but gets a second closed simple
  // path by inserting the loop e3 at v1
  Quiver q("kreg", {"v1", "v2", "v3"},
           {{"e1", "v1", "v3"},
            {"e2", "v3", "v2"},
            {"e3", "v1", "v1"},
            {"e4", "v2", "v1"},
            {"e5", "v2", "v2"},
            {"e6", "v1", "v2"}});
  CHECK(condition_K(q));
  CHECK(condition_K(kronecker_square(q)));
}

TEST_CASE("downward directedness") {
  CHECK(downward_directed(fixtures::conv3()));
  CHECK_FALSE(downward_directed(kronecker_square(fixtures::conv3())));
  CHECK(downward_directed(fixtures::t()));
  CHECK_FALSE(downward_directed(fixtures::e()));  // u and w can't meet
}

TEST_CASE("line points") {
  CHECK(line_points(fixtures::t()) == std::vector<std::string>{"v"});
  auto lp = line_points(kronecker_square(fixtures::t()));
  CHECK(as_set(lp) == std::set<std::string>{"u|v", "v|u", "v|v"});
  CHECK(line_points(fixtures::e()) == std::vector<std::string>{"u"});
  CHECK(line_points(loop1()).empty());
  // every vertex of a line is a line point
  CHECK(line_points(fixtures::line3()).size() == 3);
}

TEST_CASE("hereditary saturated closure") {
  Quiver t = fixtures::t();
  HSSet h = hereditary_saturated_closure(t, {"v"});
  CHECK(h.vertices == std::vector<std::string>{"v"});
  CHECK(is_hereditary(t, h.vertices));
  CHECK(is_saturated(t, h.vertices));

  Quiver e = fixtures::e();
  CHECK(hereditary_saturated_closure(e, {"u"}).vertices ==
        std::vector<std::string>{"u"});
  CHECK(hereditary_saturated_closure(e, {}).vertices.empty());
  // saturation pulls in a vertex whose whole out-neighbourhood is inside
  CHECK(hereditary_saturated_closure(fixtures::line3(), {"v3"}).vertices ==
        std::vector<std::string>{"v1", "v2", "v3"});
  CHECK_FALSE(is_saturated(fixtures::line3(), {"v3"}));
  CHECK_FALSE(is_hereditary(fixtures::line3(), {"v1"}));
}

TEST_CASE("line point tower") {
  auto tower = line_point_tower(fixtures::t());
  REQUIRE(tower.size() == 1);
  CHECK(tower[0].points == std::vector<std::string>{"v"});
  CHECK(tower[0].closure.vertices == std::vector<std::string>{"v"});

  auto rt = line_point_tower(fixtures::rose2());
  REQUIRE(rt.size() == 1);
  CHECK(rt[0].points.empty());
  CHECK(rt[0].closure.vertices.empty());

  // the first stage already closes to everything here
  auto lt = line_point_tower(fixtures::line3());
  REQUIRE(lt.size() == 1);
  CHECK(lt[0].closure.vertices.size() == 3);
}

TEST_CASE("cycle chains") {
  CycleChains t = cycle_chains(fixtures::t());
  CHECK(t.disjoint);
  CHECK(t.d1 == 1);
  CHECK(t.d2 == 1);

  CycleChains e = cycle_chains(fixtures::e());
  CHECK(e.disjoint);
  CHECK(e.d1 == 1);
  CHECK(e.d2 == 0);

  CycleChains l = cycle_chains(fixtures::line3());
  CHECK(l.disjoint);
  CHECK(l.d1 == 0);
  CHECK(l.d2 == 0);

  CHECK_FALSE(cycle_chains(fixtures::rose2()).disjoint);
}

TEST_CASE("cycle chains of squares of disjoint-cycle quivers") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.cls = GeneratorConfig::Class::DisjointCycle;
    Quiver q = random_quiver(cfg);
    CycleChains cc = cycle_chains(q);
    REQUIRE(cc.disjoint);
    REQUIRE(cc.d1 >= 1);
    CycleChains sq = cycle_chains(kronecker_square(q));
    REQUIRE(sq.disjoint);
    CHECK(sq.d1 == 2 * cc.d1 - 1);
    CHECK(sq.d2 == (cc.d2 < cc.d1 ? 2 * cc.d1 - 2 : 2 * cc.d1 - 1));
  }
}

TEST_CASE("path counts") {
  PathCount l3 = paths_ending_at(fixtures::line3(), "v3");
  CHECK_FALSE(l3.infinite);
  CHECK(l3.total == 3);
  CHECK(l3.by_length ==
        std::map<std::uint64_t, std::uint64_t>{{0, 1}, {1, 1}, {2, 1}});

  CHECK(paths_ending_at(fixtures::t(), "v").infinite);

  PathCountOptions no_h;
  no_h.exclude_edges = {"h"};
  PathCount ew = paths_ending_at(fixtures::e(), "w", no_h);
  CHECK_FALSE(ew.infinite);
  CHECK(ew.total == 2);

  CHECK_THROWS_AS(paths_ending_at(fixtures::e(), "zzz"),
                  std::invalid_argument);
  PathCountOptions bad;
  bad.exclude_edges = {"nope"};
  CHECK_THROWS_AS(paths_ending_at(fixtures::e(), "w", bad),
                  std::invalid_argument);
}

TEST_CASE("vertex classification") {
  auto t = classify_vertices(fixtures::t());
  CHECK(t.at("u") == VertexClass::Other);
  CHECK(t.at("v") == VertexClass::Sink);

  auto e = classify_vertices(fixtures::e());
  CHECK(e.at("u") == VertexClass::Sink);
  CHECK(e.at("w") == VertexClass::LaurentVertex);
  CHECK(e.at("v") == VertexClass::Other);

  auto l = classify_vertices(loop1());
  CHECK(l.at("v") == VertexClass::LaurentVertex);

  auto l3 = classify_vertices(fixtures::line3());
  CHECK(l3.at("v1") == VertexClass::RayPoint);
  CHECK(l3.at("v2") == VertexClass::RayPoint);
  CHECK(l3.at("v3") == VertexClass::Sink);

  CHECK(std::string(vertex_class_name(VertexClass::Sink)) == "Sink");
}

TEST_CASE("diagonal ideal criterion") {
  CHECK(diagonal_is_ideal(loop1()));
  CHECK(diagonal_is_ideal(fixtures::line3()));
  CHECK_FALSE(diagonal_is_ideal(fixtures::e()));
  CHECK_FALSE(diagonal_is_ideal(fixtures::t()));
  // when the diagonal is an ideal, every vertex is a sink, ray point or
  // Laurent vertex
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    Quiver q = random_quiver(cfg);
    if (!diagonal_is_ideal(q)) continue;
    for (const auto& [v, c] : classify_vertices(q))
      CHECK(c != VertexClass::Other);
  }
}

TEST_CASE("reachability is reflexive and transitive") {
  Quiver q = fixtures::e();
  auto r = reachability(q);
  for (std::size_t v = 0; v < q.num_vertices(); ++v) CHECK(r[v][v]);
  CHECK(r[q.vertex_index("v")][q.vertex_index("w")]);
  CHECK_FALSE(r[q.vertex_index("u")][q.vertex_index("v")]);
}

TEST_CASE("cycle_has_exit") {
  Quiver t = fixtures::t();
  CHECK(cycle_has_exit(t, enumerate_cycles(t)[0]));
  Quiver e = fixtures::e();
  CHECK_FALSE(cycle_has_exit(e, enumerate_cycles(e)[0]));
}
