#ifndef QUIVERLAB_ANALYSIS_HPP
#define QUIVERLAB_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quiverlab/quiver.hpp"

namespace quiverlab {

/// A simple cycle, stored as the edge sequence rotated to start at the
/// lexicographically least vertex name on the cycle.
struct Cycle {
  std::vector<std::size_t> edges;

  bool operator==(const Cycle&) const = default;
};

struct DegreeCensus {
  std::vector<std::string> sinks, sources, isolated, regular;
};

struct PathCountOptions {
  std::vector<std::string> exclude_edges;
};

/// Number of paths ending at a vertex (trivial path included); infinite
/// exactly when a cycle reaches the vertex through allowed edges.
struct PathCount {
  bool infinite = false;
  std::uint64_t total = 0;
  std::map<std::uint64_t, std::uint64_t> by_length;  // empty when infinite
};

/// A vertex subset verified hereditary and saturated; kept in quiver order.
struct HSSet {
  std::vector<std::string> vertices;

  bool operator==(const HSSet&) const = default;
};

struct CycleChains {
  bool disjoint = true;
  std::size_t d1 = 0;  // longest chain of cycles (count of cycles)
  std::size_t d2 = 0;  // longest chain whose final cycle has an exit
};

enum class VertexClass { Sink, RayPoint, LaurentVertex, Other };

struct TowerStage {
  std::vector<std::string> points;  // cumulative P_l^n
  HSSet closure;
};

DegreeCensus degree_census(const Quiver& q);

std::vector<Cycle> enumerate_cycles(const Quiver& q,
                                    std::size_t cap = 200000);

bool is_acyclic(const Quiver& q);
bool condition_L(const Quiver& q);
bool condition_K(const Quiver& q);
bool downward_directed(const Quiver& q);

// Reflexive-transitive reachability; row v = vertices reachable from v.
std::vector<std::vector<bool>> reachability(const Quiver& q);

bool cycle_has_exit(const Quiver& q, const Cycle& c);

std::vector<std::string> line_points(const Quiver& q);

HSSet hereditary_saturated_closure(const Quiver& q,
                                   const std::vector<std::string>& seed);
bool is_hereditary(const Quiver& q, const std::vector<std::string>& set);
bool is_saturated(const Quiver& q, const std::vector<std::string>& set);

std::vector<TowerStage> line_point_tower(const Quiver& q);

CycleChains cycle_chains(const Quiver& q);

PathCount paths_ending_at(const Quiver& q, const std::string& v,
                          const PathCountOptions& opts = {});

std::map<std::string, VertexClass> classify_vertices(const Quiver& q);

bool diagonal_is_ideal(const Quiver& q);

const char* vertex_class_name(VertexClass c);

}  // namespace quiverlab

#endif
