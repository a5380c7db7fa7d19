#ifndef QUIVERLAB_QUIVER_HPP
#define QUIVERLAB_QUIVER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "quiverlab/matrix.hpp"

namespace quiverlab {

struct Edge {
  std::string name;
  std::string src;
  std::string dst;

  bool operator==(const Edge&) const = default;
};

/// A finite quiver: named vertices and edges with source/range maps.
/// Ordering of the vertex and edge lists is part of the value; it fixes
/// the row/column indices of the adjacency matrix. Parallel edges and
/// loops are allowed. Immutable after construction.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::string name, std::vector<std::string> vertices,
         std::vector<Edge> edges);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(const std::string& v) const;
  std::size_t vertex_index(const std::string& v) const;

  std::size_t edge_src(std::size_t e) const { return esrc_[e]; }
  std::size_t edge_dst(std::size_t e) const { return edst_[e]; }

  const std::vector<std::size_t>& out_edges(std::size_t v) const {
    return out_[v];
  }
  const std::vector<std::size_t>& in_edges(std::size_t v) const {
    return in_[v];
  }
  std::size_t out_degree(std::size_t v) const { return out_[v].size(); }
  std::size_t in_degree(std::size_t v) const { return in_[v].size(); }

  bool operator==(const Quiver& o) const {
    return name_ == o.name_ && vertices_ == o.vertices_ && edges_ == o.edges_;
  }

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vindex_;
  std::vector<std::size_t> esrc_, edst_;
  std::vector<std::vector<std::size_t>> out_, in_;
};

/// Ordered partition of every non-sink vertex's out-edges into blocks.
struct OutSplitPartition {
  // vertex name -> ordered list of blocks, each a list of edge names
  std::map<std::string, std::vector<std::vector<std::string>>> blocks;
};

struct QuiverBijection {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> edge_map;
};

struct WeakComponents {
  std::vector<std::vector<std::string>> blocks;
  std::vector<Quiver> subquivers;
};

// Entry (i,j) counts edges from vertex i to vertex j.
IntMatrix adjacency_matrix(const Quiver& q);

Quiver kronecker_product(const Quiver& a, const Quiver& b,
                         const std::string& sep = "|");
Quiver kronecker_square(const Quiver& q, const std::string& sep = "|");

Quiver out_split(const Quiver& q, const OutSplitPartition& p);

Quiver remove_vertices(const Quiver& q, const std::vector<std::string>& h);

Quiver induced_subquiver(const Quiver& q, const std::vector<bool>& keep,
                         const std::string& name);

WeakComponents weak_components(const Quiver& q);

// Backtracking isomorphism search with degree-sequence pruning.
// Inputs above the cap raise std::invalid_argument.
std::optional<QuiverBijection> quiver_isomorphic(const Quiver& a,
                                                 const Quiver& b,
                                                 std::size_t vertex_cap = 64);

// Checks that m is a returned bijection preserving src/dst.
bool verify_bijection(const Quiver& a, const Quiver& b,
                      const QuiverBijection& m);

std::string to_dot(const Quiver& q);

}  // namespace quiverlab

#endif
