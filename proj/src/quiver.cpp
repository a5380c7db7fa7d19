#include "quiverlab/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace quiverlab {

Quiver::Quiver(std::string name, std::vector<std::string> vertices,
               std::vector<Edge> edges)
    : name_(std::move(name)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
  vindex_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vindex_.emplace(vertices_[i], i).second)
      throw std::invalid_argument("duplicate vertex name: " + vertices_[i]);
  }
  std::set<std::string> enames;
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  esrc_.reserve(edges_.size());
  edst_.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (!enames.insert(ed.name).second)
      throw std::invalid_argument("duplicate edge name: " + ed.name);
    auto s = vindex_.find(ed.src);
    auto r = vindex_.find(ed.dst);
    if (s == vindex_.end() || r == vindex_.end())
      throw std::invalid_argument("edge " + ed.name +
                                  " references unknown vertex");
    esrc_.push_back(s->second);
    edst_.push_back(r->second);
    out_[s->second].push_back(e);
    in_[r->second].push_back(e);
  }
}

bool Quiver::has_vertex(const std::string& v) const {
  return vindex_.count(v) > 0;
}

std::size_t Quiver::vertex_index(const std::string& v) const {
  auto it = vindex_.find(v);
  if (it == vindex_.end())
    throw std::invalid_argument("unknown vertex: " + v);
  return it->second;
}

IntMatrix adjacency_matrix(const Quiver& q) {
  IntMatrix m(q.num_vertices(), q.num_vertices());
  for (std::size_t e = 0; e < q.num_edges(); ++e)
    m.at(q.edge_src(e), q.edge_dst(e)) += 1;
  return m;
}

Quiver kronecker_product(const Quiver& a, const Quiver& b,
                         const std::string& sep) {
  for (const auto& v : a.vertices())
    if (v.find(sep) != std::string::npos)
      throw std::invalid_argument("vertex name collides with separator: " + v);
  for (const auto& v : b.vertices())
    if (v.find(sep) != std::string::npos)
      throw std::invalid_argument("vertex name collides with separator: " + v);
  for (const auto& e : a.edges())
    if (e.name.find(sep) != std::string::npos)
      throw std::invalid_argument("edge name collides with separator: " +
                                  e.name);
  for (const auto& e : b.edges())
    if (e.name.find(sep) != std::string::npos)
      throw std::invalid_argument("edge name collides with separator: " +
                                  e.name);

  std::vector<std::string> verts;
  verts.reserve(a.num_vertices() * b.num_vertices());
  for (const auto& u : a.vertices())
    for (const auto& v : b.vertices()) verts.push_back(u + sep + v);

  std::vector<Edge> edges;
  edges.reserve(a.num_edges() * b.num_edges());
  for (const auto& e : a.edges())
    for (const auto& f : b.edges())
      edges.push_back({e.name + sep + f.name, e.src + sep + f.src,
                       e.dst + sep + f.dst});

  return Quiver(a.name() + sep + b.name(), std::move(verts), std::move(edges));
}

Quiver kronecker_square(const Quiver& q, const std::string& sep) {
  return kronecker_product(q, q, sep);
}

Quiver out_split(const Quiver& q, const OutSplitPartition& p) {
  // Validate the partition: every non-sink vertex present, blocks nonempty,
  // disjoint, and covering s^{-1}(v) exactly.
  std::vector<std::size_t> m(q.num_vertices(), 0);
  std::vector<std::vector<std::size_t>> block_of_edge_holder;
  std::vector<std::size_t> block_of(q.num_edges(), 0);
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    if (q.out_degree(v) == 0) {
      if (p.blocks.count(q.vertices()[v]))
        throw std::invalid_argument("partition lists sink vertex: " +
                                    q.vertices()[v]);
      continue;
    }
    auto it = p.blocks.find(q.vertices()[v]);
    if (it == p.blocks.end())
      throw std::invalid_argument("partition missing non-sink vertex: " +
                                  q.vertices()[v]);
    std::set<std::string> seen;
    std::size_t covered = 0;
    for (std::size_t b = 0; b < it->second.size(); ++b) {
      if (it->second[b].empty())
        throw std::invalid_argument("empty partition block at vertex " +
                                    q.vertices()[v]);
      for (const auto& ename : it->second[b]) {
        if (!seen.insert(ename).second)
          throw std::invalid_argument("edge repeated in partition: " + ename);
        bool found = false;
        for (std::size_t e : q.out_edges(v)) {
          if (q.edges()[e].name == ename) {
            block_of[e] = b;
            found = true;
            ++covered;
            break;
          }
        }
        if (!found)
          throw std::invalid_argument("partition block at " + q.vertices()[v] +
                                      " contains unknown edge: " + ename);
      }
    }
    if (covered != q.out_degree(v))
      throw std::invalid_argument("partition does not cover s^{-1}(" +
                                  q.vertices()[v] + ")");
    m[v] = it->second.size();
  }

  auto copies = [&](std::size_t v) { return std::max<std::size_t>(m[v], 1); };
  auto vcopy_name = [&](std::size_t v, std::size_t i) {
    if (copies(v) == 1) return q.vertices()[v];
    return q.vertices()[v] + std::to_string(i + 1);
  };
  auto ecopy_name = [&](std::size_t e, std::size_t j, std::size_t n) {
    if (n == 1) return q.edges()[e].name;
    return q.edges()[e].name + std::to_string(j + 1);
  };

  std::vector<std::string> verts;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    for (std::size_t i = 0; i < copies(v); ++i) verts.push_back(vcopy_name(v, i));

  // Edge e: v -> w in block i becomes e^j: v^i -> w^j, j = 1..copies(w).
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < q.num_edges(); ++e) {
    std::size_t v = q.edge_src(e), w = q.edge_dst(e);
    std::size_t n = copies(w);
    for (std::size_t j = 0; j < n; ++j)
      edges.push_back({ecopy_name(e, j, n), vcopy_name(v, block_of[e]),
                       vcopy_name(w, j)});
  }

  return Quiver(q.name() + "_split", std::move(verts), std::move(edges));
}

Quiver induced_subquiver(const Quiver& q, const std::vector<bool>& keep,
                         const std::string& name) {
  std::vector<std::string> verts;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (keep[v]) verts.push_back(q.vertices()[v]);
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < q.num_edges(); ++e)
    if (keep[q.edge_src(e)] && keep[q.edge_dst(e)]) edges.push_back(q.edges()[e]);
  return Quiver(name, std::move(verts), std::move(edges));
}

Quiver remove_vertices(const Quiver& q, const std::vector<std::string>& h) {
  std::vector<bool> keep(q.num_vertices(), true);
  for (const auto& v : h) keep[q.vertex_index(v)] = false;
  return induced_subquiver(q, keep, q.name());
}

WeakComponents weak_components(const Quiver& q) {
  std::vector<std::size_t> parent(q.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < q.num_edges(); ++e) {
    std::size_t a = find(q.edge_src(e)), b = find(q.edge_dst(e));
    if (a != b) parent[a] = b;
  }
  // Components ordered by their least vertex index.
  std::map<std::size_t, std::size_t> root_to_block;
  WeakComponents wc;
  std::vector<std::vector<bool>> keep;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    std::size_t r = find(v);
    auto it = root_to_block.find(r);
    if (it == root_to_block.end()) {
      it = root_to_block.emplace(r, wc.blocks.size()).first;
      wc.blocks.emplace_back();
      keep.emplace_back(q.num_vertices(), false);
    }
    wc.blocks[it->second].push_back(q.vertices()[v]);
    keep[it->second][v] = true;
  }
  for (std::size_t b = 0; b < wc.blocks.size(); ++b)
    wc.subquivers.push_back(induced_subquiver(
        q, keep[b], q.name() + "#" + std::to_string(b)));
  return wc;
}

namespace {

// Multiplicity matrix invariant used for pruning: a vertex bijection extends
// to an edge bijection iff it preserves edge multiplicities between every
// vertex pair.
struct IsoState {
  const Quiver& a;
  const Quiver& b;
  std::vector<std::vector<std::size_t>> ma, mb;  // multiplicities
  std::vector<long> assign;                      // a-vertex -> b-vertex
  std::vector<bool> used;

  bool compatible(std::size_t va, std::size_t vb) const {
    if (ma[va][va] != mb[vb][vb]) return false;
    for (std::size_t u = 0; u < assign.size(); ++u) {
      if (assign[u] < 0) continue;
      std::size_t ub = static_cast<std::size_t>(assign[u]);
      if (ma[va][u] != mb[vb][ub] || ma[u][va] != mb[ub][vb]) return false;
    }
    return true;
  }

  bool search(std::size_t va) {
    if (va == assign.size()) return true;
    for (std::size_t vb = 0; vb < used.size(); ++vb) {
      if (used[vb]) continue;
      if (a.out_degree(va) != b.out_degree(vb) ||
          a.in_degree(va) != b.in_degree(vb))
        continue;
      if (!compatible(va, vb)) continue;
      assign[va] = static_cast<long>(vb);
      used[vb] = true;
      if (search(va + 1)) return true;
      assign[va] = -1;
      used[vb] = false;
    }
    return false;
  }
};

std::vector<std::vector<std::size_t>> multiplicities(const Quiver& q) {
  std::vector<std::vector<std::size_t>> m(
      q.num_vertices(), std::vector<std::size_t>(q.num_vertices(), 0));
  for (std::size_t e = 0; e < q.num_edges(); ++e)
    ++m[q.edge_src(e)][q.edge_dst(e)];
  return m;
}

}  // namespace

std::optional<QuiverBijection> quiver_isomorphic(const Quiver& a,
                                                 const Quiver& b,
                                                 std::size_t vertex_cap) {
  if (a.num_vertices() > vertex_cap || b.num_vertices() > vertex_cap)
    throw std::invalid_argument("isomorphism search: vertex cap exceeded");
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
    return std::nullopt;

  // Degree-sequence pruning up front.
  auto degseq = [](const Quiver& q) {
    std::vector<std::pair<std::size_t, std::size_t>> d;
    for (std::size_t v = 0; v < q.num_vertices(); ++v)
      d.emplace_back(q.out_degree(v), q.in_degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degseq(a) != degseq(b)) return std::nullopt;

  IsoState st{a, b, multiplicities(a), multiplicities(b),
              std::vector<long>(a.num_vertices(), -1),
              std::vector<bool>(b.num_vertices(), false)};
  if (!st.search(0)) return std::nullopt;

  QuiverBijection bij;
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    bij.vertex_map[a.vertices()[v]] =
        b.vertices()[static_cast<std::size_t>(st.assign[v])];

  // Pair off parallel edges between matched endpoints in list order.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> be;
  for (std::size_t e = 0; e < b.num_edges(); ++e)
    be[{b.edge_src(e), b.edge_dst(e)}].push_back(e);
  for (std::size_t e = 0; e < a.num_edges(); ++e) {
    std::size_t s = static_cast<std::size_t>(st.assign[a.edge_src(e)]);
    std::size_t r = static_cast<std::size_t>(st.assign[a.edge_dst(e)]);
    auto& pool = be[{s, r}];
    bij.edge_map[a.edges()[e].name] = b.edges()[pool.back()].name;
    pool.pop_back();
  }
  return bij;
}

bool verify_bijection(const Quiver& a, const Quiver& b,
                      const QuiverBijection& m) {
  if (m.vertex_map.size() != a.num_vertices() ||
      m.edge_map.size() != a.num_edges())
    return false;
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
    return false;
  std::set<std::string> img;
  for (const auto& [av, bv] : m.vertex_map) {
    if (!a.has_vertex(av) || !b.has_vertex(bv)) return false;
    if (!img.insert(bv).second) return false;
  }
  std::map<std::string, const Edge*> bedges;
  for (const auto& e : b.edges()) bedges[e.name] = &e;
  std::set<std::string> eimg;
  for (const auto& ae : a.edges()) {
    auto it = m.edge_map.find(ae.name);
    if (it == m.edge_map.end()) return false;
    if (!eimg.insert(it->second).second) return false;
    auto be = bedges.find(it->second);
    if (be == bedges.end()) return false;
    if (m.vertex_map.at(ae.src) != be->second->src) return false;
    if (m.vertex_map.at(ae.dst) != be->second->dst) return false;
  }
  return true;
}

std::string to_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph \"" << q.name() << "\" {\n";
  for (const auto& v : q.vertices()) os << "  \"" << v << "\";\n";
  for (const auto& e : q.edges())
    os << "  \"" << e.src << "\" -> \"" << e.dst << "\" [label=\"" << e.name
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace quiverlab
