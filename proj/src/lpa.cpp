#include "quiverlab/lpa.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quiverlab {

namespace {

std::pair<int, std::uint64_t> summand_key_size(const Summand& s) {
  return {s.ring == RingKind::OverLaurent ? 1 : 0,
          s.infinite ? ~0ull : s.size};
}

std::uint64_t to_u64(const mpz_class& x) {
  if (!x.fits_ulong_p())
    throw std::overflow_error("graded dimension exceeds 64 bits");
  return x.get_ui();
}

// cnt[l][v] = number of paths of length l ending at v, l = 0..len.
std::vector<std::vector<mpz_class>> path_count_table(const Quiver& q,
                                                     std::size_t len) {
  std::size_t n = q.num_vertices();
  std::vector<std::vector<mpz_class>> cnt(len + 1,
                                          std::vector<mpz_class>(n, 0));
  for (std::size_t v = 0; v < n; ++v) cnt[0][v] = 1;
  for (std::size_t l = 1; l <= len; ++l)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t e : q.in_edges(v))
        cnt[l][v] += cnt[l - 1][q.edge_src(e)];
  return cnt;
}

std::size_t cycle_base(const Quiver& q, const Cycle& c) {
  return q.edge_src(c.edges.front());
}

// Length histogram of the paths ending at `base` that do not contain the
// whole cycle. Such a path enters the cycle at some vertex x (possibly
// base itself) without using cycle edges, then follows the exit-free
// cycle to base for fewer than a full turn.
std::map<std::uint64_t, std::uint64_t> cycle_path_hist(const Quiver& q,
                                                       const Cycle& c,
                                                       std::size_t base) {
  PathCountOptions opts;
  for (std::size_t e : c.edges) opts.exclude_edges.push_back(q.edges()[e].name);
  std::size_t ell = c.edges.size();
  std::size_t pos = ell;
  for (std::size_t i = 0; i < ell; ++i)
    if (q.edge_src(c.edges[i]) == base) pos = i;
  if (pos == ell) throw std::invalid_argument("base vertex not on cycle");
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::size_t i = 0; i < ell; ++i) {
    std::size_t x = q.edge_src(c.edges[i]);
    std::size_t dist = (pos + ell - i) % ell;  // steps from x to base
    PathCount pc = paths_ending_at(q, q.vertices()[x], opts);
    if (pc.infinite)
      throw std::logic_error("infinite path count into an exit-free cycle");
    for (const auto& [len, m] : pc.by_length) hist[len + dist] += m;
  }
  return hist;
}

}  // namespace

bool Decomposition::same_as(const Decomposition& o) const {
  if (summands.size() != o.summands.size()) return false;
  auto key = [](const Summand& s) { return summand_key_size(s); };
  std::vector<std::pair<int, std::uint64_t>> a, b;
  for (const auto& s : summands) a.push_back(key(s));
  for (const auto& s : o.summands) b.push_back(key(s));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string Decomposition::to_string() const {
  std::vector<Summand> s = summands;
  std::sort(s.begin(), s.end(), [](const Summand& a, const Summand& b) {
    return summand_key_size(a) > summand_key_size(b);
  });
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << " + ";
    if (s[i].infinite)
      os << "M_inf";
    else if (s[i].size == 1)
      os << (s[i].ring == RingKind::OverK ? "K" : "K[x,x^-1]");
    else
      os << "M" << s[i].size;
    if (s[i].size != 1 || s[i].infinite)
      os << (s[i].ring == RingKind::OverK ? "(K)" : "(K[x,x^-1])");
  }
  if (s.empty()) os << "0";
  return os.str();
}

bool is_locally_finite(const Quiver& q) {
  auto reach = reachability(q);
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    bool on_cycle = false;
    for (std::size_t e : q.out_edges(v))
      if (reach[q.edge_dst(e)][v]) {
        on_cycle = true;
        break;
      }
    if (on_cycle && q.out_degree(v) != 1) return false;
  }
  return true;
}

std::uint64_t cycle_summand_size(const Quiver& q, const Cycle& c,
                                 std::size_t base) {
  std::uint64_t total = 0;
  for (const auto& [len, m] : cycle_path_hist(q, c, base)) {
    (void)len;
    total += m;
  }
  return total;
}

Decomposition decompose(const Quiver& q) {
  if (!is_locally_finite(q))
    throw std::invalid_argument("decompose: quiver is not locally finite");
  Decomposition d;
  for (const Cycle& c : enumerate_cycles(q)) {
    std::size_t base = cycle_base(q, c);
    d.summands.push_back({RingKind::OverLaurent, false,
                          cycle_summand_size(q, c, base),
                          q.vertices()[base]});
  }
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (q.out_degree(v) == 0) {
      PathCount pc = paths_ending_at(q, q.vertices()[v]);
      if (pc.infinite)
        throw std::logic_error("infinite path count at a sink of a "
                               "locally finite quiver");
      d.summands.push_back({RingKind::OverK, false, pc.total,
                            q.vertices()[v]});
    }
  return d;
}

SocleResult socle_decomposition(const Quiver& q) {
  SocleResult r;
  r.socleSet = hereditary_saturated_closure(q, line_points(q));
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (q.out_degree(v) == 0) {
      PathCount pc = paths_ending_at(q, q.vertices()[v]);
      Summand s{RingKind::OverK, pc.infinite,
                pc.infinite ? 0 : pc.total, q.vertices()[v]};
      r.summands.summands.push_back(s);
    }
  r.quotient = remove_vertices(q, r.socleSet.vertices);
  return r;
}

std::uint64_t dim_graded(const Quiver& q, long n,
                         const std::map<std::size_t, std::size_t>& special) {
  if (!is_locally_finite(q))
    throw std::invalid_argument("dim_graded: quiver is not locally finite");
  std::size_t nv = q.num_vertices();

  // special edge per regular vertex: given, else least edge name
  std::map<std::size_t, std::size_t> sp = special;
  for (std::size_t v = 0; v < nv; ++v) {
    if (q.out_degree(v) == 0) continue;
    auto it = sp.find(v);
    if (it != sp.end()) {
      if (q.edge_src(it->second) != v)
        throw std::invalid_argument("special edge not out of its vertex");
      continue;
    }
    std::size_t best = q.out_edges(v).front();
    for (std::size_t e : q.out_edges(v))
      if (q.edges()[e].name < q.edges()[best].name) best = e;
    sp[v] = best;
  }

  // Every kept pair has a path of length < |Q0| (longer paths both end in
  // an exit-free cycle and their equal forced-special last edges exclude
  // the pair), so lengths up to |Q0| + |n| cover everything.
  std::size_t len = nv + static_cast<std::size_t>(n < 0 ? -n : n);
  auto cnt = path_count_table(q, len);

  mpz_class dim = 0;
  for (std::size_t b = 0; b <= len; ++b) {
    long a_signed = static_cast<long>(b) + n;
    if (a_signed < 0) continue;
    std::size_t a = static_cast<std::size_t>(a_signed);
    if (a > len) continue;
    for (std::size_t v = 0; v < nv; ++v) dim += cnt[a][v] * cnt[b][v];
    if (a >= 1 && b >= 1)
      for (const auto& [v, e] : sp) {
        (void)e;
        dim -= cnt[a - 1][v] * cnt[b - 1][v];
      }
  }
  return to_u64(dim);
}

std::uint64_t dim_graded_oracle(const Quiver& q, long n) {
  if (!is_locally_finite(q))
    throw std::invalid_argument(
        "dim_graded_oracle: quiver is not locally finite");
  mpz_class dim = 0;

  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (q.out_degree(v) == 0) {
      PathCount pc = paths_ending_at(q, q.vertices()[v]);
      for (const auto& [len, m] : pc.by_length) {
        long other = static_cast<long>(len) - n;
        if (other < 0) continue;
        auto it = pc.by_length.find(static_cast<std::uint64_t>(other));
        if (it != pc.by_length.end()) dim += mpz_class(m) * it->second;
      }
    }

  for (const Cycle& c : enumerate_cycles(q)) {
    std::size_t base = cycle_base(q, c);
    auto hist = cycle_path_hist(q, c, base);
    long ell = static_cast<long>(c.edges.size());
    std::vector<mpz_class> residue(ell, 0);
    for (const auto& [len, m] : hist)
      residue[static_cast<long>(len % static_cast<std::uint64_t>(ell))] += m;
    for (long r = 0; r < ell; ++r) {
      long r2 = ((r - n) % ell + ell) % ell;
      dim += residue[r] * residue[r2];
    }
  }
  return to_u64(dim);
}

std::uint64_t cross_product_dim(const Quiver& a, const Quiver& b, long n) {
  return dim_graded(a, n) * dim_graded(b, n);
}

std::string GradedIsoInvariant::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < sink_lists.size(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < sink_lists[i].size(); ++j) {
      if (j) os << ",";
      os << sink_lists[i][j];
    }
  }
  os << "}";
  return os.str();
}

GradedIsoInvariant graded_iso_invariant(const Quiver& q) {
  if (!is_acyclic(q))
    throw std::invalid_argument(
        "graded_iso_invariant: quiver must be acyclic");
  GradedIsoInvariant inv;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (q.out_degree(v) == 0) {
      PathCount pc = paths_ending_at(q, q.vertices()[v]);
      std::vector<std::uint64_t> lens;
      for (const auto& [len, m] : pc.by_length)
        for (std::uint64_t i = 0; i < m; ++i) lens.push_back(len);
      std::sort(lens.begin(), lens.end());
      inv.sink_lists.push_back(std::move(lens));
    }
  std::sort(inv.sink_lists.begin(), inv.sink_lists.end());
  return inv;
}

GKDim gk_dimension(const Quiver& q) {
  CycleChains cc = cycle_chains(q);
  if (!cc.disjoint) return {true, 0};
  if (cc.d1 == 0) return {false, 0};
  return {false, std::max(2 * cc.d1 - 1, 2 * cc.d2)};
}

RingProperties ring_properties(const Quiver& q) {
  RingProperties p;
  bool acyclic = is_acyclic(q);
  bool lf = is_locally_finite(q);
  bool dd = downward_directed(q);
  p.vonNeumannRegular = acyclic;
  p.locallyFinite = lf;
  p.noetherian = lf;
  p.artinian = acyclic;
  p.prime = dd;
  p.primitive = dd && condition_L(q);
  p.stronglyGraded = true;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (q.out_degree(v) == 0) p.stronglyGraded = false;
  return p;
}

}  // namespace quiverlab
