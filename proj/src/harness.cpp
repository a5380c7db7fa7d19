#include "quiverlab/harness.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "quiverlab/fixtures.hpp"
#include "quiverlab/ktheory.hpp"
#include "quiverlab/lpa.hpp"

namespace quiverlab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed ^ splitmix64(trial));
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string vname(std::size_t i) { return "v" + std::to_string(i + 1); }

Quiver build_arbitrary(std::mt19937_64& rng, const GeneratorConfig& cfg,
                       bool acyclic_only) {
  std::size_t n = pick(rng, cfg.min_vertices, cfg.max_vertices);
  std::vector<std::string> verts;
  for (std::size_t i = 0; i < n; ++i) verts.push_back(vname(i));
  std::size_t m = pick(rng, 0, cfg.max_edges);
  if (acyclic_only && n < 2) m = 0;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t a = pick(rng, 0, n - 1), b = pick(rng, 0, n - 1);
    if (acyclic_only) {
      if (a == b) continue;
      if (a > b) std::swap(a, b);
    }
    edges.push_back({"e" + std::to_string(edges.size() + 1), verts[a],
                     verts[b]});
  }
  return Quiver("random", std::move(verts), std::move(edges));
}

Quiver build_no_exit_cycle(std::mt19937_64& rng,
                           const GeneratorConfig& cfg) {
  Quiver dag = build_arbitrary(rng, cfg, true);
  std::vector<std::string> verts = dag.vertices();
  std::vector<Edge> edges = dag.edges();
  std::size_t extra = 0;
  for (std::size_t v = 0; v < dag.num_vertices(); ++v) {
    if (dag.out_degree(v) != 0) continue;
    if (pick(rng, 0, 1) == 0) continue;  // attach a cycle to some sinks
    std::size_t len = pick(rng, 1, 3);
    std::string prev = dag.vertices()[v];
    for (std::size_t k = 1; k < len; ++k) {
      std::string nv = "c" + std::to_string(++extra);
      verts.push_back(nv);
      edges.push_back({"ce" + std::to_string(edges.size()), prev, nv});
      prev = nv;
    }
    edges.push_back(
        {"ce" + std::to_string(edges.size()), prev, dag.vertices()[v]});
  }
  return Quiver("random_nec", std::move(verts), std::move(edges));
}

Quiver build_no_sink(std::mt19937_64& rng, const GeneratorConfig& cfg) {
  Quiver base = build_arbitrary(rng, cfg, false);
  std::vector<std::string> verts = base.vertices();
  std::vector<Edge> edges = base.edges();
  for (std::size_t v = 0; v < base.num_vertices(); ++v)
    if (base.out_degree(v) == 0)
      edges.push_back({"s" + std::to_string(edges.size()), verts[v],
                       verts[pick(rng, 0, verts.size() - 1)]});
  return Quiver("random_nosink", std::move(verts), std::move(edges));
}

Quiver build_line_union(std::mt19937_64& rng) {
  std::size_t comps = pick(rng, 1, 3);
  std::vector<std::string> verts;
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < comps; ++c) {
    std::size_t len = pick(rng, 1, 4);
    for (std::size_t i = 0; i < len; ++i) {
      std::string v =
          "l" + std::to_string(c + 1) + "_" + std::to_string(i + 1);
      verts.push_back(v);
      if (i > 0)
        edges.push_back({"f" + std::to_string(edges.size() + 1),
                         verts[verts.size() - 2], v});
    }
  }
  return Quiver("line_union", std::move(verts), std::move(edges));
}

// Disjoint cycles arranged along a DAG of connector edges: cycle i may
// reach cycle j only for i < j, so distinct cycles never share a vertex.
Quiver build_disjoint_cycle(std::mt19937_64& rng) {
  std::size_t cycles = pick(rng, 1, 3);
  std::vector<std::string> verts;
  std::vector<Edge> edges;
  std::vector<std::string> anchor;  // one vertex per cycle
  for (std::size_t c = 0; c < cycles; ++c) {
    std::size_t len = pick(rng, 1, 3);
    std::string first;
    for (std::size_t i = 0; i < len; ++i) {
      std::string v =
          "z" + std::to_string(c + 1) + "_" + std::to_string(i + 1);
      verts.push_back(v);
      if (i == 0)
        first = v;
      else
        edges.push_back({"k" + std::to_string(edges.size() + 1),
                         verts[verts.size() - 2], v});
    }
    edges.push_back({"k" + std::to_string(edges.size() + 1), verts.back(),
                     first});
    anchor.push_back(first);
  }
  for (std::size_t i = 0; i < cycles; ++i)
    for (std::size_t j = i + 1; j < cycles; ++j)
      if (pick(rng, 0, 1) == 1)
        edges.push_back({"x" + std::to_string(edges.size() + 1), anchor[i],
                         anchor[j]});
  return Quiver("disjoint_cycles", std::move(verts), std::move(edges));
}

Quiver relabel(const Quiver& q, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(q.num_vertices());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> verts(q.num_vertices());
  std::vector<std::string> newname(q.num_vertices());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    newname[perm[i]] = "w" + std::to_string(i + 1);
  }
  for (std::size_t i = 0; i < perm.size(); ++i) verts[i] = newname[i];
  std::vector<Edge> edges;
  for (const auto& e : q.edges())
    edges.push_back({"g" + std::to_string(edges.size() + 1),
                     newname[q.vertex_index(e.src)],
                     newname[q.vertex_index(e.dst)]});
  return Quiver(q.name() + "_relabeled", std::move(verts), std::move(edges));
}

}  // namespace

Quiver random_quiver(const GeneratorConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  switch (cfg.cls) {
    case GeneratorConfig::Class::Acyclic:
      return build_arbitrary(rng, cfg, true);
    case GeneratorConfig::Class::NoExitCycle:
      return build_no_exit_cycle(rng, cfg);
    case GeneratorConfig::Class::NoSink:
      return build_no_sink(rng, cfg);
    case GeneratorConfig::Class::LineUnion:
      return build_line_union(rng);
    case GeneratorConfig::Class::DisjointCycle:
      return build_disjoint_cycle(rng);
    case GeneratorConfig::Class::Arbitrary:
      break;
  }
  return build_arbitrary(rng, cfg, false);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::StrongPass: return "StrongPass";
    case Verdict::DecompositionPass: return "DecompositionPass";
    case Verdict::EvidencePass: return "EvidencePass";
    case Verdict::Fail: return "Fail";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

ConjectureReport conjecture_check(const Quiver& q) {
  ConjectureReport r;
  r.q = q;
  try {
    r.H = hereditary_saturated_closure(q, line_points(q));
    Quiver inner = remove_vertices(q, r.H.vertices);
    for (std::size_t v = 0; v < inner.num_vertices(); ++v)
      if (inner.out_degree(v) == 0) {
        r.verdict = Verdict::Inconclusive;
        r.detail = "saturation failed: quotient has a sink";
        return r;
      }
    Quiver sq = kronecker_square(q);
    r.Hhat = hereditary_saturated_closure(sq, line_points(sq));
    r.g1 = remove_vertices(sq, r.Hhat.vertices);
    r.g2 = kronecker_square(inner);

    if (r.g1.num_vertices() <= 64 && r.g2.num_vertices() <= 64 &&
        quiver_isomorphic(r.g1, r.g2)) {
      r.verdict = Verdict::StrongPass;
      r.detail = "quotient graphs are isomorphic";
      return r;
    }
    if (is_locally_finite(r.g1) && is_locally_finite(r.g2)) {
      Decomposition d1 = decompose(r.g1), d2 = decompose(r.g2);
      if (d1.same_as(d2)) {
        r.verdict = Verdict::DecompositionPass;
        r.detail = "equal decompositions: " + d1.to_string();
      } else {
        r.verdict = Verdict::Fail;
        r.detail = "decompositions differ: " + d1.to_string() + " vs " +
                   d2.to_string();
      }
      return r;
    }
    K0Group k1 = k0_group(r.g1), k2 = k0_group(r.g2);
    if (k1 == k2) {
      r.verdict = Verdict::EvidencePass;
      r.detail = "K0 groups agree: " + k1.to_string();
    } else {
      r.verdict = Verdict::Fail;
      r.detail =
          "K0 groups differ: " + k1.to_string() + " vs " + k2.to_string();
    }
  } catch (const std::exception& ex) {
    r.verdict = Verdict::Inconclusive;
    r.detail = std::string("evidence unavailable: ") + ex.what();
  }
  return r;
}

json conjecture_report_to_json(const ConjectureReport& r) {
  return {{"quiver", quiver_to_json(r.q)},
          {"H", r.H.vertices},
          {"Hhat", r.Hhat.vertices},
          {"G1", quiver_to_json(r.g1)},
          {"G2", quiver_to_json(r.g2)},
          {"verdict", verdict_name(r.verdict)},
          {"detail", r.detail}};
}

namespace {

struct Failure {
  std::uint64_t seed;
  json quiver;
  std::string property;
  std::string detail;
};

using TrialFn = void (*)(std::uint64_t, std::vector<Failure>&);

void record(std::vector<Failure>& fails, std::uint64_t seed, const Quiver& q,
            const std::string& prop, const std::string& detail) {
  fails.push_back({seed, quiver_to_json(q), prop, detail});
}

std::size_t count_sinks(const Quiver& q) {
  std::size_t s = 0;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (q.out_degree(v) == 0) ++s;
  return s;
}

std::size_t count_sources(const Quiver& q) {
  std::size_t s = 0;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (q.in_degree(v) == 0) ++s;
  return s;
}

std::size_t count_isolated(const Quiver& q) {
  std::size_t s = 0;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (q.out_degree(v) == 0 && q.in_degree(v) == 0) ++s;
  return s;
}

void trial_preservation(std::uint64_t seed, std::vector<Failure>& fails) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  Quiver q = random_quiver(cfg);
  Quiver sq = kronecker_square(q);
  if (condition_L(q) != condition_L(sq))
    record(fails, seed, q, "conditionL", "Condition (L) not preserved");
  if (condition_K(q) != condition_K(sq))
    record(fails, seed, q, "conditionK", "Condition (K) not preserved");
  if (is_acyclic(q) != is_acyclic(sq))
    record(fails, seed, q, "acyclic", "acyclicity not preserved");
  bool clean = count_sinks(q) == 0 && count_sources(q) == 0;
  bool clean_sq = count_sinks(sq) == 0 && count_sources(sq) == 0;
  if (clean != clean_sq)
    record(fails, seed, q, "sourceSink",
           "no-source-or-sink not preserved");
}

void trial_census(std::uint64_t seed, std::vector<Failure>& fails) {
  // the 2*sinks*sources formula needs Sinks and Sources disjoint, so
  // condition on quivers without isolated vertices
  Quiver q;
  bool ok = false;
  for (std::uint64_t att = 0; att < 64; ++att) {
    GeneratorConfig cfg;
    cfg.seed = sub_seed(seed, att);
    q = random_quiver(cfg);
    if (count_isolated(q) == 0) {
      ok = true;
      break;
    }
  }
  if (!ok) return;
  Quiver sq = kronecker_square(q);
  std::size_t s = count_sinks(q), r = count_sources(q);
  std::size_t n = q.num_vertices();
  if (count_isolated(sq) != 2 * s * r)
    record(fails, seed, q, "isolated",
           "isolated(square) != 2*sinks*sources");
  if (count_sinks(sq) != s * (2 * n - s))
    record(fails, seed, q, "sinks",
           "sinks(square) != sinks*(2|Q0|-sinks)");
}

void trial_linepoints(std::uint64_t seed, std::vector<Failure>& fails) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  Quiver q = random_quiver(cfg);
  HSSet h = hereditary_saturated_closure(q, line_points(q));
  Quiver rest = remove_vertices(q, h.vertices);
  if (!line_points(rest).empty())
    record(fails, seed, q, "linepoints",
           "second-stage line points nonempty");
}

void trial_prime(std::uint64_t seed, std::vector<Failure>& fails) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  Quiver q = random_quiver(cfg);
  if (q.num_vertices() == 0) return;
  Quiver sq = kronecker_square(q);
  if (downward_directed(sq) && !downward_directed(q))
    record(fails, seed, q, "prime", "square prime but quiver not prime");
}

void trial_strongly_graded(std::uint64_t seed, std::vector<Failure>& fails) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  Quiver q = random_quiver(cfg);
  if ((count_sinks(q) == 0) != (count_sinks(kronecker_square(q)) == 0))
    record(fails, seed, q, "stronglyGraded",
           "sink-freeness not preserved by squaring");
}

void trial_kronsquareiso(std::uint64_t seed, std::vector<Failure>& fails) {
  GeneratorConfig cfg;
  cfg.seed = sub_seed(seed, 1);
  cfg.cls = GeneratorConfig::Class::NoExitCycle;
  Quiver q = random_quiver(cfg);
  Quiver q2;
  if (seed % 3 == 0) {  // injected positive: q2 is a relabeled copy of q
    std::mt19937_64 rng(sub_seed(seed, 2));
    q2 = relabel(q, rng);
  } else {
    cfg.seed = sub_seed(seed, 3);
    q2 = random_quiver(cfg);
  }
  Decomposition sd1 = decompose(kronecker_square(q));
  Decomposition sd2 = decompose(kronecker_square(q2));
  if (sd1.same_as(sd2)) {
    Decomposition d1 = decompose(q), d2 = decompose(q2);
    if (!d1.same_as(d2))
      record(fails, seed, q, "kronsquareiso",
             "squares agree (" + sd1.to_string() + ") but quivers differ: " +
                 d1.to_string() + " vs " + d2.to_string());
  }
}

void trial_shifteq(std::uint64_t seed, std::vector<Failure>& fails) {
  std::mt19937_64 rng(seed);
  std::size_t n = pick(rng, 1, 4), k = pick(rng, 1, 4);
  IntMatrix R(n, k), S(k, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) R.at(i, j) = pick(rng, 0, 2);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) S.at(i, j) = pick(rng, 0, 2);
  ShiftEquivalenceWitness w{R * S, S * R, R, S, 1};
  auto bad = verify_shift_equivalence(w);
  if (!bad.empty()) {
    record(fails, seed, Quiver(), "shifteq",
           "generated witness rejected: " + bad.front());
    return;
  }
  auto lifted_bad = verify_shift_equivalence(lift_shift_equivalence(w));
  if (!lifted_bad.empty())
    record(fails, seed, Quiver(), "shifteqLift",
           "lifted witness rejected: " + lifted_bad.front());
}

void trial_gk_square(std::uint64_t seed, std::vector<Failure>& fails) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.cls = GeneratorConfig::Class::DisjointCycle;
  Quiver q = random_quiver(cfg);
  GKDim g = gk_dimension(q);
  if (g.infinite || g.value == 0) {
    record(fails, seed, q, "gkSquareGen",
           "generator postcondition violated (gk not finite positive)");
    return;
  }
  GKDim gs = gk_dimension(kronecker_square(q));
  std::size_t expect =
      (g.value % 2 == 1) ? 2 * g.value - 1 : 2 * g.value - 2;
  if (gs.infinite || gs.value != expect)
    record(fails, seed, q, "gkSquare",
           "gk(square) = " +
               (gs.infinite ? std::string("inf")
                            : std::to_string(gs.value)) +
               ", expected " + std::to_string(expect));
}

void trial_line_union_cross(std::uint64_t seed, std::vector<Failure>& fails) {
  GeneratorConfig cfg;
  cfg.seed = sub_seed(seed, 1);
  cfg.cls = GeneratorConfig::Class::LineUnion;
  Quiver a = random_quiver(cfg);
  cfg.seed = sub_seed(seed, 2);
  Quiver b = random_quiver(cfg);
  Quiver prod = kronecker_product(a, b);
  for (long n = -5; n <= 5; ++n)
    if (dim_graded(prod, n) != cross_product_dim(a, b, n)) {
      record(fails, seed, a, "lineUnionCross",
             "dim mismatch at degree " + std::to_string(n));
      return;
    }
  // stored negative control: the identity must fail on E at degree 0
  Quiver e = fixtures::e();
  std::uint64_t lhs = dim_graded(kronecker_square(e), 0);
  std::uint64_t rhs = cross_product_dim(e, e, 0);
  if (!(lhs == 30 && rhs == 36))
    record(fails, seed, e, "negativeControl",
           "expected (30, 36), got (" + std::to_string(lhs) + ", " +
               std::to_string(rhs) + ")");
}

void trial_dims(std::uint64_t seed, std::vector<Failure>& fails) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.cls = GeneratorConfig::Class::NoExitCycle;
  Quiver q = random_quiver(cfg);
  if (!is_locally_finite(q)) {
    record(fails, seed, q, "dimsGen", "generator postcondition violated");
    return;
  }
  for (long n = -5; n <= 5; ++n) {
    std::uint64_t d = dim_graded(q, n), o = dim_graded_oracle(q, n);
    if (d != o) {
      record(fails, seed, q, "dims",
             "degree " + std::to_string(n) + ": basis " + std::to_string(d) +
                 " vs oracle " + std::to_string(o));
      return;
    }
  }
  // independence of the special-edge choice
  std::mt19937_64 rng(sub_seed(seed, 7));
  std::map<std::size_t, std::size_t> special;
  for (std::size_t v = 0; v < q.num_vertices(); ++v)
    if (q.out_degree(v) > 0)
      special[v] = q.out_edges(v)[pick(rng, 0, q.out_degree(v) - 1)];
  for (long n : {-3L, 0L, 2L})
    if (dim_graded(q, n, special) != dim_graded(q, n))
      record(fails, seed, q, "dimsSpecialEdge",
             "dimension depends on the special-edge choice at degree " +
                 std::to_string(n));
}

void trial_conjecture(std::uint64_t seed, std::vector<Failure>& fails) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.cls = GeneratorConfig::Class::NoExitCycle;
  cfg.max_vertices = 5;
  Quiver q = random_quiver(cfg);
  ConjectureReport r = conjecture_check(q);
  if (r.verdict == Verdict::Fail)
    record(fails, seed, q, "conjecture", r.detail);
}

void trial_generator(std::uint64_t seed, std::vector<Failure>& fails) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.cls = GeneratorConfig::Class::Acyclic;
  if (!is_acyclic(random_quiver(cfg)))
    record(fails, seed, random_quiver(cfg), "genAcyclic",
           "acyclic generator produced a cycle");
  cfg.cls = GeneratorConfig::Class::NoExitCycle;
  if (!is_locally_finite(random_quiver(cfg)))
    record(fails, seed, random_quiver(cfg), "genNoExitCycle",
           "noExitCycle generator produced an exit");
  cfg.cls = GeneratorConfig::Class::NoSink;
  if (count_sinks(random_quiver(cfg)) != 0)
    record(fails, seed, random_quiver(cfg), "genNoSink",
           "noSink generator produced a sink");
  cfg.cls = GeneratorConfig::Class::Arbitrary;
  Quiver a = random_quiver(cfg), b = random_quiver(cfg);
  if (!(a == b))
    record(fails, seed, a, "genDeterministic",
           "same seed produced different quivers");
}

struct Suite {
  const char* name;
  TrialFn fn;
};

const Suite kSuites[] = {
    {"preservation", trial_preservation},
    {"census", trial_census},
    {"linepoints", trial_linepoints},
    {"prime", trial_prime},
    {"stronglygraded", trial_strongly_graded},
    {"kronsquareiso", trial_kronsquareiso},
    {"shifteq", trial_shifteq},
    {"gk-square", trial_gk_square},
    {"line-union-cross", trial_line_union_cross},
    {"dims", trial_dims},
    {"conjecture", trial_conjecture},
    {"generator", trial_generator},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : kSuites) out.push_back(s.name);
  return out;
}

json run_suite(const std::string& name, std::size_t trials,
               std::uint64_t seed) {
  const Suite* suite = nullptr;
  for (const auto& s : kSuites)
    if (name == s.name) suite = &s;
  if (!suite) throw std::invalid_argument("unknown suite: " + name);

  std::vector<Failure> fails;
  for (std::size_t t = 0; t < trials; ++t)
    suite->fn(sub_seed(seed, t), fails);

  json jfails = json::array();
  for (const auto& f : fails)
    jfails.push_back({{"seed", f.seed},
                      {"quiver", f.quiver},
                      {"property", f.property},
                      {"detail", f.detail}});
  return {{"suite", name},
          {"trials", trials},
          {"seed", seed},
          {"prng", "mt19937_64"},
          {"passes", trials - fails.size()},
          {"failures", jfails}};
}

}  // namespace quiverlab
