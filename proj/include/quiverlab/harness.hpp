#ifndef QUIVERLAB_HARNESS_HPP
#define QUIVERLAB_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "quiverlab/analysis.hpp"
#include "quiverlab/json_io.hpp"
#include "quiverlab/quiver.hpp"

namespace quiverlab {

struct GeneratorConfig {
  enum class Class {
    Acyclic,
    NoExitCycle,
    NoSink,
    LineUnion,
    Arbitrary,
    DisjointCycle
  };

  std::uint64_t seed = 0;
  Class cls = Class::Arbitrary;
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  std::size_t max_edges = 8;
};

/// Deterministic per (seed, config); the PRNG is mt19937_64.
Quiver random_quiver(const GeneratorConfig& cfg);

enum class Verdict {
  StrongPass,
  DecompositionPass,
  EvidencePass,
  Fail,
  Inconclusive
};

const char* verdict_name(Verdict v);

struct ConjectureReport {
  Quiver q;
  HSSet H;      // closure of line points of q
  HSSet Hhat;   // closure of line points of the square
  Quiver g1;    // square of q minus Hhat
  Quiver g2;    // square of (q minus H)
  Verdict verdict = Verdict::Inconclusive;
  std::string detail;
};

ConjectureReport conjecture_check(const Quiver& q);

json conjecture_report_to_json(const ConjectureReport& r);

std::vector<std::string> suite_names();

/// Runs the named property suite; throws std::invalid_argument for an
/// unknown name. Identical (name, trials, seed) give identical reports.
json run_suite(const std::string& name, std::size_t trials,
               std::uint64_t seed);

}  // namespace quiverlab

#endif
