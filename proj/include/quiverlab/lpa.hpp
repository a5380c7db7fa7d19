#ifndef QUIVERLAB_LPA_HPP
#define QUIVERLAB_LPA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quiverlab/analysis.hpp"
#include "quiverlab/quiver.hpp"

namespace quiverlab {

enum class RingKind { OverK, OverLaurent };

/// Matrix summand M_size(K) or M_size(K[x,x^-1]); origin records the sink
/// or cycle base vertex it came from (ignored by comparisons).
struct Summand {
  RingKind ring = RingKind::OverK;
  bool infinite = false;
  std::uint64_t size = 0;
  std::string origin;
};

struct Decomposition {
  std::vector<Summand> summands;

  /// Multiset equality on (ring, size), origins ignored.
  bool same_as(const Decomposition& o) const;
  std::string to_string() const;
};

bool is_locally_finite(const Quiver& q);

Decomposition decompose(const Quiver& q);

/// Size of the Laurent summand for `c` when `base` (a vertex index on the
/// cycle) is used instead of the default lexicographically least vertex.
std::uint64_t cycle_summand_size(const Quiver& q, const Cycle& c,
                                 std::size_t base);

struct SocleResult {
  Decomposition summands;
  HSSet socleSet;
  Quiver quotient;
};

SocleResult socle_decomposition(const Quiver& q);

/// dim of the degree-n homogeneous component via the special-edge basis.
/// An empty `special` map designates the edge with the least name out of
/// each regular vertex.
std::uint64_t dim_graded(const Quiver& q, long n,
                         const std::map<std::size_t, std::size_t>& special = {});

/// Same dimension from the locally-finite decomposition; independent of
/// dim_graded and used as its oracle.
std::uint64_t dim_graded_oracle(const Quiver& q, long n);

std::uint64_t cross_product_dim(const Quiver& a, const Quiver& b, long n);

/// Per-sink multisets of lengths of paths ending at the sink (trivial path
/// included), as a multiset over sinks. Acyclic quivers only.
struct GradedIsoInvariant {
  std::vector<std::vector<std::uint64_t>> sink_lists;  // each sorted; outer sorted

  bool operator==(const GradedIsoInvariant&) const = default;
  std::string to_string() const;
};

GradedIsoInvariant graded_iso_invariant(const Quiver& q);

struct GKDim {
  bool infinite = false;
  std::size_t value = 0;

  bool operator==(const GKDim&) const = default;
};

GKDim gk_dimension(const Quiver& q);

struct RingProperties {
  bool vonNeumannRegular = false;
  bool noetherian = false;
  bool artinian = false;
  bool locallyFinite = false;
  bool prime = false;
  bool primitive = false;
  bool stronglyGraded = false;
};

RingProperties ring_properties(const Quiver& q);

}  // namespace quiverlab

#endif
