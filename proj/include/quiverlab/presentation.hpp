#ifndef QUIVERLAB_PRESENTATION_HPP
#define QUIVERLAB_PRESENTATION_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quiverlab/quiver.hpp"

namespace quiverlab {

/// Generator symbol key: the ordered pair of component names, a ghost
/// component carrying a trailing '*' (e.g. {"e*","f*"} or {"e","f*"}).
struct GenKey {
  std::string first, second;

  auto operator<=>(const GenKey&) const = default;
  std::string to_string() const { return "[" + first + "," + second + "]"; }
};

/// Declared generator: a vertex-pair idempotent or an arrow-pair symbol of
/// the double quiver, with its source/range vertex pairs.
struct Gen {
  GenKey key;
  bool vertex = false;
  std::pair<std::string, std::string> src, dst;

  bool operator==(const Gen&) const = default;
};

using Word = std::vector<GenKey>;
using Poly = std::map<Word, long long>;  // word -> coefficient

struct Presentation {
  std::string name;
  std::vector<Gen> gens;
  std::vector<Poly> relations;

  const Gen* find(const GenKey& k) const;
  std::string to_text() const;  // one relation per line
};

/// Generators and relations of L(kronecker_square(q)).
Presentation lpa_presentation(const Quiver& q);

/// Face algebra of the double quiver plus the quotient ideal generators.
Presentation face_quotient_presentation(const Quiver& q);

struct MatchResult {
  bool match = false;
  std::vector<std::string> diffs;  // unreduced relations / symbol clashes
};

/// Reduces every relation of each presentation to zero using generic
/// structural rules plus the other presentation's relations oriented as
/// rewrite rules. Non-termination is cut off by a step guard and reported
/// as a diff, never ignored.
MatchResult presentations_match(const Presentation& a, const Presentation& b);

}  // namespace quiverlab

#endif
