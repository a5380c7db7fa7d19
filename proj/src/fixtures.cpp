#include "quiverlab/fixtures.hpp"

namespace quiverlab::fixtures {

Quiver a2() {
  return Quiver("A2", {"v1", "v2"}, {{"e", "v1", "v2"}});
}

Quiver line3() {
  return Quiver("LINE3", {"v1", "v2", "v3"},
                {{"e1", "v1", "v2"}, {"e2", "v2", "v3"}});
}

Quiver conv3() {
  return Quiver("CONV3", {"v1", "v2", "v3"},
                {{"e1", "v1", "v2"}, {"e2", "v3", "v2"}});
}

Quiver e() {
  return Quiver("E", {"v", "u", "w"},
                {{"f", "v", "u"}, {"g", "v", "w"}, {"h", "w", "w"}});
}

Quiver eprime() {
  return Quiver("EPRIME", {"v1", "v2", "u", "w1"},
                {{"f", "v1", "u"}, {"g1", "v2", "w1"}, {"h1", "w1", "w1"}});
}

Quiver t() {
  return Quiver("T", {"u", "v"}, {{"c", "u", "u"}, {"f", "u", "v"}});
}

Quiver rose2() {
  return Quiver("ROSE2", {"v"}, {{"e1", "v", "v"}, {"e2", "v", "v"}});
}

Quiver haz1() {
  return Quiver("HAZ1", {"v1", "v2", "v3", "v4", "v5"},
                {{"e1", "v1", "v2"},
                 {"e2", "v2", "v3"},
                 {"e3", "v4", "v3"},
                 {"e4", "v5", "v4"}});
}

Quiver haz2() {
  return Quiver("HAZ2", {"v1", "v2", "v3", "v4", "v5"},
                {{"e1", "v1", "v2"},
                 {"e2", "v2", "v3"},
                 {"e3", "v4", "v2"},
                 {"e4", "v5", "v3"}});
}

OutSplitPartition eprime_partition() {
  OutSplitPartition p;
  p.blocks["v"] = {{"f"}, {"g"}};
  p.blocks["w"] = {{"h"}};
  return p;
}

std::vector<Quiver> all() {
  return {a2(), line3(), conv3(), e(), eprime(), t(), rose2(), haz1(), haz2()};
}

}  // namespace quiverlab::fixtures
