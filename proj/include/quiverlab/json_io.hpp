#ifndef QUIVERLAB_JSON_IO_HPP
#define QUIVERLAB_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "quiverlab/quiver.hpp"

namespace quiverlab {

using json = nlohmann::json;

json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

OutSplitPartition partition_from_json(const json& j);

Quiver load_quiver(const std::string& path);

}  // namespace quiverlab

#endif
