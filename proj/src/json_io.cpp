#include "quiverlab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace quiverlab {

json quiver_to_json(const Quiver& q) {
  json edges = json::array();
  for (const auto& e : q.edges())
    edges.push_back({{"name", e.name}, {"src", e.src}, {"dst", e.dst}});
  return {{"name", q.name()}, {"vertices", q.vertices()}, {"edges", edges}};
}

Quiver quiver_from_json(const json& j) {
  std::vector<std::string> verts = j.at("vertices").get<std::vector<std::string>>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at("name").get<std::string>(),
                     e.at("src").get<std::string>(),
                     e.at("dst").get<std::string>()});
  return Quiver(j.value("name", std::string("quiver")), std::move(verts),
                std::move(edges));
}

json matrix_to_json(const IntMatrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpz_class& x = m.at(i, j);
      if (x.fits_slong_p())
        row.push_back(x.get_si());
      else
        row.push_back(x.get_str());
    }
    data.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

IntMatrix matrix_from_json(const json& j) {
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  IntMatrix m(rows, cols);
  const json& data = j.at("data");
  if (data.size() != rows) throw std::invalid_argument("matrix: bad row count");
  for (std::size_t i = 0; i < rows; ++i) {
    if (data[i].size() != cols)
      throw std::invalid_argument("matrix: bad column count");
    for (std::size_t k = 0; k < cols; ++k) {
      const json& cell = data[i][k];
      if (cell.is_string())
        m.at(i, k) = mpz_class(cell.get<std::string>());
      else
        m.at(i, k) = mpz_class(cell.get<long>());
    }
  }
  return m;
}

OutSplitPartition partition_from_json(const json& j) {
  OutSplitPartition p;
  for (auto it = j.begin(); it != j.end(); ++it)
    p.blocks[it.key()] =
        it.value().get<std::vector<std::vector<std::string>>>();
  return p;
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return quiver_from_json(j);
}

}  // namespace quiverlab
