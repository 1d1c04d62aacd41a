#include "tndg/tensor_io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>

namespace tndg {

using nlohmann::json;

json tensor_to_json(const DenseTensor& t, bool symmetric) {
  return json{{"order", t.order()},
              {"dims", t.dims()},
              {"symmetric", symmetric},
              {"entries", t.data()}};
}

json tensor_to_json(const SymmetricTensor& t) {
  return tensor_to_json(t.dense(), true);
}

DenseTensor tensor_from_json(const json& j) {
  detail::require(j.is_object(), "tensor payload must be a JSON object");
  for (const char* field : {"order", "dims", "entries"}) {
    detail::require(j.contains(field), std::string("tensor payload missing field '") + field + "'");
  }
  const int order = j.at("order").get<int>();
  auto dims = j.at("dims").get<std::vector<int>>();
  detail::require(static_cast<int>(dims.size()) == order,
                  "field 'dims' length does not match field 'order'");
  auto entries = j.at("entries").get<std::vector<double>>();
  for (double v : entries) {
    detail::require(std::isfinite(v), "field 'entries' contains a non-finite value");
  }
  return DenseTensor(std::move(dims), std::move(entries));
}

bool json_marks_symmetric(const json& j) {
  return j.contains("symmetric") && j.at("symmetric").get<bool>();
}

DenseTensor read_tensor_file(const std::string& path, bool* symmetric_flag) {
  std::ifstream in(path);
  detail::require(in.good(), "cannot open tensor file: " + path);
  json j;
  in >> j;
  if (symmetric_flag != nullptr) *symmetric_flag = json_marks_symmetric(j);
  return tensor_from_json(j);
}

void write_tensor_file(const std::string& path, const DenseTensor& t, bool symmetric) {
  std::ofstream out(path);
  detail::require(out.good(), "cannot open output file: " + path);
  out << tensor_to_json(t, symmetric).dump(2) << "\n";
}

}  // namespace tndg
