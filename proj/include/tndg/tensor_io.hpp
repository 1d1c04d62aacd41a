#pragma once

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <string>

#include "tndg/dense_tensor.hpp"

namespace tndg {

/// Tensor JSON contract:
/// {"order": k, "dims": [n1,...,nk], "symmetric": true|false,
///  "entries": [ ... row-major, last index fastest ... ]}
/// Readers reject length mismatches and non-finite values.
nlohmann::json tensor_to_json(const DenseTensor& t, bool symmetric);
nlohmann::json tensor_to_json(const SymmetricTensor& t);

DenseTensor tensor_from_json(const nlohmann::json& j);

/// True when the "symmetric" field of the payload is set.
bool json_marks_symmetric(const nlohmann::json& j);

DenseTensor read_tensor_file(const std::string& path, bool* symmetric_flag = nullptr);
void write_tensor_file(const std::string& path, const DenseTensor& t, bool symmetric);

}  // namespace tndg
