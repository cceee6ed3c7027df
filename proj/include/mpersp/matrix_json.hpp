#pragma once

#include <filesystem>

#include <json.hpp>

#include "mpersp/linalg.hpp"

namespace mpersp {

// Square matrices encode as {"dim": n, "entries": [[[re, im], ...], ...]},
// row-major. Rectangular matrices (isometry blocks in witnesses) use
// {"rows": m, "cols": n, "entries": ...}.
inline constexpr double kMaxInputDefect = 1e-8;

nlohmann::json to_json(const CMatrix& m);
nlohmann::json to_json(const HermitianMatrix& m);

CMatrix matrix_from_json(const nlohmann::json& j);
// Rejects input whose Hermiticity defect exceeds kMaxInputDefect.
HermitianMatrix hermitian_from_json(const nlohmann::json& j);

CMatrix read_matrix_file(const std::filesystem::path& path);
HermitianMatrix read_hermitian_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const CMatrix& m);

}  // namespace mpersp
