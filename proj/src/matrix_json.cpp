#include "mpersp/matrix_json.hpp"

#include <fstream>
#include <sstream>

#include "mpersp/error.hpp"

namespace mpersp {

using nlohmann::json;

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  json out;
  if (m.rows() == m.cols()) {
    out["dim"] = m.rows();
  } else {
    out["rows"] = m.rows();
    out["cols"] = m.cols();
  }
  out["entries"] = std::move(rows);
  return out;
}

json to_json(const HermitianMatrix& m) { return to_json(m.matrix()); }

CMatrix matrix_from_json(const json& j) {
  try {
    Index rows = 0;
    Index cols = 0;
    if (j.contains("dim")) {
      rows = cols = j.at("dim").get<Index>();
    } else {
      rows = j.at("rows").get<Index>();
      cols = j.at("cols").get<Index>();
    }
    if (rows < 1 || cols < 1) throw ParseError("matrix dimensions must be positive");
    const json& e = j.at("entries");
    if (!e.is_array() || static_cast<Index>(e.size()) != rows) throw ParseError("entries: wrong number of rows");
    CMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
      const json& row = e[i];
      if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
        throw ParseError("entries: row " + std::to_string(i) + " has wrong length");
      }
      for (Index k = 0; k < cols; ++k) {
        const json& z = row[k];
        if (!z.is_array() || z.size() != 2) throw ParseError("entries: expected [re, im] pairs");
        m(i, k) = Complex(z[0].get<double>(), z[1].get<double>());
      }
    }
    return m;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed matrix JSON: ") + ex.what());
  }
}

HermitianMatrix hermitian_from_json(const json& j) {
  const CMatrix m = matrix_from_json(j);
  if (m.rows() != m.cols()) throw ParseError("expected a square matrix");
  HermitianMatrix h(m);
  if (h.defect() > kMaxInputDefect) {
    std::ostringstream os;
    os << "matrix is not Hermitian: defect " << h.defect() << " exceeds " << kMaxInputDefect;
    throw ParseError(os.str());
  }
  return h;
}

namespace {

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    throw ParseError(path.string() + ": " + ex.what());
  }
}

}  // namespace

CMatrix read_matrix_file(const std::filesystem::path& path) { return matrix_from_json(read_json(path)); }

HermitianMatrix read_hermitian_file(const std::filesystem::path& path) {
  return hermitian_from_json(read_json(path));
}

void write_matrix_file(const std::filesystem::path& path, const CMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << to_json(m).dump() << '\n';
}

}  // namespace mpersp
